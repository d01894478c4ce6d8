#pragma once

#include <array>
#include <map>

#include "detrig/integrability.hpp"

namespace detrig {

enum class AmbiguityClass { DoubleRoot, NonKeyUnique, ChainResolved, CommonRootResolved };

// Resolved values of the Y-terms of one anchor basis, recovered from minor
// products alone. Terms are keyed canonically as (i, j, alpha, beta) with
// i < j and alpha < beta; the other index orientations follow from
// Y^{ji} = Y_{ba} = 1/Y.
class YAssignment {
public:
  Subset basis;
  int g = 0, kappa1 = 0, kappa2 = 0;  // anchor indices of the weak pair
  bool anchor_choice_used = false;
  std::array<int, 4> anchor_term{};

  const std::map<std::array<int, 4>, LaurentRatio>& values() const { return values_; }
  const std::map<std::array<int, 4>, AmbiguityClass>& classes() const { return classes_; }

  bool has(int i, int j, int a, int b) const;
  // Value in the requested orientation.
  LaurentRatio value(int i, int j, int a, int b) const;
  void set(int i, int j, int a, int b, LaurentRatio v, AmbiguityClass cls);

private:
  std::map<std::array<int, 4>, LaurentRatio> values_;
  std::map<std::array<int, 4>, AmbiguityClass> classes_;
};

// Root disambiguation per the recovery procedure: double roots and non-key
// observables are forced; one root pick is consumed for at most one anchor
// term; everything else propagates along composition chains, with the
// two-polynomial common-root step for the non-observable terms the canonical
// form needs. Throws NotRecoverable when the weak pair (g, k1, k2) does not
// exist or the data does not determine the terms.
YAssignment resolve_y_assignment(const HTermTable& table, const Matroid& g);

// One common-root elimination step between the kappa1/kappa2 quadratics:
// inputs are the determined terms Y^{qw}_{omega rho}, Y^{qg}_{kappa_u rho},
// Y^{gw}_{omega kappa_u} and the spurious roots X-^(u) = Y^{wq}_{rho kappa_u};
// returns the common root X+ = Y^{qg}_{omega rho}. Asserts that the two
// spurious roots differ (they coincide only when Y^{wq}_{k1 k2} = -1, which
// genericity excludes) and that both eliminations agree.
LaurentRatio common_root_eliminate(const LaurentRatio& y_qw_omega_rho,
                                   const std::pair<LaurentRatio, LaurentRatio>& y_qg_kap_rho,
                                   const std::pair<LaurentRatio, LaurentRatio>& y_gw_omega_kap,
                                   const std::pair<LaurentRatio, LaurentRatio>& x_minus);

// Canonical factor pair: R* carries the identity block on the anchor basis
// and entries c1 c2 Y^{gi}_{k1 a}; L* is rebuilt from the h-ratios. The
// round trip h_table(L*, R*) == table is verified before returning.
std::pair<SymbolicMatrix, SymbolicMatrix> canonical_form(const YAssignment& assignment,
                                                         const HTermTable& table,
                                                         const Matroid& g);

} // namespace detrig
