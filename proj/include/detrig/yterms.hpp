#pragma once

#include <array>
#include <optional>

#include "detrig/matrix.hpp"
#include "detrig/ratio.hpp"

namespace detrig {

// Signed cross-ratio of four maximal minors of R on the basis I:
//   Y(I)^{ij}_{ab} = c1 c2 * [D(I^i_a) / D(I^i_b)] * [D(I^j_b) / D(I^j_a)].
// Degenerate index pairs (i == j or a == b) take the value -1.
struct YTerm {
  Subset basis;
  int i = 0, j = 0;          // upper indices, in the basis
  int alpha = 0, beta = 0;   // lower indices, in the complement
  LaurentRatio value;
};

YTerm y_term(const SymbolicMatrix& R, const Subset& I, int i, int j, int alpha, int beta);

// Basis-change rules; both recompute the target from R and verify the
// algebraic rule exactly before returning.
//   vertical:  Y(I^i_a)^{aj}_{ib} = -Y(I)^{ij}_{ab} - 1
//   diagonal:  Y(I^i_b)^{bj}_{ai} = -1 / (1 + Y(I)^{ij}_{ab}^{-1})
YTerm transform_vertical(const SymbolicMatrix& R, const YTerm& y);
YTerm transform_diagonal(const SymbolicMatrix& R, const YTerm& y);

// Composition along a shared upper or lower pair:
//   Y^{ij}_{ab} Y^{ij}_{bg} = -Y^{ij}_{ag},   Y^{im}_{ab} Y^{mj}_{ab} = -Y^{ij}_{ab}.
YTerm compose(const YTerm& a, const YTerm& b);

// Quadratic with h-product coefficients whose root is the observable Y-term:
//   F(X) = crossed * X^2 + (crossed - h(I) h(I^{ij}_{ab}) + straight) * X + straight.
struct QuadraticF {
  LaurentPoly a2, a1, a0;
  LaurentRatio eval(const LaurentRatio& x) const;
};

QuadraticF quadratic_F(const HTermTable& table, const Subset& I, int i, int j, int alpha,
                       int beta);

// Sign epsilon and the m-term of the three-pair relation
//   m = eps * D(I)^2 D(I^{a1a2a3}_{d1d2d3}) / (D(I^{a1}_{d1}) D(I^{a2}_{d2}) D(I^{a3}_{d3})).
int m_sign(const std::array<int, 3>& a, const std::array<int, 3>& d);
LaurentRatio m_term(const SymbolicMatrix& R, const Subset& I, const std::array<int, 3>& a,
                    const std::array<int, 3>& d);

// Monic quadratic X^2 + bX + c with
//   b = 1 + Y21 + Y31 + Y32 - m,   c = -(Y31 * Y21 * Y32),
// whose roots are Y32*Y31-type products; built either from R or from
// already-resolved Y-values.
struct QuadraticP {
  LaurentRatio b, c;
  LaurentRatio eval(const LaurentRatio& x) const;
};

QuadraticP quadratic_P(const SymbolicMatrix& R, const Subset& I, const std::array<int, 3>& a,
                       const std::array<int, 3>& d);
QuadraticP quadratic_P_from_values(const LaurentRatio& y21, const LaurentRatio& y31,
                                   const LaurentRatio& y32, const LaurentRatio& m);

// Discriminant b^2 - 4c of a monic quadratic.
LaurentRatio discriminant(const QuadraticP& p);
// Perfect-square test in the fraction field of the Laurent ring, restricted
// to recognisable shapes (units and squares of unit-binomials).
bool is_perfect_square(const LaurentRatio& r);

// g factor (Y(I^{a1}_{d1})^{a3a2}_{d2d3} + 1) / (Y(I)^{a3a2}_{d2d3} + 1);
// invariant under permutations of the three pairs (a_i, d_i).
LaurentRatio g_factor(const SymbolicMatrix& R, const Subset& I, const std::array<int, 3>& a,
                      const std::array<int, 3>& d);

enum class ConfigType { EvenType, OddType, AllConstant };

// Recognised shape of a 4-set Upsilon = Upsilon+ u Upsilon- of Y-values
// subject to theta * (Y+1 * Y+2) = -(Y-1 * Y-2):
//   even: Upsilon+ = {tau^-1 - 1, tau theta^-1 Omega}, Upsilon- = {tau - 1, Omega}
//   odd:  Upsilon^{s(+)} = {tau^{2 e2} - 1, 1/C}, Upsilon^{s(-)} = {tau - 1, -tau^{e1} - 1}
//         with theta = e2 * C * tau^{(1 + e1 - 2 e2)/2}.
struct ConfigClass {
  ConfigType type = ConfigType::AllConstant;
  std::optional<LaurentPoly> tau;
  std::optional<LaurentRatio> omega;  // even type
  std::optional<Coeff> C;             // odd type
  int eps1 = 0, eps2 = 0;             // odd type
  bool sigma_swapped = false;         // odd type: shapes landed on the swapped pair
};

ConfigClass classify_configuration(const std::pair<LaurentRatio, LaurentRatio>& upsilon_plus,
                                   const std::pair<LaurentRatio, LaurentRatio>& upsilon_minus,
                                   const LaurentPoly& theta);

} // namespace detrig
