#include "detrig/yterms.hpp"

#include <algorithm>

#include "detrig/error.hpp"

namespace detrig {

namespace {

LaurentRatio one(int dims) { return LaurentRatio::constant(dims, Coeff(1)); }
LaurentRatio minus_one(int dims) { return LaurentRatio::constant(dims, Coeff(-1)); }

void check_indices(const Subset& I, int i, int j, int alpha, int beta) {
  if (!I.contains(i) || !I.contains(j)) fail(Errc::InvalidArgument, "upper index not in basis");
  if (I.contains(alpha) || I.contains(beta))
    fail(Errc::InvalidArgument, "lower index not in complement");
}

} // namespace

YTerm y_term(const SymbolicMatrix& R, const Subset& I, int i, int j, int alpha, int beta) {
  check_indices(I, i, j, alpha, beta);
  YTerm y;
  y.basis = I;
  y.i = i;
  y.j = j;
  y.alpha = alpha;
  y.beta = beta;
  if (i == j || alpha == beta) {
    y.value = minus_one(R.dims());
    return y;
  }
  LaurentPoly n1 = minor_on_rows(R, I.exchange(i, alpha));
  LaurentPoly n2 = minor_on_rows(R, I.exchange(j, beta));
  LaurentPoly d1 = minor_on_rows(R, I.exchange(i, beta));
  LaurentPoly d2 = minor_on_rows(R, I.exchange(j, alpha));
  if (d1.is_zero() || d2.is_zero())
    fail(Errc::GenericityViolation, "vanishing denominator minor in Y-term");
  int c1c2 = gp_sign_c1(i, j, alpha, beta) * gp_sign_c2(i, j, alpha, beta);
  y.value = LaurentRatio(n1 * n2 * Coeff(c1c2), d1 * d2);
  return y;
}

YTerm transform_vertical(const SymbolicMatrix& R, const YTerm& y) {
  if (y.i == y.j || y.alpha == y.beta)
    fail(Errc::DegenerateIndices, "vertical rule needs non-degenerate indices");
  Subset J = y.basis.exchange(y.i, y.alpha);
  if (minor_on_rows(R, J).is_zero())
    fail(Errc::GenericityViolation, "target basis has vanishing R-minor");
  YTerm out = y_term(R, J, y.alpha, y.j, y.i, y.beta);
  LaurentRatio expected = -y.value - one(R.dims());
  if (out.value != expected) fail(Errc::Internal, "vertical transformation rule failed");
  return out;
}

YTerm transform_diagonal(const SymbolicMatrix& R, const YTerm& y) {
  if (y.i == y.j || y.alpha == y.beta)
    fail(Errc::DegenerateIndices, "diagonal rule needs non-degenerate indices");
  if (y.value.is_zero() || y.value == minus_one(R.dims()))
    fail(Errc::InvalidArgument, "diagonal rule undefined at Y in {0, -1}");
  Subset J = y.basis.exchange(y.i, y.beta);
  if (minor_on_rows(R, J).is_zero())
    fail(Errc::GenericityViolation, "target basis has vanishing R-minor");
  YTerm out = y_term(R, J, y.beta, y.j, y.alpha, y.i);
  LaurentRatio expected = -(y.value / (y.value + Coeff(1)));
  if (out.value != expected) fail(Errc::Internal, "diagonal transformation rule failed");
  return out;
}

YTerm compose(const YTerm& a, const YTerm& b) {
  if (a.basis != b.basis) fail(Errc::InvalidArgument, "composition across different bases");
  YTerm out;
  out.basis = a.basis;
  if (a.i == b.i && a.j == b.j && a.beta == b.alpha) {
    // lower chain: Y^{ij}_{ab} Y^{ij}_{bg} = -Y^{ij}_{ag}
    out.i = a.i;
    out.j = a.j;
    out.alpha = a.alpha;
    out.beta = b.beta;
  } else if (a.alpha == b.alpha && a.beta == b.beta && a.j == b.i) {
    // upper chain: Y^{im}_{ab} Y^{mj}_{ab} = -Y^{ij}_{ab}
    out.i = a.i;
    out.j = b.j;
    out.alpha = a.alpha;
    out.beta = a.beta;
  } else {
    fail(Errc::InvalidArgument, "terms are not chainable");
  }
  out.value = -(a.value * b.value);
  if ((out.i == out.j || out.alpha == out.beta) && out.value != minus_one(out.value.dims()))
    fail(Errc::Internal, "degenerate composition did not collapse to -1");
  return out;
}

LaurentRatio QuadraticF::eval(const LaurentRatio& x) const {
  return LaurentRatio(a2) * x * x + LaurentRatio(a1) * x + LaurentRatio(a0);
}

QuadraticF quadratic_F(const HTermTable& table, const Subset& I, int i, int j, int alpha,
                       int beta) {
  check_indices(I, i, j, alpha, beta);
  LaurentPoly hh = table.h(I) * table.h(I.exchange2(i, j, alpha, beta));
  LaurentPoly straight = table.h(I.exchange(i, alpha)) * table.h(I.exchange(j, beta));
  LaurentPoly crossed = table.h(I.exchange(i, beta)) * table.h(I.exchange(j, alpha));
  if (hh.is_zero() && straight.is_zero() && crossed.is_zero())
    fail(Errc::NotObservable, "quadratic_F of a non-observable rectangle");
  QuadraticF f;
  f.a2 = crossed;
  f.a1 = crossed - hh + straight;
  f.a0 = straight;
  return f;
}

int m_sign(const std::array<int, 3>& a, const std::array<int, 3>& d) {
  long prod = 1;
  for (int u = 0; u < 3; ++u)
    for (int w = u + 1; w < 3; ++w) prod *= static_cast<long>(a[u] - a[w]) * (d[u] - d[w]);
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s)
      if (r != s) prod *= (a[r] - d[s]);
  return prod > 0 ? -1 : (prod < 0 ? 1 : 0);
}

namespace {

void check_triple(const Subset& I, const std::array<int, 3>& a, const std::array<int, 3>& d) {
  for (int u = 0; u < 3; ++u) {
    if (!I.contains(a[u])) fail(Errc::InvalidArgument, "upper triple not in basis");
    if (I.contains(d[u])) fail(Errc::InvalidArgument, "lower triple not in complement");
    for (int w = u + 1; w < 3; ++w)
      if (a[u] == a[w] || d[u] == d[w]) fail(Errc::DegenerateIndices, "repeated triple index");
  }
}

} // namespace

LaurentRatio m_term(const SymbolicMatrix& R, const Subset& I, const std::array<int, 3>& a,
                    const std::array<int, 3>& d) {
  check_triple(I, a, d);
  LaurentPoly di = minor_on_rows(R, I);
  LaurentPoly dt = minor_on_rows(R, I.exchange_many({a[0], a[1], a[2]}, {d[0], d[1], d[2]}));
  LaurentPoly s1 = minor_on_rows(R, I.exchange(a[0], d[0]));
  LaurentPoly s2 = minor_on_rows(R, I.exchange(a[1], d[1]));
  LaurentPoly s3 = minor_on_rows(R, I.exchange(a[2], d[2]));
  if (s1.is_zero() || s2.is_zero() || s3.is_zero() || di.is_zero())
    fail(Errc::GenericityViolation, "vanishing minor in m-term");
  LaurentRatio m(di * di * dt * Coeff(m_sign(a, d)), s1 * s2 * s3);

  // Exact six-term identity linking m to the Y-terms of the triple.
  LaurentRatio y21 = y_term(R, I, a[0], a[1], d[1], d[0]).value;
  LaurentRatio y31 = y_term(R, I, a[0], a[2], d[2], d[0]).value;
  LaurentRatio y32 = y_term(R, I, a[1], a[2], d[2], d[1]).value;
  LaurentRatio y21_alt = y_term(R, I, a[0], a[1], d[2], d[0]).value;
  if (y21_alt.is_zero()) fail(Errc::GenericityViolation, "vanishing Y-term in m identity");
  LaurentRatio lhs =
      one(R.dims()) + y21 + y31 + y32 + y32 * y21_alt - y21_alt.inverse() * y31 * y21;
  if (lhs != m) fail(Errc::Internal, "m-term identity failed");
  return m;
}

LaurentRatio QuadraticP::eval(const LaurentRatio& x) const { return x * x + b * x + c; }

QuadraticP quadratic_P_from_values(const LaurentRatio& y21, const LaurentRatio& y31,
                                   const LaurentRatio& y32, const LaurentRatio& m) {
  QuadraticP p;
  p.b = one(m.dims()) + y21 + y31 + y32 - m;
  p.c = -(y31 * y21 * y32);
  return p;
}

QuadraticP quadratic_P(const SymbolicMatrix& R, const Subset& I, const std::array<int, 3>& a,
                       const std::array<int, 3>& d) {
  LaurentRatio y21 = y_term(R, I, a[0], a[1], d[1], d[0]).value;
  LaurentRatio y31 = y_term(R, I, a[0], a[2], d[2], d[0]).value;
  LaurentRatio y32 = y_term(R, I, a[1], a[2], d[2], d[1]).value;
  return quadratic_P_from_values(y21, y31, y32, m_term(R, I, a, d));
}

LaurentRatio discriminant(const QuadraticP& p) { return p.b * p.b - p.c * Coeff(4); }

bool is_perfect_square(const LaurentRatio& r) {
  // n/d is a square in the fraction field iff n*d is a square in the ring.
  LaurentPoly prod = r.num() * r.den();
  return prod.sqrt().has_value();
}

LaurentRatio g_factor(const SymbolicMatrix& R, const Subset& I, const std::array<int, 3>& a,
                      const std::array<int, 3>& d) {
  check_triple(I, a, d);
  Subset J = I.exchange(a[0], d[0]);
  if (minor_on_rows(R, J).is_zero())
    fail(Errc::GenericityViolation, "g-factor basis has vanishing R-minor");
  LaurentRatio top = y_term(R, J, a[2], a[1], d[1], d[2]).value + Coeff(1);
  LaurentRatio bot = y_term(R, I, a[2], a[1], d[1], d[2]).value + Coeff(1);
  if (bot.is_zero()) fail(Errc::GenericityViolation, "g-factor denominator vanishes");
  return top / bot;
}

namespace {

// tau - 1 shape: Y + 1 must be a unit; returns tau.
std::optional<LaurentPoly> unit_plus_one(const LaurentRatio& y) {
  return (y + Coeff(1)).unit_value();
}

LaurentPoly unit_pow(const LaurentPoly& u, int e) {
  ExpVec exp = u.unit_exponent();
  for (auto& v : exp) v *= e;
  Coeff c = u.unit_coeff().pow(e);
  return LaurentPoly::monomial(u.dims(), c, std::move(exp));
}

} // namespace

ConfigClass classify_configuration(const std::pair<LaurentRatio, LaurentRatio>& upsilon_plus,
                                   const std::pair<LaurentRatio, LaurentRatio>& upsilon_minus,
                                   const LaurentPoly& theta) {
  if (!theta.is_unit()) fail(Errc::InvalidArgument, "theta must be a unit");
  int dims = theta.dims();
  LaurentRatio th{theta};
  const LaurentRatio& p1 = upsilon_plus.first;
  const LaurentRatio& p2 = upsilon_plus.second;
  const LaurentRatio& m1 = upsilon_minus.first;
  const LaurentRatio& m2 = upsilon_minus.second;

  if (th * p1 * p2 != -(m1 * m2))
    fail(Errc::InvalidArgument, "configuration violates the scaling identity");

  if (p1.is_constant() && p2.is_constant() && m1.is_constant() && m2.is_constant()) {
    ConfigClass out;
    out.type = ConfigType::AllConstant;
    return out;
  }

  std::vector<ConfigClass> matches;

  // Even type: Upsilon- = {tau - 1, Omega}, Upsilon+ = {1/tau - 1, tau/theta * Omega},
  // Omega constant or Omega = -theta/tau - 1.
  auto try_even = [&](const LaurentRatio& slot_tau, const LaurentRatio& omega) {
    auto tau = unit_plus_one(slot_tau);
    if (!tau || tau->is_constant()) return;
    LaurentRatio inv_tau_m1 = LaurentRatio(*tau).inverse() - one(dims);
    LaurentRatio partner = LaurentRatio(*tau) / th * omega;
    bool pairing = (p1 == inv_tau_m1 && p2 == partner) || (p2 == inv_tau_m1 && p1 == partner);
    if (!pairing) return;
    bool omega_ok = omega.is_constant() || omega == -(th / LaurentRatio(*tau)) - one(dims);
    if (!omega_ok) return;
    ConfigClass c;
    c.type = ConfigType::EvenType;
    c.tau = *tau;
    c.omega = omega;
    matches.push_back(std::move(c));
  };
  try_even(m1, m2);
  try_even(m2, m1);

  // Odd type over both pair roles, both in-pair labellings and both signs.
  // Swapping the roles of the two pairs inverts the effective theta of the
  // scaling identity.
  auto try_odd = [&](const LaurentRatio& sm_tau, const LaurentRatio& sm_other,
                     const LaurentRatio& sp_sq, const LaurentRatio& sp_const,
                     const LaurentPoly& theta_eff, bool swapped) {
    auto tau = unit_plus_one(sm_tau);
    if (!tau || tau->is_constant()) return;
    auto cval = sp_const.constant_value();
    if (!cval || cval->is_zero()) return;
    Coeff cc = cval->inverse();
    for (int e1 : {1, -1}) {
      if (sm_other != -LaurentRatio(unit_pow(*tau, e1)) - one(dims)) continue;
      for (int e2 : {1, -1}) {
        if (sp_sq != LaurentRatio(unit_pow(*tau, 2 * e2)) - one(dims)) continue;
        int num = 1 + e1 - 2 * e2;
        if (num % 2 != 0) continue;  // integer-exponent guard
        LaurentPoly rhs = unit_pow(*tau, num / 2) * cc * Coeff(e2);
        if (theta_eff != rhs) continue;
        ConfigClass c;
        c.type = ConfigType::OddType;
        c.tau = *tau;
        c.C = cc;
        c.eps1 = e1;
        c.eps2 = e2;
        c.sigma_swapped = swapped;
        matches.push_back(std::move(c));
      }
    }
  };
  for (int swap_roles = 0; swap_roles < 2; ++swap_roles) {
    const LaurentRatio& sp1 = swap_roles ? m1 : p1;
    const LaurentRatio& sp2 = swap_roles ? m2 : p2;
    const LaurentRatio& sm1 = swap_roles ? p1 : m1;
    const LaurentRatio& sm2 = swap_roles ? p2 : m2;
    LaurentPoly theta_eff = swap_roles ? unit_pow(theta, -1) : theta;
    try_odd(sm1, sm2, sp1, sp2, theta_eff, swap_roles);
    try_odd(sm1, sm2, sp2, sp1, theta_eff, swap_roles);
    try_odd(sm2, sm1, sp1, sp2, theta_eff, swap_roles);
    try_odd(sm2, sm1, sp2, sp1, theta_eff, swap_roles);
  }

  if (matches.empty())
    fail(Errc::InvalidArgument, "configuration matches neither the even nor the odd shape");
  // Deterministic pick: even before odd, then smallest tau.
  std::stable_sort(matches.begin(), matches.end(), [](const ConfigClass& a, const ConfigClass& b) {
    if (a.type != b.type) return a.type == ConfigType::EvenType;
    return a.tau && b.tau && *a.tau < *b.tau;
  });
  return matches.front();
}

} // namespace detrig
