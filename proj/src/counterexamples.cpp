#include "detrig/counterexamples.hpp"

#include <algorithm>

#include "detrig/rng.hpp"

namespace detrig {

namespace {

constexpr int kMaxResample = 64;

LaurentPoly cpoly(int dims, const Coeff& c) { return LaurentPoly::constant(dims, c); }

SymbolicMatrix paired_identity_L(int k, int dims) {
  SymbolicMatrix L(k, 2 * k, dims);
  for (int r = 0; r < k; ++r) {
    L.set(r, r, cpoly(dims, Coeff(1)));
    L.set(r, k + r, cpoly(dims, Coeff(1)));
  }
  return L;
}

// L = (I_k | B) with B = [1_{2 x (p+1)}, 0; 0, I_{k-2}], the weak-keys /
// odd-type pattern matrix; n = 2k + p - 1.
SymbolicMatrix weak_keys_L(int k, int p, int dims) {
  int n = 2 * k + p - 1;
  SymbolicMatrix L(k, n, dims);
  for (int r = 0; r < k; ++r) L.set(r, r, cpoly(dims, Coeff(1)));
  for (int c = 0; c < p + 1; ++c)
    for (int r = 0; r < 2; ++r) L.set(r, k + c, cpoly(dims, Coeff(1)));
  for (int u = 0; u < k - 2; ++u) L.set(2 + u, k + p + 1 + u, cpoly(dims, Coeff(1)));
  return L;
}

// Exact rational solve M x = b by Gaussian elimination; nullopt when M is
// singular.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> m,
                                                    std::vector<Rational> b) {
  std::size_t n = m.size();
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t pivot = p;
    while (pivot < n && m[pivot][p] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[p]);
    std::swap(b[pivot], b[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == p || m[r][p] == 0) continue;
      Rational f = m[r][p] / m[p][p];
      for (std::size_t c = p; c < n; ++c) m[r][c] -= f * m[p][c];
      b[r] -= f * b[p];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t p = 0; p < n; ++p) x[p] = b[p] / m[p][p];
  return x;
}

Rational det_rational(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t pivot = p;
    while (pivot < n && m[pivot][p] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != p) {
      std::swap(m[pivot], m[p]);
      det = -det;
    }
    det *= m[p][p];
    for (std::size_t r = p + 1; r < n; ++r) {
      if (m[r][p] == 0) continue;
      Rational f = m[r][p] / m[p][p];
      for (std::size_t c = p; c < n; ++c) m[r][c] -= f * m[p][c];
    }
  }
  return det;
}

} // namespace

GeneratedInstance gen_principal_minor_ce(int k, std::uint64_t seed) {
  if (k < 2) fail(Errc::InvalidArgument, "principal-minor family needs k >= 2");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    // skew-symmetric S with small rational entries
    std::vector<std::vector<Rational>> S(k, std::vector<Rational>(k, Rational(0)));
    for (int u = 0; u < k; ++u)
      for (int w = u + 1; w < k; ++w) {
        S[u][w] = rng.nonzero_rational(19, 4);
        S[w][u] = -S[u][w];
      }
    int dims = 1;
    SymbolicMatrix R(2 * k, k, dims);
    LaurentPoly tau = LaurentPoly::variable(dims, 0);
    for (int r = 0; r < k; ++r) R.set(r, r, cpoly(dims, Coeff(1)));
    // bottom block r0(tau)^T: entry (k + i, j) = tau + S[j][i]
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) R.set(k + i, j, tau + cpoly(dims, Coeff(S[j][i])));
    if (!genericity_check(R)) continue;

    GeneratedInstance inst;
    inst.L = paired_identity_L(k, dims);
    inst.R = R;
    inst.ctx.dims = dims;
    inst.ctx.vars = {"tau"};
    inst.family = "principal-minor";
    inst.seed = seed;
    inst.params["k"] = std::to_string(k);
    HTermTable table = h_table(inst.L, inst.R);
    if (!all_monomial(monomiality_report(table))) continue;
    return inst;
  }
  fail(Errc::GenericityViolation, "could not sample a generic skew matrix");
}

std::map<Subset, long> parity_oracle(const GeneratedInstance& inst) {
  if (inst.family != "principal-minor")
    fail(Errc::InvalidArgument, "parity oracle applies to the principal-minor family");
  int k = inst.L.rows();
  // recover S from R: entry (k+i, j) = tau + S[j][i]
  std::vector<std::vector<Rational>> S(k, std::vector<Rational>(k, Rational(0)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      LaurentPoly e = inst.R.at(k + i, j) - LaurentPoly::variable(1, 0);
      auto c = e.constant_value();
      if (!c || !c->is_real()) fail(Errc::InvalidArgument, "not a principal-minor instance");
      S[j][i] = c->real();
    }

  HTermTable table = h_table(inst.L, inst.R);
  std::map<Subset, long> out;
  for (const auto& [I, h] : table.entries()) {
    if (!h.is_unit()) fail(Errc::Internal, "non-monomial basis term in parity oracle");
    long deg_symbolic = h.unit_exponent()[0];

    // shortcut path on the complement C = [k] \ I
    std::vector<int> comp;
    for (int x = 1; x <= k; ++x)
      if (!I.contains(x)) comp.push_back(x);
    long r = static_cast<long>(comp.size());
    long deg_shortcut;
    if (r == 0) {
      deg_shortcut = 0;  // identity minor
    } else if (r % 2 == 0) {
      // det(tau 11^T + M) = (1 + tau 1^T M^{-1} 1) det M with 1^T M^{-1} 1 = 0
      std::vector<std::vector<Rational>> M(r, std::vector<Rational>(r));
      for (long u = 0; u < r; ++u)
        for (long w = 0; w < r; ++w) M[u][w] = S[comp[u] - 1][comp[w] - 1];
      auto x = solve_rational(M, std::vector<Rational>(r, Rational(1)));
      if (!x) fail(Errc::Internal, "even-size skew submatrix is singular");
      Rational dot = 0;
      for (const Rational& v : *x) dot += v;
      if (dot != 0) fail(Errc::Internal, "skew quadratic form did not vanish");
      deg_shortcut = 0;
    } else {
      // Schur step on the leading tau entry leaves tau^{-1} s s^T + K with
      // K constant, skew and even-sized, so the determinant is det(K) tau.
      std::vector<std::vector<Rational>> K(r - 1, std::vector<Rational>(r - 1));
      std::vector<Rational> s(r - 1);
      for (long u = 1; u < r; ++u) s[u - 1] = S[comp[u] - 1][comp[0] - 1];
      for (long u = 1; u < r; ++u)
        for (long w = 1; w < r; ++w)
          K[u - 1][w - 1] = S[comp[u] - 1][comp[w] - 1] + s[w - 1] - s[u - 1];
      auto x = solve_rational(K, s);
      if (!x) fail(Errc::Internal, "Schur complement core is singular");
      Rational dot = 0;
      for (long u = 0; u < r - 1; ++u) dot += s[u] * (*x)[u];
      if (dot != 0) fail(Errc::Internal, "skew quadratic form did not vanish");
      // value check: |h coefficient| = |det K| (Delta_L = +-1)
      Rational dk = det_rational(K);
      if (h.unit_coeff().norm2() != dk * dk)
        fail(Errc::Internal, "Schur value disagrees with the symbolic minor");
      deg_shortcut = 1;
    }
    if (deg_symbolic != deg_shortcut) fail(Errc::Internal, "parity oracle paths disagree");
    out[I] = deg_symbolic;
  }
  return out;
}

GeneratedInstance gen_weak_keys_ce(int k, int p, std::uint64_t seed) {
  if (k < 3 || p < 1) fail(Errc::InvalidArgument, "weak-keys family needs k >= 3, p >= 1");
  SplitMix64 rng(seed);
  int dims = 1;
  int n = 2 * k + p - 1;
  LaurentPoly xi = LaurentPoly::variable(dims, 0);
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    std::vector<Rational> d(p), iv(k - 2);
    for (auto& v : d) v = rng.nonzero_rational(49, 5);
    for (auto& v : iv) v = rng.nonzero_rational(49, 5);
    std::vector<std::vector<Rational>> C(k - 2, std::vector<Rational>(p));
    for (auto& row : C)
      for (auto& v : row) v = rng.nonzero_rational(49, 5);
    // S_{s,s} = 1, lower part free, upper part forced by the constraint
    std::vector<std::vector<Rational>> S(k - 2, std::vector<Rational>(k - 2, Rational(1)));
    for (int u = 0; u < k - 2; ++u)
      for (int s = u + 1; s < k - 2; ++s) S[s][u] = rng.nonzero_rational(49, 5);
    for (int s = 0; s < k - 2; ++s)
      for (int u = s + 1; u < k - 2; ++u) S[s][u] = (iv[u] / iv[s]) * (1 - S[u][s]) + 1;

    // X = k x (k + p - 1) block of R^T
    SymbolicMatrix R(n, k, dims);
    for (int r = 0; r < k; ++r) R.set(r, r, cpoly(dims, Coeff(1)));
    auto set_x = [&](int row_of_x, int col_of_x, LaurentPoly v) {
      R.set(k + col_of_x, row_of_x, std::move(v));  // transpose into R
    };
    set_x(0, 0, cpoly(dims, Coeff(1)));
    for (int c = 0; c < p; ++c) set_x(0, 1 + c, cpoly(dims, Coeff(1)));
    for (int c = 0; c < k - 2; ++c) set_x(0, 1 + p + c, cpoly(dims, Coeff(-1)));
    set_x(1, 0, xi);
    for (int c = 0; c < p; ++c) set_x(1, 1 + c, cpoly(dims, Coeff(d[c])));
    for (int c = 0; c < k - 2; ++c) set_x(1, 1 + p + c, cpoly(dims, Coeff(iv[c])));
    for (int s = 0; s < k - 2; ++s) {
      set_x(2 + s, 0, xi * Coeff(Rational(1) / iv[s]) - cpoly(dims, Coeff(1)));
      for (int c = 0; c < p; ++c) set_x(2 + s, 1 + c, cpoly(dims, Coeff(C[s][c])));
      for (int u = 0; u < k - 2; ++u) set_x(2 + s, 1 + p + u, cpoly(dims, Coeff(S[s][u])));
    }
    if (!genericity_check(R)) continue;

    GeneratedInstance inst;
    inst.L = weak_keys_L(k, p, dims);
    inst.R = R;
    inst.ctx.dims = dims;
    inst.ctx.vars = {"xi"};
    inst.family = "weak-keys";
    inst.seed = seed;
    inst.params["k"] = std::to_string(k);
    inst.params["p"] = std::to_string(p);
    HTermTable table = h_table(inst.L, inst.R);
    if (!all_monomial(monomiality_report(table))) continue;
    return inst;
  }
  fail(Errc::GenericityViolation, "could not sample generic weak-keys constants");
}

namespace {

GeneratedInstance odd_type_from(int dims, const LaurentPoly& xi, const LaurentPoly& xi_inv,
                                const LaurentPoly& c, const std::string& cdesc) {
  GeneratedInstance inst;
  inst.L = weak_keys_L(3, 2, dims);
  LaurentPoly one = LaurentPoly::constant(dims, Coeff(1));
  SymbolicMatrix R(7, 3, dims);
  // R^T rows per the explicit 7-column instance
  std::vector<std::vector<LaurentPoly>> xt = {
      {one, one, one, one},
      {one, -c, c * xi, c * (xi - one)},
      {one, -c * (xi + one), -c * (one + xi_inv), -c},
  };
  for (int r = 0; r < 3; ++r) R.set(r, r, one);
  for (int r = 0; r < 3; ++r)
    for (int col = 0; col < 4; ++col) R.set(3 + col, r, xt[r][col]);
  inst.R = R;
  inst.ctx.dims = dims;
  inst.family = "odd-type";
  inst.params["c"] = cdesc;
  return inst;
}

} // namespace

GeneratedInstance gen_odd_type_ce(const Coeff& c) {
  if (c.is_zero()) fail(Errc::InvalidArgument, "odd-type family needs c != 0");
  int dims = 1;
  LaurentPoly xi = LaurentPoly::variable(dims, 0);
  LaurentPoly xi_inv = LaurentPoly::variable(dims, 0, -1);
  GeneratedInstance inst = odd_type_from(dims, xi, xi_inv, cpoly(dims, c), c.str());
  inst.ctx.vars = {"xi"};
  return inst;
}

GeneratedInstance gen_odd_type_symbolic() {
  // both xi and c live as Laurent variables, matching the fully symbolic
  // appendix computation
  int dims = 2;
  LaurentPoly xi = LaurentPoly::variable(dims, 0);
  LaurentPoly xi_inv = LaurentPoly::variable(dims, 0, -1);
  LaurentPoly c = LaurentPoly::variable(dims, 1);
  GeneratedInstance inst = odd_type_from(dims, xi, xi_inv, c, "symbolic");
  inst.ctx.vars = {"xi", "c"};
  return inst;
}

GeneratedInstance gen_planar_key_ce(int k, std::vector<Coeff> cvec, std::vector<Coeff> muvec,
                                    std::uint64_t seed) {
  if (k < 4) fail(Errc::InvalidArgument, "planar-key family needs k >= 4");
  SplitMix64 rng(seed);
  int dims = 1;
  int n = 2 * k;
  int m = k - 2;
  std::size_t mu_count = static_cast<std::size_t>(m) * (m - 1) / 2;
  if (!cvec.empty() && cvec.size() != static_cast<std::size_t>(m))
    fail(Errc::InvalidArgument, "c-vector needs k-2 entries");
  if (!muvec.empty() && muvec.size() != mu_count)
    fail(Errc::InvalidArgument, "mu-vector needs C(k-2,2) entries");

  SymbolicMatrix L(k, n, dims);
  for (int r = 0; r < k; ++r) L.set(r, r, cpoly(dims, Coeff(1)));
  L.set(0, k, cpoly(dims, Coeff(1)));
  L.set(0, k + 1, cpoly(dims, Coeff(1)));
  L.set(1, k, cpoly(dims, Coeff(1)));
  L.set(1, k + 1, cpoly(dims, Coeff(-1)));
  for (int u = 0; u < m; ++u) L.set(2 + u, k + 2 + u, cpoly(dims, Coeff(1)));

  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    std::vector<Coeff> c = cvec, mu = muvec;
    if (c.empty())
      for (int u = 0; u < m; ++u) c.emplace_back(rng.nonzero_rational(19, 4));
    if (mu.empty())
      for (std::size_t u = 0; u < mu_count; ++u) mu.emplace_back(rng.nonzero_rational(19, 4));
    Coeff theta(rng.nonzero_rational(19, 4));
    for (const Coeff& v : c)
      if (v.is_zero()) fail(Errc::InvalidArgument, "c parameters must be nonzero");

    auto mu_at = [&](int u, int w) {  // u < w, 0-based
      int idx = 0;
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
          if (a == u && b == w) return mu[idx];
          ++idx;
        }
      fail(Errc::Internal, "mu index");
    };

    LaurentPoly tau = LaurentPoly::variable(dims, 0);
    SymbolicMatrix R(n, k, dims);
    // R^T row 1: [-tau^2, tau^2, 0.., 0, -1, c_u^2...]
    R.set(0, 0, -(tau * tau));
    R.set(1, 0, tau * tau);
    R.set(k + 1, 0, cpoly(dims, Coeff(-1)));
    for (int u = 0; u < m; ++u) R.set(k + 2 + u, 0, cpoly(dims, c[u] * c[u]));
    // row 2: [theta^2 + 1, 1, 0.., 1, 0, 1...]
    R.set(0, 1, cpoly(dims, theta * theta + Coeff(1)));
    R.set(1, 1, cpoly(dims, Coeff(1)));
    R.set(k, 1, cpoly(dims, Coeff(1)));
    for (int u = 0; u < m; ++u) R.set(k + 2 + u, 1, cpoly(dims, Coeff(1)));
    // rows 3..k: [0, 0, I, 1, -1/c_u^2, Z]
    for (int u = 0; u < m; ++u) {
      R.set(2 + u, 2 + u, cpoly(dims, Coeff(1)));
      R.set(k, 2 + u, cpoly(dims, Coeff(1)));
      R.set(k + 1, 2 + u, cpoly(dims, -(c[u] * c[u]).inverse()));
      for (int w = 0; w < m; ++w) {
        Coeff z(1);
        if (w > u) z = Coeff(1) + c[w] * mu_at(u, w) / c[u];
        else if (w < u) z = Coeff(1) - c[w] * mu_at(w, u) / c[u];
        R.set(k + 2 + w, 2 + u, cpoly(dims, z));
      }
    }
    if (!genericity_check(R)) {
      if (!cvec.empty() && !muvec.empty())
        fail(Errc::GenericityViolation, "supplied planar-key parameters are degenerate");
      continue;
    }

    GeneratedInstance inst;
    inst.L = L;
    inst.R = R;
    inst.ctx.dims = dims;
    inst.ctx.vars = {"t"};
    inst.family = "planar-key";
    inst.seed = seed;
    inst.params["k"] = std::to_string(k);
    inst.params["theta"] = theta.str();
    inst.params["zeta"] = "t^2";
    HTermTable table = h_table(inst.L, inst.R);
    if (!all_monomial(monomiality_report(table))) continue;
    return inst;
  }
  fail(Errc::GenericityViolation, "could not sample generic planar-key constants");
}

RankingDemo iia_demo(int k, const std::vector<long>& psi_in, std::uint64_t seed) {
  int n = 2 * k;
  if (static_cast<int>(psi_in.size()) != n)
    fail(Errc::InvalidArgument, "psi must assign a weight to each of the 2k indices");
  {
    std::vector<long> sorted = psi_in;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::InvalidArgument, "psi must be injective");
  }
  // the construction assumes the identity ranking; relabel internally to a
  // sorted psi (a simultaneous relabelling of the family, per gauge freedom)
  std::vector<long> psi = psi_in;
  std::sort(psi.begin(), psi.end());

  GeneratedInstance base = gen_principal_minor_ce(k, seed);
  int dims = 1;
  // R~ = diag(t^{psi(a) - psi(1)}) * R0(tau)|_{tau = t^{psi(n) - psi(1)}}
  long span = psi[n - 1] - psi[0];
  SymbolicMatrix Rt(n, k, dims);
  for (int r = 0; r < n; ++r) {
    LaurentPoly row_scale = LaurentPoly::monomial(dims, Coeff(1), {psi[r] - psi[0]});
    for (int c = 0; c < k; ++c) {
      // substitute tau -> t^span in the (at most linear in tau) entry
      const LaurentPoly& e = base.R.at(r, c);
      LaurentPoly subst(dims);
      for (const auto& [exp, coef] : e.terms())
        subst += LaurentPoly::monomial(dims, coef, {exp[0] * span});
      Rt.set(r, c, subst * row_scale);
    }
  }

  RankingDemo demo;
  demo.k = k;
  demo.n = n;
  demo.psi = psi;
  demo.i = 1;
  demo.alpha = k + 1;
  demo.j = 2;
  demo.beta = k + 2;
  demo.base_i = Subset::full(k);
  demo.base_j = demo.base_i.exchange(demo.j, demo.beta);
  Subset ia = demo.base_i.exchange(demo.i, demo.alpha);
  Subset ja = demo.base_j.exchange(demo.i, demo.alpha);

  LaurentPoly d_i = minor_on_rows(Rt, demo.base_i);
  LaurentPoly d_ia = minor_on_rows(Rt, ia);
  LaurentPoly d_j = minor_on_rows(Rt, demo.base_j);
  LaurentPoly d_ja = minor_on_rows(Rt, ja);
  if (d_i.is_zero() || d_ia.is_zero() || d_j.is_zero() || d_ja.is_zero())
    fail(Errc::GenericityViolation, "demo minors vanish identically");

  // grow the evaluation point until both strict comparisons certify
  Rational m(2);
  for (int round = 0; round < 256; ++round, m *= 2) {
    std::vector<Coeff> pt{Coeff(m)};
    Coeff vi = d_i.eval(pt), via = d_ia.eval(pt);
    Coeff vj = d_j.eval(pt), vja = d_ja.eval(pt);
    if (vi.is_zero() || vj.is_zero()) continue;
    Coeff r1 = via / vi, r2 = vja / vj;
    bool gt = r1.norm2() > 1;
    bool lt = r2.norm2() < 1;
    if (gt && lt) {
      demo.t0 = Coeff(m);
      demo.ratio_at_i = r1;
      demo.ratio_at_j = r2;
      demo.greater_at_i = true;
      demo.less_at_j = true;
      return demo;
    }
  }
  fail(Errc::Internal, "no evaluation point separated the rankings");
}

} // namespace detrig
