#include "detrig/canonical.hpp"

#include <algorithm>

namespace detrig {

namespace {

std::array<int, 4> canon_key(int i, int j, int a, int b) {
  if (i > j) std::swap(i, j);
  if (a > b) std::swap(a, b);
  return {i, j, a, b};
}

// one swapped pair inverts the value, two swaps cancel
bool inverted_orientation(int i, int j, int a, int b) {
  return (i > j) != (a > b);
}

} // namespace

bool YAssignment::has(int i, int j, int a, int b) const {
  return values_.count(canon_key(i, j, a, b)) != 0;
}

LaurentRatio YAssignment::value(int i, int j, int a, int b) const {
  auto it = values_.find(canon_key(i, j, a, b));
  if (it == values_.end()) fail(Errc::InvalidArgument, "unresolved Y-term requested");
  return inverted_orientation(i, j, a, b) ? it->second.inverse() : it->second;
}

void YAssignment::set(int i, int j, int a, int b, LaurentRatio v, AmbiguityClass cls) {
  std::array<int, 4> key = canon_key(i, j, a, b);
  if (inverted_orientation(i, j, a, b)) v = v.inverse();
  values_[key] = std::move(v);
  classes_[key] = cls;
}

namespace {

struct Candidate {
  LaurentRatio root1, root2;  // the two admissible roots, canonical orientation
};

// Deterministic anchor root pick: prefer the root whose leading coefficient
// has positive real part (then positive imaginary), else structural order.
const LaurentRatio& pick_anchor_root(const LaurentRatio& r1, const LaurentRatio& r2) {
  auto lead_positive = [](const LaurentRatio& r) {
    if (r.is_zero()) return false;
    Coeff c = r.num().lead_term().second / r.den().lead_term().second;
    return c.real() > 0 || (c.real() == 0 && c.imag() > 0);
  };
  bool p1 = lead_positive(r1), p2 = lead_positive(r2);
  if (p1 != p2) return p1 ? r1 : r2;
  return r1.num() < r2.num() ? r2 : r1;
}

class Resolver {
public:
  Resolver(const HTermTable& table, const Matroid& g, YAssignment& out)
      : table_(table), g_(g), out_(out), I_(out.basis), rows_(I_.elems()),
        cols_(I_.complement(g.n())), dims_(table.dims()),
        minus_one_(LaurentRatio::constant(table.dims(), Coeff(-1))) {}

  void seed_observables();
  void close();                      // composition fixpoint
  bool consume_anchor_choice();      // returns true if a choice was made
  void resolve_nonobservable_terms();
  bool done() const { return pending_.empty(); }

private:
  std::optional<LaurentRatio> get(int i, int j, int a, int b) const {
    if (i == j || a == b) return minus_one_;
    if (out_.has(i, j, a, b)) return out_.value(i, j, a, b);
    return std::nullopt;
  }

  void assign(int i, int j, int a, int b, LaurentRatio v, AmbiguityClass cls) {
    out_.set(i, j, a, b, std::move(v), cls);
    pending_.erase(canon_key(i, j, a, b));
    progress_ = true;
  }

  bool close_lower_triples();
  bool close_upper_triples();
  bool close_root_pairs();

  const HTermTable& table_;
  const Matroid& g_;
  YAssignment& out_;
  Subset I_;
  std::vector<int> rows_, cols_;
  int dims_;
  LaurentRatio minus_one_;
  std::map<std::array<int, 4>, Candidate> pending_;
  bool progress_ = false;
};

void Resolver::seed_observables() {
  for (std::size_t a = 0; a < rows_.size(); ++a)
    for (std::size_t b = a + 1; b < rows_.size(); ++b)
      for (std::size_t c = 0; c < cols_.size(); ++c)
        for (std::size_t d = c + 1; d < cols_.size(); ++d) {
          int i = rows_[a], j = rows_[b], al = cols_[c], be = cols_[d];
          LaurentPoly hh = table_.h(I_) * table_.h(I_.exchange2(i, j, al, be));
          LaurentPoly straight = table_.h(I_.exchange(i, al)) * table_.h(I_.exchange(j, be));
          LaurentPoly crossed = table_.h(I_.exchange(i, be)) * table_.h(I_.exchange(j, al));
          bool observable = !(hh.is_zero() && straight.is_zero() && crossed.is_zero());
          if (!observable) continue;
          if (!hh.is_zero() && !straight.is_zero() && !crossed.is_zero()) {
            // key: both roots of F are admissible a priori
            LaurentPoly a2 = crossed, a1 = crossed - hh + straight, a0 = straight;
            LaurentPoly disc = a1 * a1 - a2 * a0 * Coeff(4);
            if (disc.is_zero()) {
              out_.set(i, j, al, be, LaurentRatio(-a1, a2 * Coeff(2)),
                       AmbiguityClass::DoubleRoot);
              continue;
            }
            auto s = disc.sqrt();
            if (!s)
              fail(Errc::NotRecoverable,
                   "key discriminant is not a recognisable square (non-integrable data)");
            Candidate cand;
            cand.root1 = LaurentRatio(-a1 + *s, a2 * Coeff(2));
            cand.root2 = LaurentRatio(-a1 - *s, a2 * Coeff(2));
            pending_[{i, j, al, be}] = std::move(cand);
          } else if (hh.is_zero()) {
            // F = (crossed X + straight)(X + 1); -1 is excluded
            if (straight.is_zero() || crossed.is_zero())
              fail(Errc::GenericityViolation, "observable set with a vanishing Y-term");
            out_.set(i, j, al, be, LaurentRatio(-straight, crossed),
                     AmbiguityClass::NonKeyUnique);
          } else if (straight.is_zero()) {
            // F = X (crossed X + crossed - hh); 0 is excluded
            if (crossed.is_zero()) fail(Errc::GenericityViolation, "impossible chi pattern");
            out_.set(i, j, al, be, LaurentRatio(hh - crossed, crossed),
                     AmbiguityClass::NonKeyUnique);
          } else {
            // crossed = 0: the reciprocal takes the binomial form
            out_.set(i, j, al, be, LaurentRatio(straight, hh - straight),
                     AmbiguityClass::NonKeyUnique);
          }
        }
}

bool Resolver::close_lower_triples() {
  bool changed = false;
  for (std::size_t a = 0; a < rows_.size(); ++a)
    for (std::size_t b = a + 1; b < rows_.size(); ++b) {
      int i = rows_[a], j = rows_[b];
      for (int x : cols_)
        for (int y : cols_)
          for (int z : cols_) {
            if (x == y || y == z || x == z) continue;
            auto v1 = get(i, j, x, y), v2 = get(i, j, y, z), v3 = get(i, j, x, z);
            int known = (v1 ? 1 : 0) + (v2 ? 1 : 0) + (v3 ? 1 : 0);
            if (known != 2) continue;
            if (!v3 && !v1->is_zero() && !v2->is_zero()) {
              assign(i, j, x, z, -(*v1 * *v2), AmbiguityClass::ChainResolved);
              changed = true;
            } else if (!v1 && !v2->is_zero()) {
              assign(i, j, x, y, -(*v3 / *v2), AmbiguityClass::ChainResolved);
              changed = true;
            } else if (!v2 && v1 && !v1->is_zero()) {
              assign(i, j, y, z, -(*v3 / *v1), AmbiguityClass::ChainResolved);
              changed = true;
            }
          }
    }
  return changed;
}

bool Resolver::close_upper_triples() {
  bool changed = false;
  for (std::size_t c = 0; c < cols_.size(); ++c)
    for (std::size_t d = c + 1; d < cols_.size(); ++d) {
      int al = cols_[c], be = cols_[d];
      for (int x : rows_)
        for (int y : rows_)
          for (int z : rows_) {
            if (x == y || y == z || x == z) continue;
            auto v1 = get(x, y, al, be), v2 = get(y, z, al, be), v3 = get(x, z, al, be);
            int known = (v1 ? 1 : 0) + (v2 ? 1 : 0) + (v3 ? 1 : 0);
            if (known != 2) continue;
            if (!v3 && !v1->is_zero() && !v2->is_zero()) {
              assign(x, z, al, be, -(*v1 * *v2), AmbiguityClass::ChainResolved);
              changed = true;
            } else if (!v1 && !v2->is_zero()) {
              assign(x, y, al, be, -(*v3 / *v2), AmbiguityClass::ChainResolved);
              changed = true;
            } else if (!v2 && v1 && !v1->is_zero()) {
              assign(y, z, al, be, -(*v3 / *v1), AmbiguityClass::ChainResolved);
              changed = true;
            }
          }
    }
  return changed;
}

// A known target Y_{ab} with two pending root pairs chained through a shared
// index: exactly one root combination satisfies Y_{as} Y_{sb} = -Y_{ab}.
bool Resolver::close_root_pairs() {
  for (auto it1 = pending_.begin(); it1 != pending_.end(); ++it1) {
    for (auto it2 = std::next(it1); it2 != pending_.end(); ++it2) {
      const auto& k1 = it1->first;
      const auto& k2 = it2->first;
      bool lower_chain = (k1[0] == k2[0] && k1[1] == k2[1]);
      bool upper_chain = (k1[2] == k2[2] && k1[3] == k2[3]);
      if (!lower_chain && !upper_chain) continue;
      // the moving pairs and the shared element
      std::array<int, 2> p1 = lower_chain ? std::array<int, 2>{k1[2], k1[3]}
                                          : std::array<int, 2>{k1[0], k1[1]};
      std::array<int, 2> p2 = lower_chain ? std::array<int, 2>{k2[2], k2[3]}
                                          : std::array<int, 2>{k2[0], k2[1]};
      int shared = -1;
      for (int u : p1)
        for (int w : p2)
          if (u == w) shared = u;
      if (shared < 0) continue;
      int endA = (p1[0] == shared) ? p1[1] : p1[0];
      int endB = (p2[0] == shared) ? p2[1] : p2[0];
      if (endA == endB) continue;
      auto target = lower_chain ? get(k1[0], k1[1], endA, endB) : get(endA, endB, k1[2], k1[3]);
      if (!target) continue;
      // express candidates in the (endA, shared) / (shared, endB) orientations
      auto orient1 = [&](const LaurentRatio& r) { return endA < shared ? r : r.inverse(); };
      auto orient2 = [&](const LaurentRatio& r) { return shared < endB ? r : r.inverse(); };
      std::vector<std::pair<const LaurentRatio*, const LaurentRatio*>> valid;
      for (const LaurentRatio* r1 : {&it1->second.root1, &it1->second.root2})
        for (const LaurentRatio* r2 : {&it2->second.root1, &it2->second.root2}) {
          if (r1->is_zero() || r2->is_zero()) continue;
          if (-(orient1(*r1) * orient2(*r2)) == *target) valid.push_back({r1, r2});
        }
      if (valid.size() != 1) continue;
      LaurentRatio v1 = *valid[0].first, v2 = *valid[0].second;
      auto key1 = *it1, key2 = *it2;
      assign(key1.first[0], key1.first[1], key1.first[2], key1.first[3], v1,
             AmbiguityClass::ChainResolved);
      assign(key2.first[0], key2.first[1], key2.first[2], key2.first[3], v2,
             AmbiguityClass::ChainResolved);
      return true;  // iterators invalidated
    }
  }
  return false;
}

void Resolver::close() {
  while (true) {
    bool changed = close_lower_triples();
    changed = close_upper_triples() || changed;
    changed = close_root_pairs() || changed;
    if (!changed) break;
  }
}

bool Resolver::consume_anchor_choice() {
  if (pending_.empty() || out_.anchor_choice_used) return false;
  auto it = pending_.begin();
  const LaurentRatio pick = pick_anchor_root(it->second.root1, it->second.root2);
  out_.anchor_choice_used = true;
  out_.anchor_term = it->first;
  assign(it->first[0], it->first[1], it->first[2], it->first[3], pick,
         AmbiguityClass::ChainResolved);
  return true;
}

void Resolver::resolve_nonobservable_terms() {
  // the canonical form needs Y^{g q}_{k1 omega} for every q in I, omega in
  // I^C; resolve the gaps via the common-root elimination between the two
  // kappa quadratics, then re-close
  for (int q : rows_) {
    if (q == out_.g) continue;
    for (int omega : cols_) {
      if (omega == out_.kappa1) continue;
      if (out_.has(out_.g, q, out_.kappa1, omega)) continue;
      bool resolved = false;
      for (int w : rows_) {
        if (resolved || w == out_.g || w == q) continue;
        if (!table_.has(I_.exchange(w, omega))) continue;
        for (int rho : cols_) {
          if (resolved || rho == omega || rho == out_.kappa1 || rho == out_.kappa2) continue;
          if (!table_.has(I_.exchange(q, rho))) continue;
          if (omega == out_.kappa2) break;  // degenerate triple; rely on chains
          auto y_qw = get(q, w, omega, rho);
          auto y_qg1 = get(q, out_.g, out_.kappa1, rho);
          auto y_qg2 = get(q, out_.g, out_.kappa2, rho);
          auto y_gw1 = get(out_.g, w, omega, out_.kappa1);
          auto y_gw2 = get(out_.g, w, omega, out_.kappa2);
          auto xm1 = get(w, q, rho, out_.kappa1);
          auto xm2 = get(w, q, rho, out_.kappa2);
          if (!y_qw || !y_qg1 || !y_qg2 || !y_gw1 || !y_gw2 || !xm1 || !xm2) continue;
          if (y_gw1->is_zero() || y_gw2->is_zero() || xm1->is_zero() || xm2->is_zero()) continue;
          LaurentRatio xplus =
              common_root_eliminate(*y_qw, {*y_qg1, *y_qg2}, {*y_gw1, *y_gw2}, {*xm1, *xm2});
          auto y_rho_k1 = get(q, out_.g, rho, out_.kappa1);
          if (!y_rho_k1 || xplus.is_zero()) continue;
          // Y^{qg}_{omega k1} = -Y^{qg}_{omega rho} Y^{qg}_{rho k1}
          assign(q, out_.g, omega, out_.kappa1, -(xplus * *y_rho_k1),
                 AmbiguityClass::CommonRootResolved);
          resolved = true;
        }
      }
      if (resolved) close();
      if (!out_.has(out_.g, q, out_.kappa1, omega))
        fail(Errc::NotRecoverable, "a required non-observable Y-term stayed undetermined");
    }
  }
}

} // namespace

LaurentRatio common_root_eliminate(const LaurentRatio& y_qw_omega_rho,
                                   const std::pair<LaurentRatio, LaurentRatio>& y_qg_kap_rho,
                                   const std::pair<LaurentRatio, LaurentRatio>& y_gw_omega_kap,
                                   const std::pair<LaurentRatio, LaurentRatio>& x_minus) {
  if (x_minus.first == x_minus.second)
    fail(Errc::GenericityViolation,
         "spurious roots coincide: Y^{wq}_{k1 k2} = -1 violates genericity");
  // product of the two roots of P(Y^{gw} X) is -Y^{qw} Y^{qg} / Y^{gw}
  LaurentRatio cand1 =
      -(y_qw_omega_rho * y_qg_kap_rho.first) / (y_gw_omega_kap.first * x_minus.first);
  LaurentRatio cand2 =
      -(y_qw_omega_rho * y_qg_kap_rho.second) / (y_gw_omega_kap.second * x_minus.second);
  if (!(cand1 == cand2))
    fail(Errc::Internal, "common-root candidates disagree across kappa1, kappa2");
  return cand1;
}

YAssignment resolve_y_assignment(const HTermTable& table, const Matroid& g) {
  YAssignment out;
  const Subset I = g.bases().front();
  out.basis = I;
  const std::vector<int> rows = I.elems();
  const std::vector<int> cols = I.complement(g.n());

  // anchor weak pair: smallest (g, k1, k2) with both single exchanges alive
  bool found = false;
  for (int gg : rows) {
    for (std::size_t c1 = 0; c1 < cols.size() && !found; ++c1)
      for (std::size_t c2 = c1 + 1; c2 < cols.size() && !found; ++c2)
        if (table.has(I.exchange(gg, cols[c1])) && table.has(I.exchange(gg, cols[c2]))) {
          out.g = gg;
          out.kappa1 = cols[c1];
          out.kappa2 = cols[c2];
          found = true;
        }
    if (found) break;
  }
  if (!found)
    fail(Errc::NotRecoverable,
         "no weak pair {g} x {k1, k2}: the canonical form is not determined "
         "(transpose-ambiguous family)");

  Resolver resolver(table, g, out);
  resolver.seed_observables();
  resolver.close();
  while (!resolver.done()) {
    if (!resolver.consume_anchor_choice())
      fail(Errc::NotRecoverable, "ambiguous Y-terms remain after one anchor choice");
    resolver.close();
  }
  resolver.resolve_nonobservable_terms();
  return out;
}

std::pair<SymbolicMatrix, SymbolicMatrix> canonical_form(const YAssignment& assignment,
                                                         const HTermTable& table,
                                                         const Matroid& g) {
  const Subset& I = assignment.basis;
  const int n = g.n(), k = g.rank(), dims = table.dims();
  const std::vector<int> rows = I.elems();
  const std::vector<int> cols = I.complement(n);

  auto exch_sign = [&](int i, int alpha) {
    Subset t = I.exchange(i, alpha);
    return ((t.index_of(alpha) + I.index_of(i)) % 2 == 0) ? 1 : -1;
  };

  // R*: identity block on I; row alpha carries sign * v with v = 1 on the
  // g-column and the kappa1-row and v = c1 c2 Y^{g i}_{k1 alpha} elsewhere.
  SymbolicMatrix Rstar(n, k, dims);
  for (int i : rows) Rstar.set(i - 1, I.index_of(i), LaurentPoly::constant(dims, Coeff(1)));
  for (int alpha : cols) {
    for (int i : rows) {
      LaurentRatio v = LaurentRatio::constant(dims, Coeff(1));
      if (alpha != assignment.kappa1 && i != assignment.g) {
        int c1 = gp_sign_c1(assignment.g, i, assignment.kappa1, alpha);
        int c2 = gp_sign_c2(assignment.g, i, assignment.kappa1, alpha);
        v = assignment.value(assignment.g, i, assignment.kappa1, alpha) * Coeff(c1 * c2);
      }
      auto poly = v.poly_value();
      if (!poly) fail(Errc::NotRecoverable, "canonical entry is not a Laurent polynomial");
      Rstar.set(alpha - 1, I.index_of(i), *poly * Coeff(exch_sign(i, alpha)));
    }
  }

  // L*: identity block on I scaled so every maximal minor is h(I')/D_{R*}(I').
  LaurentPoly dr_anchor = minor_on_rows(Rstar, I);
  if (dr_anchor.is_zero()) fail(Errc::Internal, "canonical R* lost the anchor minor");
  SymbolicMatrix Lstar(k, n, dims);
  for (int i : rows) Lstar.set(I.index_of(i), i - 1, LaurentPoly::constant(dims, Coeff(1)));
  for (int alpha : cols) {
    for (int i : rows) {
      const LaurentPoly& h_ex = table.h(I.exchange(i, alpha));
      if (h_ex.is_zero()) continue;
      LaurentPoly dr_ex = minor_on_rows(Rstar, I.exchange(i, alpha));
      if (dr_ex.is_zero())
        fail(Errc::NotRecoverable, "canonical R* minor vanishes on a live exchange");
      LaurentRatio ratio =
          LaurentRatio(h_ex * dr_anchor, table.h(I) * dr_ex) * Coeff(exch_sign(i, alpha));
      auto poly = ratio.poly_value();
      if (!poly) fail(Errc::NotRecoverable, "canonical L* entry is not a Laurent polynomial");
      Lstar.set(I.index_of(i), alpha - 1, *poly);
    }
  }
  // absorb the global factor h(I)/D_{R*}(I) into the first row
  {
    LaurentRatio scale(table.h(I), dr_anchor);
    for (int c = 0; c < n; ++c) {
      auto poly = (LaurentRatio(Lstar.at(0, c)) * scale).poly_value();
      if (!poly) fail(Errc::NotRecoverable, "canonical global factor is not polynomial");
      Lstar.set(0, c, *poly);
    }
  }

  // the canonical pair must reproduce the whole table
  HTermTable check = h_table(Lstar, Rstar);
  if (check.entries().size() != table.entries().size())
    fail(Errc::Internal, "canonical round trip changed the support");
  for (const auto& [s, h] : table.entries())
    if (!(check.h(s) == h)) fail(Errc::Internal, "canonical round trip mismatch");
  return {std::move(Lstar), std::move(Rstar)};
}

} // namespace detrig
