#include "detrig/matroid.hpp"

#include <algorithm>

#include "detrig/error.hpp"

namespace detrig {

Matroid::Matroid(int n, int k, std::vector<Subset> bases)
    : n_(n), k_(k), bases_(std::move(bases)) {
  if (bases_.empty()) fail(Errc::RankDeficient, "empty basis family");
  std::sort(bases_.begin(), bases_.end());
  index_.insert(bases_.begin(), bases_.end());
}

void Matroid::verify_exchange(bool exhaustive, SplitMix64* rng) const {
  auto check_pair = [&](const Subset& a, const Subset& b) {
    for (int alpha : a.difference(b)) {
      bool found = false, found_sym = false;
      for (int beta : b.difference(a)) {
        if (is_basis(a.exchange(alpha, beta))) {
          found = true;
          if (is_basis(b.exchange(beta, alpha))) found_sym = true;
        }
      }
      if (!found || !found_sym)
        fail(Errc::Internal, "basis family violates the (symmetric) exchange relation");
    }
  };
  if (exhaustive) {
    for (const Subset& a : bases_)
      for (const Subset& b : bases_) check_pair(a, b);
    return;
  }
  SplitMix64 local(0x9d2c5680u);
  SplitMix64& r = rng ? *rng : local;
  long m = size();
  for (int trial = 0; trial < 256; ++trial)
    check_pair(bases_[r.below(m)], bases_[r.below(m)]);
}

std::vector<int> Matroid::null_columns() const {
  std::vector<bool> seen(n_ + 1, false);
  for (const Subset& b : bases_)
    for (int x : b.elems()) seen[x] = true;
  std::vector<int> out;
  for (int x = 1; x <= n_; ++x)
    if (!seen[x]) out.push_back(x);
  return out;
}

bool Matroid::every_exchange_possible() const {
  for (const Subset& b : bases_) {
    for (int i : b.elems()) {
      bool ok = false;
      for (int alpha : b.complement(n_)) {
        if (is_basis(b.exchange(i, alpha))) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
  }
  return true;
}

Matroid compute_matroid(const SymbolicMatrix& L, long cache_cap) {
  int k = L.rows(), n = L.cols();
  if (binomial_count(n, k) > cache_cap) fail(Errc::InvalidArgument, "subset count exceeds cache cap");
  std::vector<Subset> bases;
  for (const Subset& s : all_subsets(n, k))
    if (!minor_on_columns(L, s).is_zero()) bases.push_back(s);
  if (bases.empty()) fail(Errc::RankDeficient, "matrix has rank < k");
  Matroid g(n, k, std::move(bases));
  g.verify_exchange(g.size() <= 512);
  return g;
}

std::vector<Subset> exchange_chain(const Matroid& g, const Subset& h, const Subset& k) {
  if (!g.is_basis(h) || !g.is_basis(k)) fail(Errc::InvalidArgument, "exchange_chain endpoints not bases");
  std::vector<Subset> chain;
  chain.push_back(h);
  Subset cur = h;
  while (cur != k) {
    std::vector<int> removable = cur.difference(k);
    bool stepped = false;
    for (int i : removable) {
      for (int beta : k.difference(cur)) {
        Subset next = cur.exchange(i, beta);
        if (g.is_basis(next)) {
          cur = next;
          chain.push_back(cur);
          stepped = true;
          break;
        }
      }
      if (stepped) break;
    }
    if (!stepped) fail(Errc::Internal, "exchange axiom failed along chain");
  }
  return chain;
}

NullSets null_sets(const Matroid& g, const Subset& I, const std::vector<int>& A,
                   const std::vector<int>& H) {
  if (!g.is_basis(I)) fail(Errc::InvalidArgument, "null_sets: I not a basis");
  for (int i : A)
    if (!I.contains(i)) fail(Errc::InvalidArgument, "null_sets: A not inside I");
  for (int alpha : H)
    if (I.contains(alpha)) fail(Errc::InvalidArgument, "null_sets: H not inside I^C");
  NullSets out;
  for (int gamma : I.complement(g.n())) {
    bool all_zero = true;
    for (int i : A)
      if (g.is_basis(I.exchange(i, gamma))) {
        all_zero = false;
        break;
      }
    if (all_zero) out.lower.push_back(gamma);
  }
  for (int m : I.elems()) {
    bool all_zero = true;
    for (int alpha : H)
      if (g.is_basis(I.exchange(m, alpha))) {
        all_zero = false;
        break;
      }
    if (all_zero) out.upper.push_back(m);
  }
  for (int m : I.elems()) {
    bool m_up = std::binary_search(out.upper.begin(), out.upper.end(), m);
    for (int omega : I.complement(g.n())) {
      bool o_low = std::binary_search(out.lower.begin(), out.lower.end(), omega);
      if (o_low || m_up) out.pairs.emplace_back(m, omega);
    }
  }
  return out;
}

bool nabla_related(const Matroid& g, int alpha, int beta) {
  if (alpha == beta) return false;  // irreflexive by convention
  for (const Subset& h : g.bases()) {
    if (h.contains(beta) && !h.contains(alpha) && g.is_basis(h.exchange(beta, alpha))) return true;
    if (h.contains(alpha) && !h.contains(beta) && g.is_basis(h.exchange(alpha, beta))) return true;
  }
  return false;
}

std::vector<std::pair<int, int>> nabla_pairs(const Matroid& g) {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= g.n(); ++a)
    for (int b = a + 1; b <= g.n(); ++b)
      if (nabla_related(g, a, b)) out.emplace_back(a, b);
  return out;
}

} // namespace detrig
