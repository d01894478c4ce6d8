#pragma once

#include <set>
#include <vector>

#include "detrig/matrix.hpp"
#include "detrig/rng.hpp"

namespace detrig {

// The family G(L) of k-subsets with nonvanishing maximal minor of L.
// Immutable after construction; all queries are read-only.
class Matroid {
public:
  Matroid() = default;
  Matroid(int n, int k, std::vector<Subset> bases);

  int n() const { return n_; }
  int rank() const { return k_; }
  const std::vector<Subset>& bases() const { return bases_; }
  bool is_basis(const Subset& s) const { return index_.count(s) != 0; }
  long size() const { return static_cast<long>(bases_.size()); }

  // Exchange axiom spot check (exhaustive when C(n,k) small, else sampled);
  // throws on violation. Used at construction and by tests.
  void verify_exchange(bool exhaustive, SplitMix64* rng = nullptr) const;

  // Columns of [n] contained in no basis (violates the standing assumption
  // on the dependence pattern; reported, never silently fixed).
  std::vector<int> null_columns() const;
  // Pairs (I, i) admitting no valid single exchange.
  bool every_exchange_possible() const;

private:
  int n_ = 0, k_ = 0;
  std::vector<Subset> bases_;  // lexicographically sorted
  std::set<Subset> index_;
};

// Basis family of L from its maximal minors. Throws RankDeficient when L
// has no nonvanishing maximal minor.
Matroid compute_matroid(const SymbolicMatrix& L, long cache_cap = 200000);

// Chain L_0 = H, .., L_r = K inside the matroid with one exchange per step
// and r = |H \ K|. Smallest-index tie-breaking.
std::vector<Subset> exchange_chain(const Matroid& g, const Subset& h, const Subset& k);

struct NullSets {
  std::vector<int> lower;           // N_{I;A} subset of I^C
  std::vector<int> upper;           // N^{I;H} subset of I
  std::vector<std::pair<int, int>> pairs;  // N(A;H)
};

// Def-3 null sets for a basis I, row set A and column set H.
NullSets null_sets(const Matroid& g, const Subset& I, const std::vector<int>& A,
                   const std::vector<int>& H);

// The union relation: some basis exchanges alpha against beta in either
// direction. Irreflexive by convention.
bool nabla_related(const Matroid& g, int alpha, int beta);

// All nabla-related pairs (alpha < beta) together with one witness basis
// J (alpha in J, J^alpha_beta a basis) per pair.
std::vector<std::pair<int, int>> nabla_pairs(const Matroid& g);

} // namespace detrig
