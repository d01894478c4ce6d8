#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "detrig/integrability.hpp"

namespace detrig {

// A generated (L, R) pair with its provenance; the JSON export carries the
// family name, parameters and seed so runs are reproducible byte for byte.
struct GeneratedInstance {
  SymbolicMatrix L, R;
  LaurentContext ctx;
  std::string family;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> params;
};

// Principal-minor family: L0 = (I_k | I_k), R0(tau) = (I_k | tau 11^T + S)^T
// for a seeded skew-symmetric rational S. Monomiality holds with the parity
// law deg_tau h(I) = (|[k] \ I| mod 2); the instance is never integrable.
GeneratedInstance gen_principal_minor_ce(int k, std::uint64_t seed);

// Degrees in tau of every basis term, computed twice: from the symbolic
// h-table and through the matrix-determinant-lemma / Schur-complement
// shortcut on exact rational data. Disagreement throws (bug sentinel).
std::map<Subset, long> parity_oracle(const GeneratedInstance& inst);

// Multiple-weak-keys family at n = 2k + p - 1 with the paper's entry
// constraints r_s = xi/i_s - 1, S_{s,u} = i_s^{-1} i_u (1 - S_{u,s}) + 1.
GeneratedInstance gen_weak_keys_ce(int k, int p, std::uint64_t seed);

// The explicit 7-column odd-type instance at (k, p) = (3, 2); c is a free
// nonzero constant. Variables are (xi, c) when c is passed symbolically
// through gen_odd_type_symbolic.
GeneratedInstance gen_odd_type_ce(const Coeff& c);
GeneratedInstance gen_odd_type_symbolic();

// Planar-key family at n = 2k: the only key of L_p is planar and the model
// is still non-integrable.
GeneratedInstance gen_planar_key_ce(int k, std::vector<Coeff> cvec, std::vector<Coeff> muvec,
                                    std::uint64_t seed);

struct RankingDemo {
  int k = 0, n = 0;
  std::vector<long> psi;
  Coeff t0;
  Subset base_i, base_j;     // I = [k] and J = I^j_beta
  int i = 0, alpha = 0;      // the compared pair
  int j = 0, beta = 0;       // the exchange defining J
  Coeff ratio_at_i;          // D(I^i_a) / D(I) at t0
  Coeff ratio_at_j;          // D(J^i_a) / D(J) at t0
  bool greater_at_i = false; // ||ratio_at_i|| > 1
  bool less_at_j = false;    // ||ratio_at_j|| < 1
};

// Contextual ranking demonstration: one exact evaluation point where the
// pair (i, alpha) compares opposite ways in the bases I and J.
RankingDemo iia_demo(int k, const std::vector<long>& psi, std::uint64_t seed);

} // namespace detrig
