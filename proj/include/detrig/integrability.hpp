#pragma once

#include <map>
#include <optional>
#include <string>

#include "detrig/keys.hpp"
#include "detrig/yterms.hpp"

namespace detrig {

// Additive exponent data of a trivial deformation: for every basis I,
// Psi(I) = m0 + sum_{a in I} psi(a).
struct PsiSolution {
  std::map<int, ExpVec> psi;                     // column -> Z^d
  ExpVec m0;
  std::vector<std::vector<int>> classes;         // nabla closure classes, sorted;
                                                 // representative = first element, psi(rep) = 0
  std::map<std::pair<int, int>, ExpVec> edges;   // psi2 on the nabla edges used
};

enum class Verdict { Rigid, NonIntegrableWitness, Inconclusive };

const char* verdict_name(Verdict v);

struct WitnessRect {
  Subset basis;
  std::pair<int, int> rows, cols;
  std::set<ExpVec> chi_exponents;  // Psi(chi \ {0}), at least two elements
};

struct RigidityReport {
  int n = 0, k = 0, dims = 0;
  bool monomial = false;
  bool no_null_columns = false;
  bool dim_assumption = false;  // max{n-k, k} >= 5
  bool genericity = false;
  bool has_nonplanar_key = false;
  bool weak_pair = false;  // some {g} x {k1,k2} with both single-exchange h nonzero
  bool exhaustive = false;
  std::map<Subset, bool> basis_integrability;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<WitnessRect> witness;
  std::optional<PsiSolution> psi;
  std::string detail;
};

// #Psi(chi \ {0}) == 1 for the rectangle; throws NotObservable on a
// non-observable one.
bool observable_set_integrable(const HTermTable& table, const Subset& I,
                               std::pair<int, int> rows, std::pair<int, int> cols);
// Same, cross-checked against constancy of the Y-term computed from R.
bool observable_set_integrable(const HTermTable& table, const SymbolicMatrix& R, const Subset& I,
                               std::pair<int, int> rows, std::pair<int, int> cols);

// Conjunction over all rectangles of the basis.
bool basis_integrable(const HTermTable& table, const Matroid& g, const Subset& I);

// First integrable basis in lex order; nullopt doubles as a counterexample
// signal under the standing assumptions.
std::optional<Subset> find_integrable_basis(const HTermTable& table, const Matroid& g);

// Exponent step psi2(alpha; beta) = Psi(h(J^a_b)) - Psi(h(J)), identical for
// every witness basis J; disagreement or missing witness throws.
ExpVec psi2(const HTermTable& table, const Matroid& g, int alpha, int beta,
            long exhaustive_cap = 5000, std::uint64_t sample_seed = 1);

// Full reconstruction: nabla classes, psi along paths, m0 from the lex-least
// anchor basis, and re-verification of the additive identity on every basis.
PsiSolution reconstruct_psi(const HTermTable& table, const Matroid& g);

struct AnalysisOptions {
  long cache_cap = 200000;
  long psi2_cap = 5000;
  std::uint64_t seed = 1;
};

RigidityReport rigidity_report(const SymbolicMatrix& L, const SymbolicMatrix& R,
                               const AnalysisOptions& opts = {});
// Report from precomputed parts (used by generators that already hold them).
RigidityReport rigidity_report(const HTermTable& table, const Matroid& g,
                               const SymbolicMatrix& R, const AnalysisOptions& opts = {});

} // namespace detrig
