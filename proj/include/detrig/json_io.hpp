#pragma once

#include <string>

#include "json.hpp"

#include "detrig/canonical.hpp"
#include "detrig/counterexamples.hpp"
#include "detrig/integrability.hpp"
#include "detrig/keys.hpp"

namespace detrig {

using nlohmann::json;

// Matrix document: {"vars": [...], "k": int, "n": int, "L": [[poly..]..],
// "R": [[poly..]..]} with R given as n x k (rows indexed by [n]); optional
// provenance block for generated instances. Polynomials are lists of
// {"c": "p/q" or "p/q+r/s i", "e": [ints]} in lex order; round trips are
// bit-exact.
struct MatrixDocument {
  LaurentContext ctx;
  SymbolicMatrix L, R;
  json provenance;  // null unless generated
};

json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j, int dims);

json document_to_json(const MatrixDocument& doc);
MatrixDocument document_from_json(const json& j);
MatrixDocument document_from_instance(const GeneratedInstance& inst);

json subset_to_json(const Subset& s);
json bases_to_json(const Matroid& g);
json witness_to_json(const KuratowskiWitness& w);
json psi_to_json(const PsiSolution& sol);
json report_to_json(const RigidityReport& rep, const LaurentContext& ctx);
json ranking_demo_to_json(const RankingDemo& demo);

// Appendix replication: one row per check with expected vs computed values.
struct AppendixRow {
  std::string check;
  std::string expected;
  std::string computed;
  bool match = false;
};

struct AppendixReport {
  std::vector<AppendixRow> rows;
  bool all_ok = true;
};

AppendixReport verify_appendix();
json appendix_to_json(const AppendixReport& rep);

} // namespace detrig
