#include "detrig.h"

#include <cstring>
#include <fstream>
#include <sstream>

#include "detrig/json_io.hpp"

using namespace detrig;

struct detrig_doc {
  MatrixDocument doc;
};

struct detrig_report {
  RigidityReport rep;
  LaurentContext ctx;
};

namespace {

thread_local std::string g_last_error;

detrig_status status_of(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
      return DETRIG_ERR_PARSE;
    case Errc::NotRecoverable:
    case Errc::PathInconsistency:
      return DETRIG_ERR_UNRECOVERABLE;
    case Errc::Internal:
      return DETRIG_ERR_INTERNAL;
    default:
      return DETRIG_ERR_INVALID;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
detrig_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return DETRIG_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return DETRIG_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DETRIG_ERR_INTERNAL;
  }
}

AnalysisOptions to_analysis_options(const detrig_options* opts) {
  AnalysisOptions out;
  if (opts) {
    if (opts->cache_cap > 0) out.cache_cap = opts->cache_cap;
    out.seed = opts->seed ? opts->seed : 1;
  }
  return out;
}

} // namespace

extern "C" {

void detrig_options_init(detrig_options* opts) {
  if (!opts) return;
  opts->seed = 1;
  opts->cache_cap = 200000;
  opts->exhaustive = 1;
}

detrig_status detrig_doc_parse(const char* json_text, detrig_doc** out) {
  if (!json_text || !out) {
    g_last_error = "null argument";
    return DETRIG_ERR_INVALID;
  }
  *out = nullptr;
  return guarded([&] {
    json j = json::parse(json_text);
    *out = new detrig_doc{document_from_json(j)};
  });
}

detrig_status detrig_doc_read(const char* path, detrig_doc** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return DETRIG_ERR_INVALID;
  }
  *out = nullptr;
  return guarded([&] {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, std::string("cannot open ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    json j = json::parse(buf.str());
    *out = new detrig_doc{document_from_json(j)};
  });
}

detrig_status detrig_doc_to_json(const detrig_doc* doc, char** json_out) {
  if (!doc || !json_out) {
    g_last_error = "null argument";
    return DETRIG_ERR_INVALID;
  }
  return guarded([&] { *json_out = dup_string(document_to_json(doc->doc).dump(2) + "\n"); });
}

void detrig_doc_free(detrig_doc* doc) { delete doc; }

detrig_status detrig_analyze(const detrig_doc* doc, const detrig_options* opts,
                             detrig_report** out) {
  if (!doc || !out) {
    g_last_error = "null argument";
    return DETRIG_ERR_INVALID;
  }
  *out = nullptr;
  return guarded([&] {
    RigidityReport rep = rigidity_report(doc->doc.L, doc->doc.R, to_analysis_options(opts));
    *out = new detrig_report{std::move(rep), doc->doc.ctx};
  });
}

detrig_verdict detrig_report_verdict(const detrig_report* rep) {
  if (!rep) return DETRIG_VERDICT_INCONCLUSIVE;
  switch (rep->rep.verdict) {
    case Verdict::Rigid:
      return DETRIG_VERDICT_RIGID;
    case Verdict::NonIntegrableWitness:
      return DETRIG_VERDICT_NON_INTEGRABLE;
    case Verdict::Inconclusive:
      return DETRIG_VERDICT_INCONCLUSIVE;
  }
  return DETRIG_VERDICT_INCONCLUSIVE;
}

detrig_status detrig_report_to_json(const detrig_report* rep, char** json_out) {
  if (!rep || !json_out) {
    g_last_error = "null argument";
    return DETRIG_ERR_INVALID;
  }
  return guarded(
      [&] { *json_out = dup_string(report_to_json(rep->rep, rep->ctx).dump(2) + "\n"); });
}

void detrig_report_free(detrig_report* rep) { delete rep; }

detrig_status detrig_psi(const detrig_doc* doc, const detrig_options* opts, char** json_out) {
  if (!doc || !json_out) {
    g_last_error = "null argument";
    return DETRIG_ERR_INVALID;
  }
  return guarded([&] {
    AnalysisOptions aopts = to_analysis_options(opts);
    HTableOptions hopts;
    hopts.cache_cap = aopts.cache_cap;
    HTermTable table = h_table(doc->doc.L, doc->doc.R, hopts);
    Matroid g = compute_matroid(doc->doc.L, aopts.cache_cap);
    PsiSolution sol = reconstruct_psi(table, g);
    *json_out = dup_string(psi_to_json(sol).dump(2) + "\n");
  });
}

detrig_status detrig_canonical(const detrig_doc* doc, detrig_doc** out) {
  if (!doc || !out) {
    g_last_error = "null argument";
    return DETRIG_ERR_INVALID;
  }
  *out = nullptr;
  return guarded([&] {
    HTermTable table = h_table(doc->doc.L, doc->doc.R);
    Matroid g = compute_matroid(doc->doc.L);
    YAssignment asg = resolve_y_assignment(table, g);
    auto [Lstar, Rstar] = canonical_form(asg, table, g);
    MatrixDocument result;
    result.ctx = doc->doc.ctx;
    result.L = std::move(Lstar);
    result.R = std::move(Rstar);
    result.provenance["canonical"] = true;
    result.provenance["anchor"] = {asg.g, asg.kappa1, asg.kappa2};
    result.provenance["anchor_basis"] = subset_to_json(asg.basis);
    result.provenance["root_choice_used"] = asg.anchor_choice_used;
    *out = new detrig_doc{std::move(result)};
  });
}

detrig_status detrig_gen(const char* family, const char* params_json, uint64_t seed,
                         detrig_doc** out) {
  if (!family || !out) {
    g_last_error = "null argument";
    return DETRIG_ERR_INVALID;
  }
  *out = nullptr;
  return guarded([&] {
    json params = params_json ? json::parse(params_json) : json::object();
    std::string fam = family;
    GeneratedInstance inst;
    if (fam == "principal-minor") {
      inst = gen_principal_minor_ce(params.value("k", 6), seed);
    } else if (fam == "weak-keys") {
      inst = gen_weak_keys_ce(params.value("k", 5), params.value("p", 4), seed);
    } else if (fam == "odd-type") {
      Coeff c = params.contains("c") ? Coeff::parse(params.at("c").get<std::string>()) : Coeff(2);
      inst = gen_odd_type_ce(c);
      inst.seed = seed;
    } else if (fam == "planar-key") {
      inst = gen_planar_key_ce(params.value("k", 6), {}, {}, seed);
    } else {
      fail(Errc::InvalidArgument, "unknown family: " + fam);
    }
    *out = new detrig_doc{document_from_instance(inst)};
  });
}

detrig_status detrig_iia_demo(int k, const int64_t* psi, int psi_len, uint64_t seed,
                              char** json_out) {
  if (!psi || !json_out) {
    g_last_error = "null argument";
    return DETRIG_ERR_INVALID;
  }
  return guarded([&] {
    std::vector<long> weights(psi, psi + psi_len);
    RankingDemo demo = iia_demo(k, weights, seed);
    *json_out = dup_string(ranking_demo_to_json(demo).dump(2) + "\n");
  });
}

detrig_status detrig_verify_appendix(char** json_out, int* all_ok) {
  if (!json_out) {
    g_last_error = "null argument";
    return DETRIG_ERR_INVALID;
  }
  return guarded([&] {
    AppendixReport rep = verify_appendix();
    if (all_ok) *all_ok = rep.all_ok ? 1 : 0;
    *json_out = dup_string(appendix_to_json(rep).dump(2) + "\n");
  });
}

const char* detrig_last_error(void) { return g_last_error.c_str(); }

void detrig_string_free(char* s) { std::free(s); }

} // extern "C"
