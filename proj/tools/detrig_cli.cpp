// detrig command line front end. Talks to the shared library exclusively
// through the C interface in detrig.h.
//
// Exit codes for `analyze`: 0 rigid, 2 non-integrable witness,
// 3 inconclusive, 1 input error. Other commands: 0 success, 1 input or
// verification failure, 3 unrecoverable instance.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "detrig.h"

namespace {

struct Common {
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 1;
  long cap = 0;
  bool exhaustive = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out_path, "write the result to this path instead of stdout");
  cmd->add_option("--format", c.format, "output format (json)")->check(CLI::IsMember({"json"}));
  cmd->add_option("--seed,-s", c.seed, "deterministic 64-bit seed");
  cmd->add_option("--cap", c.cap, "cache cap for full minor tables");
  cmd->add_flag("--exhaustive", c.exhaustive, "exhaustive verification (default behaviour)");
}

int emit(const Common& c, const char* text) {
  if (c.out_path.empty()) {
    std::fputs(text, stdout);
    return 0;
  }
  std::ofstream out(c.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << c.out_path << "\n";
    return 1;
  }
  out << text;
  return 0;
}

detrig_options make_options(const Common& c) {
  detrig_options opts;
  detrig_options_init(&opts);
  opts.seed = c.seed;
  if (c.cap > 0) opts.cache_cap = c.cap;
  opts.exhaustive = c.exhaustive ? 1 : 1;
  return opts;
}

int fail_with(detrig_status st) {
  std::cerr << "error: " << detrig_last_error() << "\n";
  if (st == DETRIG_ERR_PARSE || st == DETRIG_ERR_INVALID) return 1;
  if (st == DETRIG_ERR_UNRECOVERABLE) return 3;
  return 3;
}

struct DocGuard {
  detrig_doc* doc = nullptr;
  ~DocGuard() { detrig_doc_free(doc); }
};

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { detrig_string_free(s); }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rigidity analysis of monomial determinantal deformations"};
  app.require_subcommand(1);

  std::string input_path;
  Common c_analyze, c_psi, c_canonical, c_gen, c_appendix, c_iia;

  CLI::App* analyze = app.add_subcommand("analyze", "full rigidity report for a document");
  analyze->add_option("input", input_path, "matrix document (JSON)")->required();
  add_common(analyze, c_analyze);

  CLI::App* psi = app.add_subcommand("psi", "reconstruct the additive exponent map (psi, m0)");
  psi->add_option("input", input_path, "matrix document (JSON)")->required();
  add_common(psi, c_psi);

  CLI::App* canonical = app.add_subcommand("canonical", "recover the canonical factor pair");
  canonical->add_option("input", input_path, "matrix document (JSON)")->required();
  add_common(canonical, c_canonical);

  CLI::App* gen = app.add_subcommand("gen", "generate a counterexample family instance");
  std::string family;
  int gk = 6, gp = 4;
  std::string gc = "2";
  gen->add_option("family", family, "principal-minor | weak-keys | odd-type | planar-key")
      ->required()
      ->check(CLI::IsMember({"principal-minor", "weak-keys", "odd-type", "planar-key"}));
  gen->add_option("--k", gk, "rank parameter");
  gen->add_option("--p", gp, "weak-keys block width");
  gen->add_option("--c", gc, "odd-type constant (rational or gaussian rational)");
  add_common(gen, c_gen);

  CLI::App* appendix = app.add_subcommand("verify-appendix", "replicate the reference checks");
  add_common(appendix, c_appendix);

  CLI::App* iia = app.add_subcommand("iia-demo", "contextual ranking demonstration");
  int ik = 6;
  std::vector<std::int64_t> weights;
  iia->add_option("--k", ik, "rank parameter");
  iia->add_option("--psi", weights, "2k pairwise distinct integer weights (default 1..2k)");
  add_common(iia, c_iia);

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    DocGuard doc;
    detrig_status st = detrig_doc_read(input_path.c_str(), &doc.doc);
    if (st != DETRIG_OK) return fail_with(st);
    detrig_options opts = make_options(c_analyze);
    detrig_report* rep = nullptr;
    st = detrig_analyze(doc.doc, &opts, &rep);
    if (st != DETRIG_OK) return fail_with(st);
    StringGuard text;
    detrig_report_to_json(rep, &text.s);
    detrig_verdict verdict = detrig_report_verdict(rep);
    detrig_report_free(rep);
    if (emit(c_analyze, text.s) != 0) return 1;
    return static_cast<int>(verdict);
  }

  if (psi->parsed()) {
    DocGuard doc;
    detrig_status st = detrig_doc_read(input_path.c_str(), &doc.doc);
    if (st != DETRIG_OK) return fail_with(st);
    detrig_options opts = make_options(c_psi);
    StringGuard text;
    st = detrig_psi(doc.doc, &opts, &text.s);
    if (st != DETRIG_OK) {
      std::cerr << "error: " << detrig_last_error() << "\n";
      return st == DETRIG_ERR_UNRECOVERABLE ? 2 : 1;
    }
    return emit(c_psi, text.s);
  }

  if (canonical->parsed()) {
    DocGuard doc;
    detrig_status st = detrig_doc_read(input_path.c_str(), &doc.doc);
    if (st != DETRIG_OK) return fail_with(st);
    DocGuard result;
    st = detrig_canonical(doc.doc, &result.doc);
    if (st != DETRIG_OK) return fail_with(st);
    StringGuard text;
    detrig_doc_to_json(result.doc, &text.s);
    return emit(c_canonical, text.s);
  }

  if (gen->parsed()) {
    std::string params = "{\"k\":" + std::to_string(gk) + ",\"p\":" + std::to_string(gp) +
                         ",\"c\":\"" + gc + "\"}";
    DocGuard doc;
    detrig_status st = detrig_gen(family.c_str(), params.c_str(), c_gen.seed, &doc.doc);
    if (st != DETRIG_OK) return fail_with(st);
    StringGuard text;
    detrig_doc_to_json(doc.doc, &text.s);
    return emit(c_gen, text.s);
  }

  if (appendix->parsed()) {
    StringGuard text;
    int all_ok = 0;
    detrig_status st = detrig_verify_appendix(&text.s, &all_ok);
    if (st != DETRIG_OK) return fail_with(st);
    if (emit(c_appendix, text.s) != 0) return 1;
    return all_ok ? 0 : 1;
  }

  if (iia->parsed()) {
    if (weights.empty())
      for (int u = 1; u <= 2 * ik; ++u) weights.push_back(u);
    StringGuard text;
    detrig_status st =
        detrig_iia_demo(ik, weights.data(), static_cast<int>(weights.size()), c_iia.seed, &text.s);
    if (st != DETRIG_OK) return fail_with(st);
    return emit(c_iia, text.s);
  }

  return 1;
}
