#include "detrig/json_io.hpp"

#include <sstream>

namespace detrig {

json poly_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    json term;
    term["c"] = c.str();
    term["e"] = e;
    out.push_back(std::move(term));
  }
  return out;
}

LaurentPoly poly_from_json(const json& j, int dims) {
  if (!j.is_array()) fail(Errc::ParseError, "polynomial must be an array of terms");
  LaurentPoly p(dims);
  for (const json& term : j) {
    if (!term.contains("c") || !term.contains("e"))
      fail(Errc::ParseError, "polynomial term needs fields c and e");
    ExpVec e = term.at("e").get<ExpVec>();
    if (static_cast<int>(e.size()) != dims)
      fail(Errc::ParseError, "exponent vector length disagrees with vars");
    p += LaurentPoly::monomial(dims, Coeff::parse(term.at("c").get<std::string>()), std::move(e));
  }
  return p;
}

namespace {

json matrix_to_json(const SymbolicMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

SymbolicMatrix matrix_from_json(const json& j, int rows, int cols, int dims,
                                const char* field) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    fail(Errc::ParseError, std::string(field) + ": wrong row count");
  SymbolicMatrix m(rows, cols, dims);
  for (int r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(Errc::ParseError, std::string(field) + ": wrong column count in row " +
                                 std::to_string(r + 1));
    for (int c = 0; c < cols; ++c) m.set(r, c, poly_from_json(row.at(c), dims));
  }
  return m;
}

} // namespace

json document_to_json(const MatrixDocument& doc) {
  json out;
  out["vars"] = doc.ctx.vars;
  out["k"] = doc.L.rows();
  out["n"] = doc.L.cols();
  out["L"] = matrix_to_json(doc.L);
  out["R"] = matrix_to_json(doc.R);
  if (!doc.provenance.is_null()) out["provenance"] = doc.provenance;
  return out;
}

MatrixDocument document_from_json(const json& j) {
  for (const char* field : {"vars", "k", "n", "L", "R"})
    if (!j.contains(field)) fail(Errc::ParseError, std::string("missing field: ") + field);
  MatrixDocument doc;
  doc.ctx.vars = j.at("vars").get<std::vector<std::string>>();
  doc.ctx.dims = static_cast<int>(doc.ctx.vars.size());
  int k = j.at("k").get<int>();
  int n = j.at("n").get<int>();
  if (k < 1 || n < k) fail(Errc::ParseError, "need 1 <= k <= n");
  doc.L = matrix_from_json(j.at("L"), k, n, doc.ctx.dims, "L");
  doc.R = matrix_from_json(j.at("R"), n, k, doc.ctx.dims, "R");
  if (j.contains("provenance")) doc.provenance = j.at("provenance");
  return doc;
}

MatrixDocument document_from_instance(const GeneratedInstance& inst) {
  MatrixDocument doc;
  doc.ctx = inst.ctx;
  doc.L = inst.L;
  doc.R = inst.R;
  doc.provenance["family"] = inst.family;
  doc.provenance["seed"] = inst.seed;
  doc.provenance["params"] = inst.params;
  return doc;
}

json subset_to_json(const Subset& s) { return json(s.elems()); }

json bases_to_json(const Matroid& g) {
  json out = json::array();
  for (const Subset& b : g.bases()) out.push_back(subset_to_json(b));
  return out;
}

json witness_to_json(const KuratowskiWitness& w) {
  json out;
  out["kind"] = (w.kind == WitnessKind::K5) ? "K5" : "K33";
  out["transposed"] = w.transposed;
  out["vertices"] = w.vertices;
  json edges = json::array();
  for (const WitnessEdge& e : w.edges) {
    json edge;
    edge["u"] = e.u;
    edge["w"] = e.w;
    edge["basis"] = subset_to_json(e.basis);
    edges.push_back(std::move(edge));
  }
  out["edges"] = std::move(edges);
  return out;
}

json psi_to_json(const PsiSolution& sol) {
  json out;
  out["m0"] = sol.m0;
  json psis = json::array();
  for (const auto& [col, vec] : sol.psi) {
    json entry;
    entry["column"] = col;
    entry["psi"] = vec;
    psis.push_back(std::move(entry));
  }
  out["psi"] = std::move(psis);
  out["classes"] = sol.classes;
  json edges = json::array();
  for (const auto& [pair, step] : sol.edges) {
    json e;
    e["alpha"] = pair.first;
    e["beta"] = pair.second;
    e["psi2"] = step;
    edges.push_back(std::move(e));
  }
  out["psi2_edges"] = std::move(edges);
  return out;
}

json report_to_json(const RigidityReport& rep, const LaurentContext& ctx) {
  json out;
  out["verdict"] = verdict_name(rep.verdict);
  out["n"] = rep.n;
  out["k"] = rep.k;
  out["vars"] = ctx.vars;
  json flags;
  flags["monomial"] = rep.monomial;
  flags["no_null_columns"] = rep.no_null_columns;
  flags["dimension_bound"] = rep.dim_assumption;
  flags["genericity"] = rep.genericity;
  flags["nonplanar_key"] = rep.has_nonplanar_key;
  flags["weak_pair"] = rep.weak_pair;
  flags["exhaustive"] = rep.exhaustive;
  out["flags"] = std::move(flags);
  if (rep.witness) {
    json w;
    w["basis"] = subset_to_json(rep.witness->basis);
    w["rows"] = {rep.witness->rows.first, rep.witness->rows.second};
    w["cols"] = {rep.witness->cols.first, rep.witness->cols.second};
    json exps = json::array();
    for (const ExpVec& e : rep.witness->chi_exponents) exps.push_back(e);
    w["chi_exponents"] = std::move(exps);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  if (rep.psi) out["psi"] = psi_to_json(*rep.psi);
  else out["psi"] = nullptr;
  json per_basis = json::array();
  for (const auto& [b, ok] : rep.basis_integrability) {
    json e;
    e["basis"] = subset_to_json(b);
    e["integrable"] = ok;
    per_basis.push_back(std::move(e));
  }
  out["basis_integrability"] = std::move(per_basis);
  if (!rep.detail.empty()) out["detail"] = rep.detail;
  return out;
}

json ranking_demo_to_json(const RankingDemo& demo) {
  json out;
  out["k"] = demo.k;
  out["n"] = demo.n;
  out["psi"] = demo.psi;
  out["t0"] = demo.t0.str();
  out["basis_I"] = subset_to_json(demo.base_i);
  out["basis_J"] = subset_to_json(demo.base_j);
  out["pair"] = {demo.i, demo.alpha};
  out["exchange"] = {demo.j, demo.beta};
  out["ratio_at_I"] = demo.ratio_at_i.str();
  out["ratio_at_J"] = demo.ratio_at_j.str();
  out["greater_at_I"] = demo.greater_at_i;
  out["less_at_J"] = demo.less_at_j;
  return out;
}

namespace {

std::string subsets_str(const std::vector<Subset>& subs) {
  std::ostringstream os;
  for (std::size_t u = 0; u < subs.size(); ++u) {
    os << "{";
    const auto& e = subs[u].elems();
    for (std::size_t w = 0; w < e.size(); ++w) os << e[w] << (w + 1 < e.size() ? "," : "");
    os << "}" << (u + 1 < subs.size() ? " " : "");
  }
  return os.str();
}

template <typename T>
std::string list_str(const std::vector<T>& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t u = 0; u < xs.size(); ++u) os << xs[u] << (u + 1 < xs.size() ? ", " : "");
  os << "}";
  return os.str();
}

void add_row(AppendixReport& rep, std::string check, std::string expected, std::string computed) {
  AppendixRow row;
  row.match = (expected == computed);
  row.check = std::move(check);
  row.expected = std::move(expected);
  row.computed = std::move(computed);
  rep.all_ok = rep.all_ok && row.match;
  rep.rows.push_back(std::move(row));
}

} // namespace

AppendixReport verify_appendix() {
  AppendixReport rep;

  // --- odd-type instance, fully symbolic in (xi, c) ---
  {
    GeneratedInstance inst = gen_odd_type_symbolic();
    Matroid g = compute_matroid(inst.L);
    add_row(rep, "odd-type matroid size", "14", std::to_string(g.size()));

    LaurentContext ctx;
    ctx.dims = 2;
    ctx.vars = {"xi", "c"};
    auto mono = [&](long coef, long e_xi, long e_c) {
      return LaurentPoly::monomial(2, Coeff(coef), {e_xi, e_c});
    };
    std::vector<LaurentPoly> expected = {
        mono(1, 0, 0),  mono(-1, 0, 1), mono(-1, 0, 0), mono(1, 0, 1),
        mono(-1, 1, 1), mono(-1, 1, 1), mono(1, 2, 2),  mono(-1, -1, 2),
        mono(1, 0, 0),  mono(1, 0, 0),  mono(1, 0, 0),  mono(1, 0, 1) + mono(1, 0, 0),
        mono(-1, 1, 1), mono(-1, -1, 1)};
    std::vector<std::string> exp_strs, got_strs;
    std::vector<long> exp_degs = {0, 0, 0, 0, 1, 1, 2, -1, 0, 0, 0, 0, 1, -1}, got_degs;
    std::size_t idx = 0;
    for (const Subset& I : g.bases()) {
      LaurentPoly dr = minor_on_rows(inst.R, I);
      got_strs.push_back(dr.str(&ctx));
      got_degs.push_back(dr.degree_in(0).value_or(0));
      if (idx < expected.size()) exp_strs.push_back(expected[idx].str(&ctx));
      ++idx;
    }
    add_row(rep, "odd-type minor list", list_str(exp_strs), list_str(got_strs));
    add_row(rep, "odd-type degree list", list_str(exp_degs), list_str(got_degs));

    bool any_zero = false;
    for (const Subset& s : all_subsets(7, 3))
      if (minor_on_rows(inst.R, s).is_zero()) any_zero = true;
    add_row(rep, "odd-type nonvanishing scan (MemberQ 0)", "False", any_zero ? "True" : "False");
  }

  // --- weak keys at (k, p) = (5, 4) ---
  {
    GeneratedInstance inst = gen_weak_keys_ce(5, 4, 7);
    Matroid g = compute_matroid(inst.L);
    HTermTable t = h_table(inst.L, inst.R);
    bool monomial = all_monomial(monomiality_report(t));
    add_row(rep, "weak-keys invertibility condition (IntegerQ degrees)", "True",
            monomial ? "True" : "False");

    std::vector<Subset> expected_one = {
        Subset({1, 3, 4, 5, 6}),   Subset({1, 3, 6, 12, 13}), Subset({1, 4, 6, 11, 13}),
        Subset({1, 5, 6, 11, 12}), Subset({2, 3, 4, 6, 13}),  Subset({2, 3, 5, 6, 12}),
        Subset({2, 4, 5, 6, 11}),  Subset({2, 6, 11, 12, 13})};
    std::vector<Subset> got_one;
    for (const auto& [I, h] : t.entries())
      if (h.is_unit() && h.unit_exponent()[0] == 1) got_one.push_back(I);
    add_row(rep, "weak-keys bases of degree 1 in xi", subsets_str(expected_one),
            subsets_str(got_one));

    bool all_zero_deg = true;
    for (const auto& [I, h] : t.entries()) {
      if (!h.is_unit()) continue;
      long deg = h.unit_exponent()[0];
      bool listed = std::find(expected_one.begin(), expected_one.end(), I) != expected_one.end();
      if (!listed && deg != 0) all_zero_deg = false;
    }
    add_row(rep, "weak-keys remaining bases constant", "True", all_zero_deg ? "True" : "False");

    add_row(rep, "weak-keys nonvanishing scan (MemberQ 0)", "False",
            genericity_check_functional(inst.R) ? "False" : "True");
  }

  // --- principal minors at k = 6 ---
  {
    GeneratedInstance inst = gen_principal_minor_ce(6, 7);
    HTermTable t = h_table(inst.L, inst.R);
    bool monomial = all_monomial(monomiality_report(t));
    add_row(rep, "k=6 skew invertibility condition (IntegerQ degrees)", "True",
            monomial ? "True" : "False");

    std::map<Subset, long> degs = parity_oracle(inst);
    bool even_ok = true, odd_ok = true;
    for (const auto& [I, deg] : degs) {
      int outside = 0;
      for (int x = 1; x <= 6; ++x)
        if (!I.contains(x)) ++outside;
      if (outside % 2 == 0 && deg != 0) even_ok = false;
      if (outside % 2 == 1 && deg != 1) odd_ok = false;
    }
    add_row(rep, "k=6 parity positions, even complements constant", "True",
            even_ok ? "True" : "False");
    add_row(rep, "k=6 parity positions, odd complements degree 1", "True",
            odd_ok ? "True" : "False");
    add_row(rep, "k=6 nonvanishing scan (MemberQ 0)", "False",
            genericity_check_functional(inst.R) ? "False" : "True");
  }

  // --- planar key at k = 6 ---
  {
    GeneratedInstance inst = gen_planar_key_ce(6, {}, {}, 7);
    HTermTable t = h_table(inst.L, inst.R);
    Matroid g = compute_matroid(inst.L);
    bool monomial = all_monomial(monomiality_report(t));
    add_row(rep, "planar-key invertibility condition (IntegerQ degrees)", "True",
            monomial ? "True" : "False");
    add_row(rep, "planar-key nonvanishing scan (MemberQ 0)", "False",
            genericity_check_functional(inst.R) ? "False" : "True");
    add_row(rep, "planar-key lacks a non-planar key", "True",
            find_nonplanar_key(t, g).has_value() ? "False" : "True");
  }

  return rep;
}

json appendix_to_json(const AppendixReport& rep) {
  json out;
  out["all_ok"] = rep.all_ok;
  json rows = json::array();
  for (const AppendixRow& r : rep.rows) {
    json row;
    row["check"] = r.check;
    row["expected"] = r.expected;
    row["computed"] = r.computed;
    row["match"] = r.match;
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out;
}

} // namespace detrig
