#include "detrig/keys.hpp"

#include <algorithm>

#include "detrig/error.hpp"

namespace detrig {

const char* rect_class_name(RectClass c) {
  switch (c) {
    case RectClass::NotObservable: return "not-observable";
    case RectClass::Observable: return "observable";
    case RectClass::WeakKey: return "weak-key";
    case RectClass::Key: return "key";
  }
  return "?";
}

KeyRecord classify_rectangle(const HTermTable& table, const Subset& I,
                             std::pair<int, int> rows, std::pair<int, int> cols) {
  auto [i, j] = rows;
  auto [alpha, beta] = cols;
  if (i > j) std::swap(i, j);
  if (alpha > beta) std::swap(alpha, beta);
  if (i == j || alpha == beta) fail(Errc::InvalidArgument, "degenerate rectangle");
  if (!I.contains(i) || !I.contains(j)) fail(Errc::InvalidArgument, "rectangle rows not in basis");
  if (I.contains(alpha) || I.contains(beta))
    fail(Errc::InvalidArgument, "rectangle cols not in complement");

  KeyRecord rec;
  rec.basis = I;
  rec.rows = {i, j};
  rec.cols = {alpha, beta};

  const LaurentPoly& h_ia = table.h(I.exchange(i, alpha));
  const LaurentPoly& h_ib = table.h(I.exchange(i, beta));
  const LaurentPoly& h_ja = table.h(I.exchange(j, alpha));
  const LaurentPoly& h_jb = table.h(I.exchange(j, beta));
  rec.p_double = table.h(I) * table.h(I.exchange2(i, j, alpha, beta));
  rec.p_straight = h_ia * h_jb;
  rec.p_crossed = h_ib * h_ja;

  bool observable = !(rec.p_double.is_zero() && rec.p_straight.is_zero() && rec.p_crossed.is_zero());
  int nonzero_singles = static_cast<int>(!h_ia.is_zero()) + static_cast<int>(!h_ib.is_zero()) +
                        static_cast<int>(!h_ja.is_zero()) + static_cast<int>(!h_jb.is_zero());
  if (!observable) {
    rec.cls = RectClass::NotObservable;
  } else if (!rec.p_double.is_zero() && !rec.p_straight.is_zero() && !rec.p_crossed.is_zero()) {
    rec.cls = RectClass::Key;
  } else if (nonzero_singles >= 3) {
    rec.cls = RectClass::WeakKey;
  } else {
    rec.cls = RectClass::Observable;
  }
  return rec;
}

bool is_planar(const KeyRecord& record, const Matroid& g) {
  if (record.cls != RectClass::Key) fail(Errc::InvalidArgument, "planarity is defined for keys only");
  const Subset& I = record.basis;
  NullSets ns = null_sets(g, I, {record.rows.first, record.rows.second},
                          {record.cols.first, record.cols.second});
  // N(c_r) must be I^C minus the key columns, N(c_c) must be I minus the
  // key rows.
  std::vector<int> want_lower;
  for (int x : I.complement(g.n()))
    if (x != record.cols.first && x != record.cols.second) want_lower.push_back(x);
  std::vector<int> want_upper;
  for (int x : I.elems())
    if (x != record.rows.first && x != record.rows.second) want_upper.push_back(x);
  return ns.lower == want_lower && ns.upper == want_upper;
}

std::vector<KeyRecord> scan_basis(const HTermTable& table, const Matroid& g, const Subset& I,
                                  bool with_planarity) {
  std::vector<KeyRecord> out;
  const std::vector<int>& rows = I.elems();
  std::vector<int> cols = I.complement(g.n());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t d = c + 1; d < cols.size(); ++d) {
          KeyRecord rec = classify_rectangle(table, I, {rows[a], rows[b]}, {cols[c], cols[d]});
          if (with_planarity && rec.cls == RectClass::Key) rec.planar = is_planar(rec, g);
          out.push_back(std::move(rec));
        }
  return out;
}

std::optional<KeyRecord> find_nonplanar_key(const HTermTable& table, const Matroid& g) {
  for (const Subset& I : g.bases()) {
    const std::vector<int>& rows = I.elems();
    std::vector<int> cols = I.complement(g.n());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a + 1; b < rows.size(); ++b)
        for (std::size_t c = 0; c < cols.size(); ++c)
          for (std::size_t d = c + 1; d < cols.size(); ++d) {
            KeyRecord rec = classify_rectangle(table, I, {rows[a], rows[b]}, {cols[c], cols[d]});
            if (rec.cls != RectClass::Key) continue;
            if (!is_planar(rec, g)) {
              rec.planar = false;
              return rec;
            }
          }
  }
  return std::nullopt;
}

namespace {

std::string lab(int x) { return std::to_string(x); }

// K5 on {i1,i2,i3,a1,a2}: vertices map to bases via the k1 correspondence.
std::optional<KuratowskiWitness> try_k5(const Matroid& g, const Subset& I, int i1, int i2, int i3,
                                        int a1, int a2, bool transposed) {
  auto swap_basis = [&](const Subset& base, std::vector<int> outs, std::vector<int> ins) {
    return base.exchange_many(std::move(outs), std::move(ins));
  };
  KuratowskiWitness w;
  w.kind = WitnessKind::K5;
  w.transposed = transposed;
  w.vertices = {lab(i1), lab(i2), lab(i3), lab(a1), lab(a2)};
  std::vector<int> is = {i1, i2, i3};
  // pair of column vertices -> I itself
  std::vector<std::pair<std::pair<int, int>, Subset>> edges;
  edges.push_back({{a1, a2}, I});
  for (int iu : is)
    for (int aw : {a1, a2}) edges.push_back({{iu, aw}, swap_basis(I, {iu}, {aw})});
  edges.push_back({{i1, i2}, swap_basis(I, {i1, i2}, {a1, a2})});
  edges.push_back({{i1, i3}, swap_basis(I, {i1, i3}, {a1, a2})});
  edges.push_back({{i2, i3}, swap_basis(I, {i2, i3}, {a1, a2})});
  for (auto& [uv, b] : edges) {
    if (!g.is_basis(b)) return std::nullopt;
    w.edges.push_back({lab(uv.first), lab(uv.second), b});
  }
  return w;
}

// K3,3 via the k0 correspondence when the double exchange I^{i2 i3}_{a1 a2}
// leaves the matroid: parts {i1, a1, a2} and {i2, i3, gc} with
// gc = {i2, i3} as the sixth vertex; edges through the joint encoding
// H = I + {a1, a2}, edge(u^, w^) -> H \ (u^ delta w^).
std::optional<KuratowskiWitness> try_k33(const Matroid& g, const Subset& I, int i1, int i2, int i3,
                                         int a1, int a2, bool transposed) {
  std::vector<int> helems = I.elems();
  helems.push_back(a1);
  helems.push_back(a2);
  Subset H{helems};  // I + {a1, a2}, k+2 elements
  using VSet = std::vector<int>;
  std::vector<std::pair<std::string, VSet>> part1 = {
      {lab(i1) + "," + lab(i2), {i1, i2}},
      {lab(a1) + "," + lab(a2), {a1, a2}},
      {lab(i1) + "," + lab(i3), {i1, i3}},
  };
  std::vector<std::pair<std::string, VSet>> part2 = {
      {lab(a1) + "," + lab(i1), {a1, i1}},
      {lab(a2) + "," + lab(i1), {a2, i1}},
      {"{}", {}},
  };
  KuratowskiWitness w;
  w.kind = WitnessKind::K33;
  w.transposed = transposed;
  for (auto& [name, s] : part1) {
    std::sort(s.begin(), s.end());
    w.vertices.push_back(name);
  }
  for (auto& [name, s] : part2) {
    std::sort(s.begin(), s.end());
    w.vertices.push_back(name);
  }
  for (auto& [nu, su] : part1) {
    for (auto& [nw, sw] : part2) {
      VSet sym;
      std::set_symmetric_difference(su.begin(), su.end(), sw.begin(), sw.end(),
                                    std::back_inserter(sym));
      std::vector<int> kept;
      for (int x : H.elems())
        if (std::find(sym.begin(), sym.end(), x) == sym.end()) kept.push_back(x);
      if (static_cast<int>(kept.size()) != I.size()) return std::nullopt;
      Subset b{kept};
      if (!g.is_basis(b)) return std::nullopt;
      w.edges.push_back({nu, nw, b});
    }
  }
  return w;
}

struct Frame {
  Subset I;
  int i1, i2, a1, a2;  // rows and cols of the key in this orientation
  bool transposed;
  const Matroid* g;

  bool basis_single(int iu, int aw) const { return g->is_basis(I.exchange(iu, aw)); }
};

// Witness candidates i3 on the row side of the frame: elements of I outside
// the key rows with a valid exchange against a1 (after possibly swapping the
// column labels).
std::optional<KuratowskiWitness> witness_in_frame(const Frame& f) {
  std::vector<int> third;
  for (int m : f.I.elems())
    if (m != f.i1 && m != f.i2) third.push_back(m);

  // Prefer K5 with the smallest admissible i3.
  for (int swap_cols = 0; swap_cols < 2; ++swap_cols) {
    int a1 = swap_cols ? f.a2 : f.a1;
    int a2 = swap_cols ? f.a1 : f.a2;
    for (int i3 : third) {
      if (!f.basis_single(i3, a1)) continue;
      auto k5 = try_k5(*f.g, f.I, f.i1, f.i2, i3, a1, a2, f.transposed);
      if (k5) return k5;
    }
  }
  for (int swap_cols = 0; swap_cols < 2; ++swap_cols) {
    int a1 = swap_cols ? f.a2 : f.a1;
    int a2 = swap_cols ? f.a1 : f.a2;
    for (int i3 : third) {
      if (!f.basis_single(i3, a1)) continue;
      // k0 labelling requires a missing double exchange with i3; try both
      // assignments of the remaining key row to the i2 slot.
      for (int swap_rows = 0; swap_rows < 2; ++swap_rows) {
        int i1 = swap_rows ? f.i2 : f.i1;
        int i2 = swap_rows ? f.i1 : f.i2;
        auto k33 = try_k33(*f.g, f.I, i1, i2, i3, a1, a2, f.transposed);
        if (k33) return k33;
      }
    }
  }
  return std::nullopt;
}

} // namespace

KuratowskiWitness kuratowski_witness(const KeyRecord& record, const Matroid& g) {
  if (record.cls != RectClass::Key || (record.planar && *record.planar))
    fail(Errc::InvalidArgument, "witness requires a non-planar key");

  Frame direct{record.basis, record.rows.first, record.rows.second, record.cols.first,
               record.cols.second, false, &g};
  if (auto w = witness_in_frame(direct)) return *w;

  // Transposed construction: the witness index lives on the column side.
  // Exchanges keep the same matroid; only the roles of rows and columns in
  // the maps are mirrored, realised by the double exchange to the partner
  // basis of the key.
  Subset J = record.basis.exchange2(record.rows.first, record.rows.second, record.cols.first,
                                    record.cols.second);
  if (g.is_basis(J)) {
    Frame mirrored{J, record.cols.first, record.cols.second, record.rows.first,
                   record.rows.second, true, &g};
    if (auto w = witness_in_frame(mirrored)) return *w;
  }
  fail(Errc::NoWitnessBasis, "no witness index i3 admits a valid construction");
}

KeyRecord transport_key(const HTermTable& table, const Matroid& g, const KeyRecord& record,
                        int l, int gamma) {
  bool l_is_row = (l == record.rows.first || l == record.rows.second);
  bool g_is_col = (gamma == record.cols.first || gamma == record.cols.second);
  if (!l_is_row || !g_is_col) fail(Errc::InvalidArgument, "transport pair not in the rectangle");
  Subset J = record.basis.exchange(l, gamma);
  if (!g.is_basis(J)) fail(Errc::InvalidArgument, "transport exchange leaves the matroid");
  int other_row = (l == record.rows.first) ? record.rows.second : record.rows.first;
  int other_col = (gamma == record.cols.first) ? record.cols.second : record.cols.first;
  return classify_rectangle(table, J, {gamma, other_row}, {l, other_col});
}

} // namespace detrig
