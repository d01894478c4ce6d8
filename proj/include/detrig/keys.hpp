#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "detrig/matroid.hpp"

namespace detrig {

enum class RectClass { NotObservable, Observable, WeakKey, Key };

const char* rect_class_name(RectClass c);

// A 2x2 index rectangle {i,j} x {alpha,beta} on a basis I, classified per
// the observable / weak key / key hierarchy.
struct KeyRecord {
  Subset basis;
  std::pair<int, int> rows;  // i < j, in I
  std::pair<int, int> cols;  // alpha < beta, in I^C
  RectClass cls = RectClass::NotObservable;
  std::optional<bool> planar;  // keys only

  // The three products of the observable set chi(I |^{ij}_{ab}).
  LaurentPoly p_double, p_straight, p_crossed;
};

// chi products and classification for one rectangle.
KeyRecord classify_rectangle(const HTermTable& table, const Subset& I,
                             std::pair<int, int> rows, std::pair<int, int> cols);

// A key is planar when its null sets exhaust both complements.
bool is_planar(const KeyRecord& record, const Matroid& g);

// Deterministic scan (bases lex, then rows lex, then cols lex) for a
// non-planar key.
std::optional<KeyRecord> find_nonplanar_key(const HTermTable& table, const Matroid& g);

// All rectangles of one basis, scan order rows lex then cols lex.
std::vector<KeyRecord> scan_basis(const HTermTable& table, const Matroid& g, const Subset& I,
                                  bool with_planarity = false);

enum class WitnessKind { K33, K5 };

struct WitnessEdge {
  std::string u, w;  // vertex labels
  Subset basis;      // basis of G(L) realizing the edge
};

// Kuratowski-style certificate that a key is non-planar: a K5 or K3,3
// whose every edge is realized by a basis of the matroid.
struct KuratowskiWitness {
  WitnessKind kind = WitnessKind::K5;
  bool transposed = false;  // row/column-swapped construction was used
  std::vector<std::string> vertices;
  std::vector<WitnessEdge> edges;
};

KuratowskiWitness kuratowski_witness(const KeyRecord& record, const Matroid& g);

// Local transport of a rectangle along a single exchange (l, gamma) in c:
// rows (c_r)^l_gamma, cols (c_c)^gamma_l on the basis I^l_gamma.
KeyRecord transport_key(const HTermTable& table, const Matroid& g, const KeyRecord& record,
                        int l, int gamma);

} // namespace detrig
