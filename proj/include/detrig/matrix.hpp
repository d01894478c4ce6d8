#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "detrig/laurent.hpp"

namespace detrig {

// Sorted k-element subset of [n] = {1,..,n}, 1-based. Ordering is
// lexicographic on the sorted index lists, which fixes every enumeration
// and export order in the toolkit.
class Subset {
public:
  Subset() = default;
  explicit Subset(std::vector<int> elems);

  static Subset full(int k);  // {1,..,k}

  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elems() const { return elems_; }
  bool contains(int x) const;
  int operator[](int pos) const { return elems_[pos]; }
  // Position of x among the sorted elements (0-based); -1 if absent.
  int index_of(int x) const;

  // I with `out` removed and `in` added (the single-exchange I^out_in).
  Subset exchange(int out, int in) const;
  Subset exchange2(int out1, int out2, int in1, int in2) const;
  Subset exchange_many(const std::vector<int>& outs, const std::vector<int>& ins) const;
  std::vector<int> complement(int n) const;
  static int symmetric_difference_size(const Subset& a, const Subset& b);
  std::vector<int> difference(const Subset& other) const;

  auto operator<=>(const Subset&) const = default;

private:
  std::vector<int> elems_;
};

// Enumerates all k-subsets of [n] in lexicographic order.
std::vector<Subset> all_subsets(int n, int k);

// Dense matrix of Laurent polynomials. L is stored k x n; R is stored
// n x k (rows indexed by [n]) and minors are taken on rows.
class SymbolicMatrix {
public:
  SymbolicMatrix() : rows_(0), cols_(0), dims_(0) {}
  SymbolicMatrix(int rows, int cols, int dims);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dims() const { return dims_; }

  const LaurentPoly& at(int r, int c) const;
  void set(int r, int c, LaurentPoly v);

  SymbolicMatrix transposed() const;
  // Exact evaluation entrywise (all coordinates nonzero).
  std::vector<std::vector<Coeff>> eval(const std::vector<Coeff>& point) const;

private:
  int rows_, cols_, dims_;
  std::vector<LaurentPoly> entries_;
};

// Exact determinant of a square matrix of Laurent polynomials: cofactor
// expansion for size <= 3, fraction-free Bareiss elimination above that
// (divisions are exact in the Laurent ring).
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m);
// Independent oracle used by tests and the two-path parity check.
LaurentPoly determinant_cofactor(const std::vector<std::vector<LaurentPoly>>& m);
// Exact determinant over Q(i) (plain Gaussian elimination).
Coeff determinant_coeff(std::vector<std::vector<Coeff>> m);

// Maximal minor of a k x n matrix on the given columns, taken in increasing
// column order.
LaurentPoly minor_on_columns(const SymbolicMatrix& m, const Subset& cols);
// Maximal minor of an n x k matrix on the given rows.
LaurentPoly minor_on_rows(const SymbolicMatrix& m, const Subset& rows);

// Signs of the three-term Grassmann-Pluecker relation, evaluated on the
// integer labels themselves.
int gp_sign_c1(int i, int j, int alpha, int beta);
int gp_sign_c2(int i, int j, int alpha, int beta);

// det(L*R) == sum over k-subsets of minor products, exactly.
bool cauchy_binet_check(const SymbolicMatrix& L, const SymbolicMatrix& R);

// h(I) = Delta_L(I) * Delta_R(I) for every subset with nonzero product;
// zero products are simply absent. Also keeps the values at t = 1.
class HTermTable {
public:
  HTermTable() = default;
  HTermTable(int n, int k, int dims) : n_(n), k_(k), dims_(dims), zero_(dims) {}

  int n() const { return n_; }
  int k() const { return k_; }
  int dims() const { return dims_; }

  bool has(const Subset& s) const { return table_.count(s) != 0; }
  // h(I); the zero polynomial when the product vanishes.
  const LaurentPoly& h(const Subset& s) const;
  const Coeff& h_at_one(const Subset& s) const;
  const std::map<Subset, LaurentPoly>& entries() const { return table_; }

  void insert(const Subset& s, LaurentPoly h, Coeff at_one);

private:
  int n_ = 0, k_ = 0, dims_ = 0;
  LaurentPoly zero_;
  std::map<Subset, LaurentPoly> table_;
  std::map<Subset, Coeff> at_one_;
};

struct HTableOptions {
  long cache_cap = 200000;  // build the full table when C(n,k) <= cap
  int threads = 0;          // 0 = auto
};

HTermTable h_table(const SymbolicMatrix& L, const SymbolicMatrix& R,
                   const HTableOptions& opts = {});

struct MonomialityEntry {
  bool is_monomial = false;
  std::optional<ExpVec> degree;  // present iff monomial
};

// Per-basis verdict whether h(I) is a monomial; condition (all monomial)
// is the gate for the whole rigidity analysis.
std::map<Subset, MonomialityEntry> monomiality_report(const HTermTable& table);
bool all_monomial(const std::map<Subset, MonomialityEntry>& report);

// True iff every maximal minor of R (n x k, minors on rows) is nonzero at
// t = 1; that single evaluation also certifies the minor is nonzero as a
// polynomial.
bool genericity_check(const SymbolicMatrix& R);

// Weaker, functional form: every maximal minor is nonzero as a Laurent
// polynomial (it may still vanish at t = 1). Certified by evaluation at
// t = 1, then at fixed witness points, with a full symbolic minor as the
// deciding fallback.
bool genericity_check_functional(const SymbolicMatrix& R);

// Number of k-subsets of n as long (throws on overflow beyond caps).
long binomial_count(int n, int k);

} // namespace detrig
