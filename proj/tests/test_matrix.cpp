#include "doctest.h"

#include "detrig/matrix.hpp"
#include "test_support.hpp"

using namespace detrig;
using namespace detrig::testsupport;

TEST_CASE("subset enumeration is lexicographic") {
  auto subs = all_subsets(4, 2);
  REQUIRE(subs.size() == 6);
  CHECK(subs.front().elems() == std::vector<int>{1, 2});
  CHECK(subs[1].elems() == std::vector<int>{1, 3});
  CHECK(subs.back().elems() == std::vector<int>{3, 4});
  CHECK(std::is_sorted(subs.begin(), subs.end()));
}

TEST_CASE("maximal minors on the Example 1 matrix") {
  SymbolicMatrix L = example1_L();
  CHECK(minor_on_columns(L, Subset({1, 2, 3})) == LaurentPoly::constant(0, Coeff(1)));
  CHECK(minor_on_columns(L, Subset({3, 5, 6})).is_zero());  // {m, beta, gamma}
  // identity submatrix anywhere gives 1
  SymbolicMatrix e = const_matrix({{0, 1, 0, 7}, {5, 0, 1, 0}});
  CHECK(minor_on_columns(e, Subset({2, 3})) == LaurentPoly::constant(0, Coeff(1)));
}

TEST_CASE("bareiss equals cofactor expansion") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    int k = static_cast<int>(rng.range(1, 4));
    int dims = static_cast<int>(rng.range(0, 2));
    SymbolicMatrix m = random_laurent_matrix(rng, k, k, dims);
    std::vector<std::vector<LaurentPoly>> grid(k, std::vector<LaurentPoly>(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) grid[r][c] = m.at(r, c);
    CHECK(determinant(grid) == determinant_cofactor(grid));
  }
  // exercise the elimination path on larger sizes
  for (int trial = 0; trial < 10; ++trial) {
    int k = static_cast<int>(rng.range(4, 6));
    SymbolicMatrix m = random_laurent_matrix(rng, k, k, 1);
    std::vector<std::vector<LaurentPoly>> grid(k, std::vector<LaurentPoly>(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) grid[r][c] = m.at(r, c);
    CHECK(determinant(grid) == determinant_cofactor(grid));
  }
}

TEST_CASE("cauchy-binet on random instances") {
  SplitMix64 rng(102);
  int done = 0;
  while (done < 100) {
    int k = static_cast<int>(rng.range(1, 3));
    int n = static_cast<int>(rng.range(k, 6));
    int dims = static_cast<int>(rng.range(0, 2));
    SymbolicMatrix L = random_laurent_matrix(rng, k, n, dims);
    SymbolicMatrix R = random_laurent_matrix(rng, n, k, dims);
    CHECK(cauchy_binet_check(L, R));
    ++done;
  }
}

TEST_CASE("cauchy-binet square case and identity block") {
  SplitMix64 rng(103);
  SymbolicMatrix L = random_laurent_matrix(rng, 3, 3, 1);
  SymbolicMatrix R = random_laurent_matrix(rng, 3, 3, 1);
  CHECK(cauchy_binet_check(L, R));

  SymbolicMatrix Lk = const_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}});
  SymbolicMatrix Rk = Lk.transposed();
  CHECK(cauchy_binet_check(Lk, Rk));
  HTermTable t = h_table(Lk, Rk);
  CHECK(t.entries().size() == 1);
  CHECK(t.h(Subset({1, 2})) == LaurentPoly::constant(0, Coeff(1)));
}

TEST_CASE("h table under a diagonal monomial deformation") {
  // R = diag(t^{e_a}) * R(1): every h picks up the product of the touched
  // row factors.
  SplitMix64 rng(104);
  int k = 2, n = 4, dims = 2;
  SymbolicMatrix L = random_constant_matrix(rng, k, n, dims);
  SymbolicMatrix R1 = random_constant_matrix(rng, n, k, dims);
  std::vector<ExpVec> exps;
  SymbolicMatrix R(n, k, dims);
  for (int r = 0; r < n; ++r) {
    ExpVec e(dims);
    for (int u = 0; u < dims; ++u) e[u] = rng.range(-2, 2);
    exps.push_back(e);
    for (int c = 0; c < k; ++c)
      R.set(r, c, R1.at(r, c) * LaurentPoly::monomial(dims, Coeff(1), e));
  }
  HTermTable plain = h_table(L, R1);
  HTermTable twisted = h_table(L, R);
  for (const auto& [s, h] : plain.entries()) {
    ExpVec sum(dims, 0);
    for (int x : s.elems())
      for (int u = 0; u < dims; ++u) sum[u] += exps[x - 1][u];
    CHECK(twisted.h(s) == h * LaurentPoly::monomial(dims, Coeff(1), sum));
  }
}

TEST_CASE("monomiality report") {
  SplitMix64 rng(105);
  SymbolicMatrix L = random_constant_matrix(rng, 2, 4);
  SymbolicMatrix R = random_generic_R(rng, 4, 2);
  auto rep = monomiality_report(h_table(L, R));
  CHECK(all_monomial(rep));
  for (const auto& [s, e] : rep) CHECK(e.degree.value() == ExpVec{});

  // placing a binomial entry makes some basis non-monomial
  SymbolicMatrix R2(4, 2, 1);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 2; ++c)
      R2.set(r, c, LaurentPoly::constant(1, R.at(r, c).constant_value().value()));
  R2.set(0, 0, LaurentPoly::variable(1, 0) + LaurentPoly::constant(1, Coeff(1)));
  SymbolicMatrix L1(2, 4, 1);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c)
      L1.set(r, c, LaurentPoly::constant(1, L.at(r, c).constant_value().value()));
  auto rep2 = monomiality_report(h_table(L1, R2));
  CHECK(!all_monomial(rep2));
}

TEST_CASE("genericity check") {
  SplitMix64 rng(106);
  SymbolicMatrix R = random_generic_R(rng, 5, 2);
  CHECK(genericity_check(R));
  SymbolicMatrix bad = R;
  for (int c = 0; c < 2; ++c) bad.set(3, c, bad.at(4, c));  // two equal rows
  CHECK(!genericity_check(bad));
}

TEST_CASE("gauge invariance of the h table") {
  SplitMix64 rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    int k = 2, n = 5, dims = 2;
    SymbolicMatrix L = random_laurent_matrix(rng, k, n, dims, 1);
    SymbolicMatrix R = random_laurent_matrix(rng, n, k, dims, 1);
    // monomial diagonal gauge
    std::vector<LaurentPoly> d;
    for (int u = 0; u < n; ++u)
      d.push_back(LaurentPoly::monomial(dims, Coeff(rng.nonzero_rational()),
                                        {rng.range(-2, 2), rng.range(-2, 2)}));
    SymbolicMatrix Lg(k, n, dims), Rg(n, k, dims);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n; ++c) Lg.set(r, c, L.at(r, c).divide_exact(d[c]));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < k; ++c) Rg.set(r, c, R.at(r, c) * d[r]);
    HTermTable a = h_table(L, R), b = h_table(Lg, Rg);
    CHECK(a.entries().size() == b.entries().size());
    for (const auto& [s, h] : a.entries()) CHECK(b.h(s) == h);
  }
}

TEST_CASE("three-term grassmann-pluecker relation with sign formula") {
  SplitMix64 rng(108);
  int checked = 0;
  while (checked < 40) {
    int k = static_cast<int>(rng.range(2, 4));
    int n = static_cast<int>(rng.range(k + 2, 7));
    SymbolicMatrix M = random_laurent_matrix(rng, k, n, 1, 1);
    auto subs = all_subsets(n, k);
    Subset I = subs[rng.below(subs.size())];
    std::vector<int> comp = I.complement(n);
    if (comp.size() < 2) continue;
    int i = I[static_cast<int>(rng.below(I.size()))];
    int j = I[static_cast<int>(rng.below(I.size()))];
    if (i == j) continue;
    int alpha = comp[rng.below(comp.size())];
    int beta = comp[rng.below(comp.size())];
    if (alpha == beta) continue;
    LaurentPoly lhs = minor_on_columns(M, I) * minor_on_columns(M, I.exchange2(i, j, alpha, beta));
    LaurentPoly rhs =
        minor_on_columns(M, I.exchange(i, alpha)) * minor_on_columns(M, I.exchange(j, beta)) *
            Coeff(gp_sign_c1(i, j, alpha, beta)) +
        minor_on_columns(M, I.exchange(i, beta)) * minor_on_columns(M, I.exchange(j, alpha)) *
            Coeff(gp_sign_c2(i, j, alpha, beta));
    CHECK(lhs == rhs);
    ++checked;
  }
}
