#include "doctest.h"

#include "detrig/laurent.hpp"
#include "detrig/rng.hpp"

using namespace detrig;

namespace {

LaurentPoly random_poly(SplitMix64& rng, int dims, int max_terms, bool gaussian = false) {
  LaurentPoly p(dims);
  long terms = rng.range(0, max_terms);
  for (long t = 0; t < terms; ++t) {
    ExpVec e(dims);
    for (int u = 0; u < dims; ++u) e[u] = rng.range(-3, 3);
    Coeff c = gaussian ? Coeff(rng.rational(), rng.rational()) : Coeff(rng.rational());
    p += LaurentPoly::monomial(dims, c, std::move(e));
  }
  return p;
}

std::vector<Coeff> random_point(SplitMix64& rng, int dims) {
  std::vector<Coeff> pt;
  for (int u = 0; u < dims; ++u) pt.emplace_back(rng.nonzero_rational());
  return pt;
}

} // namespace

TEST_CASE("coefficient field basics") {
  Coeff a(Rational(2, 3)), b(Rational(-7, 5));
  CHECK(a + b == Coeff(Rational(-11, 15)));
  CHECK((a / b) * b == a);
  Coeff z(Rational(1, 2), Rational(-3, 4));
  CHECK(z * z.inverse() == Coeff(1));
  CHECK(z.conj().imag() == Rational(3, 4));

  CHECK(Coeff(Rational(9, 4)).sqrt().value() == Coeff(Rational(3, 2)));
  CHECK(Coeff(Rational(-4)).sqrt().value() == Coeff(Rational(0), Rational(2)));
  CHECK(!Coeff(Rational(2)).sqrt().has_value());
  // (1+i)^2 = 2i
  CHECK(Coeff(Rational(0), Rational(2)).sqrt().value() == Coeff(Rational(1), Rational(1)));
}

TEST_CASE("coefficient text round trip") {
  for (const char* s : {"0", "5", "-7/3", "1/2+3/4 i", "0-1 i", "2/5-7 i"}) {
    Coeff c = Coeff::parse(s);
    CHECK(Coeff::parse(c.str()) == c);
    CHECK(c.str() == s);
  }
}

TEST_CASE("add: cancellation, disjoint supports, identity") {
  LaurentPoly t1 = LaurentPoly::variable(2, 0);
  CHECK((t1 + (-t1)).is_zero());

  LaurentPoly p = t1 * Coeff(2) + LaurentPoly::monomial(2, Coeff(3), {1, -1});
  CHECK(p.term_count() == 2);
  CHECK(p.coeff({1, 0}) == Coeff(2));
  CHECK(p.coeff({1, -1}) == Coeff(3));

  CHECK(p + LaurentPoly::zero(2) == p);
}

TEST_CASE("mul: binomial product, unit inverse, zero") {
  LaurentPoly t1 = LaurentPoly::variable(1, 0);
  LaurentPoly one = LaurentPoly::constant(1, Coeff(1));
  CHECK((t1 + one) * (t1 - one) == t1 * t1 - one);
  CHECK(LaurentPoly::variable(1, 0, -1) * t1 == one);
  CHECK((LaurentPoly::zero(1) * (t1 + one)).is_zero());
}

TEST_CASE("is_unit") {
  LaurentPoly m = LaurentPoly::monomial(2, Coeff(3), {2, -1});
  CHECK(m.is_unit());
  LaurentPoly t1 = LaurentPoly::variable(2, 0);
  CHECK(!(t1 + LaurentPoly::constant(2, Coeff(1))).is_unit());
  CHECK(!LaurentPoly::zero(2).is_unit());
}

TEST_CASE("exponent map") {
  LaurentPoly t1 = LaurentPoly::variable(1, 0);
  LaurentPoly p = t1 * Coeff(2) - t1 * t1 * Coeff(3);
  CHECK(p.exponent_map() == std::set<ExpVec>{{1}, {2}});
  CHECK(LaurentPoly::constant(3, Coeff(5)).exponent_map() == std::set<ExpVec>{{0, 0, 0}});
  CHECK(LaurentPoly::zero(2).exponent_map().empty());
}

TEST_CASE("divide_exact") {
  LaurentPoly t1 = LaurentPoly::variable(2, 0), t2 = LaurentPoly::variable(2, 1);
  LaurentPoly one = LaurentPoly::constant(2, Coeff(1));
  CHECK((t1 * t1 + t1).divide_exact(t1) == t1 + one);
  CHECK(t1.divide_exact(t2) == LaurentPoly::monomial(2, Coeff(1), {1, -1}));
  CHECK_THROWS_AS((t1 + one).divide_exact(t2 + one), Error);
  CHECK_THROWS_AS(t1.divide_exact(LaurentPoly::zero(2)), Error);
}

TEST_CASE("eval") {
  LaurentPoly p = LaurentPoly::monomial(2, Coeff(1), {1, -1});
  CHECK(p.eval({Coeff(2), Coeff(4)}) == Coeff(Rational(1, 2)));
  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentPoly q = random_poly(rng, 2, 5);
    Coeff sum;
    for (const auto& [e, c] : q.terms()) sum += c;
    CHECK(q.eval({Coeff(1), Coeff(1)}) == sum);
  }
  CHECK_THROWS_AS(p.eval({Coeff(0), Coeff(1)}), Error);
}

TEST_CASE("ring axioms on random polynomials") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 1200; ++trial) {
    int dims = static_cast<int>(rng.range(1, 3));
    LaurentPoly a = random_poly(rng, dims, 4, trial % 3 == 0);
    LaurentPoly b = random_poly(rng, dims, 4, trial % 3 == 0);
    LaurentPoly c = random_poly(rng, dims, 4, trial % 3 == 0);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + LaurentPoly::zero(dims) == a);
    CHECK(a * LaurentPoly::constant(dims, Coeff(1)) == a);
  }
}

TEST_CASE("unit structure under multiplication") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    int dims = static_cast<int>(rng.range(1, 3));
    LaurentPoly a = random_poly(rng, dims, 3);
    LaurentPoly b = random_poly(rng, dims, 3);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).is_unit() == (a.is_unit() && b.is_unit()));
    if (a.is_unit() && b.is_unit()) {
      ExpVec sum(dims);
      for (int u = 0; u < dims; ++u) sum[u] = a.unit_exponent()[u] + b.unit_exponent()[u];
      CHECK((a * b).unit_exponent() == sum);
    }
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  SplitMix64 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    int dims = static_cast<int>(rng.range(1, 3));
    LaurentPoly a = random_poly(rng, dims, 4, true);
    LaurentPoly b = random_poly(rng, dims, 4, true);
    auto pt = random_point(rng, dims);
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
  }
}

TEST_CASE("multiplication and exact division are inverse") {
  SplitMix64 rng(45);
  int hits = 0;
  for (int trial = 0; trial < 400 || hits < 50; ++trial) {
    int dims = static_cast<int>(rng.range(1, 2));
    LaurentPoly a = random_poly(rng, dims, 4);
    LaurentPoly b = random_poly(rng, dims, 4);
    if (b.is_zero()) continue;
    LaurentPoly prod = a * b;
    CHECK(prod.divide_exact(b) == a);
    ++hits;
    if (trial > 2000) break;
  }
}

TEST_CASE("laurent sqrt recognises squares") {
  SplitMix64 rng(46);
  // units
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly u = LaurentPoly::monomial(2, Coeff(rng.nonzero_rational()),
                                          {rng.range(-3, 3), rng.range(-3, 3)});
    auto r = (u * u).sqrt();
    REQUIRE(r.has_value());
    CHECK(*r * *r == u * u);
  }
  // binomials in units
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly u = LaurentPoly::monomial(1, Coeff(rng.nonzero_rational()), {rng.range(-2, 2)});
    LaurentPoly v = LaurentPoly::monomial(1, Coeff(rng.nonzero_rational()), {rng.range(3, 5)});
    LaurentPoly s = u + v;
    auto r = (s * s).sqrt();
    REQUIRE(r.has_value());
    CHECK(*r * *r == s * s);
  }
  LaurentPoly t1 = LaurentPoly::variable(1, 0);
  LaurentPoly one = LaurentPoly::constant(1, Coeff(1));
  CHECK(!(t1 + one).sqrt().has_value());
}
