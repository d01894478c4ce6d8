#include "detrig/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace detrig {

namespace {

bool is_perfect_square(const mpz_class& z) {
  return z >= 0 && mpz_perfect_square_p(z.get_mpz_t());
}

} // namespace

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

std::optional<Coeff> Coeff::sqrt() const {
  if (is_zero()) return Coeff();
  if (im_ == 0) {
    if (re_ > 0) {
      auto r = rational_sqrt(re_);
      if (!r) return std::nullopt;
      return Coeff(*r);
    }
    auto r = rational_sqrt(-re_);
    if (!r) return std::nullopt;
    return Coeff(Rational(0), *r);  // sqrt(-a) = sqrt(a) i
  }
  // z = a+bi: need |z| rational, then x^2 = (a+|z|)/2, y = b/(2x).
  auto n = rational_sqrt(norm2());
  if (!n) return std::nullopt;
  Rational x2 = (re_ + *n) / 2;
  auto x = rational_sqrt(x2);
  if (!x || *x == 0) return std::nullopt;
  Rational y = im_ / (2 * *x);
  Coeff root(*x, y);
  if (root * root != *this) return std::nullopt;
  // Canonical sign: positive real part, or positive imaginary on the axis.
  if (root.re_ < 0 || (root.re_ == 0 && root.im_ < 0)) root = -root;
  return root;
}

std::string Coeff::str() const {
  if (im_ == 0) return re_.get_str();
  std::string out = re_.get_str();
  Rational a = abs(im_);
  out += (im_ < 0) ? "-" : "+";
  out += a.get_str();
  out += " i";
  return out;
}

Coeff Coeff::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) fail(Errc::ParseError, "empty coefficient");
  bool imaginary = false;
  if (s.back() == 'i') {
    imaginary = true;
    s.pop_back();
    if (s.empty()) fail(Errc::ParseError, "bare 'i' coefficient: " + text);
  }
  // Split at the last top-level +/- that is not the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t p = 1; p < s.size(); ++p)
    if (s[p] == '+' || s[p] == '-') split = p;
  auto to_rational = [&](std::string part) {
    if (!part.empty() && part[0] == '+') part.erase(part.begin());
    mpq_class q;
    if (part.empty() || q.set_str(part, 10) != 0) fail(Errc::ParseError, "bad rational: " + part);
    q.canonicalize();
    return q;
  };
  if (!imaginary) {
    if (split != std::string::npos)
      fail(Errc::ParseError, "real coefficient with two parts: " + text);
    return Coeff(to_rational(s));
  }
  if (split == std::string::npos) return Coeff(Rational(0), to_rational(s));
  Rational re = to_rational(s.substr(0, split));
  std::string imtxt = s.substr(split);
  if (imtxt == "+" || imtxt == "-") imtxt += "1";
  return Coeff(re, to_rational(imtxt));
}

LaurentContext LaurentContext::make(int dims) {
  LaurentContext ctx;
  ctx.dims = dims;
  for (int i = 1; i <= dims; ++i) ctx.vars.push_back("t" + std::to_string(i));
  return ctx;
}

LaurentPoly LaurentPoly::constant(int dims, const Coeff& c) {
  LaurentPoly p(dims);
  if (!c.is_zero()) p.terms_.emplace(ExpVec(dims, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int dims, const Coeff& c, ExpVec e) {
  if (static_cast<int>(e.size()) != dims)
    fail(Errc::ContextMismatch, "exponent vector length != dims");
  LaurentPoly p(dims);
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int dims, int index, std::int64_t power) {
  if (index < 0 || index >= dims) fail(Errc::InvalidArgument, "variable index out of range");
  ExpVec e(dims, 0);
  e[index] = power;
  return monomial(dims, Coeff(1), std::move(e));
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const ExpVec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

std::optional<Coeff> LaurentPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (terms_.empty()) return Coeff();
  return terms_.begin()->second;
}

Coeff LaurentPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coeff() : it->second;
}

std::set<ExpVec> LaurentPoly::exponent_map() const {
  std::set<ExpVec> out;
  for (const auto& [e, c] : terms_) out.insert(e);
  return out;
}

const ExpVec& LaurentPoly::unit_exponent() const {
  if (!is_unit()) fail(Errc::InvalidArgument, "unit_exponent on non-unit");
  return terms_.begin()->first;
}

const Coeff& LaurentPoly::unit_coeff() const {
  if (!is_unit()) fail(Errc::InvalidArgument, "unit_coeff on non-unit");
  return terms_.begin()->second;
}

const std::pair<const ExpVec, Coeff>& LaurentPoly::lead_term() const {
  if (terms_.empty()) fail(Errc::InvalidArgument, "lead_term of zero");
  return *terms_.rbegin();
}

const std::pair<const ExpVec, Coeff>& LaurentPoly::trail_term() const {
  if (terms_.empty()) fail(Errc::InvalidArgument, "trail_term of zero");
  return *terms_.begin();
}

std::optional<std::int64_t> LaurentPoly::degree_in(int var) const {
  if (var < 0 || var >= dims_) fail(Errc::InvalidArgument, "degree_in: bad variable");
  std::optional<std::int64_t> deg;
  for (const auto& [e, c] : terms_)
    if (!deg || e[var] > *deg) deg = e[var];
  return deg;
}

void LaurentPoly::insert_term(ExpVec e, Coeff c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentPoly::check_same_context(const LaurentPoly& o) const {
  if (dims_ != o.dims_) fail(Errc::ContextMismatch, "mixed Laurent contexts");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(dims_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_context(b);
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.insert_term(e, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_context(b);
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.insert_term(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_context(b);
  LaurentPoly out(a.dims_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e(a.dims_);
      for (int u = 0; u < a.dims_; ++u) e[u] = ea[u] + eb[u];
      out.insert_term(std::move(e), ca * cb);
    }
  }
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const Coeff& c) {
  LaurentPoly out(a.dims());
  if (c.is_zero()) return out;
  for (const auto& [e, t] : a.terms()) out.insert_term(e, t * c);
  return out;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.dims_ != b.dims_) return a.dims_ < b.dims_;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

std::optional<LaurentPoly> LaurentPoly::try_divide(const LaurentPoly& q) const {
  check_same_context(q);
  if (q.is_zero()) fail(Errc::DivisionByZero, "Laurent division by zero");
  LaurentPoly quot(dims_);
  if (is_zero()) return quot;
  if (q.is_unit()) {
    const ExpVec& eq = q.unit_exponent();
    const Coeff& cq = q.unit_coeff();
    for (const auto& [e, c] : terms_) {
      ExpVec d(dims_);
      for (int u = 0; u < dims_; ++u) d[u] = e[u] - eq[u];
      quot.terms_.emplace(std::move(d), c / cq);
    }
    return quot;
  }
  // Lex division: every Laurent monomial is invertible, so each step cancels
  // the remainder's lex-leading term. In an integral domain the per-variable
  // extremes multiply exactly, so an exact quotient has every exponent inside
  // the box [min_u(r) - min_u(q), max_u(r) - max_u(q)]; a quotient term
  // outside the box proves inexactness, and the strictly lex-decreasing
  // in-box terms bound the loop.
  ExpVec lo(dims_), hi(dims_);
  for (int u = 0; u < dims_; ++u) {
    std::int64_t rmin = 0, rmax = 0, qmin = 0, qmax = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[u] < rmin) rmin = e[u];
      if (first || e[u] > rmax) rmax = e[u];
      first = false;
    }
    first = true;
    for (const auto& [e, c] : q.terms_) {
      if (first || e[u] < qmin) qmin = e[u];
      if (first || e[u] > qmax) qmax = e[u];
      first = false;
    }
    lo[u] = rmin - qmin;
    hi[u] = rmax - qmax;
    if (lo[u] > hi[u]) return std::nullopt;
  }
  LaurentPoly rem = *this;
  const auto& [eq, cq] = q.lead_term();
  while (!rem.is_zero()) {
    const auto& [er, cr] = rem.lead_term();
    ExpVec d(dims_);
    for (int u = 0; u < dims_; ++u) {
      d[u] = er[u] - eq[u];
      if (d[u] < lo[u] || d[u] > hi[u]) return std::nullopt;
    }
    Coeff c = cr / cq;
    LaurentPoly piece = monomial(dims_, c, d);
    rem -= piece * q;
    quot += piece;
  }
  return quot;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& q) const {
  auto r = try_divide(q);
  if (!r) fail(Errc::InexactDivision, "inexact Laurent division");
  return *r;
}

Coeff LaurentPoly::eval(const std::vector<Coeff>& point) const {
  if (static_cast<int>(point.size()) != dims_)
    fail(Errc::ContextMismatch, "evaluation point has wrong dimension");
  for (const Coeff& x : point)
    if (x.is_zero()) fail(Errc::ZeroCoordinate, "evaluation at a zero coordinate");
  Coeff acc;
  for (const auto& [e, c] : terms_) {
    Coeff term = c;
    for (int u = 0; u < dims_; ++u)
      if (e[u] != 0) term *= point[u].pow(e[u]);
    acc += term;
  }
  return acc;
}

std::optional<LaurentPoly> LaurentPoly::sqrt() const {
  if (is_zero()) return zero(dims_);
  if (is_unit()) {
    const auto& [e, c] = *terms_.begin();
    ExpVec half(dims_);
    for (int u = 0; u < dims_; ++u) {
      if (e[u] % 2 != 0) return std::nullopt;
      half[u] = e[u] / 2;
    }
    auto rc = c.sqrt();
    if (!rc) return std::nullopt;
    return monomial(dims_, *rc, std::move(half));
  }
  // (u + v)^2 has lex-extreme terms u^2 and v^2: take their square roots and
  // test both sign combinations.
  auto lt = lead_term(), tt = trail_term();
  LaurentPoly u2 = monomial(dims_, lt.second, lt.first);
  LaurentPoly v2 = monomial(dims_, tt.second, tt.first);
  auto ru = u2.sqrt(), rv = v2.sqrt();
  if (!ru || !rv) return std::nullopt;
  for (int sign = 0; sign < 2; ++sign) {
    LaurentPoly cand = sign ? (*ru - *rv) : (*ru + *rv);
    if (cand * cand == *this) return cand;
  }
  return std::nullopt;
}

std::string LaurentPoly::str(const LaurentContext* ctx) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.str();
    if (!first) {
      if (!cs.empty() && cs[0] == '-' && c.is_real()) {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x != 0; });
    bool coeff_is_one = (c == Coeff(1));
    bool needs_parens = !c.is_real();
    if (!any_var || !coeff_is_one) {
      if (needs_parens) os << "(" << cs << ")";
      else os << cs;
      if (any_var) os << "*";
    }
    bool firstv = true;
    for (int u = 0; u < dims_; ++u) {
      if (e[u] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      if (ctx && u < static_cast<int>(ctx->vars.size())) os << ctx->vars[u];
      else os << "t" << (u + 1);
      if (e[u] != 1) os << "^" << e[u];
    }
  }
  return os.str();
}

} // namespace detrig
