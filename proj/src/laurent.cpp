#include "cpq/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace cpq {

namespace {

// q0^(e/2) for even e only.
Rational rational_pow(const Rational& q0, long e_half) {
  if (e_half % 2 != 0) throw HalfPowerEval("cannot evaluate q^(" + std::to_string(e_half) + "/2) at a rational point");
  long k = e_half / 2;
  if (k == 0) return Rational(1);
  Rational base = q0;
  bool invert = k < 0;
  unsigned long e = static_cast<unsigned long>(invert ? -k : k);
  Rational acc(1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  if (invert) {
    Rational inv(acc.get_den(), acc.get_num());
    inv.canonicalize();
    return inv;
  }
  return acc;
}

}  // namespace

std::string rational_to_string(const Rational& r) { return r.get_str(); }

LaurentPoly LaurentPoly::constant(const Rational& r) { return half_term(r, 0); }

LaurentPoly LaurentPoly::half_term(const Rational& c, long e) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

bool LaurentPoly::integral_powers() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

long LaurentPoly::min_exp_half() const { return terms_.empty() ? 0 : terms_.front().first; }
long LaurentPoly::max_exp_half() const { return terms_.empty() ? 0 : terms_.back().first; }

Rational LaurentPoly::coeff_half(long e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const auto& t, long v) { return t.first < v; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Rational(0);
}

void LaurentPoly::prune() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const auto& t) { return t.second == 0; }),
               terms_.end());
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  std::vector<std::pair<long, Rational>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.cbegin();
  auto b = o.terms_.cbegin();
  while (a != terms_.cend() || b != o.terms_.cend()) {
    if (b == o.terms_.cend() || (a != terms_.cend() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.cend() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  // Dense accumulation over the exponent span; spans here are tiny.
  for (const auto& [ea, ca] : a.terms()) {
    LaurentPoly partial;
    partial.terms_.reserve(b.terms().size());
    for (const auto& [eb, cb] : b.terms()) partial.terms_.emplace_back(ea + eb, ca * cb);
    r += partial;
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= r;
  return *this;
}

LaurentPoly LaurentPoly::shifted_half(long h) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) e += h;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly acc = one();
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw ExactDivisionFailure("division by zero polynomial");
  if (is_zero()) return zero();
  // Shift both to genuine polynomials and long-divide from the top.
  long va = min_exp_half(), vd = d.min_exp_half();
  LaurentPoly a = shifted_half(-va);
  LaurentPoly dd = d.shifted_half(-vd);
  LaurentPoly q;
  const long deg_d = dd.max_exp_half();
  const Rational& lead_d = dd.terms_.back().second;
  while (!a.is_zero() && a.max_exp_half() >= deg_d) {
    long e = a.max_exp_half() - deg_d;
    Rational c = a.terms_.back().second / lead_d;
    LaurentPoly t = half_term(c, e);
    q += t;
    a -= t * dd;
  }
  if (!a.is_zero()) throw ExactDivisionFailure("ratio is not a Laurent polynomial");
  return q.shifted_half(va - vd);
}

Rational LaurentPoly::eval(const Rational& q0) const {
  if (q0 == 0) throw PoleAtSample("evaluation requires q != 0");
  Rational acc(0);
  for (const auto& [e, c] : terms_) acc += c * rational_pow(q0, e);
  return acc;
}

namespace {

// gcd over the rationals of polynomials with min exponent 0, returned
// primitive with positive trailing coefficient.  Euclidean remainders with
// primitive-part normalization at every step.

Rational poly_content(const LaurentPoly& p) {
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  return content;  // positive by construction (gcd >= 0)
}

// Scale to integer coefficients with gcd 1 and positive trailing coefficient.
LaurentPoly make_primitive(const LaurentPoly& p, Rational* scale_out = nullptr) {
  if (p.is_zero()) {
    if (scale_out) *scale_out = 1;
    return p;
  }
  Rational c = poly_content(p);
  if (p.terms().front().second < 0) c = -c;
  Rational inv(c.get_den(), c.get_num());
  inv.canonicalize();
  if (scale_out) *scale_out = c;
  LaurentPoly r = p;
  r *= inv;
  return r;
}

LaurentPoly poly_mod(const LaurentPoly& a_in, const LaurentPoly& d) {
  LaurentPoly a = a_in;
  const long deg_d = d.max_exp_half();
  const Rational& lead_d = d.terms().back().second;
  while (!a.is_zero() && a.max_exp_half() >= deg_d) {
    long e = a.max_exp_half() - deg_d;
    Rational c = a.terms().back().second / lead_d;
    a -= d.shifted_half(e) * c;
  }
  return a;
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  a = make_primitive(a);
  b = make_primitive(b);
  while (!b.is_zero()) {
    LaurentPoly r = make_primitive(poly_mod(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

LaurentRational::LaurentRational(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw ExactDivisionFailure("zero denominator");
  reduce();
}

void LaurentRational::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  if (den_.is_one()) return;
  long vn = num_.min_exp_half(), vd = den_.min_exp_half();
  LaurentPoly pn = num_.shifted_half(-vn);
  LaurentPoly pd = den_.shifted_half(-vd);
  if (!pd.is_constant()) {
    LaurentPoly g = poly_gcd(pn, pd);
    if (!g.is_constant()) {
      pn = pn.divide_exact(g);
      pd = pd.divide_exact(g);
    }
  }
  Rational scale;
  pd = make_primitive(pd, &scale);
  Rational inv_scale(scale.get_den(), scale.get_num());
  inv_scale.canonicalize();
  pn *= inv_scale;
  num_ = pn.shifted_half(vn - vd);
  den_ = std::move(pd);
}

LaurentRational LaurentRational::operator-() const {
  LaurentRational r = *this;
  r.num_ = -r.num_;
  return r;
}

LaurentRational& LaurentRational::operator+=(const LaurentRational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) den_ = LaurentPoly::one();
    else reduce();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

LaurentRational& LaurentRational::operator-=(const LaurentRational& o) { return *this += -o; }

LaurentRational& LaurentRational::operator*=(const LaurentRational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

LaurentRational& LaurentRational::operator/=(const LaurentRational& o) {
  if (o.is_zero()) throw ExactDivisionFailure("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

bool LaurentRational::operator==(const LaurentRational& o) const {
  // Canonical forms compare structurally; cross-multiplication settles the
  // (unreachable) case of a non-canonical representative.
  if (num_ == o.num_ && den_ == o.den_) return true;
  return (num_ * o.den_) == (o.num_ * den_);
}

bool LaurentRational::operator<(const LaurentRational& o) const {
  if (num_ < o.num_) return true;
  if (o.num_ < num_) return false;
  return den_ < o.den_;
}

Rational LaurentRational::eval(const Rational& q0) const {
  Rational d = den_.eval(q0);
  if (d == 0) throw PoleAtSample("denominator vanishes at q = " + rational_to_string(q0));
  return num_.eval(q0) / d;
}

// ---------------------------------------------------------------------------
// Text grammar.  Canonical printing: terms ascending in the exponent,
// `p/r` for the q^0 term, `q^k` / `p/r*q^k` otherwise, half powers as
// `q^h/2`.  The parser accepts a superset (explicit `q^0` factors, `q`
// without an exponent, arbitrary term order).

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational abs_c = c < 0 ? Rational(-c) : c;
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (e == 0) {
      out << abs_c.get_str();
      continue;
    }
    if (abs_c != 1) out << abs_c.get_str() << "*";
    if (e % 2 == 0) out << "q^" << (e / 2);
    else out << "q^" << e << "/2";
  }
  return out.str();
}

namespace {

struct Scanner {
  const std::string& s;
  size_t i = 0;
  explicit Scanner(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  long integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw ParseError("expected integer at position " + std::to_string(start) + " in '" + s + "'");
    return std::strtol(s.substr(start, i - start).c_str(), nullptr, 10);
  }
};

// rational := int [ '/' uint ]   (the '/' binds to digits only)
Rational scan_rational(Scanner& sc) {
  long num = sc.integer();
  size_t save = sc.i;
  if (sc.consume('/')) {
    sc.skip_ws();
    if (sc.i < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.i]))) {
      long den = sc.integer();
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    sc.i = save;
  }
  return Rational(num);
}

// exponent := int [ '/' 2 ]
long scan_exponent_half(Scanner& sc) {
  long e = sc.integer();
  size_t save = sc.i;
  if (sc.consume('/')) {
    sc.skip_ws();
    if (sc.i < sc.s.size() && sc.s[sc.i] == '2') {
      ++sc.i;
      return e;  // already in half units
    }
    sc.i = save;
  }
  return 2 * e;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  Scanner sc(text);
  LaurentPoly acc;
  bool expect_term = true;
  int sign = 1;
  while (!sc.done()) {
    if (!expect_term) {
      if (sc.consume('+')) sign = 1;
      else if (sc.consume('-')) sign = -1;
      else throw ParseError("expected '+' or '-' in '" + text + "'");
      expect_term = true;
      continue;
    }
    while (sc.peek() == '+' || sc.peek() == '-') sign *= sc.consume('-') ? -1 : 1;
    Rational c(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      c = scan_rational(sc);
      have_coeff = true;
      sc.consume('*');
    }
    long e = 0;
    if (sc.peek() == 'q') {
      sc.consume('q');
      e = sc.consume('^') ? scan_exponent_half(sc) : 2;
    } else if (!have_coeff) {
      throw ParseError("expected term in '" + text + "'");
    }
    acc += half_term(sign < 0 ? Rational(-c) : c, e);
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw ParseError("empty or dangling expression in '" + text + "'");
  return acc;
}

std::string LaurentRational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

LaurentRational LaurentRational::parse(const std::string& text) {
  Scanner sc(text);
  if (sc.peek() == '(') {
    // (num)/(den) with balanced outer parentheses.
    size_t open = text.find('(');
    int depth = 0;
    size_t close = std::string::npos;
    for (size_t j = open; j < text.size(); ++j) {
      if (text[j] == '(') ++depth;
      else if (text[j] == ')' && --depth == 0) {
        close = j;
        break;
      }
    }
    if (close == std::string::npos) throw ParseError("unbalanced '(' in '" + text + "'");
    std::string num_text = text.substr(open + 1, close - open - 1);
    size_t rest = text.find_first_not_of(" \t", close + 1);
    if (rest == std::string::npos) return LaurentRational(LaurentPoly::parse(num_text));
    if (text[rest] != '/') throw ParseError("expected '/' in '" + text + "'");
    size_t dopen = text.find('(', rest);
    if (dopen == std::string::npos) throw ParseError("expected '(denominator)' in '" + text + "'");
    size_t dclose = text.rfind(')');
    if (dclose == std::string::npos || dclose <= dopen)
      throw ParseError("unbalanced denominator in '" + text + "'");
    return LaurentRational(LaurentPoly::parse(num_text),
                           LaurentPoly::parse(text.substr(dopen + 1, dclose - dopen - 1)));
  }
  return LaurentRational(LaurentPoly::parse(text));
}

}  // namespace cpq
