#ifndef CPQ_LAURENT_HPP
#define CPQ_LAURENT_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "cpq/errors.hpp"

namespace cpq {

using Rational = mpq_class;

/// Laurent polynomial in the deformation parameter q, with rational
/// coefficients of arbitrary precision.
///
/// Exponents are stored in units of q^(1/2): the entry (e, c) stands for
/// c * q^(e/2).  Half-integer powers arise only through the quantum-group
/// action coefficients; every quantity with an external surface (printing,
/// evaluation at a rational point) lives in the integer-power subring.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly constant(const Rational& r);
  /// q^k for integer k.
  static LaurentPoly q_power(long k) { return half_term(1, 2 * k); }
  /// q^(h/2); internal to the symmetry layer.
  static LaurentPoly q_half_power(long h) { return half_term(1, h); }
  /// c * q^(e/2).
  static LaurentPoly half_term(const Rational& c, long e);
  /// c * q^k.
  static LaurentPoly term(const Rational& c, long k) { return half_term(c, 2 * k); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  /// True when every exponent is an even multiple of 1/2, i.e. the value is a
  /// Laurent polynomial in q itself.
  bool integral_powers() const;

  // Exponent range in half-units; zero polynomial has none.
  long min_exp_half() const;
  long max_exp_half() const;

  const std::vector<std::pair<long, Rational>>& terms() const { return terms_; }
  Rational coeff_half(long e) const;
  Rational coeff_q(long k) const { return coeff_half(2 * k); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const Rational& r);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& r) { return a *= r; }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Multiply by q^(h/2).
  LaurentPoly shifted_half(long h) const;
  LaurentPoly pow(unsigned long e) const;

  /// Exact division; throws ExactDivisionFailure when a remainder is left.
  LaurentPoly divide_exact(const LaurentPoly& d) const;

  /// Evaluate at q = q0 (q0 != 0).  Requires integral powers.
  Rational eval(const Rational& q0) const;

  std::string to_string() const;
  static LaurentPoly parse(const std::string& text);

  /// Total ordering for use as a map key (lexicographic on terms).
  bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

 private:
  // Sorted by exponent, no zero coefficients.
  std::vector<std::pair<long, Rational>> terms_;

  void prune();
  friend class LaurentRational;
};

/// Ratio of Laurent polynomials, kept in a canonical reduced form: common
/// q-power and polynomial factors cancelled, denominator a primitive
/// integer-coefficient polynomial with positive trailing coefficient and
/// zero minimal exponent.  Equality of values is then structural equality.
class LaurentRational {
 public:
  LaurentRational() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
  LaurentRational(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}
  LaurentRational(const LaurentPoly& n, const LaurentPoly& d);

  static LaurentRational zero() { return LaurentRational(); }
  static LaurentRational one() { return LaurentRational(LaurentPoly::one()); }
  static LaurentRational constant(const Rational& r) {
    return LaurentRational(LaurentPoly::constant(r));
  }
  static LaurentRational q_power(long k) { return LaurentRational(LaurentPoly::q_power(k)); }
  static LaurentRational q_half_power(long h) {
    return LaurentRational(LaurentPoly::q_half_power(h));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  LaurentRational operator-() const;
  LaurentRational& operator+=(const LaurentRational& o);
  LaurentRational& operator-=(const LaurentRational& o);
  LaurentRational& operator*=(const LaurentRational& o);
  LaurentRational& operator/=(const LaurentRational& o);
  friend LaurentRational operator+(LaurentRational a, const LaurentRational& b) { return a += b; }
  friend LaurentRational operator-(LaurentRational a, const LaurentRational& b) { return a -= b; }
  friend LaurentRational operator*(LaurentRational a, const LaurentRational& b) { return a *= b; }
  friend LaurentRational operator/(LaurentRational a, const LaurentRational& b) { return a /= b; }

  /// Exact equality (cross-multiplication of the canonical forms).
  bool operator==(const LaurentRational& o) const;
  bool operator!=(const LaurentRational& o) const { return !(*this == o); }

  /// Exact rational value at q = q0; PoleAtSample when the denominator
  /// vanishes there.
  Rational eval(const Rational& q0) const;

  std::string to_string() const;
  static LaurentRational parse(const std::string& text);

  bool operator<(const LaurentRational& o) const;

 private:
  LaurentPoly num_, den_;
  void reduce();
};

std::string rational_to_string(const Rational& r);

}  // namespace cpq

#endif
