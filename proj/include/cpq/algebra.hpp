#ifndef CPQ_ALGEBRA_HPP
#define CPQ_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpq/laurent.hpp"

namespace cpq {

// Generators of the coordinate algebra, in normal-form word order.
enum class Letter : std::uint8_t { AStar = 0, C = 1, CStar = 2, A = 3 };

Letter star_letter(Letter l);
std::string letter_name(Letter l);

/// Ordered word a*^i c^j c*^k a^l with i*l = 0; the PBW-type basis of the
/// coordinate algebra once the sphere relations have eliminated mixed
/// a*/a pairs.
struct Monomial {
  std::uint32_t astar = 0, c = 0, cstar = 0, a = 0;

  static Monomial unit() { return {}; }
  bool is_unit() const { return astar == 0 && c == 0 && cstar == 0 && a == 0; }
  long degree() const { return static_cast<long>(astar) + c + cstar + a; }

  // K acts as q^{w_left/2}; the modular grading is w_right.
  long weight_left() const {
    return static_cast<long>(astar) + cstar - static_cast<long>(c) - a;
  }
  long weight_right() const {
    return static_cast<long>(a) + cstar - static_cast<long>(astar) - c;
  }

  std::vector<Letter> word() const;
  Monomial starred() const { return Monomial{a, cstar, c, astar}; }

  auto operator<=>(const Monomial&) const = default;

  std::string to_string() const;
};

// Reduction scan order; both must agree on every input (confluence).
enum class ReduceOrder { LeftmostFirst, RightmostFirst };

/// Cap on the letter-length of any word entering normalization.  Guards
/// runaway projector products; DegreeCapExceeded past it.
long degree_cap();
void set_degree_cap(long cap);
inline constexpr long kDefaultDegreeCap = 24;

/// Element of the coordinate algebra in normal form: a finite map from
/// basis monomials to Laurent-rational coefficients, no zero entries.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement zero() { return AlgebraElement(); }
  static AlgebraElement unit() { return from_monomial(Monomial::unit()); }
  static AlgebraElement from_monomial(const Monomial& m,
                                      const LaurentRational& c = LaurentRational::one());
  static AlgebraElement generator(Letter l);
  static AlgebraElement gen_a() { return generator(Letter::A); }
  static AlgebraElement gen_astar() { return generator(Letter::AStar); }
  static AlgebraElement gen_c() { return generator(Letter::C); }
  static AlgebraElement gen_cstar() { return generator(Letter::CStar); }

  // Sphere generators B- = a c*, B+ = c a*, B0 = c c*.
  static AlgebraElement b_minus();
  static AlgebraElement b_plus();
  static AlgebraElement b_zero();

  const std::map<Monomial, LaurentRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  long max_degree() const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  AlgebraElement& operator*=(const LaurentRational& c);
  friend AlgebraElement operator*(AlgebraElement x, const LaurentRational& c) { return x *= c; }
  friend AlgebraElement operator*(const LaurentRational& c, AlgebraElement x) { return x *= c; }

  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
  bool operator<(const AlgebraElement& o) const { return terms_ < o.terms_; }

  AlgebraElement pow(unsigned long e) const;

  /// Anti-linear anti-multiplicative involution (coefficients are real
  /// rational functions of q, so anti-linearity is plain linearity here).
  AlgebraElement star() const;

  bool is_cp1() const;
  /// Weight of a w_L-homogeneous element; nullopt when mixed or zero.
  std::optional<long> homogeneous_left_weight() const;
  std::optional<long> homogeneous_right_weight() const;
  /// Split into w_L-homogeneous components, keyed by weight.
  std::map<long, AlgebraElement> left_weight_components() const;

  void add_term(const Monomial& m, const LaurentRational& c);

  std::string to_string() const;
  static AlgebraElement parse(const std::string& text);

 private:
  std::map<Monomial, LaurentRational> terms_;
};

/// Normal form of a single coefficient * word, fully reduced.
AlgebraElement normalize_word(const LaurentRational& coeff, const std::vector<Letter>& word,
                              ReduceOrder order = ReduceOrder::LeftmostFirst);

/// Product in normal form (bilinear extension of word normalization, with a
/// read-through cache on monomial pairs).
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z);

void clear_mul_cache();

enum class SectorConstraint { Any, Cp1, Weight };

/// Deterministic pseudo-random element: n_terms monomials of degree at most
/// max_degree drawn from the requested grading sector, with small nonzero
/// rational-times-q-power coefficients.  EmptySector when the sector has no
/// monomial within the degree bound.
AlgebraElement random_element(long max_degree, long n_terms, std::uint64_t seed,
                              SectorConstraint constraint = SectorConstraint::Any,
                              long weight = 0);

}  // namespace cpq

#endif
