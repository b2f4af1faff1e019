#include "cpq/action.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace cpq {

namespace {

// Generator values of the action, from the closed-form table at s = 1.
AlgebraElement seed_E(Letter l) {
  switch (l) {
    case Letter::A:  // E |> a = -q c*
      return LaurentRational::q_power(1) * (-AlgebraElement::gen_cstar());
    case Letter::C:  // E |> c = a*
      return AlgebraElement::gen_astar();
    case Letter::AStar:
    case Letter::CStar:
      return AlgebraElement::zero();
  }
  return AlgebraElement::zero();
}

AlgebraElement seed_F(Letter l) {
  switch (l) {
    case Letter::AStar:  // F |> a* = c
      return AlgebraElement::gen_c();
    case Letter::CStar:  // F |> c* = -q^-1 a
      return LaurentRational::q_power(-1) * (-AlgebraElement::gen_a());
    case Letter::A:
    case Letter::C:
      return AlgebraElement::zero();
  }
  return AlgebraElement::zero();
}

std::uint64_t pack(const Monomial& m) {
  return (static_cast<std::uint64_t>(m.astar) << 48) | (static_cast<std::uint64_t>(m.c) << 32) |
         (static_cast<std::uint64_t>(m.cstar) << 16) | m.a;
}

long letter_weight_left(Letter l) {
  return (l == Letter::AStar || l == Letter::CStar) ? 1 : -1;
}

struct ActionCache {
  std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, AlgebraElement> table;
};

ActionCache g_cache_E, g_cache_F;

AlgebraElement act_K_monomial(const Monomial& m, int direction) {
  return AlgebraElement::from_monomial(
      m, LaurentRational::q_half_power(direction * m.weight_left()));
}

// Twisted-Leibniz recursion over the word of a normal monomial, memoized.
AlgebraElement act_EF_monomial(bool is_E, const Monomial& m) {
  ActionCache& cache = is_E ? g_cache_E : g_cache_F;
  const std::uint64_t key = pack(m);
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second;
  }
  AlgebraElement result;
  if (m.is_unit()) {
    result = AlgebraElement::zero();
  } else {
    std::vector<Letter> w = m.word();
    Letter head = w.front();
    Monomial rest_m;
    switch (head) {
      case Letter::AStar: rest_m = Monomial{m.astar - 1, m.c, m.cstar, m.a}; break;
      case Letter::C: rest_m = Monomial{m.astar, m.c - 1, m.cstar, m.a}; break;
      case Letter::CStar: rest_m = Monomial{m.astar, m.c, m.cstar - 1, m.a}; break;
      case Letter::A: rest_m = Monomial{m.astar, m.c, m.cstar, m.a - 1}; break;
    }
    AlgebraElement g_head = is_E ? seed_E(head) : seed_F(head);
    // g |> (x y) = (g |> x)(K |> y) + (K^-1 |> x)(g |> y)
    AlgebraElement term1 = mul(g_head, act_K_monomial(rest_m, +1));
    AlgebraElement head_kinv = LaurentRational::q_half_power(-letter_weight_left(head)) *
                               AlgebraElement::generator(head);
    AlgebraElement term2 = mul(head_kinv, act_EF_monomial(is_E, rest_m));
    result = term1 + term2;
  }
  {
    std::unique_lock lock(cache.mutex);
    cache.table.emplace(key, result);
  }
  return result;
}

AlgebraElement act_linear(bool is_E, const AlgebraElement& x) {
  AlgebraElement r;
  for (const auto& [m, c] : x.terms()) {
    AlgebraElement part = act_EF_monomial(is_E, m);
    for (const auto& [pm, pc] : part.terms()) r.add_term(pm, pc * c);
  }
  return r;
}

AlgebraElement act_K(const AlgebraElement& x, int direction) {
  AlgebraElement r;
  for (const auto& [m, c] : x.terms())
    r.add_term(m, c * LaurentRational::q_half_power(direction * m.weight_left()));
  return r;
}

AlgebraElement act_Xz(const AlgebraElement& x) {
  // multiplication by (1 - q^{2n})/(1 - q^{-2}) on the left-weight-n component
  const LaurentRational den(LaurentPoly::one() - LaurentPoly::q_power(-2));
  AlgebraElement r;
  for (const auto& [m, c] : x.terms()) {
    long n = m.weight_left();
    if (n == 0) continue;
    LaurentRational factor =
        LaurentRational(LaurentPoly::one() - LaurentPoly::q_power(2 * n)) / den;
    r.add_term(m, c * factor);
  }
  return r;
}

}  // namespace

AlgebraElement act(UqGenerator g, const AlgebraElement& x) {
  switch (g) {
    case UqGenerator::E: return act_linear(true, x);
    case UqGenerator::F: return act_linear(false, x);
    case UqGenerator::K: return act_K(x, +1);
    case UqGenerator::Kinv: return act_K(x, -1);
    case UqGenerator::Xplus:
      return LaurentRational::q_half_power(1) * act_linear(true, act_K(x, +1));
    case UqGenerator::Xminus:
      return LaurentRational::q_half_power(-1) * act_linear(false, act_K(x, +1));
    case UqGenerator::Xz: return act_Xz(x);
  }
  return AlgebraElement::zero();
}

AlgebraElement sigma(const AlgebraElement& x) {
  AlgebraElement r;
  for (const auto& [m, c] : x.terms())
    r.add_term(m, c * LaurentRational::q_power(m.weight_right()));
  return r;
}

AlgebraElement sigma_inverse(const AlgebraElement& x) {
  AlgebraElement r;
  for (const auto& [m, c] : x.terms())
    r.add_term(m, c * LaurentRational::q_power(-m.weight_right()));
  return r;
}

AlgebraElement modular_haar(const AlgebraElement& x) {
  AlgebraElement r;
  for (const auto& [m, c] : x.terms())
    r.add_term(m, c * LaurentRational::q_power(m.weight_right() - m.weight_left()));
  return r;
}

RepWeights rep_K2(long two_j) {
  if (two_j < 0) throw Error("rep_K2 requires 2J >= 0");
  RepWeights w;
  w.two_j = two_j;
  w.diagonal.reserve(two_j + 1);
  for (long mu = 0; mu <= two_j; ++mu) w.diagonal.push_back(LaurentPoly::q_power(two_j - 2 * mu));
  return w;
}

}  // namespace cpq
