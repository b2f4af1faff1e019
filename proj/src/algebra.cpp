#include "cpq/algebra.hpp"

#include <atomic>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "cpq/rng.hpp"

namespace cpq {

Letter star_letter(Letter l) {
  switch (l) {
    case Letter::A: return Letter::AStar;
    case Letter::AStar: return Letter::A;
    case Letter::C: return Letter::CStar;
    case Letter::CStar: return Letter::C;
  }
  return Letter::A;
}

std::string letter_name(Letter l) {
  switch (l) {
    case Letter::A: return "a";
    case Letter::AStar: return "a*";
    case Letter::C: return "c";
    case Letter::CStar: return "c*";
  }
  return "?";
}

std::vector<Letter> Monomial::word() const {
  std::vector<Letter> w;
  w.reserve(degree());
  for (std::uint32_t s = 0; s < astar; ++s) w.push_back(Letter::AStar);
  for (std::uint32_t s = 0; s < c; ++s) w.push_back(Letter::C);
  for (std::uint32_t s = 0; s < cstar; ++s) w.push_back(Letter::CStar);
  for (std::uint32_t s = 0; s < a; ++s) w.push_back(Letter::A);
  return w;
}

std::string Monomial::to_string() const {
  if (is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  auto put = [&](const char* name, std::uint32_t p) {
    if (p == 0) return;
    if (!first) out << " ";
    first = false;
    out << name;
    if (p != 1) out << "^" << p;
  };
  put("a*", astar);
  put("c", c);
  put("c*", cstar);
  put("a", a);
  return out.str();
}

namespace {

std::atomic<long> g_degree_cap{kDefaultDegreeCap};

}  // namespace

long degree_cap() { return g_degree_cap.load(std::memory_order_relaxed); }
void set_degree_cap(long cap) { g_degree_cap.store(cap, std::memory_order_relaxed); }

AlgebraElement AlgebraElement::from_monomial(const Monomial& m, const LaurentRational& c) {
  AlgebraElement e;
  e.add_term(m, c);
  return e;
}

AlgebraElement AlgebraElement::generator(Letter l) {
  Monomial m;
  switch (l) {
    case Letter::A: m.a = 1; break;
    case Letter::AStar: m.astar = 1; break;
    case Letter::C: m.c = 1; break;
    case Letter::CStar: m.cstar = 1; break;
  }
  return from_monomial(m);
}

AlgebraElement AlgebraElement::b_minus() {
  return normalize_word(LaurentRational::one(), {Letter::A, Letter::CStar});
}
AlgebraElement AlgebraElement::b_plus() {
  return normalize_word(LaurentRational::one(), {Letter::C, Letter::AStar});
}
AlgebraElement AlgebraElement::b_zero() {
  return normalize_word(LaurentRational::one(), {Letter::C, Letter::CStar});
}

long AlgebraElement::max_degree() const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void AlgebraElement::add_term(const Monomial& m, const LaurentRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const LaurentRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

AlgebraElement AlgebraElement::pow(unsigned long e) const {
  AlgebraElement acc = unit();
  AlgebraElement base = *this;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    if ((e >>= 1)) base = mul(base, base);
  }
  return acc;
}

AlgebraElement AlgebraElement::star() const {
  // star of a normal monomial is again normal: the reversed starred word
  // a*^l c^k c*^j a^i needs no reduction.
  AlgebraElement r;
  for (const auto& [m, c] : terms_) r.add_term(m.starred(), c);
  return r;
}

bool AlgebraElement::is_cp1() const {
  for (const auto& [m, c] : terms_)
    if (m.weight_left() != 0) return false;
  return true;
}

std::optional<long> AlgebraElement::homogeneous_left_weight() const {
  std::optional<long> w;
  for (const auto& [m, c] : terms_) {
    long wm = m.weight_left();
    if (!w) w = wm;
    else if (*w != wm) return std::nullopt;
  }
  return w;
}

std::optional<long> AlgebraElement::homogeneous_right_weight() const {
  std::optional<long> w;
  for (const auto& [m, c] : terms_) {
    long wm = m.weight_right();
    if (!w) w = wm;
    else if (*w != wm) return std::nullopt;
  }
  return w;
}

std::map<long, AlgebraElement> AlgebraElement::left_weight_components() const {
  std::map<long, AlgebraElement> comps;
  for (const auto& [m, c] : terms_) comps[m.weight_left()].add_term(m, c);
  return comps;
}

// ---------------------------------------------------------------------------
// Rewriting.
//
// Adjacent-pair reductions toward the word order a* < c < c* < a:
//   a  a*  ->  1 - q^2 c c*          a* a  ->  1 - c* c   (coexistence phase)
//   a  c   ->  q c a                 a  c* ->  q c* a
//   c  a*  ->  q a* c                c* a* ->  q a* c*
//   c* c   ->  c c*
// Sorting alone cannot join an a* on the left with an a on the right, so a
// sorted word with both present takes one closed-form coexistence step
//   a*^i c^j c*^k a^l = q^{-(j+k)} a*^{i-1} c^j c*^k (1 - c* c) a^{l-1}
// and re-enters the loop.

namespace {

struct PendingWord {
  LaurentRational coeff;
  std::vector<Letter> word;
};

// Returns true (and fills out) when the adjacent pair (x y) reduces.
struct PairRule {
  // replacement words with multiplying q-half-power and sign
  struct Out {
    std::vector<Letter> repl;
    long q_half = 0;
    int sign = 1;
  };
  static bool apply(Letter x, Letter y, std::vector<Out>& outs) {
    outs.clear();
    if (x == Letter::A && y == Letter::AStar) {
      outs.push_back({{}, 0, 1});
      outs.push_back({{Letter::C, Letter::CStar}, 4, -1});  // -q^2 c c*
      return true;
    }
    if (x == Letter::AStar && y == Letter::A) {
      outs.push_back({{}, 0, 1});
      outs.push_back({{Letter::CStar, Letter::C}, 0, -1});  // -c* c
      return true;
    }
    if (x == Letter::A && y == Letter::C) {
      outs.push_back({{Letter::C, Letter::A}, 2, 1});
      return true;
    }
    if (x == Letter::A && y == Letter::CStar) {
      outs.push_back({{Letter::CStar, Letter::A}, 2, 1});
      return true;
    }
    if (x == Letter::C && y == Letter::AStar) {
      outs.push_back({{Letter::AStar, Letter::C}, 2, 1});
      return true;
    }
    if (x == Letter::CStar && y == Letter::AStar) {
      outs.push_back({{Letter::AStar, Letter::CStar}, 2, 1});
      return true;
    }
    if (x == Letter::CStar && y == Letter::C) {
      outs.push_back({{Letter::C, Letter::CStar}, 0, 1});
      return true;
    }
    return false;
  }
};

// Exponent counts of a sorted word.
struct Counts {
  long i = 0, j = 0, k = 0, l = 0;
};

bool sorted_counts(const std::vector<Letter>& w, Counts& out) {
  Counts c;
  int phase = 0;  // 0:a* 1:c 2:c* 3:a
  for (Letter l : w) {
    int p = static_cast<int>(l);
    if (p < phase) return false;
    phase = p;
    switch (l) {
      case Letter::AStar: ++c.i; break;
      case Letter::C: ++c.j; break;
      case Letter::CStar: ++c.k; break;
      case Letter::A: ++c.l; break;
    }
  }
  out = c;
  return true;
}

}  // namespace

AlgebraElement normalize_word(const LaurentRational& coeff, const std::vector<Letter>& word,
                              ReduceOrder order) {
  const long cap = degree_cap();
  if (static_cast<long>(word.size()) > cap)
    throw DegreeCapExceeded("word of length " + std::to_string(word.size()) +
                            " exceeds the degree cap " + std::to_string(cap));
  AlgebraElement result;
  if (coeff.is_zero()) return result;

  std::deque<PendingWord> work;
  work.push_back({coeff, word});
  std::vector<PairRule::Out> outs;

  while (!work.empty()) {
    PendingWord item = std::move(work.front());
    work.pop_front();
    const auto& w = item.word;

    // find a reducible adjacent pair in the requested scan order
    std::size_t pos = w.size();
    bool found = false;
    if (w.size() >= 2) {
      if (order == ReduceOrder::LeftmostFirst) {
        for (std::size_t p = 0; p + 1 < w.size(); ++p)
          if (PairRule::apply(w[p], w[p + 1], outs)) {
            pos = p;
            found = true;
            break;
          }
      } else {
        for (std::size_t p = w.size() - 1; p-- > 0;)
          if (PairRule::apply(w[p], w[p + 1], outs)) {
            pos = p;
            found = true;
            break;
          }
      }
    }

    if (found) {
      for (const auto& out : outs) {
        PendingWord next;
        next.coeff = item.coeff * LaurentRational::q_half_power(out.q_half);
        if (out.sign < 0) next.coeff = -next.coeff;
        next.word.reserve(w.size() - 2 + out.repl.size());
        next.word.insert(next.word.end(), w.begin(), w.begin() + pos);
        next.word.insert(next.word.end(), out.repl.begin(), out.repl.end());
        next.word.insert(next.word.end(), w.begin() + pos + 2, w.end());
        work.push_back(std::move(next));
      }
      continue;
    }

    Counts cnt;
    if (!sorted_counts(w, cnt)) throw Error("internal: irreducible unsorted word");
    if (cnt.i > 0 && cnt.l > 0) {
      // coexistence step on the sorted word
      LaurentRational base = item.coeff * LaurentRational::q_half_power(-2 * (cnt.j + cnt.k));
      PendingWord keep, swap;
      keep.coeff = base;
      swap.coeff = -base;
      auto emit = [](std::vector<Letter>& v, Letter l, long times) {
        for (long s = 0; s < times; ++s) v.push_back(l);
      };
      emit(keep.word, Letter::AStar, cnt.i - 1);
      emit(keep.word, Letter::C, cnt.j);
      emit(keep.word, Letter::CStar, cnt.k);
      emit(keep.word, Letter::A, cnt.l - 1);
      emit(swap.word, Letter::AStar, cnt.i - 1);
      emit(swap.word, Letter::C, cnt.j + 1);
      emit(swap.word, Letter::CStar, cnt.k + 1);
      emit(swap.word, Letter::A, cnt.l - 1);
      work.push_back(std::move(keep));
      work.push_back(std::move(swap));
      continue;
    }

    Monomial m;
    m.astar = static_cast<std::uint32_t>(cnt.i);
    m.c = static_cast<std::uint32_t>(cnt.j);
    m.cstar = static_cast<std::uint32_t>(cnt.k);
    m.a = static_cast<std::uint32_t>(cnt.l);
    result.add_term(m, item.coeff);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Products, with a read-through cache on normal-monomial pairs.

namespace {

std::uint64_t pack(const Monomial& m) {
  return (static_cast<std::uint64_t>(m.astar) << 48) | (static_cast<std::uint64_t>(m.c) << 32) |
         (static_cast<std::uint64_t>(m.cstar) << 16) | m.a;
}

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
    std::uint64_t x = p.first * 0x9e3779b97f4a7c15ULL ^ (p.second + 0x7f4a7c15ULL);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

std::shared_mutex g_mul_cache_mutex;
std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, AlgebraElement, PairHash> g_mul_cache;

AlgebraElement mono_product(const Monomial& x, const Monomial& y) {
  const auto key = std::make_pair(pack(x), pack(y));
  {
    std::shared_lock lock(g_mul_cache_mutex);
    auto it = g_mul_cache.find(key);
    if (it != g_mul_cache.end()) return it->second;
  }
  std::vector<Letter> w = x.word();
  const std::vector<Letter> wy = y.word();
  w.insert(w.end(), wy.begin(), wy.end());
  AlgebraElement r = normalize_word(LaurentRational::one(), w);
  {
    std::unique_lock lock(g_mul_cache_mutex);
    g_mul_cache.emplace(key, r);
  }
  return r;
}

}  // namespace

void clear_mul_cache() {
  std::unique_lock lock(g_mul_cache_mutex);
  g_mul_cache.clear();
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement r;
  const long cap = degree_cap();
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      if (mx.degree() + my.degree() > cap)
        throw DegreeCapExceeded("product degree " + std::to_string(mx.degree() + my.degree()) +
                                " exceeds the degree cap " + std::to_string(cap));
      AlgebraElement part = mono_product(mx, my);
      LaurentRational c = cx * cy;
      for (const auto& [m, v] : part.terms()) r.add_term(m, v * c);
    }
  }
  return r;
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) {
  return mul(mul(x, y), z);
}

// ---------------------------------------------------------------------------

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    if (!m.is_unit()) out << " " << m.to_string();
  }
  return out.str();
}

AlgebraElement AlgebraElement::parse(const std::string& text) {
  AlgebraElement acc;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool expect_term = true;
  int sign = 1;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (!expect_term) {
      if (text[i] == '+') sign = 1;
      else if (text[i] == '-') sign = -1;
      else throw ParseError("expected '+' or '-' in element '" + text + "'");
      ++i;
      expect_term = true;
      continue;
    }
    while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      skip_ws();
    }
    LaurentRational coeff = LaurentRational::one();
    skip_ws();
    if (i < text.size() && text[i] == '(') {
      int depth = 0;
      std::size_t start = i;
      std::size_t end = std::string::npos;
      for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] == '(') ++depth;
        else if (text[j] == ')' && --depth == 0) {
          end = j;
          break;
        }
      }
      if (end == std::string::npos) throw ParseError("unbalanced '(' in element '" + text + "'");
      // The parenthesized block may itself be a (num)/(den) coefficient.
      std::size_t after = end + 1;
      while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
      if (after < text.size() && text[after] == '/') {
        std::size_t dopen = text.find('(', after);
        if (dopen == std::string::npos) throw ParseError("expected denominator in '" + text + "'");
        int d2 = 0;
        std::size_t dend = std::string::npos;
        for (std::size_t j = dopen; j < text.size(); ++j) {
          if (text[j] == '(') ++d2;
          else if (text[j] == ')' && --d2 == 0) {
            dend = j;
            break;
          }
        }
        if (dend == std::string::npos) throw ParseError("unbalanced denominator in '" + text + "'");
        coeff = LaurentRational(LaurentPoly::parse(text.substr(start + 1, end - start - 1)),
                                LaurentPoly::parse(text.substr(dopen + 1, dend - dopen - 1)));
        i = dend + 1;
      } else {
        coeff = LaurentRational::parse(text.substr(start + 1, end - start - 1));
        i = end + 1;
      }
    } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      // bare rational or q-power coefficient without parentheses
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '/' || text[j] == '*' || text[j] == '^' ||
                                 text[j] == 'q'))
        ++j;
      coeff = LaurentRational::parse(text.substr(i, j - i));
      i = j;
    }

    std::vector<Letter> word;
    while (true) {
      skip_ws();
      if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
      Letter l;
      if (text[i] == 'a') l = Letter::A;
      else if (text[i] == 'c') l = Letter::C;
      else if (text[i] == '1') {
        ++i;
        continue;
      } else {
        throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in element '" +
                         text + "'");
      }
      ++i;
      if (i < text.size() && text[i] == '*') {
        l = star_letter(l);
        ++i;
      }
      long p = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError("expected exponent in element '" + text + "'");
        p = std::strtol(text.substr(start, i - start).c_str(), nullptr, 10);
      }
      for (long s = 0; s < p; ++s) word.push_back(l);
    }
    if (sign < 0) coeff = -coeff;
    acc += normalize_word(coeff, word);
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw ParseError("empty element text '" + text + "'");
  return acc;
}

// ---------------------------------------------------------------------------

AlgebraElement random_element(long max_degree, long n_terms, std::uint64_t seed,
                              SectorConstraint constraint, long weight) {
  if (max_degree < 0) throw Error("random_element requires max_degree >= 0");
  std::vector<Monomial> sector;
  for (long d = 0; d <= max_degree; ++d) {
    // enumerate (i,j,k,l) with i+j+k+l = d and i*l = 0
    for (long i = 0; i <= d; ++i) {
      for (long j = 0; i + j <= d; ++j) {
        for (long k = 0; i + j + k <= d; ++k) {
          long l = d - i - j - k;
          if (i > 0 && l > 0) continue;
          Monomial m;
          m.astar = static_cast<std::uint32_t>(i);
          m.c = static_cast<std::uint32_t>(j);
          m.cstar = static_cast<std::uint32_t>(k);
          m.a = static_cast<std::uint32_t>(l);
          if (constraint == SectorConstraint::Cp1 && m.weight_left() != 0) continue;
          if (constraint == SectorConstraint::Weight && m.weight_left() != weight) continue;
          sector.push_back(m);
        }
      }
    }
  }
  if (sector.empty())
    throw EmptySector("no monomial of the requested weight within degree " +
                      std::to_string(max_degree));
  Rng rng(seed);
  AlgebraElement e;
  for (long t = 0; t < n_terms; ++t) {
    const Monomial& m = sector[rng.below(sector.size())];
    long num = static_cast<long>(rng.below(6)) - 3;
    if (num >= 0) ++num;  // skip zero
    long qexp = static_cast<long>(rng.below(5)) - 2;
    e.add_term(m, LaurentRational(LaurentPoly::term(Rational(num), qexp)));
  }
  if (e.is_zero()) e.add_term(sector[0], LaurentRational::one());
  return e;
}

}  // namespace cpq
