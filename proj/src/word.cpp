#include "regmap/word.hpp"

#include <cstdlib>

namespace regmap {

int Word::length() const {
  int n = 0;
  for (const auto& s : syls_) n += std::abs(s.exp);
  return n;
}

int Word::max_generator() const {
  int m = -1;
  for (const auto& s : syls_)
    if (s.gen > m) m = s.gen;
  return m;
}

void Word::push(int gen, int exp) {
  if (exp == 0) return;
  if (!syls_.empty() && syls_.back().gen == gen) {
    syls_.back().exp += exp;
    if (syls_.back().exp == 0) syls_.pop_back();
    return;
  }
  syls_.push_back({gen, exp});
}

Word word_invert(const Word& u) {
  Word r;
  const auto& s = u.syllables();
  for (auto it = s.rbegin(); it != s.rend(); ++it) r.push(it->gen, -it->exp);
  return r;
}

Word word_concat(const Word& u, const Word& v) {
  Word r = u;
  for (const auto& s : v.syllables()) r.push(s.gen, s.exp);
  return r;
}

Word word_pow(const Word& u, int e) {
  Word base = e < 0 ? word_invert(u) : u;
  int n = e < 0 ? -e : e;
  Word r;
  for (int i = 0; i < n; ++i) r = word_concat(r, base);
  return r;
}

Word word_conjugate(const Word& u, const Word& v) {
  return word_concat(word_concat(word_invert(v), u), v);
}

Word word_commutator(const Word& u, const Word& v) {
  return word_concat(word_concat(word_invert(u), word_invert(v)), word_concat(u, v));
}

std::vector<std::pair<int, int>> letters(const Word& u) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(u.length()));
  for (const auto& s : u.syllables()) {
    int sign = s.exp < 0 ? -1 : 1;
    for (int i = 0; i < std::abs(s.exp); ++i) out.emplace_back(s.gen, sign);
  }
  return out;
}

}  // namespace regmap
