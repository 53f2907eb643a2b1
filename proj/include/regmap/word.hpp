#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace regmap {

/// One syllable g^e of a word over abstract generators. Invariant: e != 0.
struct Syllable {
  int gen = 0;
  int exp = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word at the syllable level: adjacent syllables use
/// distinct generators and all exponents are nonzero.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syls) { for (const auto& s : syls) push(s.gen, s.exp); }

  static Word generator(int gen, int exp = 1) {
    Word w;
    w.push(gen, exp);
    return w;
  }

  const std::vector<Syllable>& syllables() const { return syls_; }
  bool empty() const { return syls_.empty(); }

  /// Letter count (sum of |exp|).
  int length() const;
  /// Largest generator index used, or -1 for the empty word.
  int max_generator() const;

  /// Appends g^e, merging and cancelling with the trailing syllable.
  void push(int gen, int exp);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syls_;
};

Word word_invert(const Word& u);
Word word_concat(const Word& u, const Word& v);
Word word_pow(const Word& u, int e);
/// v^-1 * u * v
Word word_conjugate(const Word& u, const Word& v);
/// u^-1 * v^-1 * u * v
Word word_commutator(const Word& u, const Word& v);

/// Flattens to single letters (gen, +1/-1).
std::vector<std::pair<int, int>> letters(const Word& u);

}  // namespace regmap
