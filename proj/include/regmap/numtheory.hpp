#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace regmap {

/// Exact rational with reduced numerator/denominator, denominator > 0.
/// All arithmetic in this module is integral; no floating point anywhere.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// A map type {x, y} with integral k(x, y) = xy / (xy - 2x - 2y).
struct TypePair {
  int x = 0, y = 0;  // x <= y
  std::int64_t k = 0;
  friend bool operator==(const TypePair&, const TypePair&) = default;
};

/// All pairs x <= y with xy - 2x - 2y > 0 and k(x, y) a positive integer.
/// Search bound 200 with an internal assertion that nothing appears beyond
/// y = 50: k >= 2 forces (x - 4)(y - 4) <= 16, and k = 1 is impossible since
/// xy > xy - 2x - 2y.
std::vector<TypePair> table1();

/// k(x, y); throws std::invalid_argument when xy - 2x - 2y <= 0 and
/// std::logic_error if the value ever exceeded the Hurwitz bound 21.
Rational hurwitz_check(std::int64_t x, std::int64_t y);

/// The four fractions of the non-integrality lemma for j + k = 4:
///   (2p^k + 4p^j - 4) / ((2p^j - 1)(2p^j - 4))
///   (2p^k + 4p^j + 4) / (2p^j (2p^j + 1))
///   (2p^k + 4p^j - 2) / ((2p^j - 2)(2p^j - 3))
///   (2p^k + 4p^j + 2) / ((2p^j - 1)(2p^j + 2))
struct LemmaIntResult {
  std::array<Rational, 4> values;
  std::array<bool, 4> integral;
  bool any_integral = false;
};
LemmaIntResult lemma_int(std::int64_t p, int j, int k);

struct MnPair {
  std::int64_t m = 0, n = 0;  // m <= n
  friend bool operator==(const MnPair&, const MnPair&) = default;
};

/// Solution sets of the two Diophantine conditions: part (1) collects all
/// positive solutions of p*m*n - k*m - k*n = d*p^2 for (d, k) in {1,2}^2;
/// part (2) the odd solutions of p*m*n - m - n = p^3.
struct LemmaNoiResult {
  /// solutions[d-1][k-1], each sorted by m.
  std::array<std::array<std::vector<MnPair>, 2>, 2> solutions;
  std::vector<MnPair> odd_solutions;
};
LemmaNoiResult lemma_noi(std::int64_t p);

/// The two solvable-family exclusions at characteristic -p^4: m = p^4 + 4 is
/// never 3 mod 6, and (m-1)(n-1) = p^4 + 1 has no odd coprime solutions with
/// 1 != m < n.
struct SolvableExclusions {
  std::int64_t p = 0;
  bool mm_excluded = false;                ///< p^4 + 4 != 3 (mod 6)
  std::vector<MnPair> odd_coprime_pairs;   ///< offending solutions, expected empty
  bool mjk_excluded = false;               ///< no odd coprime factorization
};
SolvableExclusions solvable_exclusions(std::int64_t p);

/// Primes in [lo, hi] by trial division.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

}  // namespace regmap
