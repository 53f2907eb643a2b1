#include "regmap/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace regmap {

namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

std::vector<TypePair> table1() {
  std::vector<TypePair> out;
  for (int x = 3; x <= 200; ++x)
    for (int y = x; y <= 200; ++y) {
      std::int64_t den = static_cast<std::int64_t>(x) * y - 2 * x - 2 * y;
      if (den <= 0) continue;
      std::int64_t num = static_cast<std::int64_t>(x) * y;
      if (num % den != 0) continue;
      // The search bound is generous on purpose: k >= 2 already forces
      // xy <= 2(xy - 2x - 2y) - false for (x-4)(y-4) > 16 - so nothing can
      // appear past y = 50. Assert that instead of trusting it.
      if (y > 50) throw std::logic_error("type pair found beyond the proven bound");
      out.push_back(TypePair{x, y, num / den});
    }
  return out;
}

Rational hurwitz_check(std::int64_t x, std::int64_t y) {
  std::int64_t den = x * y - 2 * x - 2 * y;
  if (den <= 0) throw std::invalid_argument("k(x, y) needs xy - 2x - 2y > 0");
  Rational k = Rational::make(x * y, den);
  if (k.num > 21 * k.den) throw std::logic_error("k(x, y) exceeded the Hurwitz bound 21");
  return k;
}

LemmaIntResult lemma_int(std::int64_t p, int j, int k) {
  if (j < 1 || k < 1 || j + k != 4) throw std::invalid_argument("need j, k >= 1 with j + k = 4");
  if (p < 5) throw std::invalid_argument("need a prime p >= 5");
  std::int64_t q = 2 * ipow(p, j);           // 2p^j, at most 2 * 97^3
  std::int64_t num = 2 * ipow(p, k) + 2 * q;  // 2p^k + 4p^j
  LemmaIntResult out;
  out.values = {Rational::make(num - 4, (q - 1) * (q - 4)),
                Rational::make(num + 4, q * (q + 1)),
                Rational::make(num - 2, (q - 2) * (q - 3)),
                Rational::make(num + 2, (q - 1) * (q + 2))};
  for (int i = 0; i < 4; ++i) {
    out.integral[static_cast<size_t>(i)] = out.values[static_cast<size_t>(i)].is_integer();
    out.any_integral = out.any_integral || out.integral[static_cast<size_t>(i)];
  }
  return out;
}

LemmaNoiResult lemma_noi(std::int64_t p) {
  if (p < 5) throw std::invalid_argument("need a prime p >= 5");
  LemmaNoiResult out;
  for (std::int64_t d = 1; d <= 2; ++d)
    for (std::int64_t k = 1; k <= 2; ++k)
      // Solve p*m*n - k*m - k*n = d*p^2 for n given m: n = (d p^2 + k m) /
      // (p m - k). Requiring n >= m bounds the loop exactly by
      // p m^2 - 2 k m <= d p^2.
      for (std::int64_t m = 1; p * m * m - 2 * k * m <= d * p * p; ++m) {
        std::int64_t den = p * m - k;
        if (den <= 0) continue;
        std::int64_t num = d * p * p + k * m;
        if (num % den != 0) continue;
        std::int64_t n = num / den;
        if (n >= m) out.solutions[static_cast<size_t>(d - 1)][static_cast<size_t>(k - 1)].push_back({m, n});
      }
  // Part 2: p*m*n - m - n = p^3 with both m, n odd; n = (p^3 + m)/(p m - 1).
  for (std::int64_t m = 1; p * m * m - 2 * m <= p * p * p; m += 2) {
    std::int64_t den = p * m - 1;
    std::int64_t num = p * p * p + m;
    if (num % den != 0) continue;
    std::int64_t n = num / den;
    if (n >= m && n % 2 == 1) out.odd_solutions.push_back({m, n});
  }
  return out;
}

SolvableExclusions solvable_exclusions(std::int64_t p) {
  if (p < 5) throw std::invalid_argument("need a prime p >= 5");
  SolvableExclusions out;
  out.p = p;
  std::int64_t p4 = ipow(p, 4);
  out.mm_excluded = (p4 + 4) % 6 != 3;
  // (m-1)(n-1) = p^4 + 1 with m, n odd, coprime, 1 != m < n: walk the
  // divisor pairs a * b = p^4 + 1, a <= b, and keep the offenders.
  std::int64_t target = p4 + 1;
  for (std::int64_t a = 1; a * a <= target; ++a) {
    if (target % a != 0) continue;
    std::int64_t m = a + 1, n = target / a + 1;
    if (m % 2 == 1 && n % 2 == 1 && m != 1 && m < n && std::gcd(m, n) == 1)
      out.odd_coprime_pairs.push_back({m, n});
  }
  out.mjk_excluded = out.odd_coprime_pairs.empty();
  return out;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo < 2 ? 2 : lo; n <= hi; ++n) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace regmap
