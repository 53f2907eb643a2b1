#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace regmap {

/// 3x3 matrix over F_p, entries reduced to [0, p).
struct Mat3 {
  int p = 0;
  std::array<std::array<int, 3>, 3> a{};

  static Mat3 identity(int p);
  static Mat3 scalar(int p, int c);
  int& at(int i, int j) { return a[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  int at(int i, int j) const { return a[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

/// A point of PG(2, F_p): (a,b,c) != (0,0,0) with the first nonzero
/// coordinate normalized to 1.
struct ProjPoint {
  int p = 0;
  std::array<int, 3> coords{};

  /// Normalizes an arbitrary nonzero triple; throws on (0,0,0).
  static ProjPoint make(int p, int a, int b, int c);
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint& u, const ProjPoint& v) { return u.coords <=> v.coords; }
};

Mat3 mat_mul(const Mat3& A, const Mat3& B);
Mat3 mat_pow(const Mat3& A, std::int64_t e);  // negative e inverts first
/// Throws std::domain_error when A is singular.
Mat3 mat_inverse(const Mat3& A);

/// All p^2 + p + 1 normalized points, sorted lexicographically.
std::vector<ProjPoint> enumerate_pg2(int p);

/// The projective points fixed by M as column vectors (M v = v), sorted.
/// Empty when 1 is not an eigenvalue.
std::vector<ProjPoint> eigenspace_one(const Mat3& M);

/// Applies M to the point as a column vector; throws if the image is zero
/// (cannot happen for invertible M).
ProjPoint apply_point(const Mat3& M, const ProjPoint& v);

}  // namespace regmap
