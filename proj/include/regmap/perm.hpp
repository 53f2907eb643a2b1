#pragma once

#include <cstdint>
#include <vector>

namespace regmap {

/// A permutation of {0..degree-1}, stored as its image table. Composition is
/// left-to-right: (a * b) maps p to b[a[p]].
struct Perm {
  std::vector<std::int32_t> img;

  Perm() = default;
  explicit Perm(std::vector<std::int32_t> images) : img(std::move(images)) {}

  static Perm identity(std::int64_t degree);
  /// From disjoint-cycle data, e.g. {{0,1,2}} on `degree` points.
  static Perm from_cycles(std::int64_t degree,
                          const std::vector<std::vector<std::int32_t>>& cycles);

  std::int64_t degree() const { return static_cast<std::int64_t>(img.size()); }
  std::int32_t operator[](std::int64_t p) const { return img[static_cast<size_t>(p)]; }
  bool is_identity() const;
  bool is_bijection() const;
  /// Smallest point moved, or -1 for the identity.
  std::int64_t smallest_moved_point() const;

  Perm inverse() const;
  std::uint64_t order() const;  // lcm of cycle lengths

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

Perm conjugate(const Perm& x, const Perm& g);  // g^-1 * x * g

struct PermHash {
  size_t operator()(const Perm& p) const;
};

}  // namespace regmap
