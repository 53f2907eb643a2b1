#include "regmap/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace regmap {

Perm Perm::identity(std::int64_t degree) {
  Perm p;
  p.img.resize(static_cast<size_t>(degree));
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Perm Perm::from_cycles(std::int64_t degree,
                       const std::vector<std::vector<std::int32_t>>& cycles) {
  Perm p = identity(degree);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i)
      p.img[static_cast<size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
  }
  if (!p.is_bijection()) throw std::invalid_argument("cycles are not disjoint");
  return p;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != static_cast<std::int32_t>(i)) return false;
  return true;
}

bool Perm::is_bijection() const {
  std::vector<bool> seen(img.size(), false);
  for (auto v : img) {
    if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

std::int64_t Perm::smallest_moved_point() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != static_cast<std::int32_t>(i)) return static_cast<std::int64_t>(i);
  return -1;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) r.img[static_cast<size_t>(img[i])] = static_cast<std::int32_t>(i);
  return r;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(img.size(), false);
  std::uint64_t ord = 1;
  for (size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<size_t>(img[j]);
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm operator*(const Perm& a, const Perm& b) {
  Perm r;
  r.img.resize(a.img.size());
  for (size_t i = 0; i < a.img.size(); ++i) r.img[i] = b.img[static_cast<size_t>(a.img[i])];
  return r;
}

Perm conjugate(const Perm& x, const Perm& g) { return g.inverse() * x * g; }

size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image bytes.
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p.img) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

}  // namespace regmap
