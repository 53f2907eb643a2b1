#include "regmap/fpmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace regmap {

namespace {

int norm_mod(long long v, int p) {
  int r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

int mod_pow(long long base, long long e, int p) {
  long long r = 1;
  base %= p;
  if (base < 0) base += p;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

// p is prime throughout, so Fermat inversion applies.
int mod_inv(int v, int p) {
  if (v % p == 0) throw std::domain_error("division by zero mod p");
  return mod_pow(v, p - 2, p);
}

void check_same_modulus(int pa, int pb) {
  if (pa != pb) throw std::invalid_argument("modulus mismatch");
}

}  // namespace

Mat3 Mat3::identity(int p) { return scalar(p, 1); }

Mat3 Mat3::scalar(int p, int c) {
  Mat3 m;
  m.p = p;
  for (int i = 0; i < 3; ++i) m.at(i, i) = norm_mod(c, p);
  return m;
}

ProjPoint ProjPoint::make(int p, int a, int b, int c) {
  std::array<int, 3> v{norm_mod(a, p), norm_mod(b, p), norm_mod(c, p)};
  int lead = -1;
  for (int i = 0; i < 3 && lead < 0; ++i)
    if (v[static_cast<size_t>(i)] != 0) lead = i;
  if (lead < 0) throw std::invalid_argument("projective point cannot be (0,0,0)");
  int s = mod_inv(v[static_cast<size_t>(lead)], p);
  for (auto& e : v) e = norm_mod(static_cast<long long>(e) * s, p);
  ProjPoint out;
  out.p = p;
  out.coords = v;
  return out;
}

Mat3 mat_mul(const Mat3& A, const Mat3& B) {
  check_same_modulus(A.p, B.p);
  Mat3 C;
  C.p = A.p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long long s = 0;
      for (int k = 0; k < 3; ++k) s += static_cast<long long>(A.at(i, k)) * B.at(k, j);
      C.at(i, j) = norm_mod(s, A.p);
    }
  return C;
}

Mat3 mat_pow(const Mat3& A, std::int64_t e) {
  Mat3 base = e < 0 ? mat_inverse(A) : A;
  std::int64_t n = e < 0 ? -e : e;
  Mat3 r = Mat3::identity(A.p);
  while (n > 0) {
    if (n & 1) r = mat_mul(r, base);
    base = mat_mul(base, base);
    n >>= 1;
  }
  return r;
}

Mat3 mat_inverse(const Mat3& A) {
  const int p = A.p;
  auto minor2 = [&](int i0, int i1, int j0, int j1) {
    return norm_mod(static_cast<long long>(A.at(i0, j0)) * A.at(i1, j1) -
                        static_cast<long long>(A.at(i0, j1)) * A.at(i1, j0),
                    p);
  };
  long long det = static_cast<long long>(A.at(0, 0)) * minor2(1, 2, 1, 2) -
                  static_cast<long long>(A.at(0, 1)) * minor2(1, 2, 0, 2) +
                  static_cast<long long>(A.at(0, 2)) * minor2(1, 2, 0, 1);
  int d = norm_mod(det, p);
  if (d == 0) throw std::domain_error("singular matrix mod p");
  int dinv = mod_inv(d, p);
  // Adjugate: entry (i,j) is the (j,i) cofactor.
  Mat3 R;
  R.p = p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      long long cof = static_cast<long long>(A.at(r0, c0)) * A.at(r1, c1) -
                      static_cast<long long>(A.at(r0, c1)) * A.at(r1, c0);
      R.at(i, j) = norm_mod(cof * dinv, p);
    }
  return R;
}

std::vector<ProjPoint> enumerate_pg2(int p) {
  // Normalized representatives by leading coordinate: (1,b,c), (0,1,c), (0,0,1).
  std::vector<ProjPoint> out;
  out.reserve(static_cast<size_t>(p) * p + p + 1);
  ProjPoint pt;
  pt.p = p;
  pt.coords = {0, 0, 1};
  out.push_back(pt);
  for (int c = 0; c < p; ++c) {
    pt.coords = {0, 1, c};
    out.push_back(pt);
  }
  for (int b = 0; b < p; ++b)
    for (int c = 0; c < p; ++c) {
      pt.coords = {1, b, c};
      out.push_back(pt);
    }
  std::sort(out.begin(), out.end());
  return out;
}

ProjPoint apply_point(const Mat3& M, const ProjPoint& v) {
  check_same_modulus(M.p, v.p);
  long long w[3];
  for (int i = 0; i < 3; ++i) {
    w[i] = 0;
    for (int k = 0; k < 3; ++k) w[i] += static_cast<long long>(M.at(i, k)) * v.coords[static_cast<size_t>(k)];
  }
  return ProjPoint::make(M.p, norm_mod(w[0], M.p), norm_mod(w[1], M.p), norm_mod(w[2], M.p));
}

std::vector<ProjPoint> eigenspace_one(const Mat3& M) {
  // PG(2,p) is tiny (at most 183 points here), so the kernel of M - I is
  // found by direct application rather than row reduction. The comparison is
  // on raw coordinates: M v = v exactly, eigenvalue 1 and not just any scalar.
  std::vector<ProjPoint> out;
  for (const auto& v : enumerate_pg2(M.p)) {
    bool fixed = true;
    for (int i = 0; i < 3 && fixed; ++i) {
      long long s = 0;
      for (int k = 0; k < 3; ++k)
        s += static_cast<long long>(M.at(i, k)) * v.coords[static_cast<size_t>(k)];
      fixed = norm_mod(s, M.p) == v.coords[static_cast<size_t>(i)];
    }
    if (fixed) out.push_back(v);
  }
  return out;
}

}  // namespace regmap
