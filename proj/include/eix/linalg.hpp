#ifndef EIX_LINALG_HPP
#define EIX_LINALG_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

#include "eix/rational.hpp"

namespace eix {

inline constexpr int kRank = 8;

using Vec8 = std::array<Rat, kRank>;
using Mat8 = std::array<Vec8, kRank>;  // row-major
using IVec8 = std::array<std::int64_t, kRank>;
using IMat8 = std::array<IVec8, kRank>;

inline Vec8 vec_zero() {
  Vec8 v;
  v.fill(Rat(0));
  return v;
}

inline Vec8 vec_add(const Vec8& a, const Vec8& b) {
  Vec8 r;
  for (int i = 0; i < kRank; ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec8 vec_sub(const Vec8& a, const Vec8& b) {
  Vec8 r;
  for (int i = 0; i < kRank; ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec8 vec_scale(const Rat& c, const Vec8& a) {
  Vec8 r;
  for (int i = 0; i < kRank; ++i) r[i] = c * a[i];
  return r;
}

inline Rat dot(const Vec8& a, const Vec8& b) {
  Rat s(0);
  for (int i = 0; i < kRank; ++i) s += a[i] * b[i];
  return s;
}

inline Vec8 mat_vec(const Mat8& m, const Vec8& v) {
  Vec8 r = vec_zero();
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline Mat8 mat_mul(const Mat8& a, const Mat8& b) {
  Mat8 r;
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) {
      Rat s(0);
      for (int k = 0; k < kRank; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

inline Mat8 mat_identity() {
  Mat8 m;
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) m[i][j] = Rat(i == j ? 1 : 0);
  return m;
}

inline Mat8 mat_transpose(const Mat8& a) {
  Mat8 r;
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) r[i][j] = a[j][i];
  return r;
}

/// Exact inverse by Gauss-Jordan with partial (nonzero) pivoting.
/// Throws std::domain_error on a singular matrix.
inline Mat8 mat_inverse(const Mat8& a) {
  Mat8 m = a;
  Mat8 inv = mat_identity();
  for (int col = 0; col < kRank; ++col) {
    int piv = -1;
    for (int r = col; r < kRank; ++r) {
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw std::domain_error("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rat d = m[col][col];
    for (int j = 0; j < kRank; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < kRank; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rat f = m[r][col];
      for (int j = 0; j < kRank; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline bool vec_eq(const Vec8& a, const Vec8& b) {
  for (int i = 0; i < kRank; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline bool mat_eq(const Mat8& a, const Mat8& b) {
  for (int i = 0; i < kRank; ++i)
    if (!vec_eq(a[i], b[i])) return false;
  return true;
}

/// Strict total order for use as a map/set key.
inline bool vec_less(const Vec8& a, const Vec8& b) {
  for (int i = 0; i < kRank; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

inline bool mat_less(const Mat8& a, const Mat8& b) {
  for (int i = 0; i < kRank; ++i) {
    if (vec_less(a[i], b[i])) return true;
    if (vec_less(b[i], a[i])) return false;
  }
  return false;
}

inline Vec8 vec_from_i64(const IVec8& v) {
  Vec8 r;
  for (int i = 0; i < kRank; ++i) r[i] = Rat(static_cast<long>(v[i]));
  return r;
}

inline std::int64_t idot(const IVec8& a, const IVec8& b) {
  std::int64_t s = 0;
  for (int i = 0; i < kRank; ++i) s += a[i] * b[i];
  return s;
}

inline IVec8 imat_vec(const IMat8& m, const IVec8& v) {
  IVec8 r{};
  for (int i = 0; i < kRank; ++i) r[i] = idot(m[i], v);
  return r;
}

}  // namespace eix

#endif
