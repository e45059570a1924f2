#pragma once

#include <cmath>
#include <vector>

#include "quatspec/generate.hpp"
#include "quatspec/quaternion.hpp"
#include "quatspec/spectral.hpp"

namespace quatspec::test {

/// Product from the multiplication table of the basis {1, i, j, k}, summed over
/// coordinate pairs. Kept independent of operator*.
inline Quaternion table_mul(const Quaternion& p, const Quaternion& q) {
  // basis[a] * basis[b] = sign[a][b] * basis[index[a][b]]
  static constexpr int index[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const auto pc = p.coords();
  const auto qc = q.coords();
  double out[4] = {0, 0, 0, 0};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out[index[a][b]] += sign[a][b] * pc[a] * qc[b];
  return {out[0], out[1], out[2], out[3]};
}

inline double qdist(const Quaternion& p, const Quaternion& q) { return abs(p - q); }

inline double vdist(const QVector& x, const QVector& y) { return norm(x - y); }

inline QMatrix diag(std::initializer_list<Quaternion> d) {
  QMatrix m(d.size());
  std::size_t k = 0;
  for (const auto& q : d) {
    m(k, k) = q;
    ++k;
  }
  return m;
}

inline QMatrix one_by_one(const Quaternion& q) { return diag({q}); }

/// Frames used across the property suites.
inline std::vector<Frame> test_frames(std::uint64_t seed) {
  Rng rng(seed ^ 0x5eedf00dULL);
  const double r = 1.0 / std::sqrt(3.0);
  return {Frame::standard(), Frame::build(Quaternion(0.0, r, r, r)), Frame::build(random_imaginary_unit(rng))};
}

}  // namespace quatspec::test
