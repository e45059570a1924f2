#include "quatspec/generate.hpp"

#include <cmath>
#include <vector>

namespace quatspec {

namespace {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

Quaternion random_quaternion(Rng& rng) {
  return {uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
}

Quaternion random_imaginary_unit(Rng& rng) {
  for (;;) {
    const Quaternion v{0.0, uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
    const double len = abs(v);
    if (len > 0.1 && len <= 1.0) return v / len;
  }
}

QVector random_qvector(std::size_t n, Rng& rng) {
  QVector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = random_quaternion(rng);
  return v;
}

QMatrix random_unitary(std::size_t n, Rng& rng) {
  std::vector<QVector> cols;
  while (cols.size() < n) {
    QVector v = random_qvector(n, rng);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : cols) v -= right_mul(u, inner(v, u));
    const double len = norm(v);
    if (len > 1e-3) cols.push_back((1.0 / len) * v);
  }
  return QMatrix::from_columns(cols);
}

QMatrix random_skew(std::size_t n, Rng& rng) {
  QMatrix b(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) b(r, c) = random_quaternion(rng);
  return 0.5 * (b - adjoint(b));
}

QMatrix synthesize(std::span<const double> t, Rng& rng) {
  const std::size_t n = t.size();
  const QMatrix u = random_unitary(n, rng);
  QMatrix d(n);
  for (std::size_t k = 0; k < n; ++k) d(k, k) = t[k] * random_imaginary_unit(rng);
  QMatrix a = u * d * adjoint(u);
  // Remove the rounding-level Hermitian part.
  return 0.5 * (a - adjoint(a));
}

QMatrix generate(const GenOptions& opts) {
  Rng rng(opts.seed);
  const std::size_t n = opts.n;
  if (opts.simple) {
    std::vector<double> t;
    if (opts.zero_atom) t.push_back(0.0);
    while (t.size() < n) {
      const double c = uniform(rng, 0.5, static_cast<double>(n) + 0.5);
      bool distinct = true;
      for (double s : t) distinct = distinct && std::abs(s - c) > 0.05;
      if (distinct) t.push_back(c);
    }
    return synthesize(t, rng);
  }
  QMatrix a = random_skew(n, rng);
  if (opts.zero_atom) {
    QVector v = random_qvector(n, rng);
    v = (1.0 / norm(v)) * v;
    QMatrix p = QMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) p(r, c) -= v[r] * conj(v[c]);
    a = p * a * p;
    a = 0.5 * (a - adjoint(a));
  }
  return a;
}

}  // namespace quatspec
