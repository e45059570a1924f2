#include "quatspec/hmodule.hpp"

#include <algorithm>
#include <cmath>

namespace quatspec {

namespace {

void require_same_size(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::LengthMismatch, "vectors of length " + std::to_string(a.size()) + " and " +
                                          std::to_string(b.size()));
  }
}

// x - sum_b b <x, b>_F over an orthonormal basis.
void subtract_projection(QVector& x, const std::vector<QVector>& basis, const Frame& fr) {
  for (const auto& b : basis) {
    x -= right_mul(b, fr.to_quat(f_inner(x, b, fr)));
  }
}

}  // namespace

QVector QVector::basis(std::size_t n, std::size_t l) {
  QVector e(n);
  e[l] = Quaternion::one();
  return e;
}

QVector& QVector::operator+=(const QVector& o) {
  require_same_size(*this, o);
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o[k];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  require_same_size(*this, o);
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o[k];
  return *this;
}

QVector operator+(QVector a, const QVector& b) { return a += b; }
QVector operator-(QVector a, const QVector& b) { return a -= b; }
QVector operator-(QVector a) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = -a[k];
  return a;
}
QVector operator*(double s, QVector a) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] *= s;
  return a;
}

QVector right_mul(const QVector& x, const Quaternion& q) {
  QVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] * q;
  return out;
}

Quaternion inner(const QVector& x, const QVector& y) {
  require_same_size(x, y);
  Quaternion acc;
  for (std::size_t k = 0; k < x.size(); ++k) acc += conj(y[k]) * x[k];
  return acc;
}

double norm(const QVector& x) {
  double acc = 0.0;
  for (const auto& q : x) acc += norm2(q);
  return std::sqrt(acc);
}

bool is_finite(const QVector& x) {
  return std::all_of(x.begin(), x.end(), [](const Quaternion& q) { return q.is_finite(); });
}

FScalar f_part(const Quaternion& q, const Frame& fr) { return symplectic_split(q, fr).u1; }

FScalar f_inner(const QVector& x, const QVector& y, const Frame& fr) {
  return f_part(inner(x, y), fr);
}

std::vector<FScalar> to_symplectic(const QVector& x, const Frame& fr) {
  const std::size_t n = x.size();
  std::vector<FScalar> ab(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    // x = u1 + u2 phi = u1 + phi conj(u2)
    const auto [u1, u2] = symplectic_split(x[k], fr);
    ab[k] = u1;
    ab[n + k] = std::conj(u2);
  }
  return ab;
}

QVector from_symplectic(std::span<const FScalar> ab, const Frame& fr) {
  const std::size_t n = ab.size() / 2;
  QVector x(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = recompose({ab[k], std::conj(ab[n + k])}, fr);
  }
  return x;
}

FSubspace f_orthonormalize(std::span<const QVector> vectors, const Frame& fr, double tol) {
  if (vectors.empty()) return FSubspace(fr, 0);
  const std::size_t n = vectors.front().size();
  double scale = 1.0;
  for (const auto& v : vectors) {
    if (v.size() != n) throw Error(Errc::LengthMismatch, "f_orthonormalize: ragged input");
    scale = std::max(scale, norm(v));
  }
  std::vector<QVector> basis;
  for (const auto& v : vectors) {
    QVector r = v;
    subtract_projection(r, basis, fr);
    subtract_projection(r, basis, fr);
    const double len = norm(r);
    if (len > tol * scale) basis.push_back((1.0 / len) * r);
  }
  return FSubspace(fr, n, std::move(basis));
}

QVector f_project(const QVector& x, const FSubspace& s) {
  if (x.size() != s.ambient_size()) {
    throw Error(Errc::LengthMismatch, "f_project: vector does not match subspace");
  }
  QVector p(x.size());
  for (const auto& b : s.basis()) {
    p += right_mul(b, s.frame().to_quat(f_inner(x, b, s.frame())));
  }
  return p;
}

std::size_t f_rank(std::span<const QVector> vectors, const Frame& fr, double tol) {
  return f_orthonormalize(vectors, fr, tol).dim();
}

std::size_t h_rank(std::span<const QVector> vectors, const Frame& fr, double tol) {
  std::vector<QVector> doubled;
  doubled.reserve(2 * vectors.size());
  for (const auto& v : vectors) {
    doubled.push_back(v);
    doubled.push_back(right_mul(v, fr.phi()));
  }
  return f_rank(doubled, fr, tol) / 2;
}

FSubspace f_sum(const FSubspace& a, const FSubspace& b, double tol) {
  std::vector<QVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  if (all.empty()) return FSubspace(a.frame(), a.ambient_size());
  return f_orthonormalize(all, a.frame(), tol);
}

FSubspace right_mul(const FSubspace& s, const Quaternion& q, double tol) {
  std::vector<QVector> images;
  for (const auto& b : s.basis()) images.push_back(right_mul(b, q));
  if (images.empty()) return FSubspace(s.frame(), s.ambient_size());
  return f_orthonormalize(images, s.frame(), tol);
}

bool contains(const FSubspace& s, const QVector& x, double tol) {
  return norm(x - f_project(x, s)) <= tol * std::max(1.0, norm(x));
}

bool is_subspace_of(const FSubspace& a, const FSubspace& b, double tol) {
  return std::all_of(a.basis().begin(), a.basis().end(),
                     [&](const QVector& v) { return contains(b, v, tol); });
}

bool same_subspace(const FSubspace& a, const FSubspace& b, double tol) {
  return a.dim() == b.dim() && is_subspace_of(a, b, tol) && is_subspace_of(b, a, tol);
}

double max_cross_f_inner(const FSubspace& a, const FSubspace& b) {
  double worst = 0.0;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) worst = std::max(worst, std::abs(f_inner(x, y, a.frame())));
  }
  return worst;
}

}  // namespace quatspec
