#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quatspec/error.hpp"
#include "quatspec/quaternion.hpp"

namespace quatspec {

/// Element of the right quaternion module H^n.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n) : v_(n) {}
  explicit QVector(std::vector<Quaternion> entries) : v_(std::move(entries)) {}
  QVector(std::initializer_list<Quaternion> entries) : v_(entries) {}

  /// l-th standard basis vector of H^n.
  static QVector basis(std::size_t n, std::size_t l);

  std::size_t size() const { return v_.size(); }
  Quaternion& operator[](std::size_t k) { return v_[k]; }
  const Quaternion& operator[](std::size_t k) const { return v_[k]; }
  const std::vector<Quaternion>& entries() const { return v_; }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);

  friend bool operator==(const QVector&, const QVector&) = default;

 private:
  std::vector<Quaternion> v_;
};

QVector operator+(QVector a, const QVector& b);
QVector operator-(QVector a, const QVector& b);
QVector operator-(QVector a);
QVector operator*(double s, QVector a);

/// Right multiplication R_q x = x q, entrywise.
QVector right_mul(const QVector& x, const Quaternion& q);
inline QVector operator*(const QVector& x, const Quaternion& q) { return right_mul(x, q); }

/// <x, y> = sum_k conj(y_k) x_k, so that <x q, y> = <x, y> q.
Quaternion inner(const QVector& x, const QVector& y);
double norm(const QVector& x);
bool is_finite(const QVector& x);

/// F-component u1 of q = u1 + u2 phi.
FScalar f_part(const Quaternion& q, const Frame& fr);
/// F-Hermitian form f_part(<x, y>); F-linear in x on the right.
FScalar f_inner(const QVector& x, const QVector& y, const Frame& fr);

/// Symplectic coordinates x = a + phi b (a, b in F^n), packed as (a_1..a_n, b_1..b_n).
/// Right multiplication by an F-scalar acts coordinatewise.
std::vector<FScalar> to_symplectic(const QVector& x, const Frame& fr);
QVector from_symplectic(std::span<const FScalar> ab, const Frame& fr);

/// A finite-dimensional F-subspace of H^n held by an F-orthonormal basis.
/// Closures are trivial at finite dimension.
class FSubspace {
 public:
  FSubspace(Frame fr, std::size_t n) : frame_(fr), n_(n) {}
  FSubspace(Frame fr, std::size_t n, std::vector<QVector> basis)
      : frame_(fr), n_(n), basis_(std::move(basis)) {}

  const Frame& frame() const { return frame_; }
  std::size_t ambient_size() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }

 private:
  Frame frame_;
  std::size_t n_;
  std::vector<QVector> basis_;
};

/// Modified Gram-Schmidt over F (two passes). Vectors whose residual falls to
/// tol * max(1, largest input norm) or below are dropped.
FSubspace f_orthonormalize(std::span<const QVector> vectors, const Frame& fr,
                           double tol = kDefaultTol);

/// F-orthogonal projection onto S.
QVector f_project(const QVector& x, const FSubspace& s);

std::size_t f_rank(std::span<const QVector> vectors, const Frame& fr, double tol = kDefaultTol);
/// Quaternionic rank: half the F-rank of {v, v phi}.
std::size_t h_rank(std::span<const QVector> vectors, const Frame& fr, double tol = kDefaultTol);

/// S1 + S2 as an F-subspace.
FSubspace f_sum(const FSubspace& a, const FSubspace& b, double tol = kDefaultTol);
/// R_q S; an F-subspace whenever q lies in F or F phi.
FSubspace right_mul(const FSubspace& s, const Quaternion& q, double tol = kDefaultTol);

bool contains(const FSubspace& s, const QVector& x, double tol = kDefaultTol);
bool is_subspace_of(const FSubspace& a, const FSubspace& b, double tol = kDefaultTol);
bool same_subspace(const FSubspace& a, const FSubspace& b, double tol = kDefaultTol);
/// Largest |<a_i, b_j>_F| over the two bases.
double max_cross_f_inner(const FSubspace& a, const FSubspace& b);

}  // namespace quatspec
