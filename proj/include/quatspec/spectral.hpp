#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "quatspec/error.hpp"
#include "quatspec/hmodule.hpp"
#include "quatspec/quaternion.hpp"

namespace quatspec {

/// Square quaternion matrix acting on column vectors from the left, hence a
/// right-H-linear operator on H^n.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static QMatrix identity(std::size_t n);
  /// Matrix whose l-th column is columns[l].
  static QMatrix from_columns(const std::vector<QVector>& columns);

  std::size_t size() const { return n_; }
  Quaternion& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  const std::vector<Quaternion>& entries() const { return a_; }

  QVector apply(const QVector& x) const;
  QVector column(std::size_t c) const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Quaternion> a_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(double s, QMatrix a);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
inline QVector operator*(const QMatrix& a, const QVector& x) { return a.apply(x); }

/// Frobenius norm over R^{4 n^2}.
double frobenius(const QMatrix& a);
QMatrix adjoint(const QMatrix& a);
/// ||A + A*|| / max(1, ||A||).
double skew_residual(const QMatrix& a);
bool is_skew_selfadjoint(const QMatrix& a, double tol = kDefaultTol);

/// Dense complex matrix over F (imaginary unit = f of the associated frame).
class FMatrix {
 public:
  FMatrix() = default;
  explicit FMatrix(std::size_t m) : m_(m), a_(m * m) {}

  static FMatrix identity(std::size_t m);

  std::size_t size() const { return m_; }
  FScalar& operator()(std::size_t r, std::size_t c) { return a_[r * m_ + c]; }
  const FScalar& operator()(std::size_t r, std::size_t c) const { return a_[r * m_ + c]; }

  std::vector<FScalar> apply(std::span<const FScalar> x) const;

  FMatrix& operator+=(const FMatrix& o);
  FMatrix& operator-=(const FMatrix& o);

 private:
  std::size_t m_ = 0;
  std::vector<FScalar> a_;
};

FMatrix operator+(FMatrix a, const FMatrix& b);
FMatrix operator-(FMatrix a, const FMatrix& b);
FMatrix operator*(FScalar s, FMatrix a);
FMatrix operator*(const FMatrix& a, const FMatrix& b);
double frobenius(const FMatrix& a);
FMatrix adjoint(const FMatrix& a);

/// 2n x 2n block form [[P, -conj(Q)], [Q, conj(P)]] of A = P + phi Q acting on
/// symplectic coordinates (a, b) of x = a + phi b.
FMatrix embed(const QMatrix& a, const Frame& fr);
QMatrix unembed(const FMatrix& m, const Frame& fr);

/// Applies an F-linear map given on symplectic coordinates to a vector of H^n.
QVector apply_f(const FMatrix& m, const QVector& x, const Frame& fr);

using RealLinearMap = std::function<QVector(const QVector&)>;
/// Frobenius norm of a real-linear map on H^n, evaluated on the 4n real basis
/// vectors e_l u, u in {1, i, j, k}.
double real_map_norm(const RealLinearMap& op, std::size_t n);

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  FMatrix vectors;             ///< orthonormal columns, in the order of values
  int sweeps = 0;
};

/// Cyclic Jacobi for a Hermitian matrix over F. Throws Errc::NotHermitian when
/// ||M - M*|| > tol * max(1, ||M||).
HermitianEigen hermitian_eigen(const FMatrix& m, double tol = kDefaultTol);

/// One point t f of the half-axis f+ carrying spectral mass.
///
/// For t > 0, ef_pos and ef_neg are the F-linear spectral projections at +t f
/// and -t f. For the zero atom, ef_pos holds E_F({0}) and ef_neg is zero:
/// the origin belongs to f+.
struct SpectralAtom {
  double t = 0.0;
  FMatrix ef_pos;
  FMatrix ef_neg;
  std::vector<QVector> pos_basis;  ///< F-orthonormal eigenvectors spanning ef_pos
  std::vector<QVector> neg_basis;
  QMatrix e;  ///< E({t f}) = ef_pos + ef_neg read as an H-linear matrix

  std::size_t f_rank() const { return pos_basis.size() + neg_basis.size(); }
  std::size_t h_rank() const { return f_rank() / 2; }
};

struct SpectralData {
  Frame frame = Frame::standard();
  std::size_t n = 0;
  double scale = 1.0;  ///< max(1, ||A||)
  std::vector<SpectralAtom> atoms;  ///< ascending t
  std::vector<double> eigenvalues;  ///< spectrum of (-f) embed(A), ascending
  FMatrix ef_plus;   ///< E_F(f+), including the zero atom
  FMatrix ef_minus;  ///< E_F(f-)
  FMatrix j;         ///< J on symplectic coordinates: f (E_F(f+) - E_F(f-))

  QVector apply_j(const QVector& x) const { return apply_f(j, x, frame); }
  QVector apply_ef_plus(const QVector& x) const { return apply_f(ef_plus, x, frame); }
  QVector apply_ef_minus(const QVector& x) const { return apply_f(ef_minus, x, frame); }
  /// E_F({0}); zero when A is invertible.
  FMatrix ef_zero() const;
  bool has_zero_atom() const { return !atoms.empty() && atoms.front().t == 0.0; }
  /// F-orthonormal basis of H+ = E_F(f+) H.
  std::vector<QVector> h_plus_basis() const;
};

/// Spectral pair (E, J) of a skew-selfadjoint A relative to the frame.
/// Throws Errc::NotSkewSelfadjoint.
SpectralData spectral_data(const QMatrix& a, const Frame& fr, double cluster_tol = kDefaultClusterTol,
                           double tol = kDefaultTol);

/// sum_k t_k J E_k.
QMatrix reconstruct(const SpectralData& sd);

}  // namespace quatspec
