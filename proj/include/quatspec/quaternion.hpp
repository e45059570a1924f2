#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>

namespace quatspec {

/// Real quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double real() const { return w; }
  /// Vector (imaginary) part.
  constexpr Quaternion vec() const { return {0.0, x, y, z}; }

  std::array<double, 4> coords() const { return {w, x, y, z}; }
  bool is_finite() const {
    return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }

  Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) {
  return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) {
  return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
}
constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
constexpr Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.w, s * q.x, s * q.y, s * q.z};
}
constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }
constexpr Quaternion operator/(const Quaternion& q, double s) {
  return {q.w / s, q.x / s, q.y / s, q.z / s};
}

/// Hamilton product; ij = k, jk = i, ki = j.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double norm2(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}
inline double abs(const Quaternion& q) { return std::sqrt(norm2(q)); }

/// Euclidean scalar product on H viewed as R^4.
constexpr double dot(const Quaternion& p, const Quaternion& q) {
  return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

/// Cross product of vector parts (real part of the result is zero).
constexpr Quaternion cross(const Quaternion& p, const Quaternion& q) {
  return {0.0, p.y * q.z - p.z * q.y, p.z * q.x - p.x * q.z, p.x * q.y - p.y * q.x};
}

inline Quaternion inverse(const Quaternion& q) { return conj(q) / norm2(q); }

/// |p - q| <= tol * max(1, |p|, |q|)
bool approx_equal(const Quaternion& p, const Quaternion& q, double tol = 1e-9);

/// Normalized vector part of a nonreal quaternion. Throws Errc::RealInput.
Quaternion make_imaginary_unit(const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Element a + b f of the subfield F generated by a frame's f.
/// Stored as a complex number whose imaginary unit plays the role of f.
using FScalar = std::complex<double>;

/// Orthonormal real basis {1, f, phi, f*phi} of H.
class Frame {
 public:
  /// Builds the frame for an imaginary unit f. phi is the first of i, j, k
  /// (ties resolved in that order) whose component orthogonal to span{1, f}
  /// is largest, normalized. Throws Errc::NotImaginaryUnit.
  static Frame build(const Quaternion& f);
  /// f = i, phi = j, f*phi = k.
  static Frame standard() { return build(Quaternion::i()); }

  const Quaternion& f() const { return f_; }
  const Quaternion& phi() const { return phi_; }
  const Quaternion& fphi() const { return fphi_; }

  /// a + b f as a quaternion.
  Quaternion to_quat(const FScalar& u) const { return u.real() * Quaternion::one() + u.imag() * f_; }

 private:
  Frame(Quaternion f, Quaternion phi) : f_(f), phi_(phi), fphi_(f * phi) {}

  Quaternion f_;
  Quaternion phi_;
  Quaternion fphi_;
};

struct SymplecticPair {
  FScalar u1;
  FScalar u2;
};

/// q = u1 + u2 phi with u1, u2 in F.
SymplecticPair symplectic_split(const Quaternion& q, const Frame& fr);
Quaternion recompose(const SymplecticPair& p, const Frame& fr);

}  // namespace quatspec
