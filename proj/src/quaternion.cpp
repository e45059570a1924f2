#include "quatspec/quaternion.hpp"

#include <algorithm>
#include <ostream>

#include "quatspec/error.hpp"

namespace quatspec {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::RealInput: return "RealInput";
    case Errc::NotImaginaryUnit: return "NotImaginaryUnit";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotSkewSelfadjoint: return "NotSkewSelfadjoint";
    case Errc::NotSimpleSpectrum: return "NotSimpleSpectrum";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::DegenerateWeight: return "DegenerateWeight";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool approx_equal(const Quaternion& p, const Quaternion& q, double tol) {
  const double scale = std::max({1.0, abs(p), abs(q)});
  return abs(p - q) <= tol * scale;
}

Quaternion make_imaginary_unit(const Quaternion& q) {
  const Quaternion v = q.vec();
  const double len = abs(v);
  // Relative to |q| so that 1 + 1e-300 i is still treated as real.
  if (!(len > 1e-14 * std::max(1.0, std::abs(q.w)))) {
    throw Error(Errc::RealInput, "quaternion has no vector part");
  }
  return v / len;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

Frame Frame::build(const Quaternion& f) {
  if (!f.is_finite() || std::abs(f.w) > 1e-12 || std::abs(abs(f) - 1.0) > 1e-12) {
    throw Error(Errc::NotImaginaryUnit, "frame requires |f| = 1 and Re f = 0");
  }
  const Quaternion candidates[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  Quaternion best;
  double best_len = -1.0;
  for (const auto& c : candidates) {
    const Quaternion residual = c - dot(c, f) * f;
    const double len = abs(residual);
    // Strictly larger (beyond rounding) wins; otherwise the earlier candidate stays.
    if (len > best_len + 1e-12) {
      best_len = len;
      best = residual;
    }
  }
  return Frame(f, best / best_len);
}

SymplecticPair symplectic_split(const Quaternion& q, const Frame& fr) {
  return {FScalar(q.w, dot(q, fr.f())), FScalar(dot(q, fr.phi()), dot(q, fr.fphi()))};
}

Quaternion recompose(const SymplecticPair& p, const Frame& fr) {
  return fr.to_quat(p.u1) + fr.to_quat(p.u2) * fr.phi();
}

}  // namespace quatspec
