#pragma once

#include <stdexcept>
#include <string>

namespace quatspec {

enum class Errc {
  RealInput,
  NotImaginaryUnit,
  LengthMismatch,
  NotHermitian,
  NotSkewSelfadjoint,
  NotSimpleSpectrum,
  ConstructionFailed,
  DegenerateWeight,
  ParseError,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kDefaultClusterTol = 1e-8;

}  // namespace quatspec
