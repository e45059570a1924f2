#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "quatspec/spectral.hpp"

namespace quatspec {

using Rng = std::mt19937_64;

Quaternion random_quaternion(Rng& rng);
Quaternion random_imaginary_unit(Rng& rng);
QVector random_qvector(std::size_t n, Rng& rng);
/// H-unitary matrix from Gram-Schmidt over H on random columns.
QMatrix random_unitary(std::size_t n, Rng& rng);

/// (B - B*) / 2 with coordinates of B uniform in [-1, 1].
QMatrix random_skew(std::size_t n, Rng& rng);

/// U diag(t_k w_k) U* for a random unitary U and random imaginary units w_k.
/// Each t_k becomes an atom; repeated t_k give multiplicity.
QMatrix synthesize(std::span<const double> t, Rng& rng);

struct GenOptions {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  bool simple = false;
  bool zero_atom = false;
};

/// Deterministic per options. `simple` draws distinct t_k from [0.5, n + 0.5]
/// (t_1 = 0 with `zero_atom`); otherwise a random skew matrix, deflated onto the
/// complement of a random vector when `zero_atom` is set.
QMatrix generate(const GenOptions& opts);

}  // namespace quatspec
