#pragma once

#include <cstddef>
#include <vector>

#include "quatspec/hmodule.hpp"
#include "quatspec/spectral.hpp"

namespace quatspec {

enum class Field { H, F };

/// Every atom carries an H-line and there are exactly n atoms. At finite
/// dimension this is equivalent to the existence of a cyclic vector for the
/// interval measure.
bool has_simple_spectrum(const SpectralData& sd);

/// Cyclic subspaces as F-subspaces of H^n.
///   Field::H : Lin_H{E_k g}, returned through its F-basis
///   Field::F : Lin_F{E_F(D) g : D an interval of f+}, spanned by ef_pos(k) g
/// The F-span of {E_k g} (operators from the H-linear family) is
/// cyclic_span_measure_f.
FSubspace cyclic_span(const SpectralData& sd, const QVector& g, Field over, double tol = kDefaultTol);
FSubspace cyclic_span_measure_f(const SpectralData& sd, const QVector& g, double tol = kDefaultTol);

/// H-rank of Lin_H{E_k g} for Field::H, F-dimension of the F-cyclic span for Field::F.
std::size_t cyclic_rank(const SpectralData& sd, const QVector& g, Field over,
                        double tol = kDefaultTol);

bool is_generating(const SpectralData& sd, const QVector& g, double tol = kDefaultTol);

struct GeneratingCertificate {
  double j_residual = 0.0;  ///< ||J g - g f|| / ||g||
  std::size_t h_rank = 0;   ///< H-rank of {E_k g}
  std::vector<double> weights;  ///< Re <E_k g, g>
};

struct GeneratingVector {
  QVector g;
  GeneratingCertificate certificate;
};

/// The deterministic initial generator: for each atom the first E_k e_l with
/// norm above tol, normalized, summed over atoms.
QVector initial_generator(const SpectralData& sd, double tol = kDefaultTol);

/// Generating vector with J g = g f. Starting from a generator y = y+ + x+ phi
/// (y+, x+ in H+), removes from x+ its F-projection onto C_F(E_F, y+) and
/// returns g = y+ + v+.
///
/// Throws Errc::NotSimpleSpectrum, or Errc::ConstructionFailed when the
/// certificate does not hold to tol.
GeneratingVector special_generating_vector(const SpectralData& sd, double tol = kDefaultTol);

}  // namespace quatspec
