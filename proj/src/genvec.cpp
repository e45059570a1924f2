#include "quatspec/genvec.hpp"

#include <algorithm>

namespace quatspec {

bool has_simple_spectrum(const SpectralData& sd) {
  if (sd.atoms.size() != sd.n) return false;
  return std::all_of(sd.atoms.begin(), sd.atoms.end(), [](const SpectralAtom& atom) {
    // A nonzero atom needs one eigenvector at +t and one at -t.
    if (atom.t == 0.0) return atom.pos_basis.size() == 2 && atom.neg_basis.empty();
    return atom.pos_basis.size() == 1 && atom.neg_basis.size() == 1;
  });
}

FSubspace cyclic_span(const SpectralData& sd, const QVector& g, Field over, double tol) {
  std::vector<QVector> images;
  for (const auto& atom : sd.atoms) {
    if (over == Field::H) {
      const QVector eg = atom.e.apply(g);
      images.push_back(eg);
      images.push_back(right_mul(eg, sd.frame.phi()));
    } else {
      images.push_back(apply_f(atom.ef_pos, g, sd.frame));
    }
  }
  if (images.empty()) return FSubspace(sd.frame, sd.n);
  return f_orthonormalize(images, sd.frame, tol);
}

FSubspace cyclic_span_measure_f(const SpectralData& sd, const QVector& g, double tol) {
  std::vector<QVector> images;
  for (const auto& atom : sd.atoms) images.push_back(atom.e.apply(g));
  if (images.empty()) return FSubspace(sd.frame, sd.n);
  return f_orthonormalize(images, sd.frame, tol);
}

std::size_t cyclic_rank(const SpectralData& sd, const QVector& g, Field over, double tol) {
  const std::size_t d = cyclic_span(sd, g, over, tol).dim();
  return over == Field::H ? d / 2 : d;
}

bool is_generating(const SpectralData& sd, const QVector& g, double tol) {
  return cyclic_rank(sd, g, Field::H, tol) == sd.n;
}

QVector initial_generator(const SpectralData& sd, double tol) {
  QVector y(sd.n);
  for (const auto& atom : sd.atoms) {
    for (std::size_t l = 0; l < sd.n; ++l) {
      const QVector col = atom.e.column(l);
      const double len = norm(col);
      if (len > tol) {
        y += (1.0 / len) * col;
        break;
      }
    }
  }
  return y;
}

GeneratingVector special_generating_vector(const SpectralData& sd, double tol) {
  if (!has_simple_spectrum(sd)) {
    throw Error(Errc::NotSimpleSpectrum, "some spectral atom has H-multiplicity above one");
  }
  const Frame& fr = sd.frame;
  const QVector y = initial_generator(sd, tol);
  if (!is_generating(sd, y, tol)) {
    throw Error(Errc::ConstructionFailed, "initial generator does not generate H^n");
  }

  // y = y+ + x+ phi with y+ = E_F(f+) y and x+ = E_F(f-) y phi^{-1}.
  const QVector y_plus = sd.apply_ef_plus(y);
  const QVector x_plus = right_mul(sd.apply_ef_minus(y), -fr.phi());

  const FSubspace span_y = cyclic_span(sd, y_plus, Field::F, tol);
  const QVector v_plus = x_plus - f_project(x_plus, span_y);
  const QVector g = y_plus + v_plus;

  GeneratingVector out{g, {}};
  const double gnorm = norm(g);
  out.certificate.j_residual =
      gnorm > 0.0 ? norm(sd.apply_j(g) - right_mul(g, fr.f())) / gnorm : 0.0;
  out.certificate.h_rank = cyclic_rank(sd, g, Field::H, tol);
  for (const auto& atom : sd.atoms) out.certificate.weights.push_back(inner(atom.e.apply(g), g).w);

  const bool weights_ok = std::all_of(out.certificate.weights.begin(), out.certificate.weights.end(),
                                      [&](double w) { return w > tol; });
  if (out.certificate.j_residual > tol || out.certificate.h_rank != sd.n || !weights_ok) {
    throw Error(Errc::ConstructionFailed, "special generating vector certificate failed");
  }
  return out;
}

}  // namespace quatspec
