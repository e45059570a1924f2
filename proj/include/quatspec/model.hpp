#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quatspec/genvec.hpp"
#include "quatspec/spectral.hpp"

namespace quatspec {

/// Atomic measure on f+: mass weights[k] at the point atoms[k] f.
struct DiscreteMeasure {
  Frame frame = Frame::standard();
  std::vector<double> atoms;
  std::vector<double> weights;
};

/// Element of L^2_sigma(f+, H): one value per atom.
struct ModelFunction {
  std::vector<Quaternion> values;

  std::size_t size() const { return values.size(); }
};

/// sqrt(sum_k |h_k|^2 sigma_k)
double model_norm(const DiscreteMeasure& mu, const ModelFunction& h);

/// Indicator of atom k times the constant u.
ModelFunction indicator(std::size_t atoms, std::size_t k, const Quaternion& u = Quaternion::one());

struct DiscreteModel {
  DiscreteMeasure measure;
  QVector g;
  std::vector<QVector> columns;  ///< E_k g, the images of the atom indicators

  std::size_t atom_count() const { return columns.size(); }
};

/// sigma_k = <E_k g, g>. Throws Errc::DegenerateWeight when some sigma_k <= tol.
DiscreteModel build_model(const SpectralData& sd, const GeneratingVector& gv, double tol = kDefaultTol);

/// Phi h = sum_k (E_k g) h(lambda_k). Throws Errc::LengthMismatch.
QVector phi(const DiscreteModel& m, const ModelFunction& h);
/// h(lambda_k) = sigma_k^{-1} <E_k x, E_k g>; E_k x = (E_k g) h_k holds under simple spectrum.
ModelFunction phi_inv(const DiscreteModel& m, const QVector& x);

/// (Q h)(lambda) = lambda h(lambda), multiplication from the left.
ModelFunction q_apply(const DiscreteModel& m, const ModelFunction& h);

/// Multiplication by the indicator of the atom subset (indices into the atom list).
ModelFunction model_spectral_measure(const DiscreteModel& m, const std::vector<std::size_t>& atomset,
                                     const ModelFunction& h);

/// With h(lambda) = h1 + h2 phi: (J h)(lambda) = (h1 - h2 phi) f for lambda != 0.
/// At lambda = 0 the whole fibre lies in E_F(f+), giving (J h)(0) = h(0) f.
ModelFunction model_J(const DiscreteModel& m, const ModelFunction& h);

/// Step function with the value t'_k f at atom k (t'_k > 0).
ModelFunction step_generator(const DiscreteModel& m, const std::vector<double>& magnitudes);

struct EquivalenceReport {
  double unitarity = 0.0;     ///< ||Gram(E_k g) - diag(sigma)||
  double isometry = 0.0;      ///< max over basis h of |<Phi h, Phi h> - ||h||^2| / ||h||^2
  std::size_t surjectivity_rank = 0;  ///< F-rank of {E_k g, E_k g phi}, should equal 2n
  double intertwining = 0.0;  ///< max ||A Phi h - Phi Q h|| / ||h||
  double measure_pullback = 0.0;  ///< max ||Phi(chi_S h) - E(S) Phi h|| / ||h||
  double j_transport = 0.0;   ///< max ||Phi(J_model h) - J Phi h|| / ||h||
  double roundtrip = 0.0;     ///< max ||phi_inv(Phi h) - h|| / ||h||
  std::size_t dimension = 0;  ///< n

  bool pass(double tol, double intertwining_tol) const;
};

/// Checks A Phi = Phi Q and the transport of (E, J) on the real basis
/// {chi_k u : u in {1, f, phi, f phi}} of L^2_sigma.
EquivalenceReport verify_equivalence(const QMatrix& a, const SpectralData& sd, const DiscreteModel& m,
                                     double tol = kDefaultTol);

}  // namespace quatspec
