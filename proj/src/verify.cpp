#include "quatspec/verify.hpp"

#include <algorithm>
#include <cmath>

namespace quatspec {

void InvariantReport::add(std::string name, double value, double threshold) {
  residuals_.push_back({std::move(name), value, threshold});
}

void InvariantReport::append(const InvariantReport& other) {
  residuals_.insert(residuals_.end(), other.residuals_.begin(), other.residuals_.end());
}

bool InvariantReport::pass() const {
  return std::all_of(residuals_.begin(), residuals_.end(), [](const Residual& r) { return r.ok(); });
}

std::optional<double> InvariantReport::value(const std::string& name) const {
  for (const auto& r : residuals_)
    if (r.name == name) return r.value;
  return std::nullopt;
}

std::vector<std::string> InvariantReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : residuals_)
    if (!r.ok()) out.push_back(r.name);
  return out;
}

InvariantReport spectral_invariants(const QMatrix& a, const SpectralData& sd, double tol,
                                    double cluster_tol) {
  const std::size_t n = sd.n;
  const double scale = sd.scale;
  const Frame& fr = sd.frame;
  const QMatrix id = QMatrix::identity(n);
  InvariantReport rep;

  rep.add("j_squared_plus_identity",
          real_map_norm([&](const QVector& x) { return sd.apply_j(sd.apply_j(x)) + x; }, n) / scale,
          tol);
  rep.add("j_skew", frobenius(sd.j + adjoint(sd.j)) / scale, tol);

  double commutes = 0.0;
  double idem = 0.0;
  double self = 0.0;
  double orth = 0.0;
  double hlin = 0.0;
  double eq6 = 0.0;
  QMatrix sum(n);
  const Quaternion units[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  for (std::size_t k = 0; k < sd.atoms.size(); ++k) {
    const SpectralAtom& atom = sd.atoms[k];
    const FMatrix ef = atom.ef_pos + atom.ef_neg;
    commutes = std::max(commutes, real_map_norm(
                                      [&](const QVector& x) {
                                        return sd.apply_j(atom.e.apply(x)) - atom.e.apply(sd.apply_j(x));
                                      },
                                      n));
    idem = std::max(idem, frobenius(atom.e * atom.e - atom.e));
    self = std::max(self, frobenius(atom.e - adjoint(atom.e)));
    for (std::size_t l = 0; l < sd.atoms.size(); ++l)
      if (l != k) orth = std::max(orth, frobenius(atom.e * sd.atoms[l].e));
    sum += atom.e;
    for (const auto& q : units) {
      hlin = std::max(hlin, real_map_norm(
                                [&](const QVector& x) {
                                  return apply_f(ef, right_mul(x, q), fr) - right_mul(apply_f(ef, x, fr), q);
                                },
                                n));
    }
    if (atom.t > 0.0) {
      eq6 = std::max(eq6, real_map_norm(
                              [&](const QVector& x) {
                                return apply_f(atom.ef_pos, right_mul(x, fr.phi()), fr) -
                                       right_mul(apply_f(atom.ef_neg, x, fr), fr.phi());
                              },
                              n));
    }
  }
  rep.add("j_commutes_e", commutes / scale, tol);
  rep.add("e_idempotent", idem / scale, tol);
  rep.add("e_selfadjoint", self / scale, tol);
  rep.add("e_orthogonal", orth / scale, tol);
  rep.add("e_sum_identity", frobenius(sum - id) / scale, tol);
  rep.add("e_h_linear", hlin / scale, tol);
  rep.add("ef_phi_commutation", eq6, tol);

  double asym = 0.0;
  const auto& ev = sd.eigenvalues;
  for (std::size_t i = 0; i < ev.size(); ++i) asym = std::max(asym, std::abs(ev[i] + ev[ev.size() - 1 - i]));
  rep.add("spectral_symmetry", asym / scale, cluster_tol);

  if (!sd.has_zero_atom()) {
    const FSubspace hp = f_orthonormalize(sd.h_plus_basis(), fr, tol);
    const FSubspace hp_phi = right_mul(hp, fr.phi(), tol);
    const FSubspace total = f_sum(hp, hp_phi, tol);
    rep.add("h_plus_rank_deficit", static_cast<double>(2 * n) - static_cast<double>(total.dim()), 0.0);
    rep.add("h_plus_cross_inner", max_cross_f_inner(hp, hp_phi), tol);
  }

  rep.add("reconstruction", frobenius(a - reconstruct(sd)) / scale, 10.0 * tol);
  return rep;
}

InvariantReport generating_invariants(const SpectralData& sd, const GeneratingVector& gv, double tol) {
  InvariantReport rep;
  rep.add("generating_j_residual", gv.certificate.j_residual, tol);
  rep.add("generating_rank_deficit",
          static_cast<double>(sd.n) - static_cast<double>(gv.certificate.h_rank), 0.0);
  return rep;
}

InvariantReport model_invariants(const EquivalenceReport& r, double tol) {
  InvariantReport rep;
  rep.add("unitarity", r.unitarity, tol);
  rep.add("isometry", r.isometry, tol);
  rep.add("surjectivity_deficit",
          static_cast<double>(2 * r.dimension) - static_cast<double>(r.surjectivity_rank), 0.0);
  rep.add("intertwining", r.intertwining, 10.0 * tol);
  rep.add("measure_pullback", r.measure_pullback, 10.0 * tol);
  rep.add("j_transport", r.j_transport, 10.0 * tol);
  rep.add("roundtrip", r.roundtrip, tol);
  return rep;
}

}  // namespace quatspec
