#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatspec/genvec.hpp"
#include "quatspec/model.hpp"
#include "quatspec/spectral.hpp"

namespace quatspec {

struct Residual {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;

  bool ok() const { return value <= threshold; }
};

class InvariantReport {
 public:
  void add(std::string name, double value, double threshold);
  void append(const InvariantReport& other);

  const std::vector<Residual>& residuals() const { return residuals_; }
  bool pass() const;
  std::optional<double> value(const std::string& name) const;
  /// Names of failing residuals, in insertion order.
  std::vector<std::string> failures() const;

 private:
  std::vector<Residual> residuals_;
};

/// Residuals of the spectral pair of A, relative to max(1, ||A||) unless noted:
///   j_squared_plus_identity, j_skew, j_commutes_e, e_idempotent, e_selfadjoint,
///   e_orthogonal, e_sum_identity, e_h_linear, ef_phi_commutation (absolute),
///   spectral_symmetry (against cluster_tol), h_plus_rank_deficit and
///   h_plus_cross_inner (invertible A only), reconstruction (10 tol).
InvariantReport spectral_invariants(const QMatrix& a, const SpectralData& sd, double tol = kDefaultTol,
                                    double cluster_tol = kDefaultClusterTol);

/// Certificate of the generating vector: generating_j_residual, generating_rank_deficit.
InvariantReport generating_invariants(const SpectralData& sd, const GeneratingVector& gv,
                                      double tol = kDefaultTol);

/// Model residuals from verify_equivalence; intertwining-type residuals use 10 tol.
InvariantReport model_invariants(const EquivalenceReport& rep, double tol = kDefaultTol);

}  // namespace quatspec
