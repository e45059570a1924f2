#include "quatspec/model.hpp"

#include <algorithm>
#include <cmath>

namespace quatspec {

namespace {

void require_atoms(const DiscreteModel& m, const ModelFunction& h) {
  if (h.size() != m.atom_count()) {
    throw Error(Errc::LengthMismatch, "model function has " + std::to_string(h.size()) +
                                          " values for " + std::to_string(m.atom_count()) + " atoms");
  }
}

ModelFunction difference(const ModelFunction& a, const ModelFunction& b) {
  ModelFunction d{a.values};
  for (std::size_t k = 0; k < d.size(); ++k) d.values[k] -= b.values[k];
  return d;
}

}  // namespace

double model_norm(const DiscreteMeasure& mu, const ModelFunction& h) {
  double acc = 0.0;
  for (std::size_t k = 0; k < h.size(); ++k) acc += norm2(h.values[k]) * mu.weights[k];
  return std::sqrt(acc);
}

ModelFunction indicator(std::size_t atoms, std::size_t k, const Quaternion& u) {
  ModelFunction h{std::vector<Quaternion>(atoms)};
  h.values[k] = u;
  return h;
}

DiscreteModel build_model(const SpectralData& sd, const GeneratingVector& gv, double tol) {
  DiscreteModel m;
  m.measure.frame = sd.frame;
  m.g = gv.g;
  for (const auto& atom : sd.atoms) {
    QVector col = atom.e.apply(gv.g);
    const Quaternion w = inner(col, gv.g);
    if (!(w.w > tol)) {
      throw Error(Errc::DegenerateWeight, "sigma at t = " + std::to_string(atom.t) + " is " +
                                              std::to_string(w.w));
    }
    if (abs(w.vec()) > tol * std::max(1.0, w.w)) {
      throw Error(Errc::ConstructionFailed, "<E_k g, g> is not real");
    }
    m.measure.atoms.push_back(atom.t);
    m.measure.weights.push_back(w.w);
    m.columns.push_back(std::move(col));
  }
  return m;
}

QVector phi(const DiscreteModel& m, const ModelFunction& h) {
  require_atoms(m, h);
  QVector x(m.g.size());
  for (std::size_t k = 0; k < h.size(); ++k) x += right_mul(m.columns[k], h.values[k]);
  return x;
}

ModelFunction phi_inv(const DiscreteModel& m, const QVector& x) {
  ModelFunction h{std::vector<Quaternion>(m.atom_count())};
  for (std::size_t k = 0; k < m.atom_count(); ++k) {
    // <E_k x, E_k g> = <x, E_k g> since E_k is an orthogonal projection.
    h.values[k] = inner(x, m.columns[k]) / m.measure.weights[k];
  }
  return h;
}

ModelFunction q_apply(const DiscreteModel& m, const ModelFunction& h) {
  require_atoms(m, h);
  ModelFunction out{h.values};
  for (std::size_t k = 0; k < h.size(); ++k) {
    out.values[k] = (m.measure.atoms[k] * m.measure.frame.f()) * h.values[k];
  }
  return out;
}

ModelFunction model_spectral_measure(const DiscreteModel& m, const std::vector<std::size_t>& atomset,
                                     const ModelFunction& h) {
  require_atoms(m, h);
  ModelFunction out{std::vector<Quaternion>(h.size())};
  for (std::size_t k : atomset) {
    if (k >= h.size()) throw Error(Errc::LengthMismatch, "atom index out of range");
    out.values[k] = h.values[k];
  }
  return out;
}

ModelFunction model_J(const DiscreteModel& m, const ModelFunction& h) {
  require_atoms(m, h);
  const Frame& fr = m.measure.frame;
  ModelFunction out{h.values};
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (m.measure.atoms[k] == 0.0) {
      out.values[k] = h.values[k] * fr.f();
      continue;
    }
    const auto [h1, h2] = symplectic_split(h.values[k], fr);
    out.values[k] = (fr.to_quat(h1) - fr.to_quat(h2) * fr.phi()) * fr.f();
  }
  return out;
}

ModelFunction step_generator(const DiscreteModel& m, const std::vector<double>& magnitudes) {
  if (magnitudes.size() != m.atom_count()) throw Error(Errc::LengthMismatch, "step_generator");
  ModelFunction out{std::vector<Quaternion>(m.atom_count())};
  for (std::size_t k = 0; k < magnitudes.size(); ++k) out.values[k] = magnitudes[k] * m.measure.frame.f();
  return out;
}

bool EquivalenceReport::pass(double tol, double intertwining_tol) const {
  return unitarity <= tol && isometry <= tol && surjectivity_rank == 2 * dimension &&
         intertwining <= intertwining_tol && measure_pullback <= intertwining_tol &&
         j_transport <= intertwining_tol && roundtrip <= tol;
}

EquivalenceReport verify_equivalence(const QMatrix& a, const SpectralData& sd, const DiscreteModel& m,
                                     double tol) {
  EquivalenceReport r;
  r.dimension = sd.n;
  const std::size_t atoms = m.atom_count();
  const Frame& fr = m.measure.frame;

  double gram = 0.0;
  for (std::size_t k = 0; k < atoms; ++k)
    for (std::size_t l = 0; l < atoms; ++l) {
      Quaternion d = inner(m.columns[k], m.columns[l]);
      if (k == l) d -= Quaternion(m.measure.weights[k]);
      gram += norm2(d);
    }
  r.unitarity = std::sqrt(gram);

  std::vector<QVector> doubled;
  for (const auto& c : m.columns) {
    doubled.push_back(c);
    doubled.push_back(right_mul(c, fr.phi()));
  }
  r.surjectivity_rank = doubled.empty() ? 0 : f_rank(doubled, fr, tol);

  const Quaternion units[4] = {Quaternion::one(), fr.f(), fr.phi(), fr.fphi()};
  for (std::size_t k = 0; k < atoms; ++k) {
    for (const auto& u : units) {
      const ModelFunction h = indicator(atoms, k, u);
      const double hn = model_norm(m.measure, h);
      const QVector x = phi(m, h);

      r.isometry = std::max(r.isometry, std::abs(inner(x, x).w - hn * hn) / (hn * hn));
      r.intertwining = std::max(r.intertwining, norm(a.apply(x) - phi(m, q_apply(m, h))) / hn);
      r.j_transport = std::max(r.j_transport, norm(phi(m, model_J(m, h)) - sd.apply_j(x)) / hn);
      r.roundtrip = std::max(r.roundtrip, model_norm(m.measure, difference(phi_inv(m, x), h)) / hn);

      for (std::size_t s = 0; s < atoms; ++s) {
        const QVector lhs = phi(m, model_spectral_measure(m, {s}, h));
        const QVector rhs = sd.atoms[s].e.apply(x);
        r.measure_pullback = std::max(r.measure_pullback, norm(lhs - rhs) / hn);
      }
    }
  }
  return r;
}

}  // namespace quatspec
