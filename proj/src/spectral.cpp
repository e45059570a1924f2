#include "quatspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace quatspec {

// ---------------------------------------------------------------- QMatrix

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Quaternion::one();
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns) {
  const std::size_t n = columns.size();
  QMatrix m(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (columns[c].size() != n) throw Error(Errc::LengthMismatch, "from_columns: non-square");
    for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QVector QMatrix::apply(const QVector& x) const {
  if (x.size() != n_) throw Error(Errc::LengthMismatch, "QMatrix::apply");
  QVector y(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    Quaternion acc;
    for (std::size_t c = 0; c < n_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (o.n_ != n_) throw Error(Errc::LengthMismatch, "QMatrix +");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (o.n_ != n_) throw Error(Errc::LengthMismatch, "QMatrix -");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator*(double s, QMatrix a) {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) a(r, c) *= s;
  return a;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(Errc::LengthMismatch, "QMatrix *");
  QMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Quaternion acc;
      for (std::size_t k = 0; k < n; ++k) acc += a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  return out;
}

double frobenius(const QMatrix& a) {
  double acc = 0.0;
  for (const auto& q : a.entries()) acc += norm2(q);
  return std::sqrt(acc);
}

QMatrix adjoint(const QMatrix& a) {
  QMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out(r, c) = conj(a(c, r));
  return out;
}

double skew_residual(const QMatrix& a) {
  return frobenius(a + adjoint(a)) / std::max(1.0, frobenius(a));
}

bool is_skew_selfadjoint(const QMatrix& a, double tol) { return skew_residual(a) <= tol; }

// ---------------------------------------------------------------- FMatrix

FMatrix FMatrix::identity(std::size_t m) {
  FMatrix out(m);
  for (std::size_t k = 0; k < m; ++k) out(k, k) = 1.0;
  return out;
}

std::vector<FScalar> FMatrix::apply(std::span<const FScalar> x) const {
  if (x.size() != m_) throw Error(Errc::LengthMismatch, "FMatrix::apply");
  std::vector<FScalar> y(m_);
  for (std::size_t r = 0; r < m_; ++r) {
    FScalar acc = 0.0;
    for (std::size_t c = 0; c < m_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

FMatrix& FMatrix::operator+=(const FMatrix& o) {
  if (o.m_ != m_) throw Error(Errc::LengthMismatch, "FMatrix +");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

FMatrix& FMatrix::operator-=(const FMatrix& o) {
  if (o.m_ != m_) throw Error(Errc::LengthMismatch, "FMatrix -");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

FMatrix operator+(FMatrix a, const FMatrix& b) { return a += b; }
FMatrix operator-(FMatrix a, const FMatrix& b) { return a -= b; }
FMatrix operator*(FScalar s, FMatrix a) {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) a(r, c) *= s;
  return a;
}

FMatrix operator*(const FMatrix& a, const FMatrix& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw Error(Errc::LengthMismatch, "FMatrix *");
  FMatrix out(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k < m; ++k) {
      const FScalar ark = a(r, k);
      if (ark == FScalar(0.0)) continue;
      for (std::size_t c = 0; c < m; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

double frobenius(const FMatrix& a) {
  double acc = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) acc += std::norm(a(r, c));
  return std::sqrt(acc);
}

FMatrix adjoint(const FMatrix& a) {
  FMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out(r, c) = std::conj(a(c, r));
  return out;
}

// ---------------------------------------------------------------- embedding

FMatrix embed(const QMatrix& a, const Frame& fr) {
  const std::size_t n = a.size();
  FMatrix m(2 * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      // A_kl = u1 + u2 phi = P + phi Q with P = u1, Q = conj(u2).
      const auto [u1, u2] = symplectic_split(a(k, l), fr);
      m(k, l) = u1;
      m(k, n + l) = -u2;
      m(n + k, l) = std::conj(u2);
      m(n + k, n + l) = std::conj(u1);
    }
  return m;
}

QMatrix unembed(const FMatrix& m, const Frame& fr) {
  const std::size_t n = m.size() / 2;
  QMatrix a(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) a(k, l) = recompose({m(k, l), std::conj(m(n + k, l))}, fr);
  return a;
}

QVector apply_f(const FMatrix& m, const QVector& x, const Frame& fr) {
  return from_symplectic(m.apply(to_symplectic(x, fr)), fr);
}

double real_map_norm(const RealLinearMap& op, std::size_t n) {
  const Quaternion units[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                               Quaternion::k()};
  double acc = 0.0;
  for (std::size_t l = 0; l < n; ++l)
    for (const auto& u : units) {
      const double v = norm(op(right_mul(QVector::basis(n, l), u)));
      acc += v * v;
    }
  return std::sqrt(acc);
}

// ---------------------------------------------------------------- Jacobi

namespace {

double off_diagonal(const FMatrix& m) {
  double acc = 0.0;
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c)
      if (r != c) acc += std::norm(m(r, c));
  return std::sqrt(acc);
}

constexpr int kMaxSweeps = 100;
constexpr double kSweepTarget = 1e-15;

}  // namespace

HermitianEigen hermitian_eigen(const FMatrix& input, double tol) {
  const std::size_t m = input.size();
  const double mnorm = frobenius(input);
  if (frobenius(input - adjoint(input)) > tol * std::max(1.0, mnorm)) {
    throw Error(Errc::NotHermitian, "hermitian_eigen: input is not Hermitian");
  }
  FMatrix a = FScalar(0.5) * (input + adjoint(input));
  FMatrix v = FMatrix::identity(m);

  int sweeps = 0;
  while (sweeps < kMaxSweeps && off_diagonal(a) > kSweepTarget * mnorm) {
    ++sweeps;
    for (std::size_t p = 0; p + 1 < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        const FScalar b = a(p, q);
        const double absb = std::abs(b);
        if (absb == 0.0) continue;
        const FScalar e = b / absb;
        const FScalar ec = std::conj(e);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * absb);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;

        // U = diag(1, conj(e)) [[c, s], [-s, c]] on the (p, q) plane.
        for (std::size_t r = 0; r < m; ++r) {
          const FScalar mp = a(r, p);
          const FScalar mq = a(r, q);
          a(r, p) = c * mp - s * ec * mq;
          a(r, q) = s * mp + c * ec * mq;
        }
        for (std::size_t r = 0; r < m; ++r) {
          const FScalar mp = a(p, r);
          const FScalar mq = a(q, r);
          a(p, r) = c * mp - s * e * mq;
          a(q, r) = s * mp + c * e * mq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t r = 0; r < m; ++r) {
          const FScalar vp = v(r, p);
          const FScalar vq = v(r, q);
          v(r, p) = c * vp - s * ec * vq;
          v(r, q) = s * vp + c * ec * vq;
        }
      }
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigen out;
  out.sweeps = sweeps;
  out.values.reserve(m);
  out.vectors = FMatrix(m);
  for (std::size_t c = 0; c < m; ++c) {
    out.values.push_back(a(order[c], order[c]).real());
    for (std::size_t r = 0; r < m; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

// ---------------------------------------------------------------- spectral pair

FMatrix SpectralData::ef_zero() const {
  if (has_zero_atom()) return atoms.front().ef_pos;
  return FMatrix(2 * n);
}

std::vector<QVector> SpectralData::h_plus_basis() const {
  std::vector<QVector> basis;
  for (const auto& atom : atoms) basis.insert(basis.end(), atom.pos_basis.begin(), atom.pos_basis.end());
  return basis;
}

namespace {

std::vector<FScalar> column_of(const FMatrix& v, std::size_t c) {
  std::vector<FScalar> col(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) col[r] = v(r, c);
  return col;
}

// sum of v v^* over the listed columns
FMatrix projector(const FMatrix& v, const std::vector<std::size_t>& cols) {
  FMatrix p(v.size());
  for (std::size_t c : cols)
    for (std::size_t r = 0; r < v.size(); ++r)
      for (std::size_t s = 0; s < v.size(); ++s) p(r, s) += v(r, c) * std::conj(v(s, c));
  return p;
}

}  // namespace

SpectralData spectral_data(const QMatrix& a, const Frame& fr, double cluster_tol, double tol) {
  if (!is_skew_selfadjoint(a, tol)) {
    throw Error(Errc::NotSkewSelfadjoint,
                "||A + A*|| / max(1, ||A||) = " + std::to_string(skew_residual(a)));
  }
  const std::size_t n = a.size();
  SpectralData sd;
  sd.frame = fr;
  sd.n = n;
  sd.scale = std::max(1.0, frobenius(a));

  // A acts on the F-module H^n as embed(A); its eigenvalues are (t f), t real,
  // and (-f) embed(A) is Hermitian with eigenvalues t.
  const FMatrix herm = FScalar(0.0, -1.0) * embed(a, fr);
  // Skewness was checked on A already; the embedding is an isometry up to a factor.
  const HermitianEigen eig = hermitian_eigen(herm, std::max(tol, 1e-12) * 4.0);
  sd.eigenvalues = eig.values;

  const std::size_t m = 2 * n;
  const double gap = cluster_tol * sd.scale;
  std::vector<std::size_t> by_abs(m);
  std::iota(by_abs.begin(), by_abs.end(), 0);
  std::stable_sort(by_abs.begin(), by_abs.end(), [&](std::size_t x, std::size_t y) {
    return std::abs(eig.values[x]) < std::abs(eig.values[y]);
  });

  // Greedy clustering of |eigenvalue|; the cluster below `gap` is the zero atom.
  std::vector<std::vector<std::size_t>> clusters;
  bool have_zero = false;
  double last = 0.0;
  for (std::size_t idx : by_abs) {
    const double mag = std::abs(eig.values[idx]);
    if (mag < gap) {
      if (!have_zero) clusters.push_back({});
      have_zero = true;
      clusters.back().push_back(idx);
    } else if (clusters.empty() || (have_zero && clusters.size() == 1) || mag - last >= gap) {
      clusters.push_back({idx});
    } else {
      clusters.back().push_back(idx);
    }
    last = mag;
  }

  sd.ef_plus = FMatrix(m);
  sd.ef_minus = FMatrix(m);
  for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
    auto& cluster = clusters[ci];
    std::sort(cluster.begin(), cluster.end());
    double mean = 0.0;
    for (std::size_t idx : cluster) mean += std::abs(eig.values[idx]);
    mean /= static_cast<double>(cluster.size());
    const bool zero_atom = have_zero && ci == 0;

    SpectralAtom atom;
    atom.t = zero_atom ? 0.0 : mean;
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t idx : cluster) {
      (zero_atom || eig.values[idx] > 0.0 ? pos : neg).push_back(idx);
    }
    atom.ef_pos = projector(eig.vectors, pos);
    atom.ef_neg = projector(eig.vectors, neg);
    for (std::size_t idx : pos) atom.pos_basis.push_back(from_symplectic(column_of(eig.vectors, idx), fr));
    for (std::size_t idx : neg) atom.neg_basis.push_back(from_symplectic(column_of(eig.vectors, idx), fr));

    const FMatrix ef = atom.ef_pos + atom.ef_neg;
    std::vector<QVector> cols;
    cols.reserve(n);
    for (std::size_t l = 0; l < n; ++l) cols.push_back(apply_f(ef, QVector::basis(n, l), fr));
    atom.e = QMatrix::from_columns(cols);

    sd.ef_plus += atom.ef_pos;
    sd.ef_minus += atom.ef_neg;
    sd.atoms.push_back(std::move(atom));
  }
  std::stable_sort(sd.atoms.begin(), sd.atoms.end(),
                   [](const SpectralAtom& x, const SpectralAtom& y) { return x.t < y.t; });

  sd.j = FScalar(0.0, 1.0) * (sd.ef_plus - sd.ef_minus);
  return sd;
}

QMatrix reconstruct(const SpectralData& sd) {
  std::vector<QVector> cols;
  cols.reserve(sd.n);
  for (std::size_t l = 0; l < sd.n; ++l) {
    QVector col(sd.n);
    for (const auto& atom : sd.atoms) {
      if (atom.t == 0.0) continue;
      col += atom.t * sd.apply_j(atom.e.column(l));
    }
    cols.push_back(std::move(col));
  }
  return QMatrix::from_columns(cols);
}

}  // namespace quatspec
