#include <doctest.h>

#include "quatspec/generate.hpp"
#include "quatspec/model.hpp"
#include "support.hpp"

using namespace quatspec;
using quatspec::test::diag;
using quatspec::test::one_by_one;
using quatspec::test::qdist;
using quatspec::test::vdist;

namespace {
const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();
const Quaternion ONE = Quaternion::one();
const Frame STD = Frame::standard();

DiscreteModel model_of(const QMatrix& a, const Frame& fr) {
  const SpectralData sd = spectral_data(a, fr);
  return build_model(sd, special_generating_vector(sd));
}
}  // namespace

TEST_CASE("model of [[i]]") {
  const DiscreteModel m = model_of(one_by_one(I), STD);
  REQUIRE(m.atom_count() == 1);
  CHECK(m.measure.atoms[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m.measure.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(qdist(phi_inv(m, QVector{J}).values[0], J) <= 1e-15);
  CHECK(qdist(phi(m, ModelFunction{{K}})[0], K) <= 1e-15);
  CHECK(qdist(q_apply(m, ModelFunction{{J}}).values[0], K) <= 1e-15);
  // h = phi: h1 = 0, h2 = 1, (J h) = -phi f = k
  CHECK(qdist(model_J(m, ModelFunction{{J}}).values[0], K) <= 1e-15);
  CHECK(qdist(model_J(m, ModelFunction{{ONE}}).values[0], I) <= 1e-15);
}

TEST_CASE("model of [[j]]") {
  const SpectralData sd = spectral_data(one_by_one(J), STD);
  const DiscreteModel m = build_model(sd, special_generating_vector(sd));
  CHECK(m.measure.weights[0] == doctest::Approx(0.5).epsilon(1e-15));
  const EquivalenceReport rep = verify_equivalence(one_by_one(J), sd, m);
  CHECK(rep.pass(1e-10, 1e-10));
  CHECK(rep.unitarity <= 1e-10);
  CHECK(rep.intertwining <= 1e-10);
  CHECK(rep.j_transport <= 1e-10);
  CHECK(rep.surjectivity_rank == 2);
}

TEST_CASE("model of the zero matrix") {
  const SpectralData sd = spectral_data(QMatrix(1), STD);
  const DiscreteModel m = build_model(sd, special_generating_vector(sd));
  CHECK(m.measure.atoms[0] == 0.0);
  // J h = h f on the kernel fibre
  CHECK(qdist(model_J(m, ModelFunction{{J}}).values[0], J * I) <= 1e-15);
  CHECK(qdist(q_apply(m, ModelFunction{{J}}).values[0], Quaternion()) == 0.0);
  const EquivalenceReport rep = verify_equivalence(QMatrix(1), sd, m);
  CHECK(rep.pass(1e-12, 1e-12));
}

TEST_CASE("degenerate weight") {
  const SpectralData sd = spectral_data(one_by_one(I), STD);
  GeneratingVector gv{QVector(1), {}};
  try {
    build_model(sd, gv);
    FAIL("expected DegenerateWeight");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateWeight);
  }
}

TEST_CASE("length mismatch") {
  const DiscreteModel m = model_of(one_by_one(I), STD);
  CHECK_THROWS_AS(phi(m, ModelFunction{{ONE, ONE}}), Error);
}

TEST_CASE("model operators on a two-atom instance") {
  const DiscreteModel m = model_of(diag({I, 2.0 * K}), STD);
  REQUIRE(m.atom_count() == 2);
  const ModelFunction h{{ONE + J, K}};
  const ModelFunction q = q_apply(m, h);
  CHECK(qdist(q.values[0], I * (ONE + J)) <= 1e-14);
  CHECK(qdist(q.values[1], 2.0 * I * K) <= 1e-14);
  const ModelFunction s = model_spectral_measure(m, {1}, h);
  CHECK(s.values[0] == Quaternion());
  CHECK(s.values[1] == K);
  // J^2 = -id on the model
  const ModelFunction jj = model_J(m, model_J(m, h));
  for (std::size_t k = 0; k < 2; ++k) CHECK(qdist(jj.values[k], -h.values[k]) <= 1e-15);
  // step generator with magnitudes t' gives J-compatible values t'_k f
  const ModelFunction st = step_generator(m, {3.0, 5.0});
  CHECK(qdist(st.values[0], 3.0 * I) <= 1e-15);
  CHECK(qdist(st.values[1], 5.0 * I) <= 1e-15);
  CHECK(model_norm(m.measure, indicator(2, 1, J)) == doctest::Approx(std::sqrt(m.measure.weights[1])));
}

TEST_CASE("model J squares to minus identity on random instances") {
  Rng rng(9);
  for (std::size_t n = 1; n <= 6; ++n) {
    const QMatrix a = generate({n, n, true, n % 2 == 0});
    for (const Frame& fr : quatspec::test::test_frames(n)) {
      const DiscreteModel m = model_of(a, fr);
      ModelFunction h;
      for (std::size_t k = 0; k < m.atom_count(); ++k) h.values.push_back(random_quaternion(rng));
      const ModelFunction jj = model_J(m, model_J(m, h));
      for (std::size_t k = 0; k < m.atom_count(); ++k) CHECK(qdist(jj.values[k], -h.values[k]) <= 1e-14);
    }
  }
}

TEST_CASE("unitary equivalence on random simple instances") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const QMatrix a = generate({n, seed, true, seed % 3 == 0});
      for (const Frame& fr : quatspec::test::test_frames(seed)) {
        INFO("n = " << n << " seed = " << seed);
        const SpectralData sd = spectral_data(a, fr);
        const DiscreteModel m = build_model(sd, special_generating_vector(sd));
        const EquivalenceReport rep = verify_equivalence(a, sd, m);
        const double scale = std::max(1.0, frobenius(a));
        CHECK(rep.unitarity <= 1e-9);
        CHECK(rep.isometry <= 1e-9);
        CHECK(rep.surjectivity_rank == 2 * n);
        CHECK(rep.intertwining <= 1e-8 * scale);
        CHECK(rep.measure_pullback <= 1e-8);
        CHECK(rep.j_transport <= 1e-8);
        CHECK(rep.roundtrip <= 1e-9);
        CHECK(rep.dimension == n);

        // Phi phi_inv = id on random vectors
        Rng rng(seed + 77 * n);
        const QVector x = random_qvector(n, rng);
        CHECK(vdist(phi(m, phi_inv(m, x)), x) <= 1e-9 * norm(x));
      }
    }
}
