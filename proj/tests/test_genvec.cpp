#include <doctest.h>

#include "quatspec/generate.hpp"
#include "quatspec/genvec.hpp"
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
}  // namespace

TEST_CASE("has_simple_spectrum") {
  CHECK(has_simple_spectrum(spectral_data(diag({I, 2.0 * K}), STD)));
  CHECK_FALSE(has_simple_spectrum(spectral_data(diag({I, I}), STD)));
  CHECK(has_simple_spectrum(spectral_data(QMatrix(1), STD)));
  // two kernel dimensions share the zero atom
  CHECK_FALSE(has_simple_spectrum(spectral_data(QMatrix(2), STD)));
  CHECK(has_simple_spectrum(spectral_data(diag({Quaternion(), 3.0 * J}), STD)));
}

TEST_CASE("cyclic spans and generating vectors") {
  const SpectralData sd = spectral_data(diag({I, 2.0 * K}), STD);
  CHECK(cyclic_rank(sd, QVector(2), Field::H) == 0);
  CHECK(cyclic_rank(sd, QVector{ONE, ONE}, Field::H) == 2);
  CHECK(is_generating(sd, QVector{ONE, ONE}));
  CHECK_FALSE(is_generating(sd, QVector(2)));
  CHECK_FALSE(is_generating(sd, QVector{ONE, Quaternion()}));

  const SpectralData dd = spectral_data(diag({I, I}), STD);
  CHECK(cyclic_rank(dd, QVector{ONE, ONE}, Field::H) == 1);
  CHECK_FALSE(is_generating(dd, QVector{ONE, ONE}));
}

TEST_CASE("special generating vector, 1x1 cases") {
  SUBCASE("[[i]]") {
    const SpectralData sd = spectral_data(one_by_one(I), STD);
    const GeneratingVector gv = special_generating_vector(sd);
    CHECK(qdist(gv.g[0], ONE) <= 1e-15);
    CHECK(qdist(sd.apply_j(gv.g)[0], I) <= 1e-15);
    CHECK(gv.certificate.h_rank == 1);
  }
  SUBCASE("[[j]]") {
    const SpectralData sd = spectral_data(one_by_one(J), STD);
    const GeneratingVector gv = special_generating_vector(sd);
    // y = 1 splits as y+ = (1 + k)/2 and x+ phi = (1 - k)/2; H+ is the F-line of 1 + k
    CHECK(qdist(gv.g[0], Quaternion(0.5, 0.0, 0.0, 0.5)) <= 1e-15);
    CHECK(qdist(sd.apply_j(gv.g)[0], gv.g[0] * I) <= 1e-15);
    CHECK(gv.certificate.j_residual <= 1e-9);
    CHECK(gv.certificate.h_rank == 1);
  }
  SUBCASE("zero") {
    const SpectralData sd = spectral_data(QMatrix(1), STD);
    const GeneratingVector gv = special_generating_vector(sd);
    CHECK(qdist(gv.g[0], ONE) <= 1e-15);
    CHECK(gv.certificate.j_residual <= 1e-15);
  }
  SUBCASE("not simple") {
    try {
      special_generating_vector(spectral_data(diag({I, I}), STD));
      FAIL("expected NotSimpleSpectrum");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotSimpleSpectrum);
    }
  }
}

TEST_CASE("special generating vector on random simple instances") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const QMatrix a = generate({n, seed, seed % 2 == 0, seed % 4 == 1});
      for (const Frame& fr : quatspec::test::test_frames(seed)) {
        const SpectralData sd = spectral_data(a, fr);
        if (!has_simple_spectrum(sd)) continue;
        INFO("n = " << n << " seed = " << seed);
        const GeneratingVector gv = special_generating_vector(sd);
        CHECK(norm(sd.apply_j(gv.g) - right_mul(gv.g, fr.f())) <= 1e-9 * norm(gv.g));
        CHECK(cyclic_rank(sd, gv.g, Field::H) == n);
        for (double w : gv.certificate.weights) CHECK(w > 0.0);
        // g lies in H+
        CHECK(vdist(sd.apply_ef_plus(gv.g), gv.g) <= 1e-9 * norm(gv.g));
      }
    }
}

// Containment and equality relations between cyclic subspaces.
TEST_CASE("span calculus") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const QMatrix a = generate({n, seed, seed % 2 == 0, seed % 3 == 0});
      Rng rng(seed + 1000 * n);
      for (const Frame& fr : quatspec::test::test_frames(seed)) {
        INFO("n = " << n << " seed = " << seed);
        const SpectralData sd = spectral_data(a, fr);
        const QVector g1 = random_qvector(n, rng);
        const QVector g2 = random_qvector(n, rng);
        const FSubspace hplus = f_orthonormalize(sd.h_plus_basis(), fr);

        // C_F(g1 + g2) within C_F(g1) + C_F(g2)
        const FSubspace c12 = cyclic_span(sd, g1 + g2, Field::F);
        CHECK(is_subspace_of(c12, f_sum(cyclic_span(sd, g1, Field::F), cyclic_span(sd, g2, Field::F))));

        // C(E, g) = C_F(E, g) + R_phi C_F(E, g)
        const FSubspace cf = cyclic_span_measure_f(sd, g1);
        CHECK(same_subspace(cyclic_span(sd, g1, Field::H), f_sum(cf, right_mul(cf, fr.phi()))));

        // h in C_F(g) implies C_F(h) within C_F(g)
        const FSubspace cg = cyclic_span(sd, g1, Field::F);
        QVector h(n);
        for (const auto& b : cg.basis()) {
          h += right_mul(b, fr.to_quat(FScalar(std::uniform_real_distribution<double>(-1, 1)(rng),
                                               std::uniform_real_distribution<double>(-1, 1)(rng))));
        }
        CHECK(is_subspace_of(cyclic_span(sd, h, Field::F), cg));

        // C_F(E_F, g) within H+
        CHECK(is_subspace_of(cg, hplus));

        // g in H+ implies C_F(E, g) = C_F(E_F, g)
        const QVector gp = sd.apply_ef_plus(g2);
        CHECK(same_subspace(cyclic_span_measure_f(sd, gp), cyclic_span(sd, gp, Field::F)));

        // C(E, g phi) = R_phi C(E, g), also at the F level
        CHECK(same_subspace(cyclic_span(sd, right_mul(g1, fr.phi()), Field::H),
                            right_mul(cyclic_span(sd, g1, Field::H), fr.phi())));
        CHECK(same_subspace(cyclic_span_measure_f(sd, right_mul(g1, fr.phi())),
                            right_mul(cyclic_span_measure_f(sd, g1), fr.phi())));

        // h orthogonal to C_F(g) gives an orthogonal direct sum (one-dimensional atom pieces)
        if (has_simple_spectrum(sd) && !sd.has_zero_atom()) {
          const QVector gpos = sd.apply_ef_plus(g1);
          const FSubspace cgp = cyclic_span(sd, gpos, Field::F);
          // keep only the atoms gpos does not reach: project a random H+ vector off cgp
          QVector hh = sd.apply_ef_plus(random_qvector(n, rng));
          hh = hh - f_project(hh, cgp);
          const FSubspace ch = cyclic_span(sd, hh, Field::F);
          const FSubspace csum = cyclic_span(sd, hh + gpos, Field::F);
          CHECK(max_cross_f_inner(ch, cgp) <= 1e-9);
          CHECK(csum.dim() == ch.dim() + cgp.dim());
          CHECK(same_subspace(csum, f_sum(ch, cgp)));
        }
      }
    }
}

TEST_CASE("H = H+ (+)_F R_phi H+ for invertible instances") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const QMatrix a = generate({n, 5 * n, false, false});
    for (const Frame& fr : quatspec::test::test_frames(n)) {
      const SpectralData sd = spectral_data(a, fr);
      REQUIRE_FALSE(sd.has_zero_atom());
      const FSubspace hp = f_orthonormalize(sd.h_plus_basis(), fr);
      const FSubspace hp_phi = right_mul(hp, fr.phi());
      CHECK(hp.dim() == n);
      CHECK(f_sum(hp, hp_phi).dim() == 2 * n);
      CHECK(max_cross_f_inner(hp, hp_phi) <= 1e-9);
    }
  }
}

TEST_CASE("kernel lies in both H+ and R_phi H+") {
  // Zero atom: E_F({0}) is part of E_F(f+) and commutes with R_phi.
  const SpectralData sd = spectral_data(diag({Quaternion(), 2.0 * I}), STD);
  const FSubspace hp = f_orthonormalize(sd.h_plus_basis(), STD);
  const FSubspace hp_phi = right_mul(hp, STD.phi());
  CHECK(hp.dim() == 3);
  CHECK(f_sum(hp, hp_phi).dim() == 4);
  CHECK(hp.dim() + hp_phi.dim() > 4);
}
