#include <doctest.h>

#include "quatspec/error.hpp"
#include "quatspec/generate.hpp"
#include "quatspec/quaternion.hpp"
#include "support.hpp"

using namespace quatspec;
using quatspec::test::qdist;
using quatspec::test::table_mul;

namespace {
const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();
const Quaternion ONE = Quaternion::one();
}  // namespace

TEST_CASE("multiplication rules table") {
  CHECK(I * J == K);
  CHECK(J * K == I);
  CHECK(K * I == J);
  CHECK(J * I == -K);
  CHECK(K * J == -I);
  CHECK(I * K == -J);
  CHECK(I * I == -ONE);
  CHECK(J * J == -ONE);
  CHECK(K * K == -ONE);
}

TEST_CASE("product examples") {
  const Quaternion q{0.3, -1.2, 2.5, 0.7};
  CHECK(ONE * q == q);
  // (1+i)(1+j) = 1 + i + j + ij
  CHECK(Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0) == Quaternion(1, 1, 1, 1));
  CHECK(table_mul(Quaternion(1, 1, 0, 0), Quaternion(1, 0, 1, 0)) == Quaternion(1, 1, 1, 1));
}

TEST_CASE("conjugate and absolute value") {
  CHECK(conj(Quaternion(1, 1, 1, 1)) == Quaternion(1, -1, -1, -1));
  CHECK(abs(ONE) == 1.0);
  CHECK(abs(Quaternion(1, 1, 1, 1)) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("algebra properties on random quaternions") {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    const Quaternion r = random_quaternion(rng);
    CHECK(qdist(p * q, table_mul(p, q)) <= 1e-15);
    CHECK(qdist((p * q) * r, p * (q * r)) <= 1e-12);
    CHECK(std::abs(abs(p * q) - abs(p) * abs(q)) <= 1e-12);
    CHECK(conj(conj(q)) == q);
    CHECK(qdist(conj(p * q), conj(q) * conj(p)) <= 1e-15);
    CHECK(qdist(q * conj(q), Quaternion(norm2(q))) <= 1e-15);
    CHECK(qdist(conj(q) * q, Quaternion(norm2(q))) <= 1e-15);

    // Vector form: qp = q0 p0 - (q, p) + [q, p] + p0 q + q0 p on vector parts.
    const Quaternion vec_form = Quaternion(q.w * p.w - dot(q.vec(), p.vec())) + cross(q.vec(), p.vec()) +
                                p.w * q.vec() + q.w * p.vec();
    CHECK(qdist(vec_form, q * p) <= 1e-15);
    CHECK(std::abs((q * p).real() - (q.w * p.w - dot(q.vec(), p.vec()))) <= 1e-15);
  }
}

TEST_CASE("make_imaginary_unit") {
  CHECK(make_imaginary_unit(I) == I);
  CHECK(qdist(make_imaginary_unit(Quaternion(1, 0, 2, 0)), J) <= 1e-15);
  CHECK_THROWS_AS(make_imaginary_unit(Quaternion(3)), Error);
  try {
    make_imaginary_unit(Quaternion(3));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RealInput);
  }

  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Quaternion f = make_imaginary_unit(random_quaternion(rng));
    CHECK(std::abs(abs(f) - 1.0) <= 1e-15);
    CHECK(f.w == 0.0);
    CHECK(qdist(f * f, -ONE) <= 1e-15);
  }
}

TEST_CASE("frame selection rule") {
  SUBCASE("f = i") {
    const Frame fr = Frame::build(I);
    CHECK(fr.phi() == J);
    CHECK(fr.fphi() == K);
  }
  SUBCASE("f = k") {
    const Frame fr = Frame::build(K);
    CHECK(fr.phi() == I);
    CHECK(fr.fphi() == J);
  }
  SUBCASE("f = j ties i and k, picks i") {
    const Frame fr = Frame::build(J);
    CHECK(fr.phi() == I);
    CHECK(fr.fphi() == -K);
  }
  SUBCASE("rejects non-units") {
    CHECK_THROWS_AS(Frame::build(Quaternion(0, 2, 0, 0)), Error);
    CHECK_THROWS_AS(Frame::build(Quaternion(1, 0, 0, 0)), Error);
  }
}

TEST_CASE("frame invariants for random imaginary units") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Frame fr = Frame::build(make_imaginary_unit(random_quaternion(rng)));
    const Quaternion basis[4] = {ONE, fr.f(), fr.phi(), fr.fphi()};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) CHECK(std::abs(dot(basis[a], basis[b]) - (a == b ? 1.0 : 0.0)) <= 1e-14);
    CHECK(qdist(fr.phi() * fr.phi(), -ONE) <= 1e-14);
    CHECK(qdist(fr.fphi() * fr.fphi(), -ONE) <= 1e-14);
    CHECK(qdist(fr.f() * fr.phi(), -(fr.phi() * fr.f())) <= 1e-14);
    CHECK(qdist(fr.fphi(), cross(fr.f(), fr.phi())) <= 1e-14);

    // Twist: u phi = phi conj(u) for u in F.
    const FScalar u(rng() % 7 - 3.0, 0.25 * (rng() % 9));
    CHECK(qdist(fr.to_quat(u) * fr.phi(), fr.phi() * fr.to_quat(std::conj(u))) <= 1e-14);
  }
}

TEST_CASE("symplectic split") {
  const Frame std_frame = Frame::standard();
  const Quaternion q{0.5, -1.5, 2.0, 3.25};
  const auto [u1, u2] = symplectic_split(q, std_frame);
  CHECK(u1 == FScalar(0.5, -1.5));
  CHECK(u2 == FScalar(2.0, 3.25));

  // f = j (phi = i): i = 0 + 1 * phi
  const Frame fj = Frame::build(J);
  const auto s = symplectic_split(I, fj);
  CHECK(std::abs(s.u1) == 0.0);
  CHECK(std::abs(s.u2 - FScalar(1.0)) <= 1e-15);

  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Frame fr = Frame::build(random_imaginary_unit(rng));
    const Quaternion p = random_quaternion(rng);
    CHECK(qdist(recompose(symplectic_split(p, fr), fr), p) <= 1e-14);
  }
}
