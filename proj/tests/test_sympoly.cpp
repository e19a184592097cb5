#include <doctest.h>

#include <random>

#include "biharm/basis.hpp"
#include "biharm/errors.hpp"
#include "biharm/sympoly.hpp"
#include "oracles.hpp"

using namespace biharm;

namespace {

const Complex I(0.0, 1.0);
const RealBiPoly X = RealBiPoly::x();
const RealBiPoly Y = RealBiPoly::y();

RealBiPoly mono(int i, int j, double c = 1.0) { return RealBiPoly::monomial(i, j, c); }

}  // namespace

TEST_CASE("holomorphic calculus") {
  const HoloPoly z2 = HoloPoly::monomial(2);
  CHECK(z2.derivative() == HoloPoly({0.0, 2.0}));
  CHECK(HoloPoly::z().primitive() == HoloPoly({0.0, 0.0, 0.5}));
  CHECK(z2(Complex(1, 2)) == Complex(-3, 4));
  CHECK(HoloPoly().degree() == -1);
  CHECK(HoloPoly({1.0, 0.0, 0.0}).degree() == 0);
  CHECK(HoloPoly::constant(3.0).derivative().is_zero());
  CHECK((z2 - z2).is_zero());
  CHECK((HoloPoly({1.0, 1.0}) * HoloPoly({-1.0, 1.0})) == HoloPoly({-1.0, 0.0, 1.0}));
}

TEST_CASE("derivative inverts primitive") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const HoloPoly p = oracle::random_holo(rng, 10);
    CHECK(approx_equal(p.primitive().derivative(), p));
    CHECK(p.primitive().coeff(0) == 0.0);
  }
}

TEST_CASE("degree cap") {
  const HoloPoly big = HoloPoly::monomial(20);
  CHECK_THROWS_AS(big * big, Error);
  CHECK_THROWS_AS(HoloPoly::monomial(kMaxDegree).primitive(), Error);
  CHECK_NOTHROW(HoloPoly::monomial(kMaxDegree));
  const RealBiPoly x20 = mono(20, 0);
  CHECK_THROWS_AS(x20 * x20, Error);
}

TEST_CASE("substitute_plane") {
  const BiharmonicBasis nb = presets::new_basis();
  CHECK((substitute_plane(HoloPoly::z(), nb) - (ComplexBiPoly::x() + I * ComplexBiPoly::y())).empty());

  const ComplexBiPoly sq = substitute_plane(HoloPoly::monomial(2), nb);
  CHECK(sq.coeff(2, 0) == 1.0);
  CHECK(sq.coeff(0, 2) == -1.0);
  CHECK(sq.coeff(1, 1) == 2.0 * I);

  const auto b = BiharmonicBasis::make(2.0 * I, 0.0, 1.0, Sign::Minus);
  const ComplexBiPoly lin = substitute_plane(HoloPoly::z(), b);
  CHECK(lin.coeff(1, 0) == 2.0 * I);
  CHECK(lin.coeff(0, 1) == 2.0);

  const ComplexBiPoly zz = conj_z() * substitute_z(HoloPoly::z());
  CHECK((real_part(zz) - (mono(2, 0) + mono(0, 2))).empty());
  CHECK(imag_part(zz).empty());
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const BiharmonicBasis b = oracle::random_basis(rng, 0.2, 3.0);
    const HoloPoly p = oracle::random_holo(rng, 5);
    const HoloPoly q = oracle::random_holo(rng, 5);
    const ComplexBiPoly lhs = substitute_plane(p * q, b);
    const ComplexBiPoly rhs = substitute_plane(p, b) * substitute_plane(q, b);
    CHECK((lhs - rhs).is_zero(1e-12));
    CHECK((substitute_plane(p + q, b) - substitute_plane(p, b) - substitute_plane(q, b)).is_zero(1e-12));
  }
}

TEST_CASE("differential operators") {
  CHECK(mono(3, 1).bilaplacian().empty());
  CHECK(mono(2, 2).bilaplacian() == RealBiPoly::constant(8.0));
  CHECK((mono(2, 0) + mono(0, 2)).laplacian() == RealBiPoly::constant(4.0));
  CHECK(mono(4, 0).bilaplacian() == RealBiPoly::constant(24.0));
  CHECK((X * Y).dx() == Y);
  CHECK(RealBiPoly::constant(5.0).dy().empty());
}

TEST_CASE("bilaplacian agrees with the monomial-map oracle") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    RealBiPoly p;
    for (int i = 0; i <= 7; ++i)
      for (int j = 0; i + j <= 7; ++j) p += mono(i, j, u(rng));
    const oracle::MonomialMap ref = oracle::bilaplacian(oracle::to_map(p));
    const oracle::MonomialMap got = oracle::to_map(p.bilaplacian());
    for (const auto& [ij, c] : ref) {
      const double g = got.count(ij) ? got.at(ij) : 0.0;
      CHECK(g == doctest::Approx(c));
    }
    for (const auto& [ij, c] : got) CHECK(ref.count(ij) == 1);
    CHECK((p.dx().dy() - p.dy().dx()).is_zero(kExactTolerance));
  }
}

TEST_CASE("holomorphic images are annihilated by the bilaplacian") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const BiharmonicBasis b = oracle::random_basis(rng, 0.2, 3.0);
    const ComplexBiPoly img = substitute_plane(oracle::random_holo(rng, 8), b);
    CHECK(real_part(img).bilaplacian().is_zero(1e-12));
    CHECK(imag_part(img).bilaplacian().is_zero(1e-12));
    CHECK(real_part(img).laplacian().is_zero(1e-12));
  }
}

TEST_CASE("is_zero uses the magnitude envelope") {
  CHECK(RealBiPoly{}.is_zero(0.0));
  CHECK((X - X).is_zero(0.0));
  CHECK_FALSE(mono(1, 0, 1e-6).is_zero(1e-12));
  // 1e-12 of cancellation residue against unit-size terms is zero at tol 1e-10.
  const RealBiPoly residue = (X + mono(1, 0, 1e-12)) - X;
  CHECK(residue.is_zero(1e-10));
  CHECK_FALSE(residue.is_zero(1e-14));
}

TEST_CASE("evaluation") {
  const RealBiPoly p = mono(2, 1, 3.0) - mono(0, 3) + RealBiPoly::constant(2.0);
  CHECK(p(2.0, -1.0) == doctest::Approx(3.0 * 4 * -1 + 1 + 2));
  const ComplexBiPoly q = substitute_z(HoloPoly::monomial(3));
  CHECK(q(1.0, 2.0) == std::pow(Complex(1, 2), 3));
}
