#include <doctest.h>

#include <cmath>
#include <random>

#include "biharm/errors.hpp"
#include "biharm/numeric.hpp"
#include "oracles.hpp"

using namespace biharm;

namespace {

const Complex I(0.0, 1.0);
const HoloPoly Z = HoloPoly::z();

RealBiPoly mono(int i, int j, double c = 1.0) { return RealBiPoly::monomial(i, j, c); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.kind();
  }
  return ErrorKind::NonFinite;
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK(kind_of([] { GridSpec{0, 0, 0, 1, 5}.validate(); }) == ErrorKind::InvalidGrid);
  CHECK(kind_of([] { GridSpec{0, 1, 1, 0, 5}.validate(); }) == ErrorKind::InvalidGrid);
  CHECK(kind_of([] { GridSpec{0, 0, 1, 1, 4}.validate(); }) == ErrorKind::GridTooSmall);
  CHECK_NOTHROW(GridSpec{0, 0, 1, 1, 5}.validate());
  const GridSpec g{0, 0, 1, 2, 5};
  CHECK(g.hx() == 0.25);
  CHECK(g.y(4) == 2.0);
  CHECK(g.refined().n == 9);
  CHECK(g.refined().refined().n == 17);
}

TEST_CASE("sample_components") {
  const BiharmonicBasis nb = presets::new_basis();
  const GridSpec g{0, 0, 1, 1, 5};
  const auto zeta = sample_components({nb, Z, {}}, g);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      CHECK(zeta[0](i, j) == doctest::Approx(g.x(i)));
      CHECK(zeta[2](i, j) == doctest::Approx(g.y(j)));
    }
  for (const Field& f : sample_components({nb, {}, {}}, g))
    for (double v : f.values) CHECK(v == 0.0);
  const auto sq = sample_components({nb, HoloPoly::monomial(2), HoloPoly::monomial(2, -1.0)}, g);
  CHECK(sq[0](3, 2) == doctest::Approx(0.75 * 0.75 + 0.5 * 0.5));
}

TEST_CASE("biharmonic stencil") {
  const GridSpec g{-1, -1, 1, 1, 9};
  CHECK(fd_biharmonic_residual(sample(mono(3, 1), g), g.hx()) <= 1e-8);
  CHECK(fd_biharmonic_residual(sample(RealBiPoly::constant(4.0), g), g.hx()) == 0.0);
  const double coarse = fd_biharmonic_residual(sample(mono(2, 2), g), g.hx());
  const double fine = fd_biharmonic_residual(sample(mono(2, 2), g.refined()), g.refined().hx());
  CHECK(coarse == doctest::Approx(8.0).epsilon(1e-8));
  CHECK(coarse / fine == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS(fd_biharmonic_residual(sample(mono(1, 0), GridSpec{0, 0, 1, 1, 4}), 1.0 / 3), Error);
}

TEST_CASE("biharmonic stencil converges at second order") {
  // x Re(z^5) is biharmonic but not harmonic, so the stencil error is c h^2.
  const RealBiPoly u = mono(1, 0) * real_part(substitute_z(HoloPoly::monomial(5)));
  REQUIRE(u.bilaplacian().is_zero(1e-12));
  GridSpec g{0.5, 0.5, 1.5, 1.5, 17};
  std::vector<double> res;
  for (int k = 0; k < 3; ++k, g = g.refined()) res.push_back(fd_biharmonic_residual(sample(u, g), g.hx()));
  for (double order : empirical_orders(res)) CHECK(order >= 1.9);
}

TEST_CASE("finite-difference Cauchy-Riemann residual") {
  const BiharmonicBasis nb = presets::new_basis();
  const MonogenicFn m(nb, HoloPoly::monomial(3), Z);
  const double r33 = fd_cr_residual(m, {0, 0, 1, 1, 33});
  const double r65 = fd_cr_residual(m, {0, 0, 1, 1, 65});
  CHECK(r33 / r65 == doctest::Approx(4.0).epsilon(0.05));

  const RawAssembly raw{nb, {RealBiPoly::x(), {}, {}, {}}};
  const double expected = nb.norm(nb.e1() * nb.e2());
  CHECK(fd_cr_residual(raw, {0, 0, 1, 1, 9}) == doctest::Approx(expected));
  CHECK(fd_cr_residual(raw, {0, 0, 1, 1, 33}) == doctest::Approx(expected));

  CHECK(fd_cr_residual({nb, HoloPoly::constant(2.0), HoloPoly::constant(I)}, {0, 0, 1, 1, 9}) <= 1e-12);
  CHECK_THROWS_AS(fd_cr_residual(m, {0, 0, 1, 1, 2}), Error);
}

TEST_CASE("derivative limit probe") {
  const BiharmonicBasis nb = presets::new_basis();
  SUBCASE("quadratic: first-order remainder") {
    const ProbeTable t = derivative_limit_probe({nb, HoloPoly::monomial(2), {}}, 1.0, 1.0, 16, 1e-5);
    REQUIRE(t.errors.size() == 16);
    for (const auto& row : t.ratios())
      for (double r : row) CHECK(r == doctest::Approx(2.0).epsilon(0.05));
  }
  SUBCASE("affine is exact") {
    const ProbeTable t = derivative_limit_probe({nb, Z, HoloPoly::constant(1.0)}, 0.3, -0.2, 8, 1e-3);
    for (const auto& row : t.errors)
      for (double e : row) CHECK(e <= 1e-12);
  }
  SUBCASE("zero function") {
    const ProbeTable t = derivative_limit_probe({nb, {}, {}}, 0.0, 0.0, 4, 1e-2);
    for (const auto& row : t.errors)
      for (double e : row) CHECK(e == 0.0);
  }
  SUBCASE("direction independence") {
    std::mt19937_64 rng(61);
    const MonogenicFn m(oracle::random_basis(rng, 0.5, 2.0), oracle::random_holo(rng, 4) + HoloPoly::monomial(3),
                        oracle::random_holo(rng, 4));
    const ProbeTable t = derivative_limit_probe(m, 0.3, 0.4, 16, 1e-6);
    double lo = 1e300, hi = 0.0;
    for (const auto& row : t.errors) {
      lo = std::min(lo, row.back());
      hi = std::max(hi, row.back());
    }
    CHECK(hi <= 10.0 * lo);
  }
  CHECK(kind_of([&] { derivative_limit_probe({nb, Z, {}}, 0, 0, 4, 0.0); }) == ErrorKind::DegenerateDirection);
}

TEST_CASE("convergence study measures a common window") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Complex> f = oracle::random_coeffs(rng, 6);
    f.back() = 1.0;
    const MonogenicFn m(oracle::random_basis(rng, 0.5, 2.0), HoloPoly(f), HoloPoly(oracle::random_coeffs(rng, 6)));
    const ConvergenceStudy s = convergence_study(m, {-0.5, -0.5, 0.5, 0.5, 17});
    CHECK(s.points == std::vector<int>{17, 33, 65});
    CHECK(s.min_cr_order() >= 1.9);
    CHECK(s.min_biharmonic_order() >= 1.9);
  }
  CHECK_THROWS_AS(fd_cr_residual({presets::new_basis(), Z, {}}, {0, 0, 1, 1, 5}, 3), Error);
}
