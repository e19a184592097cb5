#include <doctest.h>

#include <random>

#include "biharm/monogenic.hpp"
#include "oracles.hpp"

using namespace biharm;

namespace {

const Complex I(0.0, 1.0);
const RealBiPoly X = RealBiPoly::x();
const RealBiPoly Y = RealBiPoly::y();
const HoloPoly Z = HoloPoly::z();

bool same(const RealBiPoly& a, const RealBiPoly& b, double tol = 1e-12) { return (a - b).is_zero(tol); }

MonogenicFn random_monogenic(std::mt19937_64& rng, int degree = 6) {
  return {oracle::random_basis(rng), oracle::random_holo(rng, degree), oracle::random_holo(rng, degree)};
}

}  // namespace

TEST_CASE("eval on the distinguished basis") {
  const BiharmonicBasis nb = presets::new_basis();
  const MonogenicFn zeta(nb, Z, {});
  CHECK(zeta(1.0, 1.0) == AlgebraElement(Complex(1, 1), Complex(1, 2)));
  CHECK(approx_equal(zeta(1.0, 1.0), nb.zeta(1.0, 1.0)));

  const MonogenicFn rho_fn(nb, {}, HoloPoly::constant(1.0));
  CHECK(rho_fn(0.3, -2.0) == AlgebraElement::radical());

  const MonogenicFn m(nb, HoloPoly::monomial(2), HoloPoly::monomial(2, -1.0));
  CHECK(m(1.0, 0.0) == AlgebraElement(1.0, 1.0));
}

TEST_CASE("symbolic coordinates agree with the pointwise formula") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int trial = 0; trial < 50; ++trial) {
    const BiharmonicBasis b = oracle::random_basis(rng, 0.3, 3.0);
    const auto f = oracle::random_coeffs(rng, 5);
    const auto f0 = oracle::random_coeffs(rng, 4);
    const MonogenicFn m(b, HoloPoly(f), HoloPoly(f0));
    const ElementPoly coords = m.coordinates();
    const ComponentSet comps = m.components();
    for (int k = 0; k < 5; ++k) {
      const double x = u(rng), y = u(rng);
      const AlgebraElement ref = oracle::phi_value(b, f, f0, x, y);
      const double tol = 1e-10 * (1.0 + ref.coord_norm());
      CHECK(approx_equal(m(x, y), ref, tol));
      CHECK(approx_equal(coords(x, y), ref, tol));
      CHECK(approx_equal(b.recompose(comps(x, y)), ref, 1e-10 * (1.0 + ref.coord_norm())));
    }
  }
}

TEST_CASE("components") {
  const BiharmonicBasis nb = presets::new_basis();
  SUBCASE("zeta") {
    const ComponentSet c = MonogenicFn(nb, Z, {}).components();
    CHECK(same(c.u1, X));
    CHECK(c.u2.is_zero(1e-15));
    CHECK(same(c.u3, Y));
    CHECK(c.u4.is_zero(1e-15));
  }
  SUBCASE("i zeta") {
    const ComponentSet c = MonogenicFn(nb, I * Z, {}).components();
    CHECK(c.u1.is_zero(1e-15));
    CHECK(same(c.u2, X));
    CHECK(c.u3.is_zero(1e-15));
    CHECK(same(c.u4, Y));
  }
  SUBCASE("z^2, -z^2") {
    const ComponentSet c = MonogenicFn(nb, HoloPoly::monomial(2), HoloPoly::monomial(2, -1.0)).components();
    CHECK(same(c.u1, X * X + Y * Y));
  }
  SUBCASE("closed form over the distinguished basis") {
    // F~ = F - (z + i y) F' - F0;  U1 = Re(F + F~), U2 = Im(F + F~), U3 = -Im F~, U4 = Re F~
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
      const HoloPoly f = oracle::random_holo(rng, 6);
      const HoloPoly f0 = oracle::random_holo(rng, 6);
      const ComplexBiPoly zy = ComplexBiPoly::x() + 2.0 * I * ComplexBiPoly::y();
      const ComplexBiPoly ft = substitute_z(f) - zy * substitute_z(f.derivative()) - substitute_z(f0);
      const ComponentSet c = MonogenicFn(nb, f, f0).components();
      CHECK(same(c.u1, real_part(substitute_z(f) + ft)));
      CHECK(same(c.u2, imag_part(substitute_z(f) + ft)));
      CHECK(same(c.u3, -imag_part(ft)));
      CHECK(same(c.u4, real_part(ft)));
    }
  }
}

TEST_CASE("derivative") {
  const BiharmonicBasis nb = presets::new_basis();
  const MonogenicFn d = MonogenicFn(nb, HoloPoly::monomial(2), Z).derivative();
  CHECK(d.f() == HoloPoly({0.0, 2.0}));
  CHECK(d.f0() == HoloPoly::constant(1.0));
  CHECK(MonogenicFn(nb, HoloPoly::constant(3.0), HoloPoly::constant(I)).derivative().f().is_zero());
  MonogenicFn cube(nb, HoloPoly::monomial(3), {});
  for (int k = 0; k < 4; ++k) cube = cube.derivative();
  CHECK(cube.f().is_zero());
  CHECK(cube.f0().is_zero());

  // Phi' = dPhi/dx e1^-1 at sampled points.
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const MonogenicFn m = random_monogenic(rng, 5);
    const ElementPoly phi_x = m.coordinates().dx();
    const AlgebraElement e1_inv = m.basis().e1().inverse();
    for (int k = 0; k < 4; ++k) {
      const double x = u(rng), y = u(rng);
      const AlgebraElement lhs = m.derivative()(x, y);
      CHECK(approx_equal(lhs, phi_x(x, y) * e1_inv, 1e-9 * (1.0 + lhs.coord_norm())));
    }
  }
}

TEST_CASE("compact Cauchy-Riemann residual") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const MonogenicFn m = random_monogenic(rng);
    CHECK(cr_residual_compact(m).is_zero(1e-10));
  }

  const BiharmonicBasis nb = presets::new_basis();
  const RawAssembly raw{nb, {X, {}, {}, {}}};
  const ElementPoly r = cr_residual_compact(raw);
  CHECK(r.e == ComplexBiPoly::constant(-I));
  CHECK(r.rho == ComplexBiPoly::constant(-3.0 * I));
  CHECK(approx_equal(r(0.2, 0.7), -(nb.e1() * nb.e2())));
}

TEST_CASE("expanded residual is a re-encoding of the compact one") {
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const MonogenicFn m = random_monogenic(rng, 5);
    const BiharmonicBasis& b = m.basis();
    const ComponentSet c = m.components();
    for (const RealBiPoly& r : cr_residual_expanded(c, b)) CHECK(r.is_zero(1e-10));

    // Perturbed assembly: compact = alpha1^2 (E1 + i E2) e + alpha1 (E3 + i E4) rho.
    ComponentSet bent = c;
    bent.u2 = bent.u2 + RealBiPoly::monomial(1, 1, u(rng)) + RealBiPoly::monomial(0, 1, u(rng));
    const RawAssembly raw{b, bent};
    const ElementPoly compact = cr_residual_compact(raw);
    const auto expanded = cr_residual_expanded(bent, b);
    const ComplexBiPoly e_part = ComplexBiPoly(expanded[0]) + I * ComplexBiPoly(expanded[1]);
    const ComplexBiPoly rho_part = ComplexBiPoly(expanded[2]) + I * ComplexBiPoly(expanded[3]);
    CHECK((compact.e - b.alpha1() * b.alpha1() * e_part).is_zero(1e-10));
    CHECK((compact.rho - b.alpha1() * rho_part).is_zero(1e-10));
    CHECK_FALSE(compact.is_zero(1e-10));
  }

  const auto zeros = cr_residual_expanded({}, presets::new_basis());
  for (const RealBiPoly& r : zeros) CHECK(r.empty());
  const auto bad = cr_residual_expanded({X, {}, {}, {}}, presets::new_basis());
  bool any = false;
  for (const RealBiPoly& r : bad) any = any || !r.is_zero(1e-10);
  CHECK(any);
}

TEST_CASE("biharmonic_check") {
  const BiharmonicBasis nb = presets::new_basis();
  const BiharmonicReport r = biharmonic_check({nb, HoloPoly::monomial(3), HoloPoly::monomial(2)});
  CHECK(r.ok);
  CHECK(r.multiplier == AlgebraElement{});
  for (const auto& p : r.bilaplacians) CHECK(p.is_zero(1e-12));

  CHECK(biharmonic_check({nb, {}, {}}).ok);

  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 50; ++trial) {
    const MonogenicFn m = random_monogenic(rng);
    const BiharmonicReport rr = biharmonic_check(m);
    CHECK(rr.ok);
    // Independent differentiation route.
    const ComponentSet c = m.components();
    for (int k = 0; k < 4; ++k) {
      const auto ref = oracle::bilaplacian(oracle::to_map(c[k]));
      CHECK(oracle::max_abs(ref) <= 1e-10 * (1.0 + c[k].scale() * 840.0));
    }
  }
}

TEST_CASE("adding monogenic functions requires one basis") {
  const MonogenicFn a(presets::new_basis(), Z, {});
  const MonogenicFn b(presets::gp_basis(), Z, {});
  CHECK_THROWS_AS(a + b, Error);
  CHECK((a + a).f() == 2.0 * Z);
}
