#include "verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "biharm/algebra.hpp"
#include "biharm/basis.hpp"
#include "biharm/goursat.hpp"
#include "biharm/monogenic.hpp"
#include "biharm/numeric.hpp"
#include "biharm/sympoly.hpp"
#include "json_io.hpp"

namespace biharm::verify {

namespace {

const Complex kI(0.0, 1.0);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex disk(double r = 1.0) { return {uniform(-r, r), uniform(-r, r)}; }

  BiharmonicBasis basis(double alpha_lo = 0.1, double alpha_hi = 10.0) {
    const Complex a = std::polar(uniform(alpha_lo, alpha_hi), uniform(0.0, 2.0 * std::numbers::pi));
    const Complex b1 = disk(5.0);
    Complex b2 = disk(5.0);
    while (std::abs(b2 - b1) < 1e-3) b2 = disk(5.0);
    return BiharmonicBasis::make(a, b1, b2, uniform(0, 1) < 0.5 ? Sign::Plus : Sign::Minus);
  }

  HoloPoly holo(int max_degree) {
    const int deg = std::uniform_int_distribution<int>(0, max_degree)(rng_);
    std::vector<Complex> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = disk();
    return HoloPoly(std::move(c));
  }

  AlgebraElement element() { return {disk(3.0), disk(3.0)}; }
  Phi0Params params() { return {uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)}; }

 private:
  std::mt19937_64 rng_;
};

struct Suite {
  std::vector<CheckResult> results;
  std::string module;

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    results.push_back({module, name, ok, detail});
  }
};

std::string fmt(double v) { return io::format_double(v); }

void algebra_suite(Suite& s, Sampler& r) {
  s.module = "algebra_core";
  bool comm = true, assoc = true, dist = true;
  for (int k = 0; k < 200; ++k) {
    const AlgebraElement a = r.element(), b = r.element(), c = r.element();
    comm = comm && a * b == b * a;
    assoc = assoc && approx_equal((a * b) * c, a * (b * c));
    dist = dist && approx_equal(a * (b + c), a * b + a * c);
  }
  s.check("commutativity", comm);
  s.check("associativity", assoc);
  s.check("distributivity", dist);

  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const AlgebraElement a = r.element();
    if (!a.is_invertible()) continue;
    worst = std::max(worst, (a.inverse() * a - AlgebraElement::identity()).coord_norm());
  }
  s.check("inverse_round_trip", worst <= 1e-12, "max_error=" + fmt(worst));
}

void basis_suite(Suite& s, Sampler& r) {
  s.module = "basis_catalog";
  double worst = 0.0, table = 0.0, trip = 0.0;
  bool sum_nonzero = true, zeta_ok = true;
  for (int k = 0; k < 1000; ++k) {
    const BiharmonicBasis b = r.basis();
    const IdentityReport rep = verify_biharmonic_identity(b);
    worst = std::max(worst, rep.residual);
    sum_nonzero = sum_nonzero && rep.ok;
    const ProductTable t = b.product_table();
    const double scale = std::max(1.0, std::pow(b.e1().coord_norm(), 2));
    table = std::max({table, (t.e1_sq - b.e1() * b.e1()).coord_norm() / scale,
                      (t.e2_sq - b.e2() * b.e2()).coord_norm() / scale,
                      (t.e1_e2 - b.e1() * b.e2()).coord_norm() / scale});
    const AlgebraElement a = r.element();
    trip = std::max(trip, (b.recompose(b.decompose(a)) - a).coord_norm() / std::max(1.0, a.coord_norm()));
    const AlgebraElement z = b.zeta(r.uniform(-3, 3), r.uniform(-3, 3));
    zeta_ok = zeta_ok && z.is_invertible() && approx_equal(z * z.inverse(), AlgebraElement::identity());
  }
  s.check("biharmonic_identity", worst <= 1e-10 && sum_nonzero, "max_residual=" + fmt(worst));
  s.check("product_table", table <= 1e-12, "max_error=" + fmt(table));
  s.check("decompose_round_trip", trip <= 1e-12, "max_error=" + fmt(trip));
  s.check("zeta_invertible", zeta_ok);

  const BiharmonicBasis gp = presets::gp_basis();
  s.check("gp_table", gp.e1() == AlgebraElement::identity() &&
                          approx_equal(gp.e2() * gp.e2(), gp.e1() + 2.0 * kI * gp.e2()));
}

void sympoly_suite(Suite& s, Sampler& r, double tol) {
  s.module = "sympoly";
  bool inv = true, hom = true, harm = true, mixed = true;
  for (int k = 0; k < 100; ++k) {
    const HoloPoly p = r.holo(10);
    inv = inv && approx_equal(p.primitive().derivative(), p);
    const BiharmonicBasis b = r.basis(0.2, 3.0);
    const HoloPoly q = r.holo(5), w = r.holo(5);
    hom = hom && (substitute_plane(q * w, b) - substitute_plane(q, b) * substitute_plane(w, b)).is_zero(tol);
    const ComplexBiPoly img = substitute_plane(r.holo(8), b);
    harm = harm && real_part(img).bilaplacian().is_zero(tol) && imag_part(img).bilaplacian().is_zero(tol);
    const RealBiPoly re = real_part(img);
    mixed = mixed && (re.dx().dy() - re.dy().dx()).is_zero(kExactTolerance);
  }
  s.check("derivative_of_primitive", inv);
  s.check("substitution_homomorphism", hom);
  s.check("holomorphic_images_biharmonic", harm);
  s.check("mixed_partials_commute", mixed);
}

void monogenic_suite(Suite& s, Sampler& r, double tol) {
  s.module = "monogenic_engine";
  bool cr = true, expanded = true, bih = true, recomposed = true, closure = true;
  for (int k = 0; k < 200; ++k) {
    const MonogenicFn m(r.basis(), r.holo(6), r.holo(6));
    const ComponentSet c = m.components();
    cr = cr && cr_residual_compact(m).is_zero(tol);
    for (const auto& e : cr_residual_expanded(c, m.basis())) expanded = expanded && e.is_zero(tol);
    bih = bih && biharmonic_check(m, tol).ok;
    if (k < 100) {
      const double x = r.uniform(-1, 1), y = r.uniform(-1, 1);
      const AlgebraElement v = m(x, y);
      recomposed = recomposed && approx_equal(m.basis().recompose(c(x, y)), v, 1e-10 * (1.0 + v.coord_norm()));
      const AlgebraElement d = m.derivative()(x, y);
      const AlgebraElement ref = m.coordinates().dx()(x, y) * m.basis().e1().inverse();
      closure = closure && approx_equal(d, ref, 1e-9 * (1.0 + d.coord_norm()));
    }
  }
  s.check("cr_compact", cr);
  s.check("cr_expanded", expanded);
  s.check("biharmonic_components", bih);
  s.check("component_recomposition", recomposed);
  s.check("derivative_closure", closure);

  // Perturbed assemblies fail both encodings together.
  bool equivalence = true;
  for (int k = 0; k < 50; ++k) {
    const MonogenicFn m(r.basis(), r.holo(4), r.holo(4));
    ComponentSet c = m.components();
    c.u3 = c.u3 + RealBiPoly::monomial(1, 0, r.uniform(0.5, 1.0));
    const bool compact_zero = cr_residual_compact(RawAssembly{m.basis(), c}).is_zero(tol);
    bool expanded_zero = true;
    for (const auto& e : cr_residual_expanded(c, m.basis())) expanded_zero = expanded_zero && e.is_zero(tol);
    equivalence = equivalence && !compact_zero && !expanded_zero;
  }
  s.check("cr_encodings_equivalent", equivalence);

  const BiharmonicBasis nb = presets::new_basis();
  const ElementPoly raw = cr_residual_compact(RawAssembly{nb, {RealBiPoly::x(), {}, {}, {}}});
  s.check("non_monogenic_counterexample", approx_equal(raw(0.0, 0.0), -(nb.e1() * nb.e2())));

  bool closed_form = true;
  for (int k = 0; k < 50; ++k) {
    const HoloPoly f = r.holo(6), f0 = r.holo(6);
    const ComplexBiPoly zy = ComplexBiPoly::x() + 2.0 * kI * ComplexBiPoly::y();
    const ComplexBiPoly ft = substitute_z(f) - zy * substitute_z(f.derivative()) - substitute_z(f0);
    const ComponentSet c = MonogenicFn(nb, f, f0).components();
    closed_form = closed_form && (c.u1 - real_part(substitute_z(f) + ft)).is_zero(tol) &&
                  (c.u4 - real_part(ft)).is_zero(tol);
  }
  s.check("distinguished_basis_closed_form", closed_form);
}

void goursat_suite(Suite& s, Sampler& r, double tol) {
  s.module = "goursat_reconstruct";
  bool trip = true, lemma = true, kernel = true, consistent = true, bih = true;
  for (int k = 0; k < 200; ++k) {
    const GoursatPair g{r.holo(6), r.holo(6)};
    const RealBiPoly u = goursat_u(g);
    bih = bih && u.bilaplacian().is_zero(tol);
    for (int q = 0; q < 5; ++q) trip = trip && (reconstruct(g, r.params()).components().u1 - u).is_zero(tol);
    const MonogenicFn a = reconstruct(g);
    const MonogenicFn b = lift(g.psi, g.phi.primitive());
    consistent = consistent && a.f() == b.f() && a.f0() == b.f0();

    const HoloPoly f1 = r.holo(6), f2 = r.holo(6);
    const RealBiPoly target = real_part(substitute_z(f1) + conj_z() * substitute_z(f2.derivative()));
    lemma = lemma && (lift(f1, f2).components().u1 - target).is_zero(tol);

    const MonogenicFn p0 = phi0(r.params());
    kernel = kernel && p0.components().u1.is_zero(tol) && cr_residual_compact(p0).is_zero(tol);
  }
  s.check("reconstruct_round_trip", trip);
  s.check("lift_identity", lemma);
  s.check("phi0_soundness", kernel);
  s.check("reconstruct_matches_lift", consistent);
  s.check("goursat_biharmonic", bih);

  for (int n = 1; n <= 6; ++n) {
    const KernelReport k = u1_kernel(n);
    double worst = 0.0;
    for (const Phi0Params p : {Phi0Params{1, 0, 0, 0}, Phi0Params{0, 1, 0, 0}, Phi0Params{0, 0, 1, 0},
                               Phi0Params{0, 0, 0, 1}}) {
      const MonogenicFn m = phi0(p);
      worst = std::max(worst, kernel_membership_residual(k, pack_pair(m.f(), m.f0(), n)));
    }
    bool vectors_ok = true;
    for (const auto& v : k.basis_vectors) vectors_ok = vectors_ok && unpack_pair(v, n).components().u1.is_zero(tol);
    s.check("u1_kernel_degree_" + std::to_string(n), worst <= 1e-10 && vectors_ok,
            "dimension=" + std::to_string(k.dimension) + " rank=" + std::to_string(k.rank) +
                " phi0_residual=" + fmt(worst));
  }
}

void numeric_suite(Suite& s, Sampler& r) {
  s.module = "numeric_verify";
  double min_cr = 1e300, min_bih = 1e300;
  for (int k = 0; k < 3; ++k) {
    std::vector<Complex> f(7), f0(7);
    for (auto& v : f) v = r.disk();
    for (auto& v : f0) v = r.disk();
    f.back() = std::polar(1.0, r.uniform(0.0, 6.28));
    const MonogenicFn m(r.basis(0.5, 2.0), HoloPoly(f), HoloPoly(f0));
    const ConvergenceStudy study = convergence_study(m, {-0.5, -0.5, 0.5, 0.5, 17});
    min_cr = std::min(min_cr, study.min_cr_order());
    min_bih = std::min(min_bih, study.min_biharmonic_order());
  }
  s.check("fd_cr_order", min_cr >= 1.9, "min_order=" + fmt(min_cr));
  s.check("fd_biharmonic_order", min_bih >= 1.9, "min_order=" + fmt(min_bih));

  const MonogenicFn m(r.basis(0.5, 2.0), HoloPoly({r.disk(), r.disk(), r.disk(), 1.0}), r.holo(3));
  const ProbeTable t = derivative_limit_probe(m, 0.3, 0.4, 16, 1e-6);
  double lo = 1e300, hi = 0.0;
  for (const auto& row : t.errors) {
    lo = std::min(lo, row.back());
    hi = std::max(hi, row.back());
  }
  s.check("probe_direction_independence", hi <= 10.0 * lo, "spread=" + fmt(hi / lo));
}

}  // namespace

std::vector<CheckResult> run_all(const Options& opts) {
  Sampler r(opts.seed);
  Suite s;
  algebra_suite(s, r);
  basis_suite(s, r);
  sympoly_suite(s, r, opts.tolerance);
  monogenic_suite(s, r, opts.tolerance);
  goursat_suite(s, r, opts.tolerance);
  numeric_suite(s, r);
  return s.results;
}

}  // namespace biharm::verify
