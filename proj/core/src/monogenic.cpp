#include "biharm/monogenic.hpp"

#include <stdexcept>

namespace biharm {

const RealBiPoly& ComponentSet::operator[](int k) const {
  switch (k) {
    case 0: return u1;
    case 1: return u2;
    case 2: return u3;
    case 3: return u4;
  }
  throw std::out_of_range("component index");
}

ElementPoly ComponentSet::recompose(const BiharmonicBasis& b) const {
  const Complex i(0.0, 1.0);
  const ComplexBiPoly c1 = ComplexBiPoly(u1) + i * ComplexBiPoly(u2);
  const ComplexBiPoly c2 = ComplexBiPoly(u3) + i * ComplexBiPoly(u4);
  const AlgebraElement& e1 = b.e1();
  const AlgebraElement& e2 = b.e2();
  return {e1.e() * c1 + e2.e() * c2, e1.rho() * c1 + e2.rho() * c2};
}

ComponentSet decompose(const ElementPoly& p, const BiharmonicBasis& b) {
  const Complex a = b.alpha1();
  const Complex gap = b.beta2() - b.beta1();
  const ComplexBiPoly c1 = (1.0 / (a * gap)) * (b.beta2() * p.e - a * p.rho);
  const ComplexBiPoly c2 = (1.0 / (b.signed_i() * a * gap)) * (a * p.rho - b.beta1() * p.e);
  return {real_part(c1), imag_part(c1), real_part(c2), imag_part(c2)};
}

AlgebraElement MonogenicFn::operator()(double x, double y) const {
  const Complex z = basis_.z_map(x, y);
  const Complex a = basis_.alpha1();
  const Complex lin = basis_.beta1() / a * z + basis_.signed_i() * (basis_.beta2() - basis_.beta1()) * y;
  return {f_(z), lin * f_.derivative()(z) + f0_(z)};
}

ElementPoly MonogenicFn::coordinates() const {
  const ComplexBiPoly z = plane_variable(basis_);
  const ComplexBiPoly lin = (basis_.beta1() / basis_.alpha1()) * z +
                            (basis_.signed_i() * (basis_.beta2() - basis_.beta1())) * ComplexBiPoly::y();
  return {compose(f_, z), lin * compose(f_.derivative(), z) + compose(f0_, z)};
}

ComponentSet MonogenicFn::components() const { return decompose(coordinates(), basis_); }

MonogenicFn MonogenicFn::operator+(const MonogenicFn& o) const {
  if (!(basis_ == o.basis_)) {
    throw Error(ErrorKind::InvalidBasis, "cannot add monogenic functions over different bases");
  }
  return {basis_, f_ + o.f_, f0_ + o.f0_};
}

ElementPoly cr_residual_compact(const ElementPoly& phi, const BiharmonicBasis& b) {
  return phi.dy() * b.e1() - phi.dx() * b.e2();
}

ElementPoly cr_residual_compact(const MonogenicFn& m) {
  return cr_residual_compact(m.coordinates(), m.basis());
}

ElementPoly cr_residual_compact(const RawAssembly& raw) {
  return cr_residual_compact(raw.coordinates(), raw.basis);
}

std::array<RealBiPoly, 4> cr_residual_expanded(const ComponentSet& c, const BiharmonicBasis& b) {
  const double s = sign_value(b.sign());
  const Complex sum = b.beta1() + b.beta2();
  const double re1 = b.beta1().real();
  const double im1 = b.beta1().imag();
  const double re2 = b.beta2().real();
  const double im2 = b.beta2().imag();

  const RealBiPoly u1x = c.u1.dx(), u1y = c.u1.dy();
  const RealBiPoly u2x = c.u2.dx(), u2y = c.u2.dy();
  const RealBiPoly u3x = c.u3.dx(), u3y = c.u3.dy();
  const RealBiPoly u4x = c.u4.dx(), u4y = c.u4.dy();

  return {
      u1y - s * u4y + s * u2x + u3x,
      u2y + s * u3y - s * u1x + u4x,
      2.0 * re1 * u1y - 2.0 * im1 * u2y - (s * sum.imag()) * u3y - (s * sum.real()) * u4y +
          (s * sum.imag()) * u1x + (s * sum.real()) * u2x + 2.0 * re2 * u3x - 2.0 * im2 * u4x,
      2.0 * im1 * u1y + 2.0 * re1 * u2y + (s * sum.real()) * u3y - (s * sum.imag()) * u4y -
          (s * sum.real()) * u1x + (s * sum.imag()) * u2x + 2.0 * im2 * u3x + 2.0 * re2 * u4x,
  };
}

BiharmonicReport biharmonic_check(const MonogenicFn& m, double tol) {
  const ComponentSet c = m.components();
  BiharmonicReport r;
  bool ok = true;
  for (int k = 0; k < 4; ++k) {
    r.bilaplacians[static_cast<std::size_t>(k)] = c[k].bilaplacian();
    ok = ok && r.bilaplacians[static_cast<std::size_t>(k)].is_zero(tol);
  }
  const AlgebraElement sum_sq = m.basis().e1() * m.basis().e1() + m.basis().e2() * m.basis().e2();
  r.multiplier = sum_sq * sum_sq;
  const double n1 = m.basis().e1().coord_norm();
  r.ok = ok && r.multiplier.coord_norm() <= tol * n1 * n1 * n1 * n1;
  return r;
}

}  // namespace biharm
