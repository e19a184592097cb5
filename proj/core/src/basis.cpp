#include "biharm/basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "biharm/errors.hpp"

namespace biharm {

BiharmonicBasis::BiharmonicBasis(Complex alpha1, Complex beta1, Complex beta2, Sign sign)
    : alpha1_(checked(alpha1)),
      beta1_(checked(beta1)),
      beta2_(checked(beta2)),
      sign_(sign),
      e1_(alpha1, beta1),
      e2_(signed_i() * alpha1, signed_i() * beta2) {}

BiharmonicBasis BiharmonicBasis::make(Complex alpha1, Complex beta1, Complex beta2, Sign sign) {
  if (alpha1 == 0.0) throw Error(ErrorKind::InvalidBasis, "alpha1 must be nonzero");
  if (beta1 == beta2) throw Error(ErrorKind::InvalidBasis, "beta1 must differ from beta2");
  BiharmonicBasis b(alpha1, beta1, beta2, sign);
  if (!verify_biharmonic_identity(b).ok) {
    throw Error(ErrorKind::InvalidBasis, "parameters violate the biharmonic identity");
  }
  return b;
}

ProductTable BiharmonicBasis::product_table() const {
  return {
      alpha1_ * AlgebraElement(alpha1_, 2.0 * beta1_),
      -alpha1_ * AlgebraElement(alpha1_, 2.0 * beta2_),
      signed_i() * alpha1_ * AlgebraElement(alpha1_, beta1_ + beta2_),
  };
}

RealComponents BiharmonicBasis::decompose(const AlgebraElement& a) const {
  // alpha1 c1 + s i alpha1 c2 = w_e,  beta1 c1 + s i beta2 c2 = w_rho
  const Complex det = signed_i() * alpha1_ * (beta2_ - beta1_);
  const Complex c1 = (beta2_ * a.e() - alpha1_ * a.rho()) / (alpha1_ * (beta2_ - beta1_));
  const Complex c2 = (alpha1_ * a.rho() - beta1_ * a.e()) / det;
  return {c1.real(), c1.imag(), c2.real(), c2.imag()};
}

AlgebraElement BiharmonicBasis::recompose(const RealComponents& c) const {
  return c.c1() * e1_ + c.c2() * e2_;
}

double BiharmonicBasis::norm(const AlgebraElement& a) const {
  const RealComponents c = decompose(a);
  return std::sqrt(c.u1 * c.u1 + c.u2 * c.u2 + c.u3 * c.u3 + c.u4 * c.u4);
}

AlgebraElement BiharmonicBasis::zeta(double x, double y) const { return x * e1_ + y * e2_; }

Complex BiharmonicBasis::z_map(double x, double y) const {
  return alpha1_ * Complex(x, sign_value(sign_) * y);
}

IdentityReport verify_biharmonic_identity(const AlgebraElement& e1, const AlgebraElement& e2,
                                          double tol) {
  const AlgebraElement sq1 = e1 * e1;
  const AlgebraElement sq2 = e2 * e2;
  IdentityReport r;
  r.lhs = sq1 * sq1 + 2.0 * sq1 * sq2 + sq2 * sq2;
  r.sum_sq = sq1 + sq2;
  const double n1 = e1.coord_norm();
  const double scale4 = std::max(1e-300, n1 * n1 * n1 * n1);
  r.residual = r.lhs.coord_norm() / scale4;
  r.ok = r.residual <= tol && r.sum_sq.coord_norm() > tol * n1 * n1;
  return r;
}

IdentityReport verify_biharmonic_identity(const BiharmonicBasis& b, double tol) {
  return verify_biharmonic_identity(b.e1(), b.e2(), tol);
}

namespace presets {

BiharmonicBasis gp_basis() { return BiharmonicBasis::make(1.0, 0.0, -0.5, Sign::Plus); }

BiharmonicBasis new_basis() { return BiharmonicBasis::make(1.0, 1.0, 2.0, Sign::Plus); }

BiharmonicBasis e_identity(Complex beta2, Sign sign) {
  if (beta2 == 0.0) throw Error(ErrorKind::InvalidBasis, "e_identity requires beta2 != 0");
  return BiharmonicBasis::make(1.0, 0.0, beta2, sign);
}

BiharmonicBasis by_name(std::string_view name) {
  if (name == "gp_basis") return gp_basis();
  if (name == "new_basis") return new_basis();
  throw Error(ErrorKind::InvalidBasis, "unknown preset '" + std::string(name) + "'");
}

}  // namespace presets

}  // namespace biharm
