#include "biharm/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "biharm/errors.hpp"

namespace biharm {

Complex checked(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorKind::NonFinite, "non-finite complex coordinate");
  }
  return z;
}

AlgebraElement::AlgebraElement(Complex e_coord, Complex rho_coord)
    : e_(checked(e_coord)), rho_(checked(rho_coord)) {}

AlgebraElement AlgebraElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroElement, "zero element has no inverse");
  if (!is_invertible()) {
    throw Error(ErrorKind::NotInvertible, "radical element is a zero divisor");
  }
  return {1.0 / e_, -rho_ / (e_ * e_)};
}

AlgebraElement AlgebraElement::pow(unsigned n) const {
  // (a e + b rho)^n = a^n e + n a^(n-1) b rho
  if (n == 0) return identity();
  Complex lead = 1.0;
  for (unsigned k = 1; k < n; ++k) lead *= e_;
  return {lead * e_, static_cast<double>(n) * lead * rho_};
}

double AlgebraElement::coord_norm() const noexcept {
  return std::sqrt(std::norm(e_) + std::norm(rho_));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  e_ += o.e_;
  rho_ += o.rho_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  e_ -= o.e_;
  rho_ -= o.rho_;
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const AlgebraElement& o) {
  const Complex rho = e_ * o.rho_ + rho_ * o.e_;
  e_ *= o.e_;
  rho_ = rho;
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex s) {
  e_ *= s;
  rho_ *= s;
  return *this;
}

bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double rel) {
  const double scale = std::max({1.0, a.coord_norm(), b.coord_norm()});
  return std::abs(a.e() - b.e()) <= rel * scale &&
         std::abs(a.rho() - b.rho()) <= rel * scale;
}

}  // namespace biharm
