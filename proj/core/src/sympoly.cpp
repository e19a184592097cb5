#include "biharm/sympoly.hpp"

#include <utility>

#include "biharm/basis.hpp"

namespace biharm {

namespace {

void check_holo_degree(std::size_t size) {
  if (size > static_cast<std::size_t>(kMaxDegree) + 1) {
    throw Error(ErrorKind::DegreeOverflow,
                "polynomial degree exceeds cap " + std::to_string(kMaxDegree));
  }
}

}  // namespace

HoloPoly::HoloPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  for (Complex& c : coeffs_) c = checked(c);
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
  check_holo_degree(coeffs_.size());
}

HoloPoly HoloPoly::monomial(int k, Complex c) {
  if (k < 0) throw Error(ErrorKind::InvalidDegree, "negative monomial degree");
  check_holo_degree(static_cast<std::size_t>(k) + 1);
  std::vector<Complex> v(static_cast<std::size_t>(k) + 1, 0.0);
  v.back() = c;
  return HoloPoly(std::move(v));
}

Complex HoloPoly::coeff(int k) const noexcept {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex HoloPoly::operator()(Complex z) const noexcept {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

HoloPoly HoloPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return HoloPoly(std::move(d));
}

HoloPoly HoloPoly::primitive() const {
  if (coeffs_.empty()) return {};
  std::vector<Complex> p(coeffs_.size() + 1, 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
  return HoloPoly(std::move(p));
}

HoloPoly HoloPoly::operator-() const { return -1.0 * *this; }

HoloPoly operator+(const HoloPoly& a, const HoloPoly& b) {
  std::vector<Complex> s(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return HoloPoly(std::move(s));
}

HoloPoly operator-(const HoloPoly& a, const HoloPoly& b) { return a + (-b); }

HoloPoly operator*(const HoloPoly& a, const HoloPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  check_holo_degree(a.coeffs_.size() + b.coeffs_.size() - 1);
  std::vector<Complex> m(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) m[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return HoloPoly(std::move(m));
}

HoloPoly operator*(Complex s, const HoloPoly& p) {
  std::vector<Complex> m(p.coeffs_.begin(), p.coeffs_.end());
  for (Complex& c : m) c *= s;
  return HoloPoly(std::move(m));
}

bool approx_equal(const HoloPoly& a, const HoloPoly& b, double rel) {
  const int n = std::max(a.degree(), b.degree());
  double scale = 1.0;
  for (int k = 0; k <= n; ++k) scale = std::max({scale, std::abs(a.coeff(k)), std::abs(b.coeff(k))});
  for (int k = 0; k <= n; ++k)
    if (std::abs(a.coeff(k) - b.coeff(k)) > rel * scale) return false;
  return true;
}

RealBiPoly real_part(const ComplexBiPoly& p) {
  std::vector<Term<double>> t;
  for (const auto& term : p.terms()) t.push_back({term.i, term.j, term.c.real()});
  return RealBiPoly::from_terms(t, p.scale());
}

RealBiPoly imag_part(const ComplexBiPoly& p) {
  std::vector<Term<double>> t;
  for (const auto& term : p.terms()) t.push_back({term.i, term.j, term.c.imag()});
  return RealBiPoly::from_terms(t, p.scale());
}

ComplexBiPoly compose(const HoloPoly& p, const ComplexBiPoly& arg) {
  ComplexBiPoly acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * arg + ComplexBiPoly::constant(p.coeff(k));
  return acc;
}

ComplexBiPoly plane_variable(const BiharmonicBasis& b) {
  return b.alpha1() * ComplexBiPoly::x() + b.alpha1() * b.signed_i() * ComplexBiPoly::y();
}

ComplexBiPoly substitute_plane(const HoloPoly& p, const BiharmonicBasis& b) {
  return compose(p, plane_variable(b));
}

ComplexBiPoly substitute_z(const HoloPoly& p) {
  return compose(p, ComplexBiPoly::x() + Complex(0.0, 1.0) * ComplexBiPoly::y());
}

ComplexBiPoly conj_z() { return ComplexBiPoly::x() - Complex(0.0, 1.0) * ComplexBiPoly::y(); }

}  // namespace biharm
