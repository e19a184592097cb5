#pragma once

/**
 * @file sympoly.hpp
 * @brief Polynomial backend for exact identity checks.
 *
 * HoloPoly is a univariate complex polynomial standing in for a holomorphic
 * function. BiPoly<T> is a dense bivariate polynomial in (x, y); T is Complex
 * for algebra coordinates and double for the real components U_k.
 *
 * Coefficients are doubles, so "exactly zero" means zero relative to the
 * magnitude of the terms that produced a coefficient. Every BiPoly carries
 * that magnitude envelope (scale()) through its arithmetic.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "biharm/algebra.hpp"
#include "biharm/errors.hpp"

namespace biharm {

class BiharmonicBasis;

/// Largest degree (per variable for BiPoly) a polynomial may reach.
inline constexpr int kMaxDegree = 32;

class HoloPoly {
 public:
  HoloPoly() = default;
  /// Ascending coefficients; trailing zeros are dropped.
  explicit HoloPoly(std::vector<Complex> coeffs);
  HoloPoly(std::initializer_list<Complex> coeffs) : HoloPoly(std::vector<Complex>(coeffs)) {}

  static HoloPoly constant(Complex c) { return HoloPoly({c}); }
  /// The identity function z.
  static HoloPoly z() { return HoloPoly({0.0, 1.0}); }
  static HoloPoly monomial(int k, Complex c = 1.0);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Complex coeff(int k) const noexcept;
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// Horner evaluation.
  Complex operator()(Complex z) const noexcept;

  HoloPoly derivative() const;
  /// Antiderivative with zero constant term.
  HoloPoly primitive() const;

  HoloPoly operator-() const;
  friend HoloPoly operator+(const HoloPoly& a, const HoloPoly& b);
  friend HoloPoly operator-(const HoloPoly& a, const HoloPoly& b);
  friend HoloPoly operator*(const HoloPoly& a, const HoloPoly& b);
  friend HoloPoly operator*(Complex s, const HoloPoly& p);
  friend HoloPoly operator*(const HoloPoly& p, Complex s) { return s * p; }

  friend bool operator==(const HoloPoly&, const HoloPoly&) = default;

 private:
  std::vector<Complex> coeffs_;
};

bool approx_equal(const HoloPoly& a, const HoloPoly& b, double rel = kExactTolerance);

template <class T>
struct Term {
  int i;  // power of x
  int j;  // power of y
  T c;
};

template <class T>
class BiPoly {
  static_assert(std::is_same_v<T, double> || std::is_same_v<T, Complex>);

 public:
  BiPoly() = default;

  static BiPoly constant(T c) { return monomial(0, 0, c); }
  static BiPoly x() { return monomial(1, 0, T(1)); }
  static BiPoly y() { return monomial(0, 1, T(1)); }
  static BiPoly monomial(int i, int j, T c) {
    BiPoly p;
    if (c == T(0)) return p;
    check_degree(i, j);
    p.resize(i + 1, j + 1);
    p.at(i, j) = c;
    p.scale_ = std::abs(c);
    return p;
  }
  /// `envelope` raises scale() when the terms came out of a larger computation.
  static BiPoly from_terms(std::span<const Term<T>> terms, double envelope = 0.0) {
    BiPoly p;
    for (const auto& t : terms) p += monomial(t.i, t.j, t.c);
    p.scale_ = std::max(p.scale_, envelope);
    return p;
  }

  /// Widening conversion, e.g. real components into complex coordinates.
  template <class U>
    requires(!std::is_same_v<U, T> && std::is_convertible_v<U, T>)
  explicit BiPoly(const BiPoly<U>& other) {
    resize(other.x_extent(), other.y_extent());
    for (int i = 0; i < nx_; ++i)
      for (int j = 0; j < ny_; ++j) at(i, j) = T(other.coeff(i, j));
    scale_ = other.scale();
  }

  T coeff(int i, int j) const noexcept {
    if (i < 0 || j < 0 || i >= nx_ || j >= ny_) return T(0);
    return c_[static_cast<std::size_t>(i * ny_ + j)];
  }
  int x_extent() const noexcept { return nx_; }
  int y_extent() const noexcept { return ny_; }
  int total_degree() const noexcept {
    int d = -1;
    for (const auto& t : terms()) d = std::max(d, t.i + t.j);
    return d;
  }
  /// Magnitude envelope of the terms that produced the coefficients.
  double scale() const noexcept { return scale_; }

  /// Nonzero coefficients, ordered by (i, j).
  std::vector<Term<T>> terms() const {
    std::vector<Term<T>> out;
    for (int i = 0; i < nx_; ++i)
      for (int j = 0; j < ny_; ++j)
        if (coeff(i, j) != T(0)) out.push_back({i, j, coeff(i, j)});
    return out;
  }

  double max_abs_coeff() const noexcept {
    double m = 0.0;
    for (const T& c : c_) m = std::max(m, static_cast<double>(std::abs(c)));
    return m;
  }

  /// True iff every |coefficient| <= tol * (1 + scale()).
  bool is_zero(double tol) const noexcept { return max_abs_coeff() <= tol * (1.0 + scale_); }
  bool empty() const noexcept { return c_.empty(); }

  T operator()(double xv, double yv) const noexcept {
    T acc(0);
    for (int i = nx_ - 1; i >= 0; --i) {
      T row(0);
      for (int j = ny_ - 1; j >= 0; --j) row = row * yv + coeff(i, j);
      acc = acc * xv + row;
    }
    return acc;
  }

  BiPoly dx() const { return partial(true); }
  BiPoly dy() const { return partial(false); }
  BiPoly laplacian() const { return dx().dx() + dy().dy(); }
  /// dx^4 + 2 dx^2 dy^2 + dy^4.
  BiPoly bilaplacian() const {
    const BiPoly xx = dx().dx();
    const BiPoly yy = dy().dy();
    return xx.dx().dx() + T(2) * xx.dy().dy() + yy.dy().dy();
  }

  BiPoly operator-() const {
    BiPoly r = *this;
    for (T& c : r.c_) c = -c;
    return r;
  }
  BiPoly& operator+=(const BiPoly& o) { return accumulate(o, T(1)); }
  BiPoly& operator-=(const BiPoly& o) { return accumulate(o, T(-1)); }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    if (a.empty() || b.empty()) return r;
    check_degree(a.nx_ + b.nx_ - 2, a.ny_ + b.ny_ - 2);
    r.resize(a.nx_ + b.nx_ - 1, a.ny_ + b.ny_ - 1);
    for (int i = 0; i < a.nx_; ++i)
      for (int j = 0; j < a.ny_; ++j) {
        const T ca = a.coeff(i, j);
        if (ca == T(0)) continue;
        for (int k = 0; k < b.nx_; ++k)
          for (int l = 0; l < b.ny_; ++l) r.at(i + k, j + l) += ca * b.coeff(k, l);
      }
    r.scale_ = a.scale_ * b.scale_;
    r.trim();
    return r;
  }
  friend BiPoly operator*(T s, BiPoly p) {
    for (T& c : p.c_) c *= s;
    p.scale_ *= std::abs(s);
    p.trim();
    return p;
  }
  friend BiPoly operator*(BiPoly p, T s) { return s * std::move(p); }

  /// Exact coefficient equality; tests use is_zero on differences instead.
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_equal(b); }

 private:
  static void check_degree(int i, int j) {
    if (i > kMaxDegree || j > kMaxDegree) {
      throw Error(ErrorKind::DegreeOverflow,
                  "bivariate degree exceeds cap " + std::to_string(kMaxDegree));
    }
  }

  T& at(int i, int j) { return c_[static_cast<std::size_t>(i * ny_ + j)]; }

  void resize(int nx, int ny) {
    if (nx == nx_ && ny == ny_) return;
    std::vector<T> next(static_cast<std::size_t>(nx * ny), T(0));
    for (int i = 0; i < std::min(nx, nx_); ++i)
      for (int j = 0; j < std::min(ny, ny_); ++j)
        next[static_cast<std::size_t>(i * ny + j)] = coeff(i, j);
    c_ = std::move(next);
    nx_ = nx;
    ny_ = ny;
  }

  void trim() {
    int nx = 0;
    int ny = 0;
    for (int i = 0; i < nx_; ++i)
      for (int j = 0; j < ny_; ++j)
        if (coeff(i, j) != T(0)) {
          nx = std::max(nx, i + 1);
          ny = std::max(ny, j + 1);
        }
    if (nx == 0) {
      c_.clear();
      nx_ = ny_ = 0;
      return;
    }
    resize(nx, ny);
  }

  BiPoly& accumulate(const BiPoly& o, T sgn) {
    if (o.empty()) {
      scale_ = std::max(scale_, o.scale_);
      return *this;
    }
    resize(std::max(nx_, o.nx_), std::max(ny_, o.ny_));
    for (int i = 0; i < o.nx_; ++i)
      for (int j = 0; j < o.ny_; ++j) at(i, j) += sgn * o.coeff(i, j);
    scale_ = std::max(scale_, o.scale_);
    trim();
    return *this;
  }

  BiPoly partial(bool in_x) const {
    BiPoly r;
    const int n = in_x ? nx_ : ny_;
    r.scale_ = scale_ * std::max(1, n - 1);
    if (n <= 1) return r;
    r.resize(in_x ? nx_ - 1 : nx_, in_x ? ny_ : ny_ - 1);
    for (int i = 0; i < r.nx_; ++i)
      for (int j = 0; j < r.ny_; ++j)
        r.at(i, j) = in_x ? T(i + 1) * coeff(i + 1, j) : T(j + 1) * coeff(i, j + 1);
    r.trim();
    return r;
  }

  bool terms_equal(const BiPoly& o) const {
    const int nx = std::max(nx_, o.nx_);
    const int ny = std::max(ny_, o.ny_);
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j)
        if (coeff(i, j) != o.coeff(i, j)) return false;
    return true;
  }

  std::vector<T> c_;
  int nx_ = 0;
  int ny_ = 0;
  double scale_ = 0.0;
};

using ComplexBiPoly = BiPoly<Complex>;
using RealBiPoly = BiPoly<double>;

RealBiPoly real_part(const ComplexBiPoly& p);
RealBiPoly imag_part(const ComplexBiPoly& p);

/// p(arg) expanded by Horner's rule in the bivariate ring.
ComplexBiPoly compose(const HoloPoly& p, const ComplexBiPoly& arg);

/// Z = alpha1 (x + sign * i y) as a bivariate polynomial.
ComplexBiPoly plane_variable(const BiharmonicBasis& b);
/// p(alpha1 (x + sign * i y)).
ComplexBiPoly substitute_plane(const HoloPoly& p, const BiharmonicBasis& b);
/// p(x + i y).
ComplexBiPoly substitute_z(const HoloPoly& p);
/// x - i y.
ComplexBiPoly conj_z();

}  // namespace biharm
