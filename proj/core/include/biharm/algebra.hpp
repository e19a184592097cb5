#pragma once

/**
 * @file algebra.hpp
 * @brief Arithmetic in the commutative algebra B = { z1 e + z2 rho : z1, z2 in C }.
 *
 * The multiplication table is
 *
 *     e * e = e,   e * rho = rho,   rho * rho = 0,
 *
 * so B is the ring of complex dual numbers: rho spans the radical and every
 * element with a nonzero e-coordinate is invertible.
 *
 *     (a1 e + a2 rho)(b1 e + b2 rho) = a1 b1 e + (a1 b2 + a2 b1) rho
 */

#include <complex>

namespace biharm {

using Complex = std::complex<double>;

/// Default relative tolerance for coefficient comparisons on float paths.
inline constexpr double kExactTolerance = 1e-12;

/// Throws Error{NonFinite} unless both parts of `z` are finite.
Complex checked(Complex z);

class AlgebraElement {
 public:
  constexpr AlgebraElement() = default;
  /// Rejects NaN and infinite coordinates.
  AlgebraElement(Complex e_coord, Complex rho_coord);

  static AlgebraElement identity() { return {1.0, 0.0}; }
  static AlgebraElement radical() { return {0.0, 1.0}; }

  Complex e() const noexcept { return e_; }
  Complex rho() const noexcept { return rho_; }

  bool is_zero() const noexcept { return e_ == 0.0 && rho_ == 0.0; }
  /// Nonzero multiples of rho. The zero element is not a zero divisor here.
  bool is_zero_divisor() const noexcept { return e_ == 0.0 && rho_ != 0.0; }
  bool is_invertible() const noexcept { return e_ != 0.0; }

  /// Throws ZeroElement for 0 and NotInvertible for multiples of rho.
  AlgebraElement inverse() const;
  AlgebraElement pow(unsigned n) const;

  /// sqrt(|z1|^2 + |z2|^2) over {e, rho}; used for tolerance scales only.
  double coord_norm() const noexcept;

  AlgebraElement operator-() const { return {-e_, -rho_}; }
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const AlgebraElement& o);
  AlgebraElement& operator*=(Complex s);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const AlgebraElement& b) { return a *= b; }
  friend AlgebraElement operator*(AlgebraElement a, Complex s) { return a *= s; }
  friend AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  Complex e_{};
  Complex rho_{};
};

/// Coefficient-wise comparison with error <= rel * max(1, |a|, |b|).
bool approx_equal(const AlgebraElement& a, const AlgebraElement& b,
                  double rel = kExactTolerance);

}  // namespace biharm
