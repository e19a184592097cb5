#pragma once

/**
 * @file basis.hpp
 * @brief The complete family of biharmonic bases of B.
 *
 * A pair {e1, e2} is biharmonic when
 *
 *     e1^4 + 2 e1^2 e2^2 + e2^4 = 0   and   e1^2 + e2^2 != 0.
 *
 * Every such pair has the form
 *
 *     e1 = alpha1 e + beta1 rho,   e2 = sign * i (alpha1 e + beta2 rho),
 *
 * with alpha1 != 0 and beta1 != beta2. A basis is stored by these four
 * parameters; the sign is carried explicitly into every derived formula.
 */

#include <string_view>

#include "biharm/algebra.hpp"

namespace biharm {

enum class Sign { Plus = 1, Minus = -1 };

inline double sign_value(Sign s) noexcept { return s == Sign::Plus ? 1.0 : -1.0; }

/// Coordinates of an element over the real basis {e1, i e1, e2, i e2}.
struct RealComponents {
  double u1 = 0.0;
  double u2 = 0.0;
  double u3 = 0.0;
  double u4 = 0.0;

  Complex c1() const { return {u1, u2}; }
  Complex c2() const { return {u3, u4}; }

  friend bool operator==(const RealComponents&, const RealComponents&) = default;
};

struct IdentityReport {
  AlgebraElement lhs;     // e1^4 + 2 e1^2 e2^2 + e2^4
  AlgebraElement sum_sq;  // e1^2 + e2^2
  double residual = 0.0;  // |lhs| / |e1|^4 over {e, rho}
  bool ok = false;
};

struct ProductTable {
  AlgebraElement e1_sq;
  AlgebraElement e2_sq;
  AlgebraElement e1_e2;
};

class BiharmonicBasis {
 public:
  /// Throws Error{InvalidBasis} when alpha1 == 0 or beta1 == beta2.
  static BiharmonicBasis make(Complex alpha1, Complex beta1, Complex beta2,
                              Sign sign = Sign::Plus);

  Complex alpha1() const noexcept { return alpha1_; }
  Complex beta1() const noexcept { return beta1_; }
  Complex beta2() const noexcept { return beta2_; }
  Sign sign() const noexcept { return sign_; }
  /// sign * i, the factor in front of e2 and of y in Z.
  Complex signed_i() const noexcept { return {0.0, sign_value(sign_)}; }

  const AlgebraElement& e1() const noexcept { return e1_; }
  const AlgebraElement& e2() const noexcept { return e2_; }

  /// Closed-form products e_k^2 = (-1)^(k+1) alpha1 (alpha1 e + 2 beta_k rho),
  /// e1 e2 = sign * i alpha1 (alpha1 e + (beta1 + beta2) rho).
  ProductTable product_table() const;

  /// Coordinates (c1, c2) with a = c1 e1 + c2 e2, split into real parts.
  RealComponents decompose(const AlgebraElement& a) const;
  AlgebraElement recompose(const RealComponents& c) const;

  /// Euclidean norm sqrt(|c1|^2 + |c2|^2) of the coordinates over {e1, e2}.
  double norm(const AlgebraElement& a) const;

  /// zeta = x e1 + y e2, a point of the plane spanned by the basis.
  AlgebraElement zeta(double x, double y) const;
  /// Z = alpha1 (x + sign * i y).
  Complex z_map(double x, double y) const;

  friend bool operator==(const BiharmonicBasis& a, const BiharmonicBasis& b) {
    return a.alpha1_ == b.alpha1_ && a.beta1_ == b.beta1_ && a.beta2_ == b.beta2_ &&
           a.sign_ == b.sign_;
  }

 private:
  BiharmonicBasis(Complex alpha1, Complex beta1, Complex beta2, Sign sign);

  Complex alpha1_;
  Complex beta1_;
  Complex beta2_;
  Sign sign_;
  AlgebraElement e1_;
  AlgebraElement e2_;
};

/// Checks the defining identity for an arbitrary pair of elements.
IdentityReport verify_biharmonic_identity(const AlgebraElement& e1, const AlgebraElement& e2,
                                          double tol = 1e-10);
IdentityReport verify_biharmonic_identity(const BiharmonicBasis& b, double tol = 1e-10);

namespace presets {

/// (1, 0, -1/2, +): e1 = e and e2^2 = e1 + 2 i e2.
BiharmonicBasis gp_basis();
/// (1, 1, 2, +): e1 = e + rho, e2 = i (e + 2 rho). All Goursat work uses this one.
BiharmonicBasis new_basis();
/// (1, 0, beta2, sign): the sub-family with e1 = e. Requires beta2 != 0.
BiharmonicBasis e_identity(Complex beta2, Sign sign = Sign::Plus);

/// Looks up "gp_basis" or "new_basis". Throws InvalidBasis for other names.
BiharmonicBasis by_name(std::string_view name);

}  // namespace presets

}  // namespace biharm
