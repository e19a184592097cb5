#pragma once

/**
 * @file monogenic.hpp
 * @brief Monogenic functions on the plane x e1 + y e2 of a biharmonic basis.
 *
 * Every monogenic function is generated by a pair of holomorphic functions
 * (F, F0) of Z = alpha1 (x + sign * i y):
 *
 *     Phi[F, F0](zeta) = F(Z) e
 *         + ((beta1 / alpha1) Z + sign * i (beta2 - beta1) y) F'(Z) rho
 *         + F0(Z) rho.
 *
 * Its real components over {e1, i e1, e2, i e2} are biharmonic polynomials
 * when F and F0 are polynomials. All checks here are symbolic.
 */

#include <array>
#include <utility>

#include "biharm/algebra.hpp"
#include "biharm/basis.hpp"
#include "biharm/sympoly.hpp"

namespace biharm {

/// A B-valued polynomial in (x, y), stored by its {e, rho} coordinates.
struct ElementPoly {
  ComplexBiPoly e;
  ComplexBiPoly rho;

  AlgebraElement operator()(double x, double y) const { return {e(x, y), rho(x, y)}; }

  ElementPoly dx() const { return {e.dx(), rho.dx()}; }
  ElementPoly dy() const { return {e.dy(), rho.dy()}; }

  bool is_zero(double tol) const { return e.is_zero(tol) && rho.is_zero(tol); }

  friend ElementPoly operator+(const ElementPoly& a, const ElementPoly& b) {
    return {a.e + b.e, a.rho + b.rho};
  }
  friend ElementPoly operator-(const ElementPoly& a, const ElementPoly& b) {
    return {a.e - b.e, a.rho - b.rho};
  }
  friend ElementPoly operator*(const ElementPoly& p, const AlgebraElement& a) {
    return {a.e() * p.e, a.e() * p.rho + a.rho() * p.e};
  }
};

/// U1..U4 over {e1, i e1, e2, i e2}.
struct ComponentSet {
  RealBiPoly u1;
  RealBiPoly u2;
  RealBiPoly u3;
  RealBiPoly u4;

  const RealBiPoly& operator[](int k) const;
  RealComponents operator()(double x, double y) const {
    return {u1(x, y), u2(x, y), u3(x, y), u4(x, y)};
  }
  /// Sum U1 e1 + U2 i e1 + U3 e2 + U4 i e2 in {e, rho} coordinates.
  ElementPoly recompose(const BiharmonicBasis& b) const;
};

/// Splits {e, rho} coordinate polynomials into components over the basis.
ComponentSet decompose(const ElementPoly& p, const BiharmonicBasis& b);

class MonogenicFn {
 public:
  MonogenicFn(BiharmonicBasis basis, HoloPoly f, HoloPoly f0)
      : basis_(std::move(basis)), f_(std::move(f)), f0_(std::move(f0)) {}

  const BiharmonicBasis& basis() const noexcept { return basis_; }
  const HoloPoly& f() const noexcept { return f_; }
  const HoloPoly& f0() const noexcept { return f0_; }

  /// Phi(x e1 + y e2), evaluated pointwise from F and F0.
  AlgebraElement operator()(double x, double y) const;

  /// Symbolic {e, rho} coordinates of Phi.
  ElementPoly coordinates() const;
  ComponentSet components() const;

  /// Phi' = Phi[F', F0'].
  MonogenicFn derivative() const { return {basis_, f_.derivative(), f0_.derivative()}; }

  /// Phi[F1 + F2, F01 + F02]; bases must match.
  MonogenicFn operator+(const MonogenicFn& o) const;

 private:
  BiharmonicBasis basis_;
  HoloPoly f_;
  HoloPoly f0_;
};

/// Four arbitrary real components over a basis, not necessarily monogenic.
struct RawAssembly {
  BiharmonicBasis basis;
  ComponentSet components;

  ElementPoly coordinates() const { return components.recompose(basis); }
};

/// {e, rho} coordinates of dPhi/dy e1 - dPhi/dx e2.
ElementPoly cr_residual_compact(const ElementPoly& phi, const BiharmonicBasis& b);
ElementPoly cr_residual_compact(const MonogenicFn& m);
ElementPoly cr_residual_compact(const RawAssembly& raw);

/// Left-hand sides of the four real first-order equations equivalent to the
/// compact condition, written directly in terms of the U_k.
std::array<RealBiPoly, 4> cr_residual_expanded(const ComponentSet& c, const BiharmonicBasis& b);

struct BiharmonicReport {
  std::array<RealBiPoly, 4> bilaplacians;
  /// (e1^2 + e2^2)^2, the factor relating the biharmonic operator to Phi''''.
  AlgebraElement multiplier;
  bool ok = false;
};

BiharmonicReport biharmonic_check(const MonogenicFn& m, double tol = 1e-10);

}  // namespace biharm
