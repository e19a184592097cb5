#pragma once

/**
 * @file goursat.hpp
 * @brief Monogenic lifts of biharmonic functions over the basis
 *        e1 = e + rho, e2 = i (e + 2 rho).
 *
 * A biharmonic u(x, y) = Re(psi(z) + conj(z) phi(z)) is the first component
 * U1 of
 *
 *     Phi[2 P, 4 P - psi - 3 z phi] + Phi0,      P' = phi,
 *
 * where Phi0 ranges over monogenic functions whose U1 vanishes. The kernel
 * of the map (F, F0) -> U1[Phi[F, F0]] is measured numerically by
 * u1_kernel() rather than assumed.
 */

#include <span>
#include <vector>

#include "biharm/monogenic.hpp"
#include "biharm/sympoly.hpp"

namespace biharm {

/// u = Re(psi(z) + conj(z) phi(z)).
struct GoursatPair {
  HoloPoly psi;
  HoloPoly phi;
};

/// Phi0 = a (zeta + z rho) + b i e1 + c e2 + d i e2.
struct Phi0Params {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

RealBiPoly goursat_u(const GoursatPair& g);

/// Phi[2 f2, 4 f2 - f1 - 3 z f2'], whose U1 is Re(f1 + conj(z) f2').
MonogenicFn lift(const HoloPoly& f1, const HoloPoly& f2);

/// Phi0 written as Phi[a z + (b + c) i - d, a z + (b + 2c) i - 2d].
MonogenicFn phi0(const Phi0Params& p);

/// Lift of the Goursat pair plus phi0(p), merged into one Phi[F, F0].
/// The primitive of phi is taken with zero constant term.
MonogenicFn reconstruct(const GoursatPair& g, const Phi0Params& p = {});

struct KernelReport {
  int max_degree = 0;
  int unknowns = 0;
  int rank = 0;
  int dimension = 0;
  std::vector<double> singular_values;
  /// Orthonormal nullspace basis, each in the layout of pack_pair().
  std::vector<std::vector<double>> basis_vectors;
};

/// Real coefficient vector [Re F_0, Im F_0, ..., Re F_N, Im F_N, Re F0_0, ...].
std::vector<double> pack_pair(const HoloPoly& f, const HoloPoly& f0, int max_degree);
/// Inverse of pack_pair(), over the distinguished basis.
MonogenicFn unpack_pair(std::span<const double> v, int max_degree);

/// Nullspace of (F, F0) -> U1[Phi[F, F0]] for deg F, deg F0 <= max_degree.
/// Singular values below 1e-9 times the largest count as zero.
/// Throws Error{InvalidDegree} for negative max_degree.
KernelReport u1_kernel(int max_degree);

/// Norm of the part of v orthogonal to the kernel span, relative to |v|.
double kernel_membership_residual(const KernelReport& k, std::span<const double> v);

}  // namespace biharm
