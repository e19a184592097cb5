#pragma once

/**
 * @file numeric.hpp
 * @brief Finite-difference checks on sampled components.
 *
 * Grids are uniform, n points per axis. A sampled field is stored row-major
 * with the x index as the row: value(i, j) = U(x_i, y_j).
 */

#include <array>
#include <functional>
#include <vector>

#include "biharm/algebra.hpp"
#include "biharm/basis.hpp"
#include "biharm/monogenic.hpp"

namespace biharm {

struct GridSpec {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 1.0;
  double y1 = 1.0;
  int n = 5;

  /// Throws InvalidGrid for an empty or non-finite rectangle and GridTooSmall for n < 5,
  /// the smallest grid with an interior point for the 13-point stencil.
  void validate() const;
  double hx() const { return (x1 - x0) / (n - 1); }
  double hy() const { return (y1 - y0) / (n - 1); }
  double x(int i) const { return x0 + i * hx(); }
  double y(int j) const { return y0 + j * hy(); }
  /// Same rectangle with every cell halved: 2n - 1 points per axis.
  GridSpec refined() const { return {x0, y0, x1, y1, 2 * n - 1}; }
};

struct Field {
  int n = 0;
  std::vector<double> values;

  double operator()(int i, int j) const { return values[static_cast<std::size_t>(i * n + j)]; }
  double& operator()(int i, int j) { return values[static_cast<std::size_t>(i * n + j)]; }
};

Field sample(const RealBiPoly& u, const GridSpec& g);
std::array<Field, 4> sample_components(const MonogenicFn& m, const GridSpec& g);

/// Max |13-point biharmonic stencil| over points at least `margin` cells
/// (>= 2) from the boundary. Throws GridTooSmall when no such point exists.
double fd_biharmonic_residual(const Field& u, double hx, double hy, int margin = 2);
inline double fd_biharmonic_residual(const Field& u, double h) {
  return fd_biharmonic_residual(u, h, h);
}

using PlaneFunction = std::function<AlgebraElement(double x, double y)>;

/// Max of || dPhi/dy e1 - dPhi/dx e2 || (norm over {e1, e2}) with central
/// differences, over points at least `margin` cells (>= 1) from the boundary.
/// Throws GridTooSmall when no such point exists.
double fd_cr_residual(const PlaneFunction& f, const BiharmonicBasis& b, const GridSpec& g,
                      int margin = 1);
double fd_cr_residual(const MonogenicFn& m, const GridSpec& g, int margin = 1);
double fd_cr_residual(const RawAssembly& raw, const GridSpec& g, int margin = 1);

/// log2 of successive residual ratios.
std::vector<double> empirical_orders(const std::vector<double>& residuals);

/// Residuals on grids n, 2n - 1, 4n - 3, ... of one rectangle. Every level is
/// measured over the same window: the interior of the coarsest grid.
struct ConvergenceStudy {
  std::vector<int> points;
  std::vector<double> cr;
  std::array<std::vector<double>, 4> biharmonic;

  double min_cr_order() const;
  double min_biharmonic_order() const;
};

ConvergenceStudy convergence_study(const MonogenicFn& m, const GridSpec& coarse, int levels = 3);

struct ProbeTable {
  std::vector<double> steps;   // t, largest first, halving
  std::vector<double> angles;  // theta_k = 2 pi k / directions
  /// errors[k][l] for angle k and step l.
  std::vector<std::vector<double>> errors;

  /// errors[k][l] / errors[k][l + 1].
  std::vector<std::vector<double>> ratios() const;
};

/// Difference quotients (Phi(zeta + h) - Phi(zeta)) h^-1 along
/// h = t (cos theta e1 + sin theta e2) for t = t_min 2^(levels-1), ..., t_min,
/// compared against Phi'(zeta) in the basis norm.
/// Throws DegenerateDirection when a step is not positive.
ProbeTable derivative_limit_probe(const MonogenicFn& m, double x, double y, int directions,
                                  double t_min, int levels = 6);

}  // namespace biharm
