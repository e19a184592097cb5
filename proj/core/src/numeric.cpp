#include "biharm/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "biharm/errors.hpp"

namespace biharm {

void GridSpec::validate() const {
  if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(y0) || !std::isfinite(y1) ||
      !(x1 > x0) || !(y1 > y0)) {
    throw Error(ErrorKind::InvalidGrid, "grid rectangle must satisfy x1 > x0 and y1 > y0");
  }
  if (n < 5) throw Error(ErrorKind::GridTooSmall, "grid needs at least 5 points per axis");
}

Field sample(const RealBiPoly& u, const GridSpec& g) {
  g.validate();
  Field f{g.n, std::vector<double>(static_cast<std::size_t>(g.n * g.n))};
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) f(i, j) = u(g.x(i), g.y(j));
  return f;
}

std::array<Field, 4> sample_components(const MonogenicFn& m, const GridSpec& g) {
  const ComponentSet c = m.components();
  return {sample(c.u1, g), sample(c.u2, g), sample(c.u3, g), sample(c.u4, g)};
}

double fd_biharmonic_residual(const Field& u, double hx, double hy, int margin) {
  margin = std::max(margin, 2);
  if (u.n < 2 * margin + 1) throw Error(ErrorKind::GridTooSmall, "biharmonic stencil needs n >= 2 * margin + 1 (at least 5)");
  const double hx4 = std::pow(hx, 4);
  const double hy4 = std::pow(hy, 4);
  const double hxy = hx * hx * hy * hy;
  double worst = 0.0;
  for (int i = margin; i < u.n - margin; ++i) {
    for (int j = margin; j < u.n - margin; ++j) {
      const double c = u(i, j);
      const double dxxxx = (u(i - 2, j) - 4 * u(i - 1, j) + 6 * c - 4 * u(i + 1, j) + u(i + 2, j)) / hx4;
      const double dyyyy = (u(i, j - 2) - 4 * u(i, j - 1) + 6 * c - 4 * u(i, j + 1) + u(i, j + 2)) / hy4;
      const double dxxyy = (u(i - 1, j - 1) + u(i + 1, j - 1) + u(i - 1, j + 1) + u(i + 1, j + 1) -
                            2 * (u(i - 1, j) + u(i + 1, j) + u(i, j - 1) + u(i, j + 1)) + 4 * c) /
                           hxy;
      worst = std::max(worst, std::abs(dxxxx + 2 * dxxyy + dyyyy));
    }
  }
  return worst;
}

double fd_cr_residual(const PlaneFunction& f, const BiharmonicBasis& b, const GridSpec& g,
                      int margin) {
  g.validate();
  margin = std::max(margin, 1);
  if (g.n < 2 * margin + 1) throw Error(ErrorKind::GridTooSmall, "grid has no interior points");
  const double hx = g.hx();
  const double hy = g.hy();
  double worst = 0.0;
  for (int i = margin; i < g.n - margin; ++i) {
    for (int j = margin; j < g.n - margin; ++j) {
      const double x = g.x(i);
      const double y = g.y(j);
      const AlgebraElement dx = (f(x + hx, y) - f(x - hx, y)) * Complex(0.5 / hx);
      const AlgebraElement dy = (f(x, y + hy) - f(x, y - hy)) * Complex(0.5 / hy);
      worst = std::max(worst, b.norm(dy * b.e1() - dx * b.e2()));
    }
  }
  return worst;
}

double fd_cr_residual(const MonogenicFn& m, const GridSpec& g, int margin) {
  return fd_cr_residual([&m](double x, double y) { return m(x, y); }, m.basis(), g, margin);
}

double fd_cr_residual(const RawAssembly& raw, const GridSpec& g, int margin) {
  const BiharmonicBasis& b = raw.basis;
  const ComponentSet& c = raw.components;
  return fd_cr_residual([&](double x, double y) { return b.recompose(c(x, y)); }, b, g, margin);
}

std::vector<double> empirical_orders(const std::vector<double>& residuals) {
  std::vector<double> out;
  for (std::size_t k = 1; k < residuals.size(); ++k)
    out.push_back(std::log2(residuals[k - 1] / residuals[k]));
  return out;
}

namespace {

double min_order(const std::vector<double>& series) {
  const auto orders = empirical_orders(series);
  return orders.empty() ? 0.0 : *std::min_element(orders.begin(), orders.end());
}

}  // namespace

double ConvergenceStudy::min_cr_order() const { return min_order(cr); }

double ConvergenceStudy::min_biharmonic_order() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& series : biharmonic) m = std::min(m, min_order(series));
  return m;
}

ConvergenceStudy convergence_study(const MonogenicFn& m, const GridSpec& coarse, int levels) {
  coarse.validate();
  const ComponentSet c = m.components();
  ConvergenceStudy study;
  GridSpec g = coarse;
  for (int level = 0, scale = 1; level < levels; ++level, scale *= 2, g = g.refined()) {
    study.points.push_back(g.n);
    study.cr.push_back(fd_cr_residual(m, g, 2 * scale));
    for (int k = 0; k < 4; ++k) {
      study.biharmonic[static_cast<std::size_t>(k)].push_back(
          fd_biharmonic_residual(sample(c[k], g), g.hx(), g.hy(), 2 * scale));
    }
  }
  return study;
}

std::vector<std::vector<double>> ProbeTable::ratios() const {
  std::vector<std::vector<double>> out;
  for (const auto& row : errors) {
    std::vector<double> r;
    for (std::size_t l = 1; l < row.size(); ++l) r.push_back(row[l - 1] / row[l]);
    out.push_back(std::move(r));
  }
  return out;
}

ProbeTable derivative_limit_probe(const MonogenicFn& m, double x, double y, int directions,
                                  double t_min, int levels) {
  if (!(t_min > 0.0) || levels < 1 || directions < 1) {
    throw Error(ErrorKind::DegenerateDirection, "probe steps must be positive and nonempty");
  }
  const BiharmonicBasis& b = m.basis();
  const MonogenicFn dm = m.derivative();
  const AlgebraElement value = m(x, y);
  const AlgebraElement exact = dm(x, y);

  ProbeTable t;
  for (int l = levels - 1; l >= 0; --l) t.steps.push_back(std::ldexp(t_min, l));
  for (int k = 0; k < directions; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / directions;
    t.angles.push_back(theta);
    std::vector<double> row;
    for (double step : t.steps) {
      const double dx = step * std::cos(theta);
      const double dy = step * std::sin(theta);
      const AlgebraElement h = b.zeta(dx, dy);
      if (h.is_zero()) throw Error(ErrorKind::DegenerateDirection, "probe step is zero");
      const AlgebraElement quotient = (m(x + dx, y + dy) - value) * h.inverse();
      row.push_back(b.norm(quotient - exact));
    }
    t.errors.push_back(std::move(row));
  }
  return t;
}

}  // namespace biharm
