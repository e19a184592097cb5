#include "biharm/goursat.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>

#include "biharm/basis.hpp"
#include "biharm/errors.hpp"

namespace biharm {

namespace {

constexpr double kRankThreshold = 1e-9;
const Complex kI(0.0, 1.0);

}  // namespace

RealBiPoly goursat_u(const GoursatPair& g) {
  return real_part(substitute_z(g.psi) + conj_z() * substitute_z(g.phi));
}

MonogenicFn lift(const HoloPoly& f1, const HoloPoly& f2) {
  const HoloPoly f = 2.0 * f2;
  const HoloPoly f0 = 4.0 * f2 - f1 - 3.0 * HoloPoly::z() * f2.derivative();
  return {presets::new_basis(), f, f0};
}

MonogenicFn phi0(const Phi0Params& p) {
  const HoloPoly f{(p.b + p.c) * kI - p.d, p.a};
  const HoloPoly f0{(p.b + 2.0 * p.c) * kI - 2.0 * p.d, p.a};
  return {presets::new_basis(), f, f0};
}

MonogenicFn reconstruct(const GoursatPair& g, const Phi0Params& p) {
  return lift(g.psi, g.phi.primitive()) + phi0(p);
}

std::vector<double> pack_pair(const HoloPoly& f, const HoloPoly& f0, int max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::InvalidDegree, "max_degree must be >= 0");
  if (f.degree() > max_degree || f0.degree() > max_degree) {
    throw Error(ErrorKind::InvalidDegree, "polynomial exceeds max_degree");
  }
  const std::size_t n = static_cast<std::size_t>(max_degree) + 1;
  std::vector<double> v(4 * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex a = f.coeff(static_cast<int>(k));
    const Complex b = f0.coeff(static_cast<int>(k));
    v[2 * k] = a.real();
    v[2 * k + 1] = a.imag();
    v[2 * n + 2 * k] = b.real();
    v[2 * n + 2 * k + 1] = b.imag();
  }
  return v;
}

MonogenicFn unpack_pair(std::span<const double> v, int max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::InvalidDegree, "max_degree must be >= 0");
  const std::size_t n = static_cast<std::size_t>(max_degree) + 1;
  if (v.size() != 4 * n) throw Error(ErrorKind::InvalidDegree, "vector length mismatch");
  std::vector<Complex> f(n), f0(n);
  for (std::size_t k = 0; k < n; ++k) {
    f[k] = {v[2 * k], v[2 * k + 1]};
    f0[k] = {v[2 * n + 2 * k], v[2 * n + 2 * k + 1]};
  }
  return {presets::new_basis(), HoloPoly(std::move(f)), HoloPoly(std::move(f0))};
}

KernelReport u1_kernel(int max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::InvalidDegree, "max_degree must be >= 0");
  const int n = max_degree + 1;
  const int cols = 4 * n;
  const int rows = n * (n + 1) / 2;

  // Column k holds the U1 coefficients produced by the k-th unit vector.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, cols);
  std::vector<double> unit(static_cast<std::size_t>(cols), 0.0);
  for (int k = 0; k < cols; ++k) {
    unit[static_cast<std::size_t>(k)] = 1.0;
    const RealBiPoly u1 = unpack_pair(unit, max_degree).components().u1;
    unit[static_cast<std::size_t>(k)] = 0.0;
    int row = 0;
    for (int total = 0; total <= max_degree; ++total)
      for (int i = total; i >= 0; --i) a(row++, k) = u1.coeff(i, total - i);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = kRankThreshold * (sv.size() > 0 ? sv(0) : 0.0);

  KernelReport r;
  r.max_degree = max_degree;
  r.unknowns = cols;
  r.singular_values.assign(sv.data(), sv.data() + sv.size());
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > cutoff) ++r.rank;
  r.dimension = cols - r.rank;

  const Eigen::MatrixXd& v = svd.matrixV();
  for (int k = r.rank; k < cols; ++k) {
    const Eigen::VectorXd col = v.col(k);
    r.basis_vectors.emplace_back(col.data(), col.data() + col.size());
  }
  return r;
}

double kernel_membership_residual(const KernelReport& k, std::span<const double> v) {
  const Eigen::Map<const Eigen::VectorXd> vec(v.data(), static_cast<Eigen::Index>(v.size()));
  Eigen::VectorXd rest = vec;
  for (const auto& b : k.basis_vectors) {
    const Eigen::Map<const Eigen::VectorXd> bv(b.data(), static_cast<Eigen::Index>(b.size()));
    rest -= bv.dot(vec) * bv;
  }
  const double norm = vec.norm();
  return norm == 0.0 ? 0.0 : rest.norm() / norm;
}

}  // namespace biharm
