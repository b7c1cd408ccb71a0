#include "ep4/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ep4 {

namespace {

constexpr double kConditionFloor = 1e-8;  // smallest acceptable sigma_min / sigma_max of R

}  // namespace

BiorthogonalSystem biorthogonal_system(const ComplexMatrix& h) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("biorthogonal_system: matrix must be square");
  const int n = static_cast<int>(h.rows());
  Eigen::ComplexEigenSolver<ComplexMatrix> es(h, true);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto va = es.eigenvalues()(a), vb = es.eigenvalues()(b);
    if (va.real() != vb.real()) return va.real() < vb.real();
    return va.imag() < vb.imag();
  });

  BiorthogonalSystem sys;
  sys.right.resize(n, n);
  sys.eigenvalues.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sys.right.col(i) = es.eigenvectors().col(order[static_cast<std::size_t>(i)]);
    sys.eigenvalues[static_cast<std::size_t>(i)] =
        es.eigenvalues()(order[static_cast<std::size_t>(i)]);
  }
  // EP proximity shows up as collapsing eigenvector pairs, which drive
  // sigma_min of R to zero; degenerate but diagonalizable inputs (normal
  // matrices with repeated eigenvalues) keep an orthogonal basis and pass.
  // An eigenvalue-spacing test alone cannot tell those two cases apart.
  Eigen::JacobiSVD<ComplexMatrix> svd(sys.right);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0 || sv(n - 1) / sv(0) <= kConditionFloor)
    throw NearDefective("biorthogonal_system: eigenvector basis is ill conditioned");

  // L = R^{-dagger} makes <L_n|R_m> = delta exactly by construction.
  sys.left = sys.right.inverse().adjoint();
  return sys;
}

MetricOperator build_metric(const ComplexMatrix& h, const std::vector<double>& weights) {
  const BiorthogonalSystem sys = biorthogonal_system(h);
  const int n = static_cast<int>(h.rows());

  std::vector<double> c = weights;
  if (c.empty()) c.assign(static_cast<std::size_t>(n), 1.0);
  if (static_cast<int>(c.size()) != n)
    throw std::invalid_argument("build_metric: weight count must match dimension");
  for (double w : c)
    if (!(w > 0.0)) throw std::invalid_argument("build_metric: weights must be positive");

  double scale = 1.0;
  for (const auto& v : sys.eigenvalues) scale = std::max(scale, std::abs(v));
  for (const auto& v : sys.eigenvalues)
    if (std::abs(v.imag()) > 1e-8 * scale)
      throw ComplexSpectrum("build_metric: spectrum is not real");

  ComplexMatrix theta = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    theta += c[static_cast<std::size_t>(i)] * sys.left.col(i) * sys.left.col(i).adjoint();
  theta = 0.5 * (theta + theta.adjoint().eval());  // exact self-adjointness

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> sa(theta);
  return MetricOperator{std::move(theta), sa.eigenvalues().minCoeff()};
}

ComplexMatrix dyson_map(const MetricOperator& m) {
  if (!(m.min_eigenvalue > 0.0))
    throw InvalidMetric("dyson_map: metric is not positive definite");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> sa(m.theta);
  if (sa.eigenvalues().minCoeff() <= 0.0)
    throw InvalidMetric("dyson_map: metric is not positive definite");
  Eigen::VectorXd sq = sa.eigenvalues().cwiseSqrt();
  return sa.eigenvectors() * sq.asDiagonal() * sa.eigenvectors().adjoint();
}

ComplexMatrix hermitize(const ComplexMatrix& h, const MetricOperator& m) {
  if (h.rows() != h.cols() || h.rows() != m.theta.rows())
    throw std::invalid_argument("hermitize: dimension mismatch");
  const ComplexMatrix omega = dyson_map(m);  // InvalidMetric propagates
  Eigen::FullPivLU<ComplexMatrix> lu(omega);
  if (!lu.isInvertible()) throw InvalidMetric("hermitize: Dyson map is singular");
  // Omega is self-adjoint, so Omega H Omega^{-1} = (Omega^{-1} (Omega H)^dagger)^dagger:
  // the right-division becomes a single LU solve.
  return lu.solve((omega * h).adjoint()).adjoint();
}

}  // namespace ep4
