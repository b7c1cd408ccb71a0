#include "ep4/epn.hpp"

#include <algorithm>
#include <cmath>

namespace ep4 {

namespace {

int rank_with_tolerance(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = kRankTolerance * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

// Minimum-norm least-squares solve via the SVD pseudoinverse, singular values
// truncated at the rank tolerance.
struct PinvSolver {
  explicit PinvSolver(const ComplexMatrix& m)
      : svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV) {
    const auto& sv = svd.singularValues();
    cutoff = sv.size() > 0 ? kRankTolerance * sv(0) : 0.0;
  }

  Eigen::VectorXcd solve(const Eigen::VectorXcd& b) const {
    const auto& sv = svd.singularValues();
    Eigen::VectorXcd y = svd.matrixU().adjoint() * b;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      y(i) = sv(i) > cutoff ? y(i) / sv(i) : std::complex<double>(0.0, 0.0);
    return svd.matrixV() * y;
  }

  Eigen::JacobiSVD<ComplexMatrix> svd;
  double cutoff = 0.0;
};

}  // namespace

ComplexMatrix jordan_matrix(const JordanSpec& spec) {
  if (spec.dim < 1) throw std::invalid_argument("jordan_matrix: dim must be >= 1");
  ComplexMatrix j = ComplexMatrix::Zero(spec.dim, spec.dim);
  for (int i = 0; i < spec.dim; ++i) {
    j(i, i) = spec.eigenvalue;
    if (i + 1 < spec.dim) j(i, i + 1) = 1.0;
  }
  return j;
}

int epn_order(const ComplexMatrix& h, std::complex<double> e) {
  if (h.rows() != h.cols()) throw std::invalid_argument("epn_order: matrix must be square");
  const int n = static_cast<int>(h.rows());
  const ComplexMatrix shifted = h - e * ComplexMatrix::Identity(n, n);
  if (rank_with_tolerance(shifted) == n)
    throw NotAnEigenvalue("epn_order: E is not an eigenvalue of H");
  // rank(A^{k-1}) - rank(A^k) counts Jordan blocks of size >= k; the largest
  // block is the last k where the sequence still drops.
  int order = 0;
  int prev_rank = n;
  ComplexMatrix power = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    power = power * shifted;
    const int rank = rank_with_tolerance(power);
    if (rank == prev_rank) break;
    order = k;
    prev_rank = rank;
  }
  return order;
}

TransitionMatrix transition_matrix(const ComplexMatrix& h, std::complex<double> e, int n) {
  if (h.rows() != h.cols()) throw std::invalid_argument("transition_matrix: matrix must be square");
  if (n != h.rows())
    throw NotFullEPN("transition_matrix: N must equal dim(H) (single full Jordan block)");
  if (epn_order(h, e) != n)
    throw NotFullEPN("transition_matrix: Jordan structure at E is not a single N-block");

  const ComplexMatrix shifted = h - e * ComplexMatrix::Identity(n, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(shifted, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXcd u1 = svd.matrixV().col(n - 1);
  u1.normalize();
  for (Eigen::Index i = 0; i < u1.size(); ++i) {
    if (std::abs(u1(i)) > 1e-12) {
      u1 *= std::conj(u1(i)) / std::abs(u1(i));
      break;
    }
  }

  ComplexMatrix u(n, n);
  u.col(0) = u1;
  const PinvSolver solver(shifted);
  for (int k = 1; k < n; ++k) {
    Eigen::VectorXcd col = solver.solve(u.col(k - 1));
    for (int pass = 0; pass < 2; ++pass) {  // iterative refinement
      const Eigen::VectorXcd r = u.col(k - 1) - shifted * col;
      col += solver.solve(r);
    }
    u.col(k) = col;
  }

  const ComplexMatrix defect = h * u - u * jordan_matrix(JordanSpec{n, e});
  double residual = 0.0;
  for (int k = 0; k < n; ++k) residual = std::max(residual, defect.col(k).norm());
  if (residual > 1e-9 * h.norm())
    throw ChainSolveFailure("transition_matrix: chain residual exceeds tolerance");
  return TransitionMatrix{std::move(u), residual};
}

ComplexMatrix to_avatar(const ComplexMatrix& h, const TransitionMatrix& t) {
  Eigen::FullPivLU<ComplexMatrix> lu(t.u);
  if (!lu.isInvertible())
    throw SingularTransition("to_avatar: transition matrix is singular");
  return lu.solve(h * t.u);
}

}  // namespace ep4
