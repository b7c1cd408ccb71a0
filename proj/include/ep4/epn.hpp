#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ep4/errors.hpp"

namespace ep4 {

// Dense complex matrix carrier; dimensions here stay <= 16.
using ComplexMatrix = Eigen::MatrixXcd;

struct JordanSpec {
  int dim = 1;
  std::complex<double> eigenvalue{0.0, 0.0};
};

ComplexMatrix jordan_matrix(const JordanSpec& spec);

// Singular values below this fraction of the largest are treated as zero when
// ranks of (H - E I)^k are read off.
inline constexpr double kRankTolerance = 1e-10;

// Size of the largest Jordan block of H at eigenvalue E, from the rank
// sequence of powers of (H - E I). NotAnEigenvalue when H - E I has full rank.
int epn_order(const ComplexMatrix& h, std::complex<double> e);

struct TransitionMatrix {
  ComplexMatrix u;
  double chain_residual = 0.0;  // max column norm of H U - U J
};

// Solves H U = U J(N, E) for a full-size Jordan block. The chain is pinned
// down uniquely: u1 is the unit-norm null vector with its first significant
// component rotated real positive, later columns are minimum-norm solutions.
// NotFullEPN unless epn_order(H, E) == N == dim(H); ChainSolveFailure when the
// residual cannot be brought under 1e-9 * ||H||.
TransitionMatrix transition_matrix(const ComplexMatrix& h, std::complex<double> e, int n);

// P = U^{-1} H U. SingularTransition when U is not invertible.
ComplexMatrix to_avatar(const ComplexMatrix& h, const TransitionMatrix& u);

}  // namespace ep4
