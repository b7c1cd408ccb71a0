#pragma once

#include <vector>

#include "ep4/epn.hpp"

namespace ep4 {

// Right/left eigenvector pairs of a diagonalizable H, columnwise, normalized
// biorthogonally: left.adjoint() * right == identity. eigenvalues[i] belongs
// to right.col(i) and left.col(i); sorted by (re, im).
struct BiorthogonalSystem {
  ComplexMatrix right;
  ComplexMatrix left;
  std::vector<std::complex<double>> eigenvalues;
};

// NearDefective when the eigenvector conditioning signals proximity to an EP
// (where the biorthogonal system ceases to exist). Collapsing eigenvalue
// spacings are caught through the same test: the associated eigenvectors
// coalesce, while benign degeneracies of normal inputs keep an orthogonal
// basis and are accepted.
BiorthogonalSystem biorthogonal_system(const ComplexMatrix& h);

struct MetricOperator {
  ComplexMatrix theta;
  double min_eigenvalue = 0.0;
};

// Theta = sum_n c_n |L_n><L_n| over the left eigenvectors; weights default to
// all ones and must be strictly positive. Solves H^dagger Theta = Theta H
// exactly in exact arithmetic for real spectra. ComplexSpectrum when an
// eigenvalue has a nonzero imaginary part (no positive metric exists);
// NearDefective passes through from the eigensolve.
MetricOperator build_metric(const ComplexMatrix& h, const std::vector<double>& weights = {});

// Self-adjoint positive square root Omega = Theta^{1/2}. InvalidMetric when
// Theta is not positive definite.
ComplexMatrix dyson_map(const MetricOperator& m);

// The Hermitian partner h = Omega H Omega^{-1}, isospectral with H.
ComplexMatrix hermitize(const ComplexMatrix& h, const MetricOperator& m);

}  // namespace ep4
