#pragma once

#include "ep4/epn.hpp"
#include "ep4/spectrum.hpp"

namespace ep4 {

// Six-parameter perturbed Jordan Hamiltonian: superdiagonal ones, zero
// diagonal, and the below-diagonal pattern
//   row 2: lambda^2 z
//   row 3: lambda^3 x, lambda^2 y
//   row 4: lambda^4 a, lambda^3 b, lambda^2 c.
struct PerturbedJordan4 {
  double lambda = 0.0;
  double a = 0.0, b = 0.0, c = 0.0;
  double x = 0.0, y = 0.0, z = 0.0;
};

// (alpha, beta, gamma) with the inessential parameters carried along so the
// map inverts exactly. lambda rides along for the same reason: without it the
// round trip could not restore the scale.
struct ReducedParams {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  double x = 0.0, y = 0.0, z = 0.0;
  double lambda = 0.0;
};

ComplexMatrix realize_matrix(const PerturbedJordan4& p);

// gamma = c + y + z, beta = b + x, alpha = a + z(y - gamma) + z^2. The
// characteristic polynomial of the realized matrix then collapses to
// eta^4 - lambda^2 gamma eta^2 - lambda^3 beta eta - lambda^4 alpha.
ReducedParams to_reduced(const PerturbedJordan4& p);
PerturbedJordan4 from_reduced(const ReducedParams& r);

// Eigenvalues eta of the realized matrix, solved through the reduced quartic
// (the well-conditioned route near the EP); `rescaled` holds E = eta / lambda
// for lambda != 0. lambda == 0 reports the fourfold-degenerate eta = 0 with
// no rescaled values.
SpectrumReport spectrum(const PerturbedJordan4& p);

}  // namespace ep4
