#pragma once

#include <array>

#include "ep4/epn.hpp"
#include "ep4/spectrum.hpp"

namespace ep4 {

// Bose-Hubbard-type benchmark family: tridiagonal, purely imaginary diagonal
// i g (2j - N - 1) antisymmetric about the center, real symmetric off-diagonal
// sqrt(j (N - j)).
struct BoseHubbardSpec {
  int dim = 2;  // N >= 2
  double coupling = 0.0;
};

ComplexMatrix bh_hamiltonian(const BoseHubbardSpec& spec);

// Eigenvalues of bh_hamiltonian, polished on the characteristic polynomial of
// the tridiagonal (exact integer off-diagonal squares) and symmetrized under
// the exact negation symmetry of the family. |g| == 1 short-circuits to the
// N-fold degenerate EP value 0.
SpectrumReport bh_spectrum(const BoseHubbardSpec& spec);

struct BoseHubbardEpData {
  std::array<double, 2> g_ep{+1.0, -1.0};
  std::complex<double> energy{0.0, 0.0};
  int order = 2;  // = N: the EP swallows the whole matrix
};

BoseHubbardEpData bh_ep_data(int n);

}  // namespace ep4
