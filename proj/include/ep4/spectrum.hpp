#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace ep4 {

// Classified eigenvalue set shared by the model builders. `eigenvalues` is the
// full multiset sorted by (re, im); entries within the reality tolerance of
// the real axis are snapped onto it and repeated in `real_eigenvalues`.
struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;
  std::vector<double> real_eigenvalues;  // ascending
  bool all_real = false;
  bool degenerate = false;  // some pair closer than the distinctness tolerance
  // Rescaled roots E = eta / lambda where the producing model defines a scale;
  // absent when the scale is zero (the EP itself) or not applicable.
  std::optional<std::vector<std::complex<double>>> rescaled;
};

// reality_tol and distinct_tol are relative bands, scaled by max(1, |value|).
SpectrumReport classify_spectrum(std::vector<std::complex<double>> values,
                                 double reality_tol, double distinct_tol);

}  // namespace ep4
