#include "ep4/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace ep4 {

SpectrumReport classify_spectrum(std::vector<std::complex<double>> values, double reality_tol,
                                 double distinct_tol) {
  SpectrumReport out;
  for (auto& v : values)
    if (std::abs(v.imag()) <= reality_tol * std::max(1.0, std::abs(v)))
      v = std::complex<double>(v.real(), 0.0);
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  out.all_real = true;
  for (const auto& v : values) {
    if (v.imag() == 0.0) out.real_eigenvalues.push_back(v.real());
    else out.all_real = false;
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (std::abs(values[i] - values[j]) <=
          distinct_tol * std::max({1.0, std::abs(values[i]), std::abs(values[j])}))
        out.degenerate = true;
  out.eigenvalues = std::move(values);
  return out;
}

}  // namespace ep4
