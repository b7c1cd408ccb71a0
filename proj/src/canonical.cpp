#include "ep4/canonical.hpp"

#include "ep4/polyroots.hpp"

namespace ep4 {

ComplexMatrix realize_matrix(const PerturbedJordan4& p) {
  const double l2 = p.lambda * p.lambda;
  const double l3 = l2 * p.lambda;
  const double l4 = l2 * l2;
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 1) = 1.0;
  m(1, 2) = 1.0;
  m(2, 3) = 1.0;
  m(1, 0) = l2 * p.z;
  m(2, 0) = l3 * p.x;
  m(2, 1) = l2 * p.y;
  m(3, 0) = l4 * p.a;
  m(3, 1) = l3 * p.b;
  m(3, 2) = l2 * p.c;
  return m;
}

ReducedParams to_reduced(const PerturbedJordan4& p) {
  ReducedParams r;
  r.gamma = p.c + p.y + p.z;
  r.beta = p.b + p.x;
  r.alpha = p.a + p.z * (p.y - r.gamma) + p.z * p.z;
  r.x = p.x;
  r.y = p.y;
  r.z = p.z;
  r.lambda = p.lambda;
  return r;
}

PerturbedJordan4 from_reduced(const ReducedParams& r) {
  PerturbedJordan4 p;
  p.lambda = r.lambda;
  p.x = r.x;
  p.y = r.y;
  p.z = r.z;
  p.c = r.gamma - r.y - r.z;
  p.b = r.beta - r.x;
  p.a = r.alpha - r.z * (r.y - r.gamma) - r.z * r.z;
  return p;
}

SpectrumReport spectrum(const PerturbedJordan4& p) {
  SpectrumReport out;
  if (p.lambda == 0.0) {
    out.eigenvalues.assign(4, {0.0, 0.0});
    out.real_eigenvalues.assign(4, 0.0);
    out.all_real = true;
    out.degenerate = true;
    return out;  // E = eta / lambda is undefined at the EP itself
  }
  const ReducedParams r = to_reduced(p);
  const RootSet roots =
      quartic_roots(RealPoly({-r.alpha, -r.beta, -r.gamma, 0.0, 1.0}));
  std::vector<std::complex<double>> eta;
  for (const auto& e : roots.expanded()) eta.push_back(p.lambda * e);
  out = classify_spectrum(std::move(eta), 1e-9, 1e-8);
  std::vector<std::complex<double>> rescaled;
  rescaled.reserve(out.eigenvalues.size());
  for (const auto& v : out.eigenvalues) rescaled.push_back(v / p.lambda);
  out.rescaled = std::move(rescaled);
  return out;
}

}  // namespace ep4
