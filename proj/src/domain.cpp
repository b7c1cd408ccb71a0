#include "ep4/domain.hpp"

#include <algorithm>
#include <cmath>

namespace ep4 {

bool DomainInterval::contains(double x) const {
  if (is_degenerate()) return x == lower;
  const bool above = lower_kind == EndpointKind::Open ? x > lower : x >= lower;
  const bool below = upper_kind == EndpointKind::Open ? x < upper : x <= upper;
  return above && below;
}

KappaParam kappa_of_gamma(double gamma) {
  if (!(gamma > 0.0)) throw NonpositiveGamma("kappa_of_gamma: gamma must be positive");
  return KappaParam{std::sqrt(gamma / 6.0)};
}

DomainInterval beta_interval(KappaParam k) {
  const double b = 8.0 * k.kappa * k.kappa * k.kappa;
  return DomainInterval{-b, b, EndpointKind::Open, EndpointKind::Open};
}

DomainInterval alpha_interval(KappaParam k, double beta) {
  const double k2 = k.kappa * k.kappa;
  const double k3 = k2 * k.kappa;
  const double k4 = k2 * k2;
  const double beta_max = 8.0 * k3;
  if (std::abs(beta) > beta_max)
    throw BetaOutOfRange("alpha_interval: |beta| exceeds 8 kappa^3");

  if (beta == 0.0)
    return DomainInterval{-9.0 * k4, 0.0, EndpointKind::Open, EndpointKind::Open};
  if (std::abs(beta) == beta_max)
    return DomainInterval{3.0 * k4, 3.0 * k4, EndpointKind::Degenerate,
                          EndpointKind::Degenerate};

  const SecularQuartic s{0.0, beta, 6.0 * k2};
  const RootSet crit = cubic_roots(s.derivative());
  for (const auto& r : crit.roots) {
    // A merged critical point within rounding of the extreme beta: both
    // endpoints coincide at its T-value.
    if (r.is_real && r.multiplicity >= 2) {
      const double t = stationary_value_T(s, r.value.real());
      return DomainInterval{t, t, EndpointKind::Degenerate, EndpointKind::Degenerate};
    }
  }
  std::vector<double> e;
  for (const auto& r : crit.roots)
    if (r.is_real) e.push_back(r.value.real());
  std::sort(e.begin(), e.end());
  const double lo = std::max(stationary_value_T(s, e.front()), stationary_value_T(s, e.back()));
  const double hi = stationary_value_T(s, e[1]);
  return DomainInterval{lo, hi, EndpointKind::Open, EndpointKind::Open};
}

DomainInterval alpha_interval_asymptotic(KappaParam k, double delta) {
  if (delta < 0.0) throw std::invalid_argument("alpha_interval_asymptotic: delta must be >= 0");
  if (delta > 0.3) throw DeltaTooLarge("alpha_interval_asymptotic: delta must be <= 0.3");
  const double k4 = k.kappa * k.kappa * k.kappa * k.kappa;
  const double d2 = delta * delta;
  const double lo = k4 * (-9.0 + std::sqrt(3.0) * d2);
  const double hi = k4 * d2 * d2 / 24.0;
  return DomainInterval{lo, hi, EndpointKind::Open, EndpointKind::Open};
}

Region is_physical(const DomainPoint& p) {
  switch (reality_test(SecularQuartic{p.alpha, p.beta, p.gamma})) {
    case RealityVerdict::AllRealDistinct: return Region::Inside;
    case RealityVerdict::Degenerate: return Region::Boundary;
    case RealityVerdict::ComplexPairPresent: return Region::Outside;
  }
  return Region::Outside;
}

const char* to_string(Region r) {
  switch (r) {
    case Region::Inside: return "Inside";
    case Region::Boundary: return "Boundary";
    case Region::Outside: return "Outside";
  }
  return "Outside";
}

const char* to_string(RealityVerdict v) {
  switch (v) {
    case RealityVerdict::AllRealDistinct: return "AllRealDistinct";
    case RealityVerdict::Degenerate: return "Degenerate";
    case RealityVerdict::ComplexPairPresent: return "ComplexPairPresent";
  }
  return "ComplexPairPresent";
}

std::vector<ClassifiedPoint> scan_domain(double gamma, const GridSpec& grid) {
  if (grid.beta_resolution < 2 || grid.alpha_resolution < 2)
    throw InvalidGrid("scan_domain: resolution must be >= 2 per axis");
  if (!(grid.beta_min <= grid.beta_max) || !(grid.alpha_min <= grid.alpha_max) ||
      !std::isfinite(grid.beta_min) || !std::isfinite(grid.beta_max) ||
      !std::isfinite(grid.alpha_min) || !std::isfinite(grid.alpha_max) ||
      !std::isfinite(gamma))
    throw InvalidGrid("scan_domain: bounding box must be finite and ordered");

  auto coord = [](double lo, double hi, int n, int i) {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  std::vector<ClassifiedPoint> out;
  out.reserve(static_cast<std::size_t>(grid.beta_resolution) *
              static_cast<std::size_t>(grid.alpha_resolution));
  for (int ib = 0; ib < grid.beta_resolution; ++ib) {
    const double beta = coord(grid.beta_min, grid.beta_max, grid.beta_resolution, ib);
    for (int ia = 0; ia < grid.alpha_resolution; ++ia) {
      const double alpha = coord(grid.alpha_min, grid.alpha_max, grid.alpha_resolution, ia);
      const DomainPoint p{alpha, beta, gamma};
      out.push_back(ClassifiedPoint{p, is_physical(p)});
    }
  }
  return out;
}

}  // namespace ep4
