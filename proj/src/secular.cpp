#include "ep4/secular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ep4 {

RealPoly SecularQuartic::poly() const { return RealPoly({-alpha, -beta, -gamma, 0.0, 1.0}); }

RealPoly SecularQuartic::derivative() const { return RealPoly({-beta, -2.0 * gamma, 0.0, 4.0}); }

RealPoly SecularQuartic::second_derivative() const { return RealPoly({-2.0 * gamma, 0.0, 12.0}); }

double SecularQuartic::operator()(double e) const {
  return ((e * e - gamma) * e - beta) * e - alpha;
}

double stationary_value_T(const SecularQuartic& s, double e) {
  return ((e * e - s.gamma) * e - s.beta) * e;
}

StationaryProfile stationary_profile(const SecularQuartic& s) {
  StationaryProfile out;
  const RootSet crit = cubic_roots(s.derivative());
  for (const auto& r : crit.roots) {
    if (!r.is_real) continue;
    for (int k = 0; k < r.multiplicity; ++k) out.critical_points.push_back(r.value.real());
  }
  std::sort(out.critical_points.begin(), out.critical_points.end());

  const RealPoly curvature = s.second_derivative();
  for (const auto& r : crit.roots) {
    if (!r.is_real) continue;
    const double e = r.value.real();
    if (r.multiplicity > 1) continue;  // horizontal inflection, not an extremum
    StationaryPoint pt{e, s(e)};
    if (curvature(e) > 0.0) out.minima.push_back(pt);
    else if (curvature(e) < 0.0) out.maximum = pt;
    else out.minima.push_back(pt);  // S'' root coinciding with a simple S' root: flat minimum side
  }
  std::sort(out.minima.begin(), out.minima.end(),
            [](const StationaryPoint& a, const StationaryPoint& b) {
              return a.location < b.location;
            });
  return out;
}

double degeneracy_band(const SecularQuartic& s) {
  const double m = std::max({1.0, std::abs(s.alpha), std::abs(s.beta), std::abs(s.gamma)});
  return 1e-9 * m * m;
}

RealityVerdict reality_test(const SecularQuartic& s) {
  const StationaryProfile prof = stationary_profile(s);
  const double band = degeneracy_band(s);

  double min_abs_value = std::numeric_limits<double>::infinity();
  for (const auto& p : prof.minima) min_abs_value = std::min(min_abs_value, std::abs(p.value));
  if (prof.maximum) min_abs_value = std::min(min_abs_value, std::abs(prof.maximum->value));
  for (double e : prof.critical_points)
    min_abs_value = std::min(min_abs_value, std::abs(s(e)));
  if (min_abs_value <= band) return RealityVerdict::Degenerate;

  if (s.gamma > 0.0 && prof.minima.size() == 2 && prof.maximum) {
    const bool signs = prof.minima[0].value < 0.0 && prof.maximum->value > 0.0 &&
                       prof.minima[1].value < 0.0;
    if (signs) return RealityVerdict::AllRealDistinct;
  }
  return RealityVerdict::ComplexPairPresent;
}

}  // namespace ep4
