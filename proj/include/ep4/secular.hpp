#pragma once

#include <optional>
#include <vector>

#include "ep4/polyroots.hpp"

namespace ep4 {

// Reduced secular quartic S(E) = E^4 - gamma E^2 - beta E - alpha.
// The cubic coefficient is identically zero by construction.
struct SecularQuartic {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  RealPoly poly() const;               // S
  RealPoly derivative() const;         // S' = 4E^3 - 2 gamma E - beta
  RealPoly second_derivative() const;  // S'' = 12E^2 - 2 gamma
  double operator()(double e) const;
};

// Helper T(E) = E^4 - gamma E^2 - beta E, so S(E) = T(E) - alpha. The physical
// alpha-interval endpoints are T-values at the stationary points of S.
double stationary_value_T(const SecularQuartic& s, double e);

struct StationaryPoint {
  double location = 0.0;
  double value = 0.0;  // S(location)
};

// Real stationary points of S. With three distinct critical points the order
// is minima[0] < maximum < minima[1]; the monotone-S' case has a single
// minimum and no maximum. A double critical point of S' (attained only at
// |beta| = 8 kappa^3) is a horizontal inflection, reported in critical_points
// but neither a minimum nor the maximum.
struct StationaryProfile {
  std::vector<StationaryPoint> minima;  // ascending, size 1 or 2
  std::optional<StationaryPoint> maximum;
  std::vector<double> critical_points;  // all real roots of S', multiplicity-expanded
};

StationaryProfile stationary_profile(const SecularQuartic& s);

enum class RealityVerdict { AllRealDistinct, Degenerate, ComplexPairPresent };

// |S(stationary)| at or below this band is treated as a boundary degeneracy.
double degeneracy_band(const SecularQuartic& s);

// Four-real-distinct-roots test via the stationary sign conditions
// S(E-) < 0, S(E0) > 0, S(E+) < 0. Degenerate wins whenever any stationary
// value sits inside the degeneracy band.
RealityVerdict reality_test(const SecularQuartic& s);

}  // namespace ep4
