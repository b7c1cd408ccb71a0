#pragma once

#include <vector>

#include "ep4/errors.hpp"
#include "ep4/secular.hpp"

namespace ep4 {

struct DomainPoint {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

enum class EndpointKind { Open, Closed, Degenerate };

struct DomainInterval {
  double lower = 0.0;
  double upper = 0.0;
  EndpointKind lower_kind = EndpointKind::Open;
  EndpointKind upper_kind = EndpointKind::Open;

  bool is_degenerate() const { return lower_kind == EndpointKind::Degenerate; }
  double length() const { return upper - lower; }
  bool contains(double x) const;
};

// kappa > 0 with gamma = 6 kappa^2.
struct KappaParam {
  double kappa = 1.0;
};

KappaParam kappa_of_gamma(double gamma);  // NonpositiveGamma when gamma <= 0

// Open interval (-8 kappa^3, 8 kappa^3) of admissible beta.
DomainInterval beta_interval(KappaParam k);

// Admissible alpha at fixed (kappa, beta): the open interval between
// max(T(E-), T(E+)) and T(E0) over the stationary points of S, collapsing to
// the degenerate point 3 kappa^4 at |beta| = 8 kappa^3. beta == 0 and
// |beta| == 8 kappa^3 take closed forms; the generic path solves the cubic.
DomainInterval alpha_interval(KappaParam k, double beta);  // BetaOutOfRange when |beta| > 8k^3

// Leading-order interval (kappa^4(-9 + sqrt(3) delta^2), kappa^4 delta^4 / 24)
// for beta = delta^2 kappa^3; an approximation to alpha_interval, accurate to
// O(delta^4) at the lower and O(delta^8) at the upper endpoint.
DomainInterval alpha_interval_asymptotic(KappaParam k, double delta);  // DeltaTooLarge > 0.3

enum class Region { Inside, Boundary, Outside };

// Inside iff the secular quartic has four distinct real roots; Boundary on a
// degenerate (double-root) configuration; Outside otherwise.
Region is_physical(const DomainPoint& p);

const char* to_string(Region r);
const char* to_string(RealityVerdict v);

struct GridSpec {
  double beta_min = 0.0, beta_max = 0.0;
  double alpha_min = 0.0, alpha_max = 0.0;
  int beta_resolution = 2;   // points per axis, endpoints included
  int alpha_resolution = 2;
};

struct ClassifiedPoint {
  DomainPoint point;
  Region region = Region::Outside;
};

// Deterministic row-major scan: beta outer (ascending), alpha inner.
std::vector<ClassifiedPoint> scan_domain(double gamma, const GridSpec& grid);  // InvalidGrid

}  // namespace ep4
