#pragma once

#include <array>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "ep4/errors.hpp"

namespace ep4 {

// Real-coefficient polynomial of degree <= 4, coefficients ascending.
// Trailing exact-zero coefficients are trimmed on construction; the leading
// coefficient of a constructed value is always nonzero.
class RealPoly {
public:
  // Throws std::invalid_argument if every coefficient is zero and
  // DegreeMismatch if the trimmed degree exceeds 4.
  explicit RealPoly(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  RealPoly derivative() const;  // degree 0 input differentiates to the zero constant 0·x^0

  // Upper bound on the roundoff of the Horner evaluation at x:
  // gamma_{2n} * sum |c_i| |x|^i, with a constant-factor allowance for
  // complex arithmetic. Used to decide whether a residual is "numerically zero".
  double evaluation_error_bound(std::complex<double> x) const;

private:
  std::vector<double> coeffs_;
};

// Distinct roots with multiplicities. Total multiplicity equals the degree;
// non-real roots appear in exact conjugate pairs.
struct RootSet {
  struct Root {
    std::complex<double> value;
    int multiplicity = 1;
    bool is_real = false;
  };

  std::vector<Root> roots;         // sorted by (re, im)
  std::vector<double> real_roots;  // ascending, multiplicity-expanded

  int total_multiplicity() const;
  int distinct_real_count() const;
  bool all_real() const;
  std::vector<std::complex<double>> expanded() const;  // multiset, size = degree
};

// Merge band for distinct roots: |r1 - r2| <= this means one root.
inline double distinctness_tolerance(double magnitude) {
  return 1e-8 * std::max(1.0, magnitude);
}

// A root is real when |Im| <= this.
inline double reality_tolerance(double magnitude) {
  return 1e-9 * std::max(1.0, magnitude);
}

RootSet cubic_roots(const RealPoly& p);    // DegreeMismatch unless degree == 3
RootSet quartic_roots(const RealPoly& p);  // DegreeMismatch unless degree == 4

// Distinct real roots of p, on the whole line or in the open interval
// (first, second). Sturm-chain based and independent of the eigensolve path.
// Endpoints that are themselves roots are excluded; detection of a root at an
// endpoint is an exact-arithmetic test, so prefer endpoints away from roots.
int count_real_roots(const RealPoly& p,
                     std::optional<std::pair<double, double>> interval = std::nullopt);

// Closed-form Cardano solution of c3 x^3 + c2 x^2 + c1 x + c0, c3 != 0.
// Kept free of any Newton step: this is the independent cross-check oracle.
std::array<std::complex<double>, 3> cardano_cubic(double c3, double c2, double c1,
                                                  double c0);

}  // namespace ep4
