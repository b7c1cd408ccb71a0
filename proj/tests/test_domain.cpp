#include <cmath>
#include <random>

#include "doctest.h"
#include "ep4/domain.hpp"

using ep4::DomainInterval;
using ep4::DomainPoint;
using ep4::KappaParam;
using ep4::Region;

TEST_SUITE("domain") {

TEST_CASE("kappa_of_gamma definition and failure") {
  CHECK(ep4::kappa_of_gamma(6.0).kappa == 1.0);
  CHECK(ep4::kappa_of_gamma(24.0).kappa == 2.0);
  CHECK_THROWS_AS(ep4::kappa_of_gamma(0.0), ep4::NonpositiveGamma);
  CHECK_THROWS_AS(ep4::kappa_of_gamma(-3.0), ep4::NonpositiveGamma);
  // round trip
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(0.01, 50.0);
  for (int i = 0; i < 200; ++i) {
    const double gamma = pos(rng);
    const double k = ep4::kappa_of_gamma(gamma).kappa;
    CHECK(std::abs(6.0 * k * k - gamma) <= 1e-14 * gamma);
  }
}

TEST_CASE("beta_interval is the open cube-scaled band") {
  const auto i1 = ep4::beta_interval(KappaParam{1.0});
  CHECK(i1.lower == -8.0);
  CHECK(i1.upper == 8.0);
  CHECK(i1.lower_kind == ep4::EndpointKind::Open);
  CHECK(!i1.contains(8.0));
  CHECK(i1.contains(7.999999));
  const auto i2 = ep4::beta_interval(KappaParam{2.0});
  CHECK(i2.lower == -64.0);
  CHECK(i2.upper == 64.0);
  const auto tiny = ep4::beta_interval(KappaParam{1e-4});
  CHECK(tiny.upper == 8e-12);
}

TEST_CASE("alpha_interval at beta = 0 is exactly (-9, 0)") {
  const auto iv = ep4::alpha_interval(KappaParam{1.0}, 0.0);
  CHECK(iv.lower == -9.0);
  CHECK(iv.upper == 0.0);
  CHECK(iv.lower_kind == ep4::EndpointKind::Open);
  CHECK(iv.upper_kind == ep4::EndpointKind::Open);
  CHECK(!iv.contains(-9.0));
  CHECK(iv.contains(-4.0));
}

TEST_CASE("alpha_interval at the extreme beta collapses to 3 kappa^4") {
  const auto iv = ep4::alpha_interval(KappaParam{1.0}, 8.0);
  CHECK(iv.is_degenerate());
  CHECK(std::abs(iv.lower - 3.0) < 1e-10);
  CHECK(std::abs(iv.upper - 3.0) < 1e-10);
  const auto neg = ep4::alpha_interval(KappaParam{1.0}, -8.0);
  CHECK(neg.is_degenerate());
  CHECK(std::abs(neg.lower - 3.0) < 1e-10);
  CHECK_THROWS_AS(ep4::alpha_interval(KappaParam{1.0}, 10.0), ep4::BetaOutOfRange);
}

TEST_CASE("generic path is continuous with the beta = 0 closed form") {
  const auto iv = ep4::alpha_interval(KappaParam{1.0}, 1e-9);
  CHECK(std::abs(iv.lower + 9.0) < 1e-8);
  CHECK(std::abs(iv.upper) < 1e-8);
}

TEST_CASE("asymptotic interval formulas") {
  const auto at0 = ep4::alpha_interval_asymptotic(KappaParam{1.0}, 0.0);
  CHECK(at0.lower == -9.0);
  CHECK(at0.upper == 0.0);
  const auto at01 = ep4::alpha_interval_asymptotic(KappaParam{1.0}, 0.1);
  CHECK(std::abs(at01.lower - (-9.0 + std::sqrt(3.0) * 0.01)) < 1e-14);
  CHECK(std::abs(at01.upper - 1e-4 / 24.0) < 1e-18);
  CHECK_THROWS_AS(ep4::alpha_interval_asymptotic(KappaParam{1.0}, 0.31), ep4::DeltaTooLarge);
  CHECK_THROWS_AS(ep4::alpha_interval_asymptotic(KappaParam{1.0}, -0.1),
                  std::invalid_argument);
}

TEST_CASE("asymptotic endpoints approach the exact interval to O(delta^4)") {
  for (const double delta : {0.05, 0.1, 0.2}) {
    const double beta = delta * delta;  // kappa = 1
    const auto exact = ep4::alpha_interval(KappaParam{1.0}, beta);
    const auto approx = ep4::alpha_interval_asymptotic(KappaParam{1.0}, delta);
    const double d4 = std::pow(delta, 4.0);
    CHECK(std::abs(exact.lower - approx.lower) < 0.05 * d4);
    CHECK(std::abs(exact.upper - approx.upper) < 0.05 * d4);
  }
}

TEST_CASE("is_physical frozen verdicts") {
  CHECK(ep4::is_physical(DomainPoint{-24.0, -10.0, 15.0}) == Region::Inside);
  CHECK(ep4::is_physical(DomainPoint{-4.0, 0.0, 6.0}) == Region::Inside);
  CHECK(ep4::is_physical(DomainPoint{1.0, 0.0, 6.0}) == Region::Outside);
}

TEST_CASE("interval arithmetic agrees with is_physical on random points") {
  std::mt19937_64 rng(8080);
  std::uniform_real_distribution<double> par(-20.0, 20.0);
  int checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const DomainPoint p{par(rng), par(rng), par(rng)};
    const Region region = ep4::is_physical(p);
    if (region == Region::Boundary) continue;

    bool inside_by_intervals = false;
    if (p.gamma > 0.0) {
      const KappaParam k = ep4::kappa_of_gamma(p.gamma);
      const auto bi = ep4::beta_interval(k);
      if (bi.contains(p.beta)) {
        const auto ai = ep4::alpha_interval(k, p.beta);
        if (!ai.is_degenerate()) {
          // leave boundary-ambiguous samples to the Degenerate verdict
          const double margin =
              std::min(std::abs(p.alpha - ai.lower), std::abs(ai.upper - p.alpha));
          if (margin < 1e-6) continue;
          inside_by_intervals = ai.contains(p.alpha);
        }
      }
    }
    ++checked;
    CHECK((region == Region::Inside) == inside_by_intervals);
  }
  CHECK(checked > 9900);
}

TEST_CASE("interval shrinks and its lower endpoint moves right as beta grows") {
  double prev_lower = -std::numeric_limits<double>::infinity();
  double prev_length = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 32; ++i) {
    const double beta = 8.0 * static_cast<double>(i) / 32.0;
    const auto iv = ep4::alpha_interval(KappaParam{1.0}, beta);
    CHECK(iv.lower >= prev_lower - 1e-12);
    CHECK(iv.length() <= prev_length + 1e-12);
    prev_lower = iv.lower;
    prev_length = iv.length();
  }
  CHECK(prev_length == 0.0);  // ultimate zero length at beta = 8 kappa^3
}

TEST_CASE("alpha_interval is symmetric in the sign of beta") {
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> kap(0.3, 2.5);
  std::uniform_real_distribution<double> frac(0.0, 0.999);
  for (int trial = 0; trial < 500; ++trial) {
    const KappaParam k{kap(rng)};
    const double beta = frac(rng) * 8.0 * k.kappa * k.kappa * k.kappa;
    const auto plus = ep4::alpha_interval(k, beta);
    const auto minus = ep4::alpha_interval(k, -beta);
    const double scale = std::max({1.0, std::abs(plus.lower), std::abs(plus.upper)});
    CHECK(std::abs(plus.lower - minus.lower) <= 1e-10 * scale);
    CHECK(std::abs(plus.upper - minus.upper) <= 1e-10 * scale);
  }
}

TEST_CASE("alpha at either interval endpoint produces a Degenerate verdict") {
  std::mt19937_64 rng(456);
  std::uniform_real_distribution<double> kap(0.5, 2.0);
  std::uniform_real_distribution<double> frac(0.0, 0.9);
  for (int trial = 0; trial < 300; ++trial) {
    const KappaParam k{kap(rng)};
    const double gamma = 6.0 * k.kappa * k.kappa;
    const double beta = frac(rng) * 8.0 * k.kappa * k.kappa * k.kappa;
    const auto iv = ep4::alpha_interval(k, beta);
    CHECK(ep4::reality_test(ep4::SecularQuartic{iv.lower, beta, gamma}) ==
          ep4::RealityVerdict::Degenerate);
    CHECK(ep4::reality_test(ep4::SecularQuartic{iv.upper, beta, gamma}) ==
          ep4::RealityVerdict::Degenerate);
  }
}

TEST_CASE("membership is invariant under the scaling law") {
  std::mt19937_64 rng(7777);
  std::uniform_real_distribution<double> par(-20.0, 20.0);
  std::uniform_real_distribution<double> sc(0.5, 2.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const DomainPoint p{par(rng), par(rng), par(rng)};
    const double s = sc(rng);
    const double s2 = s * s;
    const DomainPoint q{s2 * s2 * p.alpha, s2 * s * p.beta, s2 * p.gamma};
    const Region rp = ep4::is_physical(p);
    const Region rq = ep4::is_physical(q);
    if (rp == Region::Boundary || rq == Region::Boundary) continue;
    CHECK(rp == rq);
  }
}

TEST_CASE("scan_domain classifies every grid point with the pointwise oracle") {
  ep4::GridSpec grid;
  grid.beta_min = -9.0;
  grid.beta_max = 9.0;
  grid.alpha_min = -10.0;
  grid.alpha_max = 1.0;
  grid.beta_resolution = 21;
  grid.alpha_resolution = 21;
  const auto rows = ep4::scan_domain(6.0, grid);
  REQUIRE(rows.size() == 441);
  int inside = 0;
  for (const auto& r : rows) {
    CHECK(r.region == ep4::is_physical(r.point));
    inside += r.region == Region::Inside ? 1 : 0;
  }
  CHECK(inside > 0);
  // the Inside set must respect the alpha_interval bounds
  for (const auto& r : rows) {
    if (r.region != Region::Inside) continue;
    const auto k = ep4::kappa_of_gamma(6.0);
    CHECK(std::abs(r.point.beta) < 8.0);
    const auto iv = ep4::alpha_interval(k, r.point.beta);
    CHECK(iv.contains(r.point.alpha));
  }
}

TEST_CASE("scan_domain edge grids") {
  ep4::GridSpec grid;
  grid.beta_min = -2.0;
  grid.beta_max = 2.0;
  grid.alpha_min = -1.0;
  grid.alpha_max = 1.0;
  grid.beta_resolution = 5;
  grid.alpha_resolution = 4;
  const auto negative_gamma = ep4::scan_domain(-1.0, grid);
  REQUIRE(negative_gamma.size() == 20);
  for (const auto& r : negative_gamma) CHECK(r.region == Region::Outside);

  ep4::GridSpec high_alpha = grid;
  high_alpha.alpha_min = 3.5;  // above the global T(E0) < 3 kappa^4 bound at gamma = 6
  high_alpha.alpha_max = 10.0;
  for (const auto& r : ep4::scan_domain(6.0, high_alpha)) CHECK(r.region != Region::Inside);

  ep4::GridSpec bad = grid;
  bad.beta_resolution = 1;
  CHECK_THROWS_AS(ep4::scan_domain(6.0, bad), ep4::InvalidGrid);
  ep4::GridSpec inverted = grid;
  inverted.alpha_min = 2.0;
  inverted.alpha_max = -2.0;
  CHECK_THROWS_AS(ep4::scan_domain(6.0, inverted), ep4::InvalidGrid);
}

TEST_CASE("scan order is deterministic: beta outer ascending, alpha inner") {
  ep4::GridSpec grid;
  grid.beta_min = 0.0;
  grid.beta_max = 1.0;
  grid.alpha_min = -1.0;
  grid.alpha_max = 0.0;
  grid.beta_resolution = 2;
  grid.alpha_resolution = 3;
  const auto rows = ep4::scan_domain(6.0, grid);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].point.beta == 0.0);
  CHECK(rows[0].point.alpha == -1.0);
  CHECK(rows[1].point.alpha == -0.5);
  CHECK(rows[2].point.alpha == 0.0);
  CHECK(rows[3].point.beta == 1.0);
}

}  // TEST_SUITE
