#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "ep4/metric.hpp"
#include "ep4/models.hpp"

using ep4::ComplexMatrix;
using Complex = std::complex<double>;

namespace {

std::vector<double> sorted_real_eigs(const ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(m, false);
  std::vector<double> v;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    REQUIRE(std::abs(es.eigenvalues()(i).imag()) < 1e-9);
    v.push_back(es.eigenvalues()(i).real());
  }
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("metric") {

TEST_CASE("a Hermitian input yields coincident left and right systems") {
  ComplexMatrix h(2, 2);
  h << Complex(1.0, 0.0), Complex(0.0, -0.5), Complex(0.0, 0.5), Complex(2.0, 0.0);
  const auto sys = ep4::biorthogonal_system(h);
  CHECK((sys.left - sys.right).norm() < 1e-10);
  CHECK((sys.left.adjoint() * sys.right - ComplexMatrix::Identity(2, 2)).norm() < 1e-12);
  const auto metric = ep4::build_metric(h);
  CHECK((metric.theta - ComplexMatrix::Identity(2, 2)).norm() < 1e-10);
  CHECK(metric.min_eigenvalue == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("biorthogonal system reconstructs the two-site model") {
  const ComplexMatrix h = ep4::bh_hamiltonian({2, 0.5});
  const auto sys = ep4::biorthogonal_system(h);
  REQUIRE(sys.eigenvalues.size() == 2);
  const double e = std::sqrt(0.75);
  CHECK(std::abs(sys.eigenvalues[0] - Complex(-e, 0.0)) < 1e-10);
  CHECK(std::abs(sys.eigenvalues[1] - Complex(e, 0.0)) < 1e-10);
  CHECK((sys.left.adjoint() * sys.right - ComplexMatrix::Identity(2, 2)).norm() < 1e-12);
  ComplexMatrix rebuilt = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    rebuilt += sys.eigenvalues[static_cast<std::size_t>(i)] * sys.right.col(i) *
               sys.left.col(i).adjoint();
  CHECK((rebuilt - h).norm() < 1e-10);
  // columnwise eigen-pair identities on both sides
  for (int i = 0; i < 2; ++i) {
    const Complex ev = sys.eigenvalues[static_cast<std::size_t>(i)];
    CHECK((h * sys.right.col(i) - ev * sys.right.col(i)).norm() < 1e-10);
    CHECK((h.adjoint() * sys.left.col(i) - std::conj(ev) * sys.left.col(i)).norm() < 1e-10);
  }
}

TEST_CASE("the metric intertwines H with its adjoint") {
  for (int n = 2; n <= 6; ++n) {
    for (const double g : {0.3, 0.7, 0.95}) {
      const ComplexMatrix h = ep4::bh_hamiltonian({n, g});
      const auto metric = ep4::build_metric(h);
      CHECK((metric.theta - metric.theta.adjoint()).norm() < 1e-13 * metric.theta.norm());
      CHECK(metric.min_eigenvalue > 0.0);
      const double residual = (h.adjoint() * metric.theta - metric.theta * h).norm();
      CHECK(residual <= 1e-10 * h.norm() * metric.theta.norm());
    }
  }
}

TEST_CASE("custom positive weights give a different valid metric") {
  const ComplexMatrix h = ep4::bh_hamiltonian({3, 0.6});
  const auto base = ep4::build_metric(h);
  const auto tilted = ep4::build_metric(h, {1.0, 2.0, 3.0});
  CHECK((base.theta - tilted.theta).norm() > 1e-3);
  CHECK(tilted.min_eigenvalue > 0.0);
  const double residual = (h.adjoint() * tilted.theta - tilted.theta * h).norm();
  CHECK(residual <= 1e-10 * h.norm() * tilted.theta.norm());
  // random positive weights keep the intertwining property
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> w(0.1, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<double> weights{w(rng), w(rng), w(rng)};
    const auto m = ep4::build_metric(h, weights);
    CHECK(m.min_eigenvalue > 0.0);
    CHECK((h.adjoint() * m.theta - m.theta * h).norm() <=
          1e-10 * h.norm() * m.theta.norm());
  }
}

TEST_CASE("weight vectors must be positive and the right length") {
  const ComplexMatrix h = ep4::bh_hamiltonian({2, 0.5});
  CHECK_THROWS_AS((void)ep4::build_metric(h, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS((void)ep4::build_metric(h, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS((void)ep4::build_metric(h, {1.0, -2.0}), std::invalid_argument);
}

TEST_CASE("the EP itself is rejected as near-defective") {
  CHECK_THROWS_AS((void)ep4::biorthogonal_system(ep4::bh_hamiltonian({2, 1.0})),
                  ep4::NearDefective);
  CHECK_THROWS_AS((void)ep4::build_metric(ep4::bh_hamiltonian({4, 1.0})),
                  ep4::NearDefective);
  CHECK_THROWS_AS((void)ep4::build_metric(ep4::bh_hamiltonian({3, 1.0 - 1e-12})),
                  ep4::NearDefective);
}

TEST_CASE("degenerate but diagonalizable inputs keep their identity metric") {
  // repeated eigenvalues with an orthogonal eigenbasis are not an EP
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  const auto metric = ep4::build_metric(id);
  CHECK((metric.theta - id).norm() < 1e-12);
  CHECK(metric.min_eigenvalue == doctest::Approx(1.0).epsilon(1e-12));

  ComplexMatrix dd = ComplexMatrix::Zero(3, 3);
  dd(0, 0) = dd(1, 1) = Complex(5.0, 0.0);
  dd(2, 2) = Complex(-1.0, 0.0);
  const auto m2 = ep4::build_metric(dd);
  CHECK((m2.theta - ComplexMatrix::Identity(3, 3)).norm() < 1e-12);
  CHECK((dd.adjoint() * m2.theta - m2.theta * dd).norm() <=
        1e-10 * dd.norm() * m2.theta.norm());
}

TEST_CASE("complex spectra admit no positive metric") {
  CHECK_THROWS_AS((void)ep4::build_metric(ep4::bh_hamiltonian({2, 2.0})),
                  ep4::ComplexSpectrum);
  CHECK_THROWS_AS((void)ep4::build_metric(ep4::bh_hamiltonian({5, 1.5})),
                  ep4::ComplexSpectrum);
}

TEST_CASE("dyson_map takes the exact square root of a diagonal metric") {
  ep4::MetricOperator m;
  m.theta = ComplexMatrix::Zero(2, 2);
  m.theta(0, 0) = Complex(4.0, 0.0);
  m.theta(1, 1) = Complex(9.0, 0.0);
  m.min_eigenvalue = 4.0;
  const ComplexMatrix omega = ep4::dyson_map(m);
  CHECK(std::abs(omega(0, 0) - Complex(2.0, 0.0)) < 1e-14);
  CHECK(std::abs(omega(1, 1) - Complex(3.0, 0.0)) < 1e-14);
  CHECK(std::abs(omega(0, 1)) < 1e-14);
}

TEST_CASE("dyson_map squares back to the metric and is self-adjoint") {
  for (const double g : {0.2, 0.8}) {
    const ComplexMatrix h = ep4::bh_hamiltonian({4, g});
    const auto metric = ep4::build_metric(h);
    const ComplexMatrix omega = ep4::dyson_map(metric);
    CHECK((omega - omega.adjoint()).norm() < 1e-12 * omega.norm());
    CHECK((omega * omega - metric.theta).norm() < 1e-10 * metric.theta.norm());
    CHECK((omega.adjoint() * omega - metric.theta).norm() < 1e-10 * metric.theta.norm());
  }
}

TEST_CASE("dyson_map rejects indefinite input") {
  ep4::MetricOperator m;
  m.theta = ComplexMatrix::Zero(2, 2);
  m.theta(0, 0) = Complex(1.0, 0.0);
  m.theta(1, 1) = Complex(-1.0, 0.0);
  m.min_eigenvalue = -1.0;
  CHECK_THROWS_AS((void)ep4::dyson_map(m), ep4::InvalidMetric);
}

TEST_CASE("hermitize produces a Hermitian isospectral partner") {
  const ComplexMatrix h = ep4::bh_hamiltonian({2, 0.5});
  const auto metric = ep4::build_metric(h);
  const ComplexMatrix hh = ep4::hermitize(h, metric);
  CHECK((hh - hh.adjoint()).norm() <= 1e-10 * h.norm());
  const auto eigs = sorted_real_eigs(hh);
  const double e = std::sqrt(0.75);
  REQUIRE(eigs.size() == 2);
  CHECK(std::abs(eigs[0] + e) < 1e-10);
  CHECK(std::abs(eigs[1] - e) < 1e-10);
}

TEST_CASE("hermitized three-site spectrum at g = 0.9") {
  const ComplexMatrix h = ep4::bh_hamiltonian({3, 0.9});
  const auto metric = ep4::build_metric(h);
  const ComplexMatrix hh = ep4::hermitize(h, metric);
  CHECK((hh - hh.adjoint()).norm() <= 1e-10 * h.norm());
  const auto eigs = sorted_real_eigs(hh);
  const double e = 2.0 * std::sqrt(0.19);
  REQUIRE(eigs.size() == 3);
  CHECK(std::abs(eigs[0] + e) < 1e-9);
  CHECK(std::abs(eigs[1]) < 1e-9);
  CHECK(std::abs(eigs[2] - e) < 1e-9);
}

TEST_CASE("hermitize preserves the spectrum across sizes and weights") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> w(0.2, 4.0);
  for (int n = 2; n <= 6; ++n) {
    const ComplexMatrix h = ep4::bh_hamiltonian({n, 0.7});
    std::vector<double> weights(static_cast<std::size_t>(n));
    for (auto& x : weights) x = w(rng);
    const auto metric = ep4::build_metric(h, weights);
    const ComplexMatrix hh = ep4::hermitize(h, metric);
    CHECK((hh - hh.adjoint()).norm() <= 1e-10 * h.norm());
    const auto eigs = sorted_real_eigs(hh);
    const auto want = ep4::bh_spectrum({n, 0.7}).real_eigenvalues;
    for (std::size_t i = 0; i < eigs.size(); ++i)
      CHECK(std::abs(eigs[i] - want[i]) < 1e-8);
  }
}

TEST_CASE("the metric degrades monotonically toward the EP") {
  double prev = 1e300;
  for (const double g : {0.5, 0.9, 0.99, 0.999}) {
    const auto metric = ep4::build_metric(ep4::bh_hamiltonian({4, g}));
    CHECK(metric.min_eigenvalue > 0.0);
    CHECK(metric.min_eigenvalue < prev);
    prev = metric.min_eigenvalue;
  }
}

}  // TEST_SUITE
