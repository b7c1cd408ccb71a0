#include "ep4/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace ep4 {

namespace {

using Complex = std::complex<double>;

void check_dim(int n) {
  if (n < 2) throw std::invalid_argument("BoseHubbard: dim must be >= 2");
}

// Leading-minor recurrence for det(H - lambda I) of the tridiagonal together
// with its lambda-derivative. Off-diagonal entries enter only through their
// exact integer squares j (N - j).
void charpoly_eval(int n, double g, Complex lambda, Complex& value, Complex& deriv) {
  Complex p_prev(1.0, 0.0), p = Complex(0.0, g * (1.0 - n)) - lambda;
  Complex d_prev(0.0, 0.0), d(-1.0, 0.0);
  for (int j = 2; j <= n; ++j) {
    const Complex diag(0.0, g * (2.0 * j - n - 1.0));
    const double off2 = static_cast<double>(j - 1) * static_cast<double>(n - j + 1);
    const Complex p_next = (diag - lambda) * p - off2 * p_prev;
    const Complex d_next = (diag - lambda) * d - p - off2 * d_prev;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
  }
  value = p;
  deriv = d;
}

Complex polish_on_charpoly(int n, double g, Complex lambda) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  Complex best = lambda;
  Complex value, deriv;
  charpoly_eval(n, g, lambda, value, deriv);
  double best_abs = std::abs(value);
  for (int it = 0; it < 50; ++it) {
    if (std::abs(deriv) == 0.0) break;
    const Complex step = value / deriv;
    lambda -= step;
    charpoly_eval(n, g, lambda, value, deriv);
    if (std::abs(value) < best_abs) {
      best_abs = std::abs(value);
      best = lambda;
    }
    if (std::abs(step) <= 2.0 * kEps * std::max(1.0, std::abs(lambda))) break;
  }
  return best;
}

// The reversal permutation R gives R H R = -H, so the spectrum is symmetric
// under negation; averaging each eigenvalue with its negated partner restores
// that symmetry exactly (and pins the middle eigenvalue of odd N to 0).
void symmetrize_negation(std::vector<Complex>& v) {
  std::vector<bool> done(v.size(), false);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (done[i]) continue;
    double best = std::numeric_limits<double>::infinity();
    std::size_t pick = i;
    for (std::size_t j = i; j < v.size(); ++j) {
      if (done[j]) continue;
      const double d = std::abs(v[i] + v[j]);
      if (d < best) {
        best = d;
        pick = j;
      }
    }
    done[i] = true;
    done[pick] = true;
    if (pick == i) {
      v[i] = Complex(0.0, 0.0);
      continue;
    }
    const Complex w = 0.5 * (v[i] - v[pick]);
    v[i] = w;
    v[pick] = -w;
  }
}

}  // namespace

ComplexMatrix bh_hamiltonian(const BoseHubbardSpec& spec) {
  check_dim(spec.dim);
  const int n = spec.dim;
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (int j = 1; j <= n; ++j)
    h(j - 1, j - 1) = Complex(0.0, spec.coupling * (2.0 * j - n - 1.0));
  for (int j = 1; j < n; ++j) {
    const double off = std::sqrt(static_cast<double>(j) * static_cast<double>(n - j));
    h(j - 1, j) = off;
    h(j, j - 1) = off;
  }
  return h;
}

SpectrumReport bh_spectrum(const BoseHubbardSpec& spec) {
  check_dim(spec.dim);
  const int n = spec.dim;
  if (std::abs(spec.coupling) == 1.0) {
    SpectrumReport out;
    out.eigenvalues.assign(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    out.real_eigenvalues.assign(static_cast<std::size_t>(n), 0.0);
    out.all_real = true;
    out.degenerate = true;
    return out;
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> es(bh_hamiltonian(spec), false);
  std::vector<Complex> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    values[static_cast<std::size_t>(i)] = polish_on_charpoly(n, spec.coupling, es.eigenvalues()(i));
  symmetrize_negation(values);
  return classify_spectrum(std::move(values), 1e-8, 1e-8);
}

BoseHubbardEpData bh_ep_data(int n) {
  check_dim(n);
  BoseHubbardEpData data;
  data.order = n;
  return data;
}

}  // namespace ep4
