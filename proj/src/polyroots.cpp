#include "ep4/polyroots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ep4 {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

RealPoly::RealPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.empty()) throw std::invalid_argument("RealPoly: zero polynomial");
  if (degree() > 4) throw DegreeMismatch("RealPoly: degree exceeds 4");
}

double RealPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> RealPoly::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealPoly RealPoly::derivative() const {
  if (degree() == 0)
    throw std::invalid_argument("RealPoly::derivative: constant differentiates to zero");
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * static_cast<double>(i);
  return RealPoly(std::move(d));
}

double RealPoly::evaluation_error_bound(std::complex<double> x) const {
  const double ax = std::abs(x);
  double sum = 0.0, pw = 1.0;
  for (double c : coeffs_) {
    sum += std::abs(c) * pw;
    pw *= ax;
  }
  const double n = static_cast<double>(degree());
  return (4.0 * n + 4.0) * kEps * sum;
}

int RootSet::total_multiplicity() const {
  int m = 0;
  for (const auto& r : roots) m += r.multiplicity;
  return m;
}

int RootSet::distinct_real_count() const {
  int m = 0;
  for (const auto& r : roots) m += r.is_real ? 1 : 0;
  return m;
}

bool RootSet::all_real() const {
  return distinct_real_count() == static_cast<int>(roots.size());
}

std::vector<std::complex<double>> RootSet::expanded() const {
  std::vector<std::complex<double>> out;
  for (const auto& r : roots)
    out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return out;
}

namespace {

using Complex = std::complex<double>;

std::vector<Complex> companion_roots(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) a(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) a(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  return roots;
}

Complex newton_polish(const RealPoly& p, const RealPoly& dp, Complex r, int iters) {
  Complex best = r;
  double best_abs = std::abs(p(r));
  for (int i = 0; i < iters; ++i) {
    const Complex d = dp(r);
    if (std::abs(d) == 0.0) break;
    const Complex step = p(r) / d;
    r -= step;
    const double pr = std::abs(p(r));
    if (pr < best_abs) {
      best_abs = pr;
      best = r;
    }
    if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(r))) break;
  }
  return best;
}

// p, p', p'', ... chain up to order `upto` inclusive.
std::vector<RealPoly> derivative_chain(const RealPoly& p, int upto) {
  std::vector<RealPoly> chain{p};
  for (int k = 0; k < upto; ++k) chain.push_back(chain.back().derivative());
  return chain;
}

// True m-fold roots of p are simple roots of p^(m-1); a cluster of companion
// approximants collapses to one polished value there. Acceptance is a graded
// residual test: every lower derivative must vanish to within its own
// evaluation-noise bound.
bool refine_multiple(const std::vector<RealPoly>& chain, int m, Complex seed, Complex& out) {
  const RealPoly& target = chain[static_cast<std::size_t>(m - 1)];
  if (target.degree() < 1) return false;
  Complex c = newton_polish(target, chain[static_cast<std::size_t>(m)], seed, 20);
  if (std::abs(c.imag()) <= reality_tolerance(std::abs(c))) c = Complex(c.real(), 0.0);
  for (int k = 0; k < m; ++k) {
    const RealPoly& pk = chain[static_cast<std::size_t>(k)];
    if (std::abs(pk(c)) > 4.0 * pk.evaluation_error_bound(c)) return false;
  }
  out = c;
  return true;
}

// Partition indices (sorted by value) into groups transitively closer than band.
std::vector<std::vector<std::size_t>> cluster_by_distance(const std::vector<Complex>& v,
                                                          double band_scale) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (v[a].real() != v[b].real()) return v[a].real() < v[b].real();
    return v[a].imag() < v[b].imag();
  });
  std::vector<std::vector<std::size_t>> groups;
  auto near = [&](std::size_t i, const std::vector<std::size_t>& g) {
    for (std::size_t j : g) {
      const double band = band_scale * std::max({1.0, std::abs(v[i]), std::abs(v[j])});
      if (std::abs(v[i] - v[j]) <= band) return true;
    }
    return false;
  };
  for (std::size_t i : idx) {
    std::vector<std::size_t> matches;
    for (std::size_t k = 0; k < groups.size(); ++k)
      if (near(i, groups[k])) matches.push_back(k);
    if (matches.empty()) {
      groups.push_back({i});
      continue;
    }
    groups[matches[0]].push_back(i);
    for (std::size_t k = matches.size(); k-- > 1;) {  // merge bridged groups
      auto& dst = groups[matches[0]];
      auto& src = groups[matches[k]];
      dst.insert(dst.end(), src.begin(), src.end());
      groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(matches[k]));
    }
  }
  return groups;
}

void refine_cluster(const std::vector<RealPoly>& chain, std::vector<Complex>& roots,
                    const std::vector<std::size_t>& members, double band_scale) {
  const int m = static_cast<int>(members.size());
  if (m < 2) return;
  Complex mean = 0.0;
  for (std::size_t i : members) mean += roots[i];
  mean /= static_cast<double>(m);
  Complex refined;
  if (refine_multiple(chain, m, mean, refined)) {
    for (std::size_t i : members) roots[i] = refined;
    return;
  }
  // Not an m-fold root; a tighter band may still isolate a smaller multiple
  // (for instance a double accompanied by a nearby simple root).
  if (band_scale <= 1e-9) return;
  std::vector<Complex> sub;
  sub.reserve(members.size());
  for (std::size_t i : members) sub.push_back(roots[i]);
  for (const auto& g : cluster_by_distance(sub, band_scale / 10.0)) {
    if (g.size() < 2) continue;
    std::vector<std::size_t> orig;
    orig.reserve(g.size());
    for (std::size_t k : g) orig.push_back(members[k]);
    refine_cluster(chain, roots, orig, band_scale / 10.0);
  }
}

void enforce_conjugate_pairs(std::vector<Complex>& roots) {
  for (auto& r : roots)
    if (std::abs(r.imag()) <= reality_tolerance(std::abs(r))) r = Complex(r.real(), 0.0);
  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].imag() > 0.0) upper.push_back(i);
    else if (roots[i].imag() < 0.0) lower.push_back(i);
  }
  std::vector<bool> used(lower.size(), false);
  for (std::size_t u : upper) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t pick = lower.size();
    for (std::size_t k = 0; k < lower.size(); ++k) {
      if (used[k]) continue;
      const double d = std::abs(std::conj(roots[lower[k]]) - roots[u]);
      if (d < best) {
        best = d;
        pick = k;
      }
    }
    if (pick == lower.size()) {
      roots[u] = Complex(roots[u].real(), 0.0);  // unmatched: real quartic cannot do this
      continue;
    }
    used[pick] = true;
    const Complex v = 0.5 * (roots[u] + std::conj(roots[lower[pick]]));
    roots[u] = v;
    roots[lower[pick]] = std::conj(v);
  }
  for (std::size_t k = 0; k < lower.size(); ++k)
    if (!used[k]) roots[lower[k]] = Complex(roots[lower[k]].real(), 0.0);
}

RootSet assemble(std::vector<Complex> roots) {
  RootSet out;
  auto groups = cluster_by_distance(roots, 1e-8);
  std::vector<RootSet::Root> collected;
  for (const auto& g : groups) {
    Complex mean = 0.0;
    for (std::size_t i : g) mean += roots[i];
    mean /= static_cast<double>(g.size());
    RootSet::Root r;
    r.value = mean;
    r.multiplicity = static_cast<int>(g.size());
    r.is_real = mean.imag() == 0.0;
    collected.push_back(r);
  }
  std::sort(collected.begin(), collected.end(), [](const auto& a, const auto& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  out.roots = std::move(collected);
  for (const auto& r : out.roots)
    if (r.is_real)
      out.real_roots.insert(out.real_roots.end(), static_cast<std::size_t>(r.multiplicity),
                            r.value.real());
  return out;
}

RootSet solve(const RealPoly& p) {
  const int n = p.degree();
  std::vector<Complex> roots;
  if (n == 1) {
    roots.push_back(Complex(-p.coeffs()[0] / p.coeffs()[1], 0.0));
    return assemble(std::move(roots));
  }
  roots = companion_roots(p.coeffs());
  const auto chain = derivative_chain(p, n);
  for (auto& r : roots) r = newton_polish(chain[0], chain[1], r, 12);
  // Wide candidate band: a quadruple root emerges from the eigensolve split by
  // ~eps^(1/4). Genuinely distinct clusters fail the graded test and are
  // re-partitioned at tighter bands inside refine_cluster.
  for (const auto& g : cluster_by_distance(roots, 1e-3)) refine_cluster(chain, roots, g, 1e-3);
  enforce_conjugate_pairs(roots);
  return assemble(std::move(roots));
}

}  // namespace

RootSet cubic_roots(const RealPoly& p) {
  if (p.degree() != 3) throw DegreeMismatch("cubic_roots: degree must be 3");
  return solve(p);
}

RootSet quartic_roots(const RealPoly& p) {
  if (p.degree() != 4) throw DegreeMismatch("quartic_roots: degree must be 4");
  return solve(p);
}

namespace {

using PolyVec = std::vector<double>;  // ascending coefficients, trimmed

void trim_snap(PolyVec& v, double scale) {
  for (double& c : v)
    if (std::abs(c) <= 1e-12 * scale) c = 0.0;
  while (!v.empty() && v.back() == 0.0) v.pop_back();
}

double max_abs(const PolyVec& v) {
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  return m;
}

PolyVec remainder(PolyVec a, const PolyVec& b) {
  while (a.size() >= b.size()) {
    const double q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
  }
  return a;
}

double eval(const PolyVec& v, double x) {
  double acc = 0.0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Sturm chain; each element scaled to unit max-coefficient (positive scaling
// leaves sign variations untouched).
std::vector<PolyVec> sturm_chain(const RealPoly& p) {
  std::vector<PolyVec> chain;
  chain.push_back(p.coeffs());
  if (p.degree() >= 1) {
    PolyVec d(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i)
      d[i - 1] = p.coeffs()[i] * static_cast<double>(i);
    chain.push_back(std::move(d));
  }
  while (chain.back().size() > 1) {
    PolyVec r = remainder(chain[chain.size() - 2], chain.back());
    trim_snap(r, max_abs(chain[chain.size() - 2]));
    if (r.empty()) break;
    for (double& c : r) c = -c;
    const double m = max_abs(r);
    for (double& c : r) c /= m;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

int variations(const std::vector<PolyVec>& chain, double x) {
  int count = 0, prev = 0;
  for (const auto& f : chain) {
    const int s = sign_of(eval(f, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int variations_at_infinity(const std::vector<PolyVec>& chain, int direction) {
  int count = 0, prev = 0;
  for (const auto& f : chain) {
    const int deg = static_cast<int>(f.size()) - 1;
    int s = sign_of(f.back());
    if (direction < 0 && deg % 2 == 1) s = -s;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int count_real_roots(const RealPoly& p, std::optional<std::pair<double, double>> interval) {
  if (p.degree() == 0) return 0;
  const auto chain = sturm_chain(p);
  if (!interval) return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
  const auto [a, b] = *interval;
  if (!(a < b)) return 0;
  int count = variations(chain, a) - variations(chain, b);
  if (p(b) == 0.0) --count;  // (a, b] minus the right endpoint: open interval
  return count;
}

std::array<std::complex<double>, 3> cardano_cubic(double c3, double c2, double c1, double c0) {
  if (c3 == 0.0) throw DegreeMismatch("cardano_cubic: leading coefficient is zero");
  const double a = c2 / c3, b = c1 / c3, c = c0 / c3;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double shift = -a / 3.0;
  const double disc = q * q / 4.0 + p * p * p / 27.0;
  std::array<Complex, 3> t;
  if (disc > 0.0) {
    const double s = std::sqrt(disc);
    const double u = std::cbrt(-q / 2.0 + s);
    const double v = std::cbrt(-q / 2.0 - s);
    t[0] = Complex(u + v, 0.0);
    t[1] = Complex(-(u + v) / 2.0, std::sqrt(3.0) * (u - v) / 2.0);
    t[2] = std::conj(t[1]);
  } else if (p == 0.0) {
    const double r = std::cbrt(-q);  // disc <= 0 with p == 0 forces q == 0
    t.fill(Complex(r, 0.0));
  } else {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double cos3phi = std::clamp(-4.0 * q / (m * m * m), -1.0, 1.0);
    const double phi = std::acos(cos3phi) / 3.0;
    constexpr double kTwoPiThirds = 2.0 * 3.14159265358979323846 / 3.0;
    for (int k = 0; k < 3; ++k)
      t[static_cast<std::size_t>(k)] = Complex(m * std::cos(phi - kTwoPiThirds * k), 0.0);
  }
  for (auto& r : t) r += shift;
  return t;
}

}  // namespace ep4
