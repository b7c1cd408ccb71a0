#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ep4/canonical.hpp"
#include "ep4/domain.hpp"
#include "ep4/epn.hpp"
#include "ep4/io.hpp"
#include "ep4/metric.hpp"
#include "ep4/models.hpp"
#include "ep4/polyroots.hpp"
#include "ep4/secular.hpp"

namespace {

using ep4::ComplexMatrix;
using Complex = std::complex<double>;

// Writes to --out when given, stdout otherwise. Open/flush failures surface as
// the base ep4::Error, which the exit-code ladder maps to 3.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) : path_(path) {
    if (!path_.empty()) {
      file_.open(path_);
      if (!file_) throw ep4::Error("cannot open output file: " + path_);
    }
  }

  std::ostream& stream() { return path_.empty() ? std::cout : file_; }

  void finish() {
    if (path_.empty()) return;
    file_.flush();
    if (!file_) throw ep4::Error("write failure on output file: " + path_);
  }

 private:
  std::string path_;
  std::ofstream file_;
};

std::string format_complex(const Complex& z) {
  if (z.imag() == 0.0) return ep4::format_double(z.real());
  std::string s = ep4::format_double(z.real());
  s += z.imag() < 0.0 ? " - " : " + ";
  s += ep4::format_double(std::abs(z.imag()));
  s += "i";
  return s;
}

const char* to_string(ep4::EndpointKind k) {
  switch (k) {
    case ep4::EndpointKind::Open: return "open";
    case ep4::EndpointKind::Closed: return "closed";
    case ep4::EndpointKind::Degenerate: return "degenerate";
  }
  return "open";
}

nlohmann::json matrix_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      entries.push_back({m(r, c).real(), m(r, c).imag()});
  return nlohmann::json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be finite");
}

struct ClassifyConfig {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  std::string format = "text";
  std::string out;
  std::string plot;
  int grid = 201;
};

int cmd_classify(const ClassifyConfig& cfg) {
  require_finite(cfg.alpha, "alpha");
  require_finite(cfg.beta, "beta");
  require_finite(cfg.gamma, "gamma");

  const ep4::SecularQuartic s{cfg.alpha, cfg.beta, cfg.gamma};
  const ep4::Region region = ep4::is_physical({cfg.alpha, cfg.beta, cfg.gamma});
  const ep4::RootSet roots = ep4::quartic_roots(s.poly());
  const ep4::StationaryProfile profile = ep4::stationary_profile(s);
  std::optional<ep4::DomainInterval> interval;
  if (region == ep4::Region::Inside)
    interval = ep4::alpha_interval(ep4::kappa_of_gamma(cfg.gamma), cfg.beta);

  OutputTarget target(cfg.out);
  std::ostream& out = target.stream();
  if (cfg.format == "json") {
    nlohmann::json j;
    j["alpha"] = cfg.alpha;
    j["beta"] = cfg.beta;
    j["gamma"] = cfg.gamma;
    j["verdict"] = ep4::to_string(region);
    nlohmann::json roots_json = nlohmann::json::array();
    for (const auto& r : roots.roots)
      roots_json.push_back({{"value", {r.value.real(), r.value.imag()}},
                            {"multiplicity", r.multiplicity},
                            {"real", r.is_real}});
    j["roots"] = std::move(roots_json);
    nlohmann::json minima = nlohmann::json::array();
    for (const auto& m : profile.minima)
      minima.push_back({{"location", m.location}, {"value", m.value}});
    j["stationary"]["minima"] = std::move(minima);
    if (profile.maximum)
      j["stationary"]["maximum"] = {{"location", profile.maximum->location},
                                    {"value", profile.maximum->value}};
    else
      j["stationary"]["maximum"] = nullptr;
    if (interval)
      j["alpha_interval"] = {{"lower", interval->lower},
                             {"upper", interval->upper},
                             {"lower_kind", to_string(interval->lower_kind)},
                             {"upper_kind", to_string(interval->upper_kind)}};
    else
      j["alpha_interval"] = nullptr;
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    ep4::write_scan_csv(out, {{ep4::DomainPoint{cfg.alpha, cfg.beta, cfg.gamma}, region}});
  } else {
    out << "verdict: " << ep4::to_string(region) << '\n';
    for (const auto& r : roots.roots)
      out << "root: " << format_complex(r.value) << " (multiplicity " << r.multiplicity
          << (r.is_real ? ", real)" : ")") << '\n';
    for (const auto& m : profile.minima)
      out << "stationary minimum: E = " << ep4::format_double(m.location)
          << ", S = " << ep4::format_double(m.value) << '\n';
    if (profile.maximum)
      out << "stationary maximum: E = " << ep4::format_double(profile.maximum->location)
          << ", S = " << ep4::format_double(profile.maximum->value) << '\n';
    if (interval)
      out << "alpha interval: (" << ep4::format_double(interval->lower) << ", "
          << ep4::format_double(interval->upper) << ")\n";
  }
  target.finish();

  if (!cfg.plot.empty()) {
    if (cfg.grid < 2) throw std::invalid_argument("--grid must be at least 2");
    double reach = 1.0;
    for (const double c : profile.critical_points) reach = std::max(reach, std::abs(c));
    for (const double r : roots.real_roots) reach = std::max(reach, std::abs(r));
    const double lo = -1.5 * reach;
    const double hi = 1.5 * reach;
    const ep4::RealPoly sp = s.derivative();
    OutputTarget plot_target(cfg.plot);
    std::ostream& pout = plot_target.stream();
    pout << "x,s,sprime\n";
    for (int i = 0; i < cfg.grid; ++i) {
      const double x = lo + (hi - lo) * static_cast<double>(i) /
                                static_cast<double>(cfg.grid - 1);
      pout << ep4::format_double(x) << ',' << ep4::format_double(s(x)) << ','
           << ep4::format_double(sp(x)) << '\n';
    }
    plot_target.finish();
  }
  return 0;
}

struct ScanConfig {
  double gamma = 0.0;
  double beta_min = 0.0, beta_max = 0.0;
  double alpha_min = 0.0, alpha_max = 0.0;
  int grid = 51;
  std::string format = "csv";
  std::string out;
};

int cmd_scan(const ScanConfig& cfg) {
  require_finite(cfg.gamma, "gamma");
  ep4::GridSpec grid;
  grid.beta_min = cfg.beta_min;
  grid.beta_max = cfg.beta_max;
  grid.alpha_min = cfg.alpha_min;
  grid.alpha_max = cfg.alpha_max;
  grid.beta_resolution = cfg.grid;
  grid.alpha_resolution = cfg.grid;
  const auto rows = ep4::scan_domain(cfg.gamma, grid);
  OutputTarget target(cfg.out);
  if (cfg.format == "json")
    ep4::write_scan_json(target.stream(), rows);
  else
    ep4::write_scan_csv(target.stream(), rows);
  target.finish();
  return 0;
}

struct BhConfig {
  int n = 2;
  double g = 0.0;
  bool g_set = false;
  double g_from = 0.0, g_to = 0.0, g_step = 0.0;
  bool range_set = false;
  double tol = 1e-12;
  std::string format = "text";
  std::string out;
  std::string matrix_out;
};

int cmd_bh(const BhConfig& cfg) {
  std::vector<double> couplings;
  if (cfg.g_set == cfg.range_set)
    throw std::invalid_argument("bh: give a single coupling G or --g-from/--g-to/--g-step");
  if (cfg.g_set) {
    require_finite(cfg.g, "G");
    couplings.push_back(cfg.g);
  } else {
    require_finite(cfg.g_from, "--g-from");
    require_finite(cfg.g_to, "--g-to");
    require_finite(cfg.g_step, "--g-step");
    if (cfg.g_step <= 0.0) throw std::invalid_argument("--g-step must be positive");
    if (cfg.g_to < cfg.g_from) throw std::invalid_argument("--g-to must be >= --g-from");
    // index-based grid: from + i * step stays exact where the product is
    // (0.1 * 10 == 1), so the EP row lands on the library short-circuit
    const int count = static_cast<int>(
                          std::floor((cfg.g_to - cfg.g_from + 0.5 * cfg.g_step) /
                                     cfg.g_step)) +
                      1;
    for (int i = 0; i < count; ++i)
      couplings.push_back(cfg.g_from + static_cast<double>(i) * cfg.g_step);
  }
  if (cfg.tol <= 0.0) throw std::invalid_argument("--tol must be positive");

  if (!cfg.matrix_out.empty()) {
    if (!cfg.g_set)
      throw std::invalid_argument("--matrix-out needs the single-coupling form");
    OutputTarget mt(cfg.matrix_out);
    ep4::write_matrix_json(mt.stream(), ep4::bh_hamiltonian({cfg.n, cfg.g}));
    mt.finish();
  }

  OutputTarget target(cfg.out);
  std::ostream& out = target.stream();
  nlohmann::json arr = nlohmann::json::array();
  if (cfg.format == "csv") {
    out << "g,all_real,degenerate,ep,eigenvalues\n";
  }
  for (const double g : couplings) {
    const auto report = ep4::bh_spectrum({cfg.n, g});
    const bool at_ep = std::abs(std::abs(g) - 1.0) <= cfg.tol;
    if (cfg.format == "json") {
      nlohmann::json row;
      row["g"] = g;
      row["all_real"] = report.all_real;
      row["degenerate"] = report.degenerate;
      row["ep"] = at_ep;
      nlohmann::json eigs = nlohmann::json::array();
      for (const auto& v : report.eigenvalues) eigs.push_back({v.real(), v.imag()});
      row["eigenvalues"] = std::move(eigs);
      arr.push_back(std::move(row));
    } else if (cfg.format == "csv") {
      out << ep4::format_double(g) << ',' << (report.all_real ? "true" : "false") << ','
          << (report.degenerate ? "true" : "false") << ',' << (at_ep ? "true" : "false")
          << ',';
      for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
        if (i) out << ';';
        out << ep4::format_double(report.eigenvalues[i].real()) << ';'
            << ep4::format_double(report.eigenvalues[i].imag());
      }
      out << '\n';
    } else {
      out << "g = " << ep4::format_double(g) << ": ";
      for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
        if (i) out << ", ";
        out << format_complex(report.eigenvalues[i]);
      }
      out << " | " << (report.all_real ? "real spectrum" : "complex pair present");
      if (report.degenerate) out << ", degenerate";
      if (at_ep) out << " | EP" << cfg.n;
      out << '\n';
    }
  }
  if (cfg.format == "json") out << arr.dump(2) << '\n';
  target.finish();
  return 0;
}

struct JordanConfig {
  int dim = 0;
  double value_re = 0.0, value_im = 0.0;
  std::string matrix_file;
  double energy_re = 0.0, energy_im = 0.0;
  std::string out;
};

int cmd_jordan(const JordanConfig& cfg) {
  const bool want_block = cfg.dim > 0;
  const bool want_chain = !cfg.matrix_file.empty();
  if (want_block == want_chain)
    throw std::invalid_argument("jordan: give exactly one of --dim or --matrix");
  OutputTarget target(cfg.out);
  if (want_block) {
    const ComplexMatrix j =
        ep4::jordan_matrix({cfg.dim, Complex(cfg.value_re, cfg.value_im)});
    ep4::write_matrix_json(target.stream(), j);
  } else {
    const ComplexMatrix h = ep4::read_matrix_json_file(cfg.matrix_file);
    const Complex e(cfg.energy_re, cfg.energy_im);
    const int order = ep4::epn_order(h, e);
    const auto t = ep4::transition_matrix(h, e, static_cast<int>(h.rows()));
    nlohmann::json j = matrix_json(t.u);
    j["order"] = order;
    j["chain_residual"] = t.chain_residual;
    target.stream() << j.dump(2) << '\n';
  }
  target.finish();
  return 0;
}

struct AvatarConfig {
  std::string matrix_file;
  double energy_re = 0.0, energy_im = 0.0;
  std::string out;
};

int cmd_avatar(const AvatarConfig& cfg) {
  const ComplexMatrix h = ep4::read_matrix_json_file(cfg.matrix_file);
  const auto t = ep4::transition_matrix(h, Complex(cfg.energy_re, cfg.energy_im),
                                        static_cast<int>(h.rows()));
  const ComplexMatrix p = ep4::to_avatar(h, t);
  OutputTarget target(cfg.out);
  ep4::write_matrix_json(target.stream(), p);
  target.finish();
  return 0;
}

struct HermitizeConfig {
  std::string matrix_file;
  std::vector<double> weights;
  std::string format = "text";
  std::string out;
};

int cmd_hermitize(const HermitizeConfig& cfg) {
  const ComplexMatrix h = ep4::read_matrix_json_file(cfg.matrix_file);
  const auto metric = ep4::build_metric(h, cfg.weights);
  const ComplexMatrix hh = ep4::hermitize(h, metric);
  const double quasi = (h.adjoint() * metric.theta - metric.theta * h).norm();
  const double herm = (hh - hh.adjoint()).norm();
  OutputTarget target(cfg.out);
  std::ostream& out = target.stream();
  if (cfg.format == "json") {
    nlohmann::json j;
    j["quasi_hermiticity_residual"] = quasi;
    j["metric_min_eigenvalue"] = metric.min_eigenvalue;
    j["hermitization_residual"] = herm;
    j["theta"] = matrix_json(metric.theta);
    j["hermitized"] = matrix_json(hh);
    out << j.dump(2) << '\n';
  } else {
    out << "quasi_hermiticity_residual = " << ep4::format_double(quasi) << '\n';
    out << "metric_min_eigenvalue = " << ep4::format_double(metric.min_eigenvalue) << '\n';
    out << "hermitization_residual = " << ep4::format_double(herm) << '\n';
  }
  target.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Spectral classification toolkit for perturbed fourth-order Jordan "
      "Hamiltonians: secular-quartic reality tests, physical-domain scans, "
      "Bose-Hubbard benchmarks, transition matrices, and metric-operator "
      "Hermitization.\n"
      "Exit codes: 0 success, 2 usage or precondition, 3 I/O, 4 no positive "
      "metric exists, 5 near-defective input, 1 other library failure."};
  app.require_subcommand(1);

  ClassifyConfig classify_cfg;
  auto* classify = app.add_subcommand(
      "classify", "Classify one (alpha, beta, gamma) point and report roots");
  classify->add_option("alpha", classify_cfg.alpha, "Constant coefficient alpha")
      ->required();
  classify->add_option("beta", classify_cfg.beta, "Linear coefficient beta")->required();
  classify->add_option("gamma", classify_cfg.gamma, "Quadratic coefficient gamma")
      ->required();
  classify->add_option("--format", classify_cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  classify->add_option("--out", classify_cfg.out, "Write the report to this file");
  classify->add_option("--plot", classify_cfg.plot,
                       "Write sampled S(x) and S'(x) curves to this CSV file");
  classify->add_option("--grid", classify_cfg.grid, "Plot sample count (default 201)");

  ScanConfig scan_cfg;
  auto* scan = app.add_subcommand(
      "scan", "Classify a (beta, alpha) grid at fixed gamma; one row per point");
  scan->add_option("gamma", scan_cfg.gamma, "Quadratic coefficient gamma")->required();
  scan->add_option("--beta-min", scan_cfg.beta_min, "Low edge of the beta axis")
      ->required();
  scan->add_option("--beta-max", scan_cfg.beta_max, "High edge of the beta axis")
      ->required();
  scan->add_option("--alpha-min", scan_cfg.alpha_min, "Low edge of the alpha axis")
      ->required();
  scan->add_option("--alpha-max", scan_cfg.alpha_max, "High edge of the alpha axis")
      ->required();
  scan->add_option("--grid", scan_cfg.grid,
                   "Points per axis, endpoints included (default 51)");
  scan->add_option("--format", scan_cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--out", scan_cfg.out, "Write rows to this file");

  BhConfig bh_cfg;
  auto* bh = app.add_subcommand(
      "bh", "Bose-Hubbard benchmark spectra over a coupling or coupling range");
  bh->add_option("N", bh_cfg.n, "Matrix dimension (>= 2)")->required();
  auto* bh_g = bh->add_option("G", bh_cfg.g, "Single coupling value");
  auto* bh_from = bh->add_option("--g-from", bh_cfg.g_from, "Range start");
  auto* bh_to = bh->add_option("--g-to", bh_cfg.g_to, "Range end (inclusive)");
  auto* bh_step = bh->add_option("--g-step", bh_cfg.g_step, "Range step (> 0)");
  bh_g->excludes(bh_from)->excludes(bh_to)->excludes(bh_step);
  bh->add_option("--tol", bh_cfg.tol,
                 "Band around |g| = 1 flagged as the EP (default 1e-12); library "
                 "verdicts keep their contractual tolerances");
  bh->add_option("--format", bh_cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  bh->add_option("--out", bh_cfg.out, "Write the table to this file");
  bh->add_option("--matrix-out", bh_cfg.matrix_out,
                 "Also write the Hamiltonian itself as a JSON matrix file "
                 "(single-coupling form only)");

  JordanConfig jordan_cfg;
  auto* jordan = app.add_subcommand(
      "jordan", "Print a Jordan block, or the transition matrix of a matrix file");
  jordan->add_option("--dim", jordan_cfg.dim, "Print the Jordan block of this size");
  jordan->add_option("--value-re", jordan_cfg.value_re, "Block eigenvalue, real part");
  jordan->add_option("--value-im", jordan_cfg.value_im, "Block eigenvalue, imag part");
  jordan->add_option("--matrix", jordan_cfg.matrix_file,
                     "Solve H U = U J for the matrix in this JSON file");
  jordan->add_option("--energy-re", jordan_cfg.energy_re, "EP energy, real part");
  jordan->add_option("--energy-im", jordan_cfg.energy_im, "EP energy, imag part");
  jordan->add_option("--out", jordan_cfg.out, "Write the result to this file");

  AvatarConfig avatar_cfg;
  auto* avatar = app.add_subcommand(
      "avatar", "Conjugate a matrix file into its canonical isospectral avatar");
  avatar->add_option("--matrix", avatar_cfg.matrix_file, "JSON matrix file")->required();
  avatar->add_option("--energy-re", avatar_cfg.energy_re, "EP energy, real part");
  avatar->add_option("--energy-im", avatar_cfg.energy_im, "EP energy, imag part");
  avatar->add_option("--out", avatar_cfg.out, "Write the avatar to this file");

  HermitizeConfig hermitize_cfg;
  auto* hermitize = app.add_subcommand(
      "hermitize", "Build the metric for a matrix file and Hermitize it");
  hermitize->add_option("--matrix", hermitize_cfg.matrix_file, "JSON matrix file")
      ->required();
  hermitize->add_option("--weights", hermitize_cfg.weights,
                        "Positive spectral weights (default: all ones)");
  hermitize->add_option("--format", hermitize_cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  hermitize->add_option("--out", hermitize_cfg.out, "Write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  bh_cfg.g_set = bh_g->count() > 0;
  bh_cfg.range_set = bh_from->count() > 0 || bh_to->count() > 0 || bh_step->count() > 0;
  if (bh_cfg.range_set &&
      (bh_from->count() == 0 || bh_to->count() == 0 || bh_step->count() == 0)) {
    std::cerr << "error: --g-from, --g-to, and --g-step must be given together\n";
    return 2;
  }

  try {
    if (classify->parsed()) return cmd_classify(classify_cfg);
    if (scan->parsed()) return cmd_scan(scan_cfg);
    if (bh->parsed()) return cmd_bh(bh_cfg);
    if (jordan->parsed()) return cmd_jordan(jordan_cfg);
    if (avatar->parsed()) return cmd_avatar(avatar_cfg);
    if (hermitize->parsed()) return cmd_hermitize(hermitize_cfg);
  } catch (const ep4::InvalidGrid& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ep4::NonpositiveGamma& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ep4::BetaOutOfRange& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ep4::DeltaTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ep4::DegreeMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ep4::ComplexSpectrum& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const ep4::InvalidMetric& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const ep4::NearDefective& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const ep4::NotAnEigenvalue& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ep4::NotFullEPN& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ep4::ChainSolveFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ep4::SingularTransition& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ep4::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
