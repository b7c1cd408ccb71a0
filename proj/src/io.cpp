#include "ep4/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "json.hpp"

namespace ep4 {

ComplexMatrix read_matrix_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("matrix JSON parse failure: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw Error("matrix JSON must be an object with 'dim' and 'entries'");
  const int n = j.at("dim").get<int>();
  if (n < 1) throw Error("matrix JSON: dim must be positive");
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw Error("matrix JSON: entries must hold dim*dim complex pairs");
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const auto& e = entries.at(static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                                 static_cast<std::size_t>(c));
      if (!e.is_array() || e.size() != 2)
        throw Error("matrix JSON: each entry must be [re, im]");
      m(r, c) = std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

ComplexMatrix read_matrix_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file: " + path);
  return read_matrix_json(in);
}

void write_matrix_json(std::ostream& out, const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      entries.push_back({m(r, c).real(), m(r, c).imag()});
  const nlohmann::json j{{"dim", m.rows()}, {"entries", std::move(entries)}};
  out << j.dump(2) << '\n';
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_scan_csv(std::ostream& out, const std::vector<ClassifiedPoint>& rows) {
  out << "alpha,beta,gamma,verdict\n";
  for (const auto& r : rows)
    out << format_double(r.point.alpha) << ',' << format_double(r.point.beta) << ','
        << format_double(r.point.gamma) << ',' << to_string(r.region) << '\n';
}

void write_scan_json(std::ostream& out, const std::vector<ClassifiedPoint>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"alpha", r.point.alpha},
                   {"beta", r.point.beta},
                   {"gamma", r.point.gamma},
                   {"verdict", to_string(r.region)}});
  out << arr.dump(2) << '\n';
}

}  // namespace ep4
