#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ep4/domain.hpp"
#include "ep4/epn.hpp"

namespace ep4 {

// Matrix file format: {"dim": N, "entries": [[re, im], ...]} with N*N
// row-major entries. Complex values are two-element arrays throughout.
ComplexMatrix read_matrix_json(std::istream& in);
ComplexMatrix read_matrix_json_file(const std::string& path);  // Error on unreadable input
void write_matrix_json(std::ostream& out, const ComplexMatrix& m);

// Floats in CSV carry 17 significant digits so a round trip is lossless.
std::string format_double(double v);

void write_scan_csv(std::ostream& out, const std::vector<ClassifiedPoint>& rows);
void write_scan_json(std::ostream& out, const std::vector<ClassifiedPoint>& rows);

}  // namespace ep4
