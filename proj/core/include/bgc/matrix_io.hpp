#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "bgc/sensing_matrix.hpp"

namespace bgc {

/// Matrix Market output: coordinate real for binary/ternary (values 1/-1),
/// array real for gaussian. 1-indexed, column-major entry order.
void write_matrix_market(const SensingMatrix& matrix, std::ostream& out,
                         const std::vector<std::string>& comments = {});
void write_matrix_market(const SensingMatrix& matrix, const std::filesystem::path& path,
                         const std::vector<std::string>& comments = {});

/// Reads either format back. Coordinate files must hold only +-1 values and
/// come back as binary (all ones) or ternary; array files come back as
/// gaussian. Malformed input raises ParseError with a line number.
SensingMatrix read_matrix_market(std::istream& in);
SensingMatrix read_matrix_market(const std::filesystem::path& path);

/// Graph view of a binary/ternary matrix file (the unsigned support).
BipartiteGraph graph_from_matrix(const SensingMatrix& matrix);

}  // namespace bgc
