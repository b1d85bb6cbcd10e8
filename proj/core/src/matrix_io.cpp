#include "bgc/matrix_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bgc/errors.hpp"

namespace bgc {

namespace {

std::string format_value(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace

void write_matrix_market(const SensingMatrix& matrix, std::ostream& out,
                         const std::vector<std::string>& comments) {
  const int m = matrix.rows();
  const int n = matrix.cols();
  if (matrix.kind == MatrixKind::gaussian) {
    out << "%%MatrixMarket matrix array real general\n";
    for (const auto& comment : comments) out << "% " << comment << '\n';
    out << m << ' ' << n << '\n';
    for (int col = 0; col < n; ++col) {
      for (int row = 0; row < m; ++row) {
        out << format_value(matrix.entries(row, col)) << '\n';
      }
    }
    return;
  }

  std::size_t nnz = 0;
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < m; ++row) {
      if (matrix.entries(row, col) != 0.0) ++nnz;
    }
  }
  out << "%%MatrixMarket matrix coordinate real general\n";
  for (const auto& comment : comments) out << "% " << comment << '\n';
  out << m << ' ' << n << ' ' << nnz << '\n';
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < m; ++row) {
      const double value = matrix.entries(row, col);
      if (value != 0.0) {
        out << row + 1 << ' ' << col + 1 << ' ' << (value > 0 ? "1" : "-1") << '\n';
      }
    }
  }
}

void write_matrix_market(const SensingMatrix& matrix, const std::filesystem::path& path,
                         const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_matrix_market(matrix, out, comments);
  if (!out) throw IoError("write to " + path.string() + " failed");
}

namespace {

struct Banner {
  std::string format;  // coordinate | array
  std::string field;   // real | pattern
};

Banner read_banner(const std::string& line, int line_number) {
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket" || object != "matrix" || symmetry != "general") {
    throw ParseError("unsupported MatrixMarket banner '" + line + "'", line_number);
  }
  return {format, field};
}

// Advances past comments/blank lines; returns false at end of stream.
bool next_content_line(std::istream& in, std::string& line, int& line_number) {
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line[0] == '%') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    return true;
  }
  return false;
}

}  // namespace

SensingMatrix read_matrix_market(std::istream& in) {
  std::string line;
  int line_number = 0;
  if (!std::getline(in, line)) throw ParseError("empty file", 0);
  ++line_number;
  const Banner banner = read_banner(line, line_number);

  if (banner.format == "array" && banner.field == "real") {
    if (!next_content_line(in, line, line_number)) {
      throw ParseError("missing size line", line_number);
    }
    long long m = 0, n = 0;
    {
      std::istringstream sizes(line);
      if (!(sizes >> m >> n) || m < 1 || n < 1) {
        throw ParseError("malformed size line '" + line + "'", line_number);
      }
    }
    SensingMatrix matrix;
    matrix.kind = MatrixKind::gaussian;
    matrix.entries.resize(m, n);
    for (long long col = 0; col < n; ++col) {
      for (long long row = 0; row < m; ++row) {
        if (!next_content_line(in, line, line_number)) {
          throw ParseError("expected " + std::to_string(m * n) + " array values", line_number);
        }
        std::istringstream value_line(line);
        double value = 0.0;
        if (!(value_line >> value)) {
          throw ParseError("malformed value '" + line + "'", line_number);
        }
        matrix.entries(row, col) = value;
      }
    }
    return matrix;
  }

  if (banner.format == "coordinate" && banner.field == "real") {
    if (!next_content_line(in, line, line_number)) {
      throw ParseError("missing size line", line_number);
    }
    long long m = 0, n = 0, nnz = 0;
    {
      std::istringstream sizes(line);
      if (!(sizes >> m >> n >> nnz) || m < 1 || n < 1 || nnz < 0) {
        throw ParseError("malformed size line '" + line + "'", line_number);
      }
    }
    SensingMatrix matrix;
    matrix.entries = Eigen::MatrixXd::Zero(m, n);
    matrix.column_support.resize(static_cast<std::size_t>(n));
    bool any_negative = false;
    for (long long entry = 0; entry < nnz; ++entry) {
      if (!next_content_line(in, line, line_number)) {
        throw ParseError("expected " + std::to_string(nnz) + " entries, got " +
                             std::to_string(entry),
                         line_number);
      }
      std::istringstream entry_line(line);
      long long row = 0, col = 0;
      double value = 0.0;
      if (!(entry_line >> row >> col >> value)) {
        throw ParseError("malformed entry '" + line + "'", line_number);
      }
      if (row < 1 || row > m || col < 1 || col > n) {
        throw ParseError("entry (" + std::to_string(row) + ", " + std::to_string(col) +
                             ") out of range",
                         line_number);
      }
      if (value != 1.0 && value != -1.0) {
        throw ParseError("coordinate value must be 1 or -1, got '" + line + "'", line_number);
      }
      if (matrix.entries(row - 1, col - 1) != 0.0) {
        throw ParseError("duplicate entry (" + std::to_string(row) + ", " + std::to_string(col) +
                             ")",
                         line_number);
      }
      matrix.entries(row - 1, col - 1) = value;
      matrix.column_support[static_cast<std::size_t>(col - 1)].push_back(
          static_cast<int>(row - 1));
      if (value < 0.0) any_negative = true;
    }
    for (auto& support : matrix.column_support) std::sort(support.begin(), support.end());
    matrix.kind = any_negative ? MatrixKind::ternary : MatrixKind::binary;
    return matrix;
  }

  throw ParseError("unsupported MatrixMarket type '" + banner.format + " " + banner.field + "'",
                   line_number);
}

SensingMatrix read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return read_matrix_market(in);
}

BipartiteGraph graph_from_matrix(const SensingMatrix& matrix) {
  if (matrix.kind == MatrixKind::gaussian) {
    throw std::invalid_argument("gaussian matrices have no graph structure");
  }
  BipartiteGraph graph(matrix.rows(), matrix.cols());
  for (int col = 0; col < matrix.cols(); ++col) {
    for (int row = 0; row < matrix.rows(); ++row) {
      if (matrix.entries(row, col) != 0.0) graph.add_edge(col, row);
    }
  }
  return graph;
}

}  // namespace bgc
