#include "bgc/graph_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "bgc/errors.hpp"

namespace bgc {

namespace {

constexpr const char* kPatternBanner = "%%MatrixMarket matrix coordinate pattern general";

}  // namespace

void write_graph_matrix_market(const BipartiteGraph& graph, std::ostream& out,
                               const std::vector<std::string>& comments) {
  out << kPatternBanner << '\n';
  for (const auto& comment : comments) out << "% " << comment << '\n';
  out << graph.num_checks() << ' ' << graph.num_vars() << ' ' << graph.num_edges() << '\n';
  for (const auto& [check, var] : graph.edges()) {
    out << check + 1 << ' ' << var + 1 << '\n';
  }
}

void write_graph_matrix_market(const BipartiteGraph& graph, const std::filesystem::path& path,
                               const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_graph_matrix_market(graph, out, comments);
  if (!out) throw IoError("write to " + path.string() + " failed");
}

BipartiteGraph read_graph_matrix_market(std::istream& in) {
  std::string line;
  int line_number = 0;

  if (!std::getline(in, line)) throw ParseError("empty file", 0);
  ++line_number;
  {
    std::istringstream banner(line);
    std::string tag, object, format, field, symmetry;
    banner >> tag >> object >> format >> field >> symmetry;
    if (tag != "%%MatrixMarket" || object != "matrix" || format != "coordinate" ||
        field != "pattern" || symmetry != "general") {
      throw ParseError("expected banner '" + std::string(kPatternBanner) + "'", line_number);
    }
  }

  long long num_checks = 0, num_vars = 0, num_entries = 0;
  for (;;) {
    if (!std::getline(in, line)) throw ParseError("missing size line", line_number);
    ++line_number;
    if (!line.empty() && line[0] == '%') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream sizes(line);
    if (!(sizes >> num_checks >> num_vars >> num_entries)) {
      throw ParseError("malformed size line '" + line + "'", line_number);
    }
    std::string trailing;
    if (sizes >> trailing) throw ParseError("trailing tokens on size line", line_number);
    break;
  }
  if (num_checks < 1 || num_vars < 1 || num_entries < 0) {
    throw ParseError("invalid dimensions", line_number);
  }

  BipartiteGraph graph(static_cast<int>(num_checks), static_cast<int>(num_vars));
  long long seen = 0;
  while (seen < num_entries) {
    if (!std::getline(in, line)) {
      throw ParseError("expected " + std::to_string(num_entries) + " entries, got " +
                           std::to_string(seen),
                       line_number);
    }
    ++line_number;
    if (!line.empty() && line[0] == '%') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream entry(line);
    long long check = 0, var = 0;
    if (!(entry >> check >> var)) {
      throw ParseError("malformed entry '" + line + "'", line_number);
    }
    std::string trailing;
    if (entry >> trailing) throw ParseError("trailing tokens on entry line", line_number);
    if (check < 1 || check > num_checks || var < 1 || var > num_vars) {
      throw ParseError("entry (" + std::to_string(check) + ", " + std::to_string(var) +
                           ") out of range",
                       line_number);
    }
    try {
      graph.add_edge(static_cast<int>(var - 1), static_cast<int>(check - 1));
    } catch (const std::invalid_argument& error) {
      throw ParseError(error.what(), line_number);
    }
    ++seen;
  }
  return graph;
}

BipartiteGraph read_graph_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return read_graph_matrix_market(in);
}

}  // namespace bgc
