#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "bgc/bipartite_graph.hpp"

namespace bgc {

/// Writes the graph in Matrix Market coordinate pattern format, rows = check
/// nodes, columns = variable nodes, 1-indexed. `comments` become leading
/// `%` lines after the banner.
void write_graph_matrix_market(const BipartiteGraph& graph, std::ostream& out,
                               const std::vector<std::string>& comments = {});
void write_graph_matrix_market(const BipartiteGraph& graph, const std::filesystem::path& path,
                               const std::vector<std::string>& comments = {});

/// Parses a coordinate pattern file back into a graph. Entry order does not
/// matter; duplicates and out-of-range indices raise ParseError with the
/// offending line number.
BipartiteGraph read_graph_matrix_market(std::istream& in);
BipartiteGraph read_graph_matrix_market(const std::filesystem::path& path);

}  // namespace bgc
