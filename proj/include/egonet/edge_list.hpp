#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "egonet/graph.hpp"

namespace egonet {

using Label = std::uint64_t;

struct LabeledGraph {
  Graph graph;
  // labels[v] is the original label of vertex v; increasing in v.
  std::vector<Label> labels;
};

/// Reads whitespace separated "u v" lines. Lines starting with '#' or '%' and
/// blank lines are skipped, as is a leading "rows cols nnz" header. Labels are
/// remapped to 0..n-1 in increasing label order.
///
/// Throws ParseError (with the offending line number) on malformed tokens and
/// DataError when no edges remain.
LabeledGraph load_edge_list(std::istream& in);
LabeledGraph load_edge_list(const std::filesystem::path& path);

/// Restricts a labeled graph to its largest connected component, carrying the
/// labels along.
LabeledGraph largest_component(const LabeledGraph& g);

/// One "u v" line per edge (u < v), using `labels` when non-empty.
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<Label>& labels = {});

/// Two-column "original new" lines.
void write_label_map(std::ostream& out, const std::vector<Label>& labels);

}  // namespace egonet
