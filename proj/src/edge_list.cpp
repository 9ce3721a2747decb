#include "egonet/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace egonet {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == ',' || line[i] == '\r')) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

Label parse_label(std::string_view token, std::size_t line_no) {
  Label value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

LabeledGraph load_edge_list(std::istream& in) {
  std::vector<std::pair<Label, Label>> raw;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (view[first] == '#' || view[first] == '%') continue;
    auto tokens = split_tokens(view);
    if (!seen_data && tokens.size() == 3) {
      // "n n m" size header
      for (auto t : tokens) parse_label(t, line_no);
      seen_data = true;
      continue;
    }
    seen_data = true;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two vertex ids, got " + std::to_string(tokens.size()) + " tokens");
    }
    raw.emplace_back(parse_label(tokens[0], line_no), parse_label(tokens[1], line_no));
  }

  std::vector<Label> labels;
  labels.reserve(raw.size() * 2);
  for (const auto& [u, v] : raw) {
    if (u == v) continue;
    labels.push_back(u);
    labels.push_back(v);
  }
  if (labels.empty()) throw DataError("edge list contains no edges");
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto index_of = [&](Label l) {
    return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) {
    if (u == v) continue;
    edges.emplace_back(index_of(u), index_of(v));
  }
  LabeledGraph out;
  out.graph = Graph::from_edges(static_cast<Vertex>(labels.size()), edges);
  out.labels = std::move(labels);
  return out;
}

LabeledGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return load_edge_list(in);
}

LabeledGraph largest_component(const LabeledGraph& g) {
  auto lcc = largest_connected_component(g.graph);
  LabeledGraph out;
  out.graph = std::move(lcc.graph);
  out.labels.reserve(lcc.new_to_old.size());
  for (Vertex old : lcc.new_to_old) {
    out.labels.push_back(g.labels.empty() ? old : g.labels[old]);
  }
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<Label>& labels) {
  for (const auto& [u, v] : g.edges()) {
    if (labels.empty()) {
      out << u << ' ' << v << '\n';
    } else {
      out << labels[u] << ' ' << labels[v] << '\n';
    }
  }
}

void write_label_map(std::ostream& out, const std::vector<Label>& labels) {
  for (std::size_t v = 0; v < labels.size(); ++v) out << labels[v] << ' ' << v << '\n';
}

}  // namespace egonet
