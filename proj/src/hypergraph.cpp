#include "hlc/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

#include "hlc/errors.hpp"

namespace hlc {

bool Hyperedge::contains(NodeIndex v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

Hypergraph::Hypergraph(std::vector<std::string> labels, std::vector<Hyperedge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  index_of_.reserve(labels_.size());
  for (NodeIndex v = 0; v < labels_.size(); ++v) {
    index_of_.emplace(labels_[v], v);
  }
}

std::optional<NodeIndex> Hypergraph::find_node(std::string_view label) const {
  auto it = index_of_.find(std::string(label));
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

std::size_t Hypergraph::hyperdegree(NodeIndex v) const {
  std::size_t k = 0;
  for (const Hyperedge& e : edges_) {
    if (e.contains(v)) ++k;
  }
  return k;
}

const std::string* Hypergraph::role_of(NodeIndex v) const {
  auto it = roles_.find(v);
  return it == roles_.end() ? nullptr : &it->second;
}

void Hypergraph::attach_roles(RoleMap roles) {
  for (const auto& [v, role] : roles) {
    if (v >= labels_.size()) {
      throw ConsistencyError("role attached to unknown node index " + std::to_string(v));
    }
  }
  roles_ = std::move(roles);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool skippable(std::string_view line) {
  std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

std::vector<std::string_view> split_tokens(std::string_view line, char delimiter) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(delimiter, start);
    if (end == std::string_view::npos) end = line.size();
    std::string_view token = trim(line.substr(start, end - start));
    if (!token.empty()) tokens.push_back(token);
    start = end + 1;
  }
  return tokens;
}

}  // namespace

ParseResult parse_hyperedge_list(std::istream& in, const ParseOptions& options) {
  if (!in) throw ParseError("cannot read hyperedge list");

  // Token lines become label sets first; node indexing happens after the
  // min-size filter so dropped edges contribute no nodes.
  std::vector<std::vector<std::string>> raw_edges;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (skippable(line)) continue;
    std::vector<std::string_view> tokens = split_tokens(line, options.delimiter);
    if (tokens.empty()) {
      throw ParseError("no node labels after trimming", line_number);
    }
    std::vector<std::string> labels(tokens.begin(), tokens.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    raw_edges.push_back(std::move(labels));
  }
  if (in.bad()) throw ParseError("stream error while reading hyperedge list");

  ParseResult result;
  std::vector<std::string> node_labels;
  std::unordered_map<std::string, NodeIndex> index_of;
  std::vector<Hyperedge> edges;
  std::set<std::vector<NodeIndex>> seen;

  for (std::vector<std::string>& labels : raw_edges) {
    if (labels.size() < options.min_edge_size) {
      ++result.dropped_small;
      continue;
    }
    Hyperedge edge;
    edge.members.reserve(labels.size());
    for (std::string& label : labels) {
      auto [it, inserted] = index_of.try_emplace(label, static_cast<NodeIndex>(node_labels.size()));
      if (inserted) node_labels.push_back(std::move(label));
      edge.members.push_back(it->second);
    }
    std::sort(edge.members.begin(), edge.members.end());
    if (!seen.insert(edge.members).second) {
      ++result.duplicate_edges;
      continue;
    }
    edges.push_back(std::move(edge));
  }

  result.graph = Hypergraph(std::move(node_labels), std::move(edges));
  return result;
}

RoleParseResult parse_roles(std::istream& in, const Hypergraph& graph, char delimiter) {
  if (!in) throw ParseError("cannot read role file");

  RoleParseResult result;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (skippable(line)) continue;
    std::vector<std::string_view> tokens = split_tokens(line, delimiter);
    if (tokens.size() != 2) {
      throw ParseError("expected \"node<delim>role\", got " + std::to_string(tokens.size()) +
                           " fields",
                       line_number);
    }
    std::optional<NodeIndex> node = graph.find_node(tokens[0]);
    if (!node) {
      ++result.unknown_nodes;
      continue;
    }
    auto [it, inserted] = result.roles.emplace(*node, std::string(tokens[1]));
    if (!inserted && it->second != tokens[1]) {
      throw ParseError("conflicting role for node \"" + std::string(tokens[0]) + "\"",
                       line_number);
    }
  }
  if (in.bad()) throw ParseError("stream error while reading role file");
  return result;
}

void write_hyperedge_list(const Hypergraph& graph, std::ostream& out, char delimiter) {
  for (const Hyperedge& edge : graph.edges()) {
    for (std::size_t k = 0; k < edge.members.size(); ++k) {
      if (k > 0) out << delimiter;
      out << graph.label(edge.members[k]);
    }
    out << '\n';
  }
}

SizeProfile size_profile(const Hypergraph& graph) {
  SizeProfile profile;
  profile.node_count = graph.node_count();
  profile.edge_count = graph.edge_count();
  for (const Hyperedge& edge : graph.edges()) {
    ++profile.edges_by_size[edge.size()];
  }
  return profile;
}

}  // namespace hlc
