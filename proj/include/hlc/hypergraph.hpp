#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hlc {

// Dense node index. Input labels (opaque strings) are mapped to indices in
// order of first appearance; the mapping is a bijection over all nodes that
// occur in at least one hyperedge.
using NodeIndex = std::uint32_t;

// Position of a hyperedge in Hypergraph::edges().
using EdgeIndex = std::uint32_t;

// One group interaction: a non-empty set of nodes stored in canonical
// (ascending) order, so equal sets compare equal representationally.
struct Hyperedge {
  std::vector<NodeIndex> members;

  std::size_t size() const { return members.size(); }
  bool contains(NodeIndex v) const;

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
  auto operator<=>(const Hyperedge&) const = default;
};

using RoleMap = std::unordered_map<NodeIndex, std::string>;

// Immutable node set plus a deduplicated family of hyperedges, with optional
// per-node role metadata. Safe to share across threads once constructed.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Members of every edge must already be valid indices into `labels`;
  // edges must be canonical (sorted, unique members) and pairwise distinct.
  Hypergraph(std::vector<std::string> labels, std::vector<Hyperedge> edges);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(EdgeIndex e) const { return edges_[e]; }

  const std::string& label(NodeIndex v) const { return labels_[v]; }
  std::optional<NodeIndex> find_node(std::string_view label) const;

  // Hyperdegree: number of hyperedges containing v.
  std::size_t hyperdegree(NodeIndex v) const;

  bool has_roles() const { return !roles_.empty(); }
  const RoleMap& roles() const { return roles_; }
  // nullptr when the node carries no role.
  const std::string* role_of(NodeIndex v) const;

  // Construction-phase only; every key must be a valid node index.
  void attach_roles(RoleMap roles);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> index_of_;
  std::vector<Hyperedge> edges_;
  RoleMap roles_;
};

struct ParseOptions {
  char delimiter = ',';
  // Hyperedges smaller than this are dropped before node indexing.
  std::size_t min_edge_size = 1;
};

struct ParseResult {
  Hypergraph graph;
  // Input lines whose hyperedge equalled an earlier one (collapsed).
  std::size_t duplicate_edges = 0;
  // Hyperedges dropped by the min_edge_size filter.
  std::size_t dropped_small = 0;
};

// Reads one hyperedge per non-empty, non-comment ('#') line, node labels
// separated by options.delimiter. Duplicate labels within a line and
// duplicate hyperedges across lines are collapsed. Throws ParseError when a
// line has no labels left after trimming.
ParseResult parse_hyperedge_list(std::istream& in, const ParseOptions& options = {});

struct RoleParseResult {
  RoleMap roles;
  // Lines naming nodes absent from the hypergraph (dropped).
  std::size_t unknown_nodes = 0;
};

// Reads "node-label<delimiter>role-label" lines. Conflicting roles for one
// node are a ParseError; labels not present in `graph` are dropped.
RoleParseResult parse_roles(std::istream& in, const Hypergraph& graph, char delimiter = ',');

// Writes the canonical hyperedge-list form: one line per edge, members in
// index order. Parsing the output reproduces the hypergraph exactly.
void write_hyperedge_list(const Hypergraph& graph, std::ostream& out, char delimiter = ',');

struct SizeProfile {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::map<std::size_t, std::size_t> edges_by_size;

  friend bool operator==(const SizeProfile&, const SizeProfile&) = default;
};

SizeProfile size_profile(const Hypergraph& graph);

}  // namespace hlc
