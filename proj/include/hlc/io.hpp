#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hlc/carto.hpp"
#include "hlc/distance.hpp"
#include "hlc/hypergraph.hpp"
#include "hlc/linkage.hpp"
#include "hlc/membership.hpp"
#include "hlc/scales.hpp"

// Writers for every export format and a parser for each of them, so files
// can be diffed, re-read, and verified byte-for-byte. All real numbers are
// printed with %.17g, which round-trips doubles exactly.

namespace hlc {

std::string format_double(double v);

// 64-bit FNV-1a; `seed` chains hashes across buffers.
inline constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = kFnvOffset);

// --- sparse distances: rows "i,j,d" in canonical (i,j) order, no header ---
void write_distances(const SparseDistances& distances, std::ostream& out);
SparseDistances read_distances(std::istream& in, Metric metric = Metric::kJaccard);

// --- dendrogram: header "left,right,height,size", one row per merge ---
void write_dendrogram(const Dendrogram& dendrogram, std::ostream& out);
Dendrogram read_dendrogram(std::istream& in);

// --- flat clustering: "# threshold=..." then "hyperedge_index,community_id" ---
void write_clustering(const FlatClustering& clustering, std::ostream& out);
FlatClustering read_clustering(std::istream& in);

// Sidecar grouping the same cut by community.
void write_community_members(const FlatClustering& clustering, std::ostream& out);
std::vector<std::vector<EdgeIndex>> read_community_members(std::istream& in);

// --- fingerprint: "# leaf_count=..." then "threshold,community_count" ---
void write_fingerprint(const Fingerprint& fp, std::ostream& out);
Fingerprint read_fingerprint(std::istream& in);

// --- cut statistics: "threshold,community_id,size" ---
void write_cut_statistics(const std::vector<CutStatistics>& stats, std::ostream& out);
std::vector<CutStatistics> read_cut_statistics(std::istream& in);

// --- membership: "node,community_id,count" with node labels ---
struct MembershipRow {
  std::string node;
  std::uint32_t community = 0;
  std::size_t count = 0;

  friend bool operator==(const MembershipRow&, const MembershipRow&) = default;
};
void write_membership(const MembershipMap& vectors, const Hypergraph& graph, std::ostream& out);
std::vector<MembershipRow> read_membership(std::istream& in);

// --- distributions: "statistic,value,count" histograms ---
void write_distributions(const MembershipDistributions& dist, std::ostream& out);
MembershipDistributions read_distributions(std::istream& in);

// --- role similarity: label header row/column, missing values empty ---
void write_role_matrix(const RoleSimilarityMatrix& matrix, std::ostream& out);
RoleSimilarityMatrix read_role_matrix(std::istream& in);

// --- node/role entropy tables ---
void write_node_entropy(const MembershipMap& vectors, const Hypergraph& graph, std::ostream& out);
std::vector<std::pair<std::string, double>> read_node_entropy(std::istream& in);
void write_role_entropy(const std::map<std::string, double>& means, std::ostream& out);
std::map<std::string, double> read_role_entropy(std::istream& in);

// --- cartography: percentile breaks in a comment, then one row per node ---
struct CartographyFileRow {
  std::string node;
  std::string role;  // empty when the node has none
  std::size_t hyperdegree = 0;
  double participation = 0.0;
  std::string degree_class;
  std::string participation_class;

  friend bool operator==(const CartographyFileRow&, const CartographyFileRow&) = default;
};
struct CartographyFile {
  AxisBreaks degree_breaks;
  AxisBreaks participation_breaks;
  std::vector<CartographyFileRow> rows;
};
void write_cartography(const Cartography& carto, const Hypergraph& graph, std::ostream& out);
CartographyFile read_cartography(std::istream& in);

}  // namespace hlc
