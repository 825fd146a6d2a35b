#pragma once

#include <cstdint>
#include <vector>

#include "hlc/distance.hpp"

namespace hlc {

// One agglomeration step. Child ids: leaves are 0..leaf_count-1, the k-th
// merge creates cluster id leaf_count + k. `left` is the child containing
// the lowest-numbered leaf.
struct Merge {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  double height = 0.0;
  std::uint32_t size = 0;  // leaves in the merged cluster

  friend bool operator==(const Merge&, const Merge&) = default;
};

// Complete dendrogram: exactly leaf_count - 1 merges, heights non-decreasing,
// ending in a single root. Pairs with no shared node sit at distance 1, so
// every dendrogram closes at height 1 (or below).
struct Dendrogram {
  std::size_t leaf_count = 0;
  std::vector<Merge> merges;

  friend bool operator==(const Dendrogram&, const Dendrogram&) = default;
};

// Partition of the leaves at one threshold. Community ids are dense and
// assigned in order of each community's smallest leaf index.
struct FlatClustering {
  double threshold = 0.0;
  std::vector<std::uint32_t> assignment;  // leaf -> community id
  std::size_t community_count = 0;
};

// Single linkage over the sparse distances (unlisted pairs sit at the
// implicit distance 1). Equal-distance candidates are broken by the
// lexicographically smallest (min child id, max child id) pair, so the
// result is deterministic.
Dendrogram single_linkage(const SparseDistances& distances, std::size_t leaf_count);

struct AverageLinkageOptions {
  // Average linkage densifies the distance matrix, so it is capped. Raise
  // deliberately for bigger inputs; memory grows with the square.
  std::size_t max_leaves = 2000;
};

// Unweighted average linkage (UPGMA) via nearest-neighbor chains. Merges are
// reported in non-decreasing height order with ids relabeled to match.
Dendrogram average_linkage(const SparseDistances& distances, std::size_t leaf_count,
                           const AverageLinkageOptions& options = {});

// Communities at `threshold`: every merge with height <= threshold is applied.
FlatClustering cut(const Dendrogram& dendrogram, double threshold);

// Distinct merge heights, ascending.
std::vector<double> merge_heights(const Dendrogram& dendrogram);

}  // namespace hlc
