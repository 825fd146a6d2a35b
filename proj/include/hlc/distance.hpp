#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hlc/hypergraph.hpp"

namespace hlc {

enum class Metric { kJaccard, kAhn };

std::string_view metric_name(Metric m);

// node -> ascending list of indices of the hyperedges containing it.
// Precomputing these buckets restricts pairwise distance evaluation to
// hyperedges that share at least one node.
class InvertedIndex {
 public:
  explicit InvertedIndex(const Hypergraph& graph);

  const std::vector<EdgeIndex>& bucket(NodeIndex v) const { return buckets_[v]; }
  std::size_t node_count() const { return buckets_.size(); }
  // Equals the sum of hyperedge sizes.
  std::size_t total_entries() const { return total_entries_; }

 private:
  std::vector<std::vector<EdgeIndex>> buckets_;
  std::size_t total_entries_ = 0;
};

struct DistanceEntry {
  EdgeIndex i;  // i < j
  EdgeIndex j;
  double d;

  friend bool operator==(const DistanceEntry&, const DistanceEntry&) = default;
};

// Pairwise hyperedge distances for node-sharing pairs, in canonical (i, j)
// order. Every pair not listed is at the implicit distance 1.
struct SparseDistances {
  static constexpr double kImplicitDistance = 1.0;

  std::vector<DistanceEntry> entries;
  Metric metric = Metric::kJaccard;
};

// 1 - |A ∩ B| / |A ∪ B|. Symmetric, 0 iff equal, 1 iff disjoint.
double jaccard_distance(const Hyperedge& a, const Hyperedge& b);

// Inclusive neighborhoods: node v together with every node co-appearing with
// v in some hyperedge. Built once and shared across all pair evaluations.
class NeighborhoodCache {
 public:
  NeighborhoodCache(const Hypergraph& graph, const InvertedIndex& index);

  const std::vector<NodeIndex>& inclusive_neighborhood(NodeIndex v) const {
    return neighborhoods_[v];
  }

 private:
  std::vector<std::vector<NodeIndex>> neighborhoods_;
};

// Distance between the joint inclusive neighborhoods of the two difference
// sets: 1 - |N+(A\B) ∩ N+(B\A)| / |N+(A\B) ∪ N+(B\A)|. Nested hyperedges
// (one difference set empty) are at distance 0. For size-2 hyperedges
// sharing one node this reduces to one minus the classic link similarity of
// the two non-shared endpoints.
double ahn_distance(const Hyperedge& a, const Hyperedge& b, const NeighborhoodCache& cache,
                    std::size_t node_count);

// Enumerates exactly the node-sharing pairs (each emitted from its lowest
// shared node) and evaluates `metric` on them. `workers` only partitions the
// work; the entry list is canonically ordered and bit-identical for any
// worker count.
SparseDistances compute_sparse_distances(const Hypergraph& graph, Metric metric,
                                         unsigned workers = 1);

struct Correlation {
  double r = 0.0;
  std::size_t n_pairs = 0;
};

// Pearson correlation over the union of the two entry lists; a pair listed
// on one side only contributes the implicit distance 1 on the other. Throws
// std::invalid_argument with fewer than 2 pairs or zero variance.
Correlation pearson_correlation(const SparseDistances& a, const SparseDistances& b);

}  // namespace hlc
