#include "hlc/distance.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <thread>
#include <utility>

namespace hlc {

std::string_view metric_name(Metric m) {
  return m == Metric::kJaccard ? "jaccard" : "ahn";
}

InvertedIndex::InvertedIndex(const Hypergraph& graph) : buckets_(graph.node_count()) {
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    for (NodeIndex v : graph.edge(e).members) {
      buckets_[v].push_back(e);  // edges visited in order, so buckets stay sorted
      ++total_entries_;
    }
  }
}

namespace {

// First member the two sorted lists share, or npos. The lowest shared node
// decides which bucket emits an overlapping pair.
constexpr NodeIndex kNoShared = static_cast<NodeIndex>(-1);

NodeIndex lowest_shared_node(const std::vector<NodeIndex>& a, const std::vector<NodeIndex>& b) {
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] < b[ib]) {
      ++ia;
    } else if (b[ib] < a[ia]) {
      ++ib;
    } else {
      return a[ia];
    }
  }
  return kNoShared;
}

std::size_t intersection_size(const std::vector<NodeIndex>& a, const std::vector<NodeIndex>& b) {
  std::size_t ia = 0, ib = 0, count = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] < b[ib]) {
      ++ia;
    } else if (b[ib] < a[ia]) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

// Reusable scratch for the neighborhood-based metric; one per worker.
class AhnEvaluator {
 public:
  AhnEvaluator(const NeighborhoodCache& cache, std::size_t node_count)
      : cache_(&cache), mark_(node_count, 0) {}

  double operator()(const Hyperedge& a, const Hyperedge& b) {
    diff_a_.clear();
    diff_b_.clear();
    std::set_difference(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(diff_a_));
    std::set_difference(b.members.begin(), b.members.end(), a.members.begin(), a.members.end(),
                        std::back_inserter(diff_b_));
    if (diff_a_.empty() || diff_b_.empty()) return 0.0;  // nesting

    for (NodeIndex v : diff_a_) {
      for (NodeIndex u : cache_->inclusive_neighborhood(v)) {
        if (mark_[u] == 0) touched_.push_back(u);
        mark_[u] |= 1;
      }
    }
    for (NodeIndex v : diff_b_) {
      for (NodeIndex u : cache_->inclusive_neighborhood(v)) {
        if (mark_[u] == 0) touched_.push_back(u);
        mark_[u] |= 2;
      }
    }
    std::size_t unions = touched_.size();
    std::size_t inter = 0;
    for (NodeIndex u : touched_) {
      if (mark_[u] == 3) ++inter;
      mark_[u] = 0;
    }
    touched_.clear();
    return 1.0 - static_cast<double>(inter) / static_cast<double>(unions);
  }

 private:
  const NeighborhoodCache* cache_;
  std::vector<std::uint8_t> mark_;
  std::vector<NodeIndex> touched_;
  std::vector<NodeIndex> diff_a_;
  std::vector<NodeIndex> diff_b_;
};

}  // namespace

double jaccard_distance(const Hyperedge& a, const Hyperedge& b) {
  std::size_t inter = intersection_size(a.members, b.members);
  std::size_t unions = a.size() + b.size() - inter;
  return 1.0 - static_cast<double>(inter) / static_cast<double>(unions);
}

NeighborhoodCache::NeighborhoodCache(const Hypergraph& graph, const InvertedIndex& index)
    : neighborhoods_(graph.node_count()) {
  for (NodeIndex v = 0; v < graph.node_count(); ++v) {
    std::vector<NodeIndex>& nbhd = neighborhoods_[v];
    for (EdgeIndex e : index.bucket(v)) {
      const auto& members = graph.edge(e).members;
      nbhd.insert(nbhd.end(), members.begin(), members.end());
    }
    if (nbhd.empty()) {
      nbhd.push_back(v);  // isolated node: inclusive neighborhood is itself
    } else {
      std::sort(nbhd.begin(), nbhd.end());
      nbhd.erase(std::unique(nbhd.begin(), nbhd.end()), nbhd.end());
    }
  }
}

double ahn_distance(const Hyperedge& a, const Hyperedge& b, const NeighborhoodCache& cache,
                    std::size_t node_count) {
  AhnEvaluator eval(cache, node_count);
  return eval(a, b);
}

namespace {

// Emits every node-sharing pair exactly once: a pair is produced only by the
// bucket of its lowest shared node.
void scan_bucket_range(const Hypergraph& graph, const InvertedIndex& index, Metric metric,
                       AhnEvaluator* ahn, NodeIndex begin, NodeIndex end,
                       std::vector<DistanceEntry>& out) {
  for (NodeIndex v = begin; v < end; ++v) {
    const std::vector<EdgeIndex>& bucket = index.bucket(v);
    for (std::size_t p = 0; p + 1 < bucket.size(); ++p) {
      for (std::size_t q = p + 1; q < bucket.size(); ++q) {
        const Hyperedge& a = graph.edge(bucket[p]);
        const Hyperedge& b = graph.edge(bucket[q]);
        if (lowest_shared_node(a.members, b.members) != v) continue;
        double d = metric == Metric::kJaccard ? jaccard_distance(a, b) : (*ahn)(a, b);
        out.push_back({bucket[p], bucket[q], d});
      }
    }
  }
}

}  // namespace

SparseDistances compute_sparse_distances(const Hypergraph& graph, Metric metric,
                                         unsigned workers) {
  SparseDistances result;
  result.metric = metric;

  InvertedIndex index(graph);
  std::unique_ptr<NeighborhoodCache> cache;
  if (metric == Metric::kAhn) cache = std::make_unique<NeighborhoodCache>(graph, index);

  const NodeIndex n = static_cast<NodeIndex>(graph.node_count());
  workers = std::max(1u, workers);

  if (workers == 1 || n < 2) {
    std::unique_ptr<AhnEvaluator> ahn;
    if (cache) ahn = std::make_unique<AhnEvaluator>(*cache, n);
    scan_bucket_range(graph, index, metric, ahn.get(), 0, n, result.entries);
  } else {
    // Dynamic chunks of node buckets; chunk outputs are concatenated in
    // chunk order, so the entry set is identical for any worker count.
    const NodeIndex chunk_size = std::max<NodeIndex>(1, n / (workers * 8));
    const std::size_t chunk_count = (n + chunk_size - 1) / chunk_size;
    std::vector<std::vector<DistanceEntry>> chunk_entries(chunk_count);
    std::atomic<std::size_t> next_chunk{0};

    auto run = [&] {
      std::unique_ptr<AhnEvaluator> ahn;
      if (cache) ahn = std::make_unique<AhnEvaluator>(*cache, n);
      for (;;) {
        std::size_t c = next_chunk.fetch_add(1);
        if (c >= chunk_count) break;
        NodeIndex begin = static_cast<NodeIndex>(c * chunk_size);
        NodeIndex end = static_cast<NodeIndex>(std::min<std::size_t>(n, begin + chunk_size));
        scan_bucket_range(graph, index, metric, ahn.get(), begin, end, chunk_entries[c]);
      }
    };

    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (std::thread& t : pool) t.join();

    std::size_t total = 0;
    for (const auto& chunk : chunk_entries) total += chunk.size();
    result.entries.reserve(total);
    for (auto& chunk : chunk_entries) {
      result.entries.insert(result.entries.end(), chunk.begin(), chunk.end());
    }
  }

  std::sort(result.entries.begin(), result.entries.end(),
            [](const DistanceEntry& x, const DistanceEntry& y) {
              return x.i != y.i ? x.i < y.i : x.j < y.j;
            });
  return result;
}

Correlation pearson_correlation(const SparseDistances& a, const SparseDistances& b) {
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  std::size_t n = 0;

  auto accumulate = [&](double x, double y) {
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
    ++n;
  };

  std::size_t ia = 0, ib = 0;
  auto key = [](const DistanceEntry& e) { return std::pair<EdgeIndex, EdgeIndex>(e.i, e.j); };
  while (ia < a.entries.size() || ib < b.entries.size()) {
    if (ib == b.entries.size() ||
        (ia < a.entries.size() && key(a.entries[ia]) < key(b.entries[ib]))) {
      accumulate(a.entries[ia].d, SparseDistances::kImplicitDistance);
      ++ia;
    } else if (ia == a.entries.size() || key(b.entries[ib]) < key(a.entries[ia])) {
      accumulate(SparseDistances::kImplicitDistance, b.entries[ib].d);
      ++ib;
    } else {
      accumulate(a.entries[ia].d, b.entries[ib].d);
      ++ia;
      ++ib;
    }
  }

  if (n < 2) {
    throw std::invalid_argument("pearson correlation undefined for fewer than 2 pairs");
  }
  double dn = static_cast<double>(n);
  double var_x = sxx - sx * sx / dn;
  double var_y = syy - sy * sy / dn;
  if (var_x <= 0.0 || var_y <= 0.0) {
    throw std::invalid_argument("pearson correlation undefined: zero variance");
  }
  Correlation c;
  c.r = (sxy - sx * sy / dn) / std::sqrt(var_x * var_y);
  c.n_pairs = n;
  return c;
}

}  // namespace hlc
