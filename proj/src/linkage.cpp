#include "hlc/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "hlc/errors.hpp"

namespace hlc {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
  }

  std::uint32_t find(std::uint32_t x) {
    std::uint32_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      std::uint32_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // Returns the new root. Callers must pass distinct roots.
  std::uint32_t unite(std::uint32_t ra, std::uint32_t rb) {
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    return ra;
  }

  std::uint32_t size_of(std::uint32_t root) const { return size_[root]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

void validate_entries(const SparseDistances& distances, std::size_t leaf_count) {
  for (const DistanceEntry& e : distances.entries) {
    if (e.i >= e.j || e.j >= leaf_count) {
      throw std::invalid_argument("distance entry must reference leaves i < j < leaf_count");
    }
    if (!(e.d >= 0.0) || e.d > 1.0) {
      throw std::invalid_argument("distance values must lie in [0, 1]");
    }
  }
}

// Shared bookkeeping for recording merges against a union-find over leaves.
struct MergeRecorder {
  explicit MergeRecorder(std::size_t leaf_count)
      : n(leaf_count), uf(leaf_count), cluster_id(leaf_count), min_leaf(leaf_count) {
    for (std::uint32_t l = 0; l < leaf_count; ++l) {
      cluster_id[l] = l;
      min_leaf[l] = l;
    }
  }

  // ra, rb: distinct union-find roots. Returns the new root.
  std::uint32_t merge(std::uint32_t ra, std::uint32_t rb, double height) {
    Merge rec;
    rec.height = height;
    rec.size = uf.size_of(ra) + uf.size_of(rb);
    if (min_leaf[ra] < min_leaf[rb]) {
      rec.left = cluster_id[ra];
      rec.right = cluster_id[rb];
    } else {
      rec.left = cluster_id[rb];
      rec.right = cluster_id[ra];
    }
    merges.push_back(rec);
    std::uint32_t lo_leaf = std::min(min_leaf[ra], min_leaf[rb]);
    std::uint32_t root = uf.unite(ra, rb);
    cluster_id[root] = static_cast<std::uint32_t>(n + merges.size() - 1);
    min_leaf[root] = lo_leaf;
    return root;
  }

  std::size_t n;
  UnionFind uf;
  std::vector<std::uint32_t> cluster_id;  // indexed by root
  std::vector<std::uint32_t> min_leaf;    // indexed by root
  std::vector<Merge> merges;
};

}  // namespace

Dendrogram single_linkage(const SparseDistances& distances, std::size_t leaf_count) {
  if (leaf_count == 0) {
    throw std::invalid_argument("single linkage needs at least one hyperedge");
  }
  validate_entries(distances, leaf_count);

  Dendrogram dg;
  dg.leaf_count = leaf_count;
  if (leaf_count < 2) return dg;

  MergeRecorder rec(leaf_count);

  // Lazy heap over distance entries keyed by (d, cluster ids of the two
  // witness leaves). Cluster ids only ever grow, so a cached key is a lower
  // bound on the entry's current key: when the top entry's cached ids match
  // the resolved ones, it is the true global minimum and the tie-break rule
  // (smallest (min id, max id) among equal distances) is honored exactly.
  struct HeapEntry {
    double d;
    std::uint32_t a, b;    // cached cluster ids, a < b
    std::uint32_t wa, wb;  // witness leaves, fixed
  };
  struct Greater {
    bool operator()(const HeapEntry& x, const HeapEntry& y) const {
      if (x.d != y.d) return x.d > y.d;
      if (x.a != y.a) return x.a > y.a;
      return x.b > y.b;
    }
  };

  std::vector<HeapEntry> seed;
  seed.reserve(distances.entries.size());
  for (const DistanceEntry& e : distances.entries) {
    // d == 1 carries no more information than an unlisted pair; fold it into
    // the closing stage so explicit and implicit ones behave identically.
    if (e.d == 1.0) continue;
    seed.push_back({e.d, e.i, e.j, e.i, e.j});
  }
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, Greater> heap(Greater{},
                                                                       std::move(seed));

  while (!heap.empty()) {
    HeapEntry top = heap.top();
    heap.pop();
    std::uint32_t ra = rec.uf.find(top.wa);
    std::uint32_t rb = rec.uf.find(top.wb);
    if (ra == rb) continue;  // became internal
    std::uint32_t ca = rec.cluster_id[ra];
    std::uint32_t cb = rec.cluster_id[rb];
    if (cb < ca) std::swap(ca, cb);
    if (ca == top.a && cb == top.b) {
      rec.merge(ra, rb, top.d);
    } else {
      heap.push({top.d, ca, cb, top.wa, top.wb});  // stale; re-key and retry
    }
  }

  // Everything still separate sits at the implicit distance 1. All pairs are
  // now candidates, so the tie-break repeatedly joins the two smallest ids;
  // fresh ids exceed all existing ones, so plain appending keeps order.
  struct Survivor {
    std::uint32_t id;
    std::uint32_t root;
  };
  std::vector<Survivor> order;
  for (std::uint32_t l = 0; l < leaf_count; ++l) {
    if (rec.uf.find(l) == l) order.push_back({rec.cluster_id[l], l});
  }
  std::sort(order.begin(), order.end(),
            [](const Survivor& x, const Survivor& y) { return x.id < y.id; });
  for (std::size_t head = 0; head + 1 < order.size(); head += 2) {
    std::uint32_t root = rec.merge(order[head].root, order[head + 1].root, 1.0);
    order.push_back({rec.cluster_id[root], root});
  }

  dg.merges = std::move(rec.merges);
  return dg;
}

Dendrogram average_linkage(const SparseDistances& distances, std::size_t leaf_count,
                           const AverageLinkageOptions& options) {
  if (leaf_count == 0) {
    throw std::invalid_argument("average linkage needs at least one hyperedge");
  }
  validate_entries(distances, leaf_count);
  if (leaf_count > options.max_leaves) {
    throw std::invalid_argument("average linkage needs a dense matrix and is capped at " +
                                std::to_string(options.max_leaves) + " hyperedges (got " +
                                std::to_string(leaf_count) + "); raise the cap to override");
  }

  Dendrogram dg;
  dg.leaf_count = leaf_count;
  if (leaf_count < 2) return dg;

  const std::size_t m = leaf_count;
  std::vector<double> dist(m * m, 1.0);  // implicit distance for unlisted pairs
  for (const DistanceEntry& e : distances.entries) {
    dist[static_cast<std::size_t>(e.i) * m + e.j] = e.d;
    dist[static_cast<std::size_t>(e.j) * m + e.i] = e.d;
  }

  std::vector<char> active(m, 1);
  std::vector<std::uint32_t> weight(m, 1);  // leaves represented by each slot

  // Nearest-neighbor chain; merged clusters keep the smaller slot, so every
  // slot index doubles as a leaf contained in its cluster.
  struct Event {
    double height;
    std::uint32_t slot_a, slot_b;
  };
  std::vector<Event> events;
  events.reserve(m - 1);

  std::vector<std::uint32_t> chain;
  std::size_t remaining = m;
  std::uint32_t scan_start = 0;
  while (remaining > 1) {
    if (chain.empty()) {
      while (!active[scan_start]) ++scan_start;
      chain.push_back(scan_start);
    }
    std::uint32_t a = chain.back();
    double best_d = 2.0;
    std::uint32_t best = a;
    const double* row = dist.data() + static_cast<std::size_t>(a) * m;
    for (std::uint32_t x = 0; x < m; ++x) {
      if (!active[x] || x == a) continue;
      if (row[x] < best_d) {
        best_d = row[x];
        best = x;
      }
    }
    if (chain.size() >= 2 && row[chain[chain.size() - 2]] == best_d) {
      std::uint32_t b = chain[chain.size() - 2];
      chain.pop_back();
      chain.pop_back();
      events.push_back({best_d, a, b});

      std::uint32_t lo = std::min(a, b);
      std::uint32_t hi = std::max(a, b);
      double wa = weight[a];
      double wb = weight[b];
      for (std::uint32_t x = 0; x < m; ++x) {
        if (!active[x] || x == lo || x == hi) continue;
        double merged = (wa * dist[static_cast<std::size_t>(a) * m + x] +
                         wb * dist[static_cast<std::size_t>(b) * m + x]) /
                        (wa + wb);
        dist[static_cast<std::size_t>(lo) * m + x] = merged;
        dist[static_cast<std::size_t>(x) * m + lo] = merged;
      }
      weight[lo] += weight[hi];
      active[hi] = 0;
      --remaining;
    } else {
      chain.push_back(best);
    }
  }

  // Average linkage is reducible, so sorting by height keeps every cluster's
  // internal merges ahead of the merge that consumes it; stable order settles
  // ties the chain already resolved.
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& x, const Event& y) { return x.height < y.height; });

  MergeRecorder rec(leaf_count);
  for (const Event& ev : events) {
    std::uint32_t ra = rec.uf.find(ev.slot_a);
    std::uint32_t rb = rec.uf.find(ev.slot_b);
    if (ra == rb) {
      throw ConsistencyError("average linkage replay hit an already-merged pair");
    }
    rec.merge(ra, rb, ev.height);
  }
  dg.merges = std::move(rec.merges);
  return dg;
}

FlatClustering cut(const Dendrogram& dendrogram, double threshold) {
  if (std::isnan(threshold)) {
    throw std::invalid_argument("cut threshold must not be NaN");
  }
  const std::size_t n = dendrogram.leaf_count;
  FlatClustering fc;
  fc.threshold = threshold;
  fc.assignment.resize(n);
  if (n == 0) return fc;

  UnionFind uf(n);
  // rep[c] = some leaf inside cluster c, for clusters formed so far.
  std::vector<std::uint32_t> rep(n + dendrogram.merges.size());
  for (std::uint32_t l = 0; l < n; ++l) rep[l] = l;

  double prev = 0.0;
  for (std::size_t k = 0; k < dendrogram.merges.size(); ++k) {
    const Merge& m = dendrogram.merges[k];
    if (m.height < prev) {
      throw ConsistencyError("dendrogram heights must be non-decreasing");
    }
    prev = m.height;
    if (m.height > threshold) break;
    if (m.left >= n + k || m.right >= n + k) {
      throw ConsistencyError("merge references a cluster that does not exist yet");
    }
    std::uint32_t ra = uf.find(rep[m.left]);
    std::uint32_t rb = uf.find(rep[m.right]);
    if (ra == rb) {
      throw ConsistencyError("merge joins two children from the same cluster");
    }
    rep[n + k] = ra;
    uf.unite(ra, rb);
  }

  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> dense(n, kUnset);
  std::uint32_t next_id = 0;
  for (std::uint32_t l = 0; l < n; ++l) {
    std::uint32_t root = uf.find(l);
    if (dense[root] == kUnset) dense[root] = next_id++;
    fc.assignment[l] = dense[root];
  }
  fc.community_count = next_id;
  return fc;
}

std::vector<double> merge_heights(const Dendrogram& dendrogram) {
  std::vector<double> heights;
  for (const Merge& m : dendrogram.merges) {
    if (heights.empty() || heights.back() != m.height) heights.push_back(m.height);
  }
  return heights;
}

}  // namespace hlc
