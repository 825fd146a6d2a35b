// Shared helpers for the test binaries: a seeded random-hypergraph source and
// deliberately naive reference implementations that the fast code is checked
// against. The reference code favors obviousness over speed and should not be
// "improved" — it is the yardstick.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlc/distance.hpp"
#include "hlc/hypergraph.hpp"
#include "hlc/linkage.hpp"

namespace testsupport {

// Random hypergraph: up to `max_nodes` labels, up to `max_edges` distinct
// hyperedges of size 2..6. Always yields at least one edge.
inline hlc::Hypergraph random_hypergraph(std::mt19937& rng, std::size_t max_nodes = 30,
                                         std::size_t max_edges = 50) {
  std::uniform_int_distribution<std::size_t> node_count_d(4, max_nodes);
  std::size_t node_count = node_count_d(rng);
  std::uniform_int_distribution<std::size_t> edge_count_d(1, max_edges);
  std::size_t want = edge_count_d(rng);

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < node_count; ++i) labels.push_back("n" + std::to_string(i));

  std::set<std::vector<hlc::NodeIndex>> seen;
  std::uniform_int_distribution<std::size_t> size_d(2, 6);
  std::uniform_int_distribution<hlc::NodeIndex> pick(0, static_cast<hlc::NodeIndex>(node_count - 1));
  std::size_t attempts = 0;
  while (seen.size() < want && attempts < 4000) {
    ++attempts;
    std::size_t size = std::min(size_d(rng), node_count);
    std::set<hlc::NodeIndex> members;
    while (members.size() < size) members.insert(pick(rng));
    seen.insert(std::vector<hlc::NodeIndex>(members.begin(), members.end()));
  }

  std::vector<hlc::Hyperedge> edges;
  for (const auto& m : seen) edges.push_back(hlc::Hyperedge{m});
  // Trim labels to the nodes actually used so node indices stay dense.
  std::set<hlc::NodeIndex> used;
  for (const auto& e : edges) used.insert(e.members.begin(), e.members.end());
  std::vector<std::string> used_labels;
  std::map<hlc::NodeIndex, hlc::NodeIndex> remap;
  for (hlc::NodeIndex v : used) {
    remap[v] = static_cast<hlc::NodeIndex>(used_labels.size());
    used_labels.push_back(labels[v]);
  }
  for (auto& e : edges) {
    for (auto& v : e.members) v = remap[v];
  }
  return hlc::Hypergraph(std::move(used_labels), std::move(edges));
}

// Brute-force pairwise distances: every pair of hyperedges sharing at least
// one node, computed straight from the definitions.
inline std::vector<hlc::DistanceEntry> naive_pair_distances(const hlc::Hypergraph& graph,
                                                            hlc::Metric metric) {
  std::vector<std::set<hlc::NodeIndex>> edge_sets;
  for (hlc::EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    const auto& m = graph.edge(e).members;
    edge_sets.emplace_back(m.begin(), m.end());
  }
  // Inclusive neighborhood of a node: itself plus everything it co-appears with.
  std::vector<std::set<hlc::NodeIndex>> hood(graph.node_count());
  for (hlc::NodeIndex v = 0; v < graph.node_count(); ++v) hood[v].insert(v);
  for (const auto& es : edge_sets) {
    for (hlc::NodeIndex a : es) {
      for (hlc::NodeIndex b : es) hood[a].insert(b);
    }
  }

  auto set_union_size = [](const std::set<hlc::NodeIndex>& a, const std::set<hlc::NodeIndex>& b) {
    std::set<hlc::NodeIndex> u = a;
    u.insert(b.begin(), b.end());
    return u.size();
  };
  auto set_inter_size = [](const std::set<hlc::NodeIndex>& a, const std::set<hlc::NodeIndex>& b) {
    std::size_t n = 0;
    for (auto v : a) n += b.count(v);
    return n;
  };

  std::vector<hlc::DistanceEntry> out;
  for (hlc::EdgeIndex i = 0; i < graph.edge_count(); ++i) {
    for (hlc::EdgeIndex j = i + 1; j < graph.edge_count(); ++j) {
      const auto& A = edge_sets[i];
      const auto& B = edge_sets[j];
      if (set_inter_size(A, B) == 0) continue;
      double d;
      if (metric == hlc::Metric::kJaccard) {
        d = 1.0 - static_cast<double>(set_inter_size(A, B)) / static_cast<double>(set_union_size(A, B));
      } else {
        bool nested = std::includes(A.begin(), A.end(), B.begin(), B.end()) ||
                      std::includes(B.begin(), B.end(), A.begin(), A.end());
        if (nested) {
          d = 0.0;
        } else {
          std::set<hlc::NodeIndex> only_a, only_b;
          std::set_difference(A.begin(), A.end(), B.begin(), B.end(),
                              std::inserter(only_a, only_a.end()));
          std::set_difference(B.begin(), B.end(), A.begin(), A.end(),
                              std::inserter(only_b, only_b.end()));
          std::set<hlc::NodeIndex> na, nb;
          for (auto v : only_a) na.insert(hood[v].begin(), hood[v].end());
          for (auto v : only_b) nb.insert(hood[v].begin(), hood[v].end());
          d = 1.0 - static_cast<double>(set_inter_size(na, nb)) / static_cast<double>(set_union_size(na, nb));
        }
      }
      out.push_back({i, j, d});
    }
  }
  return out;
}

// Textbook single linkage over an explicit matrix of pairwise distances with
// missing pairs at 1.0. Each step merges the active pair with the smallest
// (distance, lower id, higher id) triple; cluster k from merge step k gets id
// leaf_count + k. No arithmetic is done on distances, so heights compare
// bitwise against the fast implementation.
inline hlc::Dendrogram naive_single_linkage(const std::vector<hlc::DistanceEntry>& entries,
                                            std::size_t leaf_count) {
  struct Cluster {
    std::size_t id;
    std::vector<hlc::EdgeIndex> leaves;
  };
  std::vector<std::vector<double>> dist(leaf_count, std::vector<double>(leaf_count, 1.0));
  for (const auto& e : entries) dist[e.i][e.j] = dist[e.j][e.i] = e.d;

  std::vector<Cluster> active;
  for (std::size_t i = 0; i < leaf_count; ++i) active.push_back({i, {static_cast<hlc::EdgeIndex>(i)}});

  hlc::Dendrogram dg;
  dg.leaf_count = leaf_count;
  std::size_t next_id = leaf_count;
  while (active.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        double d = 1.0;
        for (auto a : active[i].leaves) {
          for (auto b : active[j].leaves) d = std::min(d, dist[a][b]);
        }
        std::size_t lo = std::min(active[i].id, active[j].id);
        std::size_t hi = std::max(active[i].id, active[j].id);
        std::size_t cur_lo = std::min(active[bi].id, active[bj].id);
        std::size_t cur_hi = std::max(active[bi].id, active[bj].id);
        if (d < best || (d == best && (lo < cur_lo || (lo == cur_lo && hi < cur_hi)))) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    Cluster& a = active[bi];
    Cluster& b = active[bj];
    hlc::EdgeIndex min_a = *std::min_element(a.leaves.begin(), a.leaves.end());
    hlc::EdgeIndex min_b = *std::min_element(b.leaves.begin(), b.leaves.end());
    hlc::Merge m;
    m.left = min_a <= min_b ? a.id : b.id;
    m.right = min_a <= min_b ? b.id : a.id;
    m.height = best;
    Cluster merged;
    merged.id = next_id++;
    merged.leaves = a.leaves;
    merged.leaves.insert(merged.leaves.end(), b.leaves.begin(), b.leaves.end());
    m.size = merged.leaves.size();
    dg.merges.push_back(m);
    std::size_t drop1 = std::max(bi, bj), drop2 = std::min(bi, bj);
    active.erase(active.begin() + drop1);
    active.erase(active.begin() + drop2);
    active.push_back(std::move(merged));
  }
  return dg;
}

// Components of the graph whose vertices are leaves and whose edges are the
// pairs with distance <= threshold; returned as dense community ids in
// first-leaf order, the same convention the fast cut uses. Pairs absent from
// the list sit at distance exactly 1.0, so a threshold of 1.0 (or more)
// connects everything.
inline std::vector<std::uint32_t> threshold_components(const std::vector<hlc::DistanceEntry>& entries,
                                                       std::size_t leaf_count, double threshold) {
  std::vector<std::size_t> parent(leaf_count);
  for (std::size_t i = 0; i < leaf_count; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : entries) {
    if (e.d <= threshold) parent[find(e.i)] = find(e.j);
  }
  if (threshold >= 1.0) {
    for (std::size_t i = 1; i < leaf_count; ++i) parent[find(i)] = find(0);
  }
  std::vector<std::uint32_t> assignment(leaf_count);
  std::map<std::size_t, std::uint32_t> ids;
  for (std::size_t i = 0; i < leaf_count; ++i) {
    std::size_t root = find(i);
    auto it = ids.try_emplace(root, static_cast<std::uint32_t>(ids.size())).first;
    assignment[i] = it->second;
  }
  return assignment;
}

// Spearman rank correlation with average ranks for ties. Returns NaN when
// either side has no variance.
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    std::size_t i = 0;
    while (i < order.size()) {
      std::size_t j = i;
      while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
      double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
      for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("spearman needs two equal-length samples");
  }
  std::vector<double> rx = ranks(x), ry = ranks(y);
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= static_cast<double>(rx.size());
  my /= static_cast<double>(ry.size());
  double num = 0, dx = 0, dy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    num += (rx[i] - mx) * (ry[i] - my);
    dx += (rx[i] - mx) * (rx[i] - mx);
    dy += (ry[i] - my) * (ry[i] - my);
  }
  if (dx == 0 || dy == 0) return std::numeric_limits<double>::quiet_NaN();
  return num / std::sqrt(dx * dy);
}

}  // namespace testsupport
