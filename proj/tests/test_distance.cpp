#include <random>
#include <sstream>

#include "doctest.h"
#include "hlc/distance.hpp"
#include "hlc/hypergraph.hpp"
#include "hlc/io.hpp"
#include "support.hpp"

using namespace hlc;

namespace {

Hypergraph from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_hyperedge_list(in).graph;
}

}  // namespace

TEST_CASE("jaccard distance basics") {
  Hyperedge abc{{0, 1, 2}};
  Hyperedge bcd{{1, 2, 3}};
  CHECK(jaccard_distance(abc, bcd) == 0.5);  // 1 - 2/4
  CHECK(jaccard_distance(abc, abc) == 0.0);
  Hyperedge ab{{0, 1}};
  CHECK(jaccard_distance(ab, abc) == doctest::Approx(1.0 / 3.0));  // nested: 1 - 2/3
  Hyperedge de{{3, 4}};
  CHECK(jaccard_distance(ab, de) == 1.0);
}

TEST_CASE("inverted index buckets are ascending and complete") {
  Hypergraph g = from_text("a,b\na,c\nb,c\na,b,c\n");
  InvertedIndex idx(g);
  CHECK(idx.total_entries() == 9);
  NodeIndex a = *g.find_node("a");
  CHECK(idx.bucket(a) == std::vector<EdgeIndex>{0, 1, 3});
}

TEST_CASE("inclusive neighborhood contains the node itself") {
  Hypergraph g = from_text("a,b\nc,d\n");
  InvertedIndex idx(g);
  NeighborhoodCache cache(g, idx);
  NodeIndex a = *g.find_node("a");
  NodeIndex b = *g.find_node("b");
  CHECK(cache.inclusive_neighborhood(a) == std::vector<NodeIndex>{a, b});
}

TEST_CASE("neighborhood distance: nested pairs sit at zero") {
  Hypergraph g = from_text("a,b\na,b,c\nq,r,s\n");
  InvertedIndex idx(g);
  NeighborhoodCache cache(g, idx);
  CHECK(ahn_distance(g.edge(0), g.edge(1), cache, g.node_count()) == 0.0);
}

TEST_CASE("neighborhood distance of two dyads = endpoint neighborhood distance") {
  // Dyads {a,x} and {a,y} share a; distance must compare N+(x) with N+(y).
  Hypergraph g = from_text("a,x\na,y\nx,w\ny,w\n");
  InvertedIndex idx(g);
  NeighborhoodCache cache(g, idx);
  // N+(x) = {a,x,w}, N+(y) = {a,y,w}: intersection 2, union 4.
  CHECK(ahn_distance(g.edge(0), g.edge(1), cache, g.node_count()) == 0.5);
}

TEST_CASE("sparse distances list exactly the node-sharing pairs, ordered") {
  Hypergraph g = from_text("a,b\nb,c\nc,d\nx,y\n");
  SparseDistances d = compute_sparse_distances(g, Metric::kJaccard);
  REQUIRE(d.entries.size() == 2);
  CHECK(d.entries[0].i == 0);
  CHECK(d.entries[0].j == 1);
  CHECK(d.entries[1].i == 1);
  CHECK(d.entries[1].j == 2);
  CHECK(d.entries[0].d == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("explicit entries are always below the implicit distance") {
  std::mt19937 rng(991);
  for (int trial = 0; trial < 30; ++trial) {
    Hypergraph g = testsupport::random_hypergraph(rng);
    for (Metric m : {Metric::kJaccard, Metric::kAhn}) {
      SparseDistances d = compute_sparse_distances(g, m);
      for (const auto& e : d.entries) {
        CHECK(e.d >= 0.0);
        CHECK(e.d < SparseDistances::kImplicitDistance);
      }
    }
  }
}

TEST_CASE("sparse distances match the brute-force definition") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph g = testsupport::random_hypergraph(rng);
    for (Metric m : {Metric::kJaccard, Metric::kAhn}) {
      SparseDistances fast = compute_sparse_distances(g, m);
      std::vector<DistanceEntry> naive = testsupport::naive_pair_distances(g, m);
      REQUIRE(fast.entries.size() == naive.size());
      for (std::size_t k = 0; k < naive.size(); ++k) {
        CHECK(fast.entries[k].i == naive[k].i);
        CHECK(fast.entries[k].j == naive[k].j);
        CHECK(fast.entries[k].d == naive[k].d);  // same arithmetic, bitwise
      }
    }
  }
}

TEST_CASE("worker count never changes the serialized output") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 10; ++trial) {
    Hypergraph g = testsupport::random_hypergraph(rng);
    SparseDistances base = compute_sparse_distances(g, Metric::kJaccard, 1);
    std::ostringstream ref;
    write_distances(base, ref);
    for (unsigned workers : {2u, 3u, 5u, 8u}) {
      SparseDistances d = compute_sparse_distances(g, Metric::kJaccard, workers);
      std::ostringstream out;
      write_distances(d, out);
      CHECK(out.str() == ref.str());
    }
  }
}

TEST_CASE("pearson correlation on hand-built lists") {
  SparseDistances a, b;
  a.entries = {{0, 1, 0.2}, {0, 2, 0.4}, {1, 2, 0.6}};
  b.entries = {{0, 1, 0.3}, {0, 2, 0.5}, {1, 2, 0.7}};
  Correlation c = pearson_correlation(a, b);
  CHECK(c.n_pairs == 3);
  CHECK(c.r == doctest::Approx(1.0));

  // A pair listed on one side only is implicitly 1.0 on the other:
  // points (0.2,0.3), (1,0.5), (1,0.7) correlate at exactly sqrt(3)/2.
  SparseDistances partial;
  partial.entries = {{0, 1, 0.2}};
  Correlation c2 = pearson_correlation(partial, b);
  CHECK(c2.n_pairs == 3);
  CHECK(c2.r == doctest::Approx(0.8660254037844386));
}

TEST_CASE("pearson correlation rejects degenerate inputs") {
  SparseDistances a, b;
  a.entries = {{0, 1, 0.5}};
  b.entries = {{0, 1, 0.5}};
  CHECK_THROWS_AS(pearson_correlation(a, b), std::invalid_argument);  // one pair
  a.entries = {{0, 1, 0.5}, {0, 2, 0.5}};
  b.entries = {{0, 1, 0.1}, {0, 2, 0.9}};
  CHECK_THROWS_AS(pearson_correlation(a, b), std::invalid_argument);  // zero variance
}

TEST_CASE("metric names") {
  CHECK(metric_name(Metric::kJaccard) == "jaccard");
  CHECK(metric_name(Metric::kAhn) == "ahn");
}
