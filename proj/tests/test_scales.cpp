#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hlc/scales.hpp"

using namespace hlc;

namespace {

SparseDistances make(std::vector<DistanceEntry> entries) {
  SparseDistances d;
  d.entries = std::move(entries);
  return d;
}

}  // namespace

TEST_CASE("fingerprint of a three-level dendrogram") {
  // Merges at 0.25, 0.25, 0.5, and the final 1.0 closure.
  Dendrogram dg = single_linkage(make({{0, 1, 0.25}, {2, 3, 0.25}, {1, 2, 0.5}}), 5);
  Fingerprint fp = fingerprint(dg);
  REQUIRE(fp.points.size() == 4);
  CHECK(fp.points[0] == FingerprintPoint{0.0, 5});
  CHECK(fp.points[1] == FingerprintPoint{0.25, 3});
  CHECK(fp.points[2] == FingerprintPoint{0.5, 2});
  CHECK(fp.points[3] == FingerprintPoint{1.0, 1});
}

TEST_CASE("fingerprint without merges is a single point") {
  Dendrogram dg;
  dg.leaf_count = 4;
  Fingerprint fp = fingerprint(dg);
  REQUIRE(fp.points.size() == 1);
  CHECK(fp.points[0] == FingerprintPoint{0.0, 4});
}

TEST_CASE("zero-height merges replace the zero point") {
  Dendrogram dg = single_linkage(make({{0, 1, 0.0}}), 3);
  Fingerprint fp = fingerprint(dg);
  REQUIRE(fp.points.size() == 2);
  CHECK(fp.points[0] == FingerprintPoint{0.0, 2});  // not 3: the 0-merge applies
  CHECK(fp.points[1] == FingerprintPoint{1.0, 1});
}

TEST_CASE("spikiness counts dropping thresholds and the tallest drop") {
  Dendrogram dg = single_linkage(make({{0, 1, 0.25}, {2, 3, 0.25}, {1, 2, 0.5}}), 5);
  SpikinessProfile sp = spikiness_profile(fingerprint(dg));
  CHECK(sp.distinct_heights == 3);            // 0.25, 0.5, 1.0
  CHECK(sp.max_drop_fraction == 2.0 / 5.0);   // 5 -> 3 at 0.25
}

TEST_CASE("suggest_cuts ranks by drop size, then smaller threshold") {
  Dendrogram dg = single_linkage(make({{0, 1, 0.25}, {2, 3, 0.25}, {1, 2, 0.5}}), 5);
  Fingerprint fp = fingerprint(dg);
  std::vector<double> cuts = suggest_cuts(fp, 2);
  REQUIRE(cuts.size() == 2);
  CHECK(cuts[0] == 0.25);  // drop of 2
  CHECK(cuts[1] == 0.5);   // drop of 1, ties to the smaller threshold vs 1.0
  // Asking for more cuts than available drops returns what exists.
  CHECK(suggest_cuts(fp, 10).size() == 3);
}

TEST_CASE("resampling walks a uniform grid and always includes 1") {
  Dendrogram dg = single_linkage(make({{0, 1, 0.25}, {2, 3, 0.25}, {1, 2, 0.5}}), 5);
  Fingerprint fp = fingerprint(dg);
  Fingerprint rs = resample_fingerprint(fp, 0.25);
  REQUIRE(rs.points.size() == 5);  // 0, 0.25, 0.5, 0.75, 1
  CHECK(rs.points[0] == FingerprintPoint{0.0, 5});
  CHECK(rs.points[1] == FingerprintPoint{0.25, 3});
  CHECK(rs.points[2] == FingerprintPoint{0.5, 2});
  CHECK(rs.points[3] == FingerprintPoint{0.75, 2});
  CHECK(rs.points[4] == FingerprintPoint{1.0, 1});

  Fingerprint coarse = resample_fingerprint(fp, 0.4);
  REQUIRE(coarse.points.size() == 4);  // 0, 0.4, 0.8, then forced 1.0
  CHECK(coarse.points.back() == FingerprintPoint{1.0, 1});

  CHECK_THROWS_AS(resample_fingerprint(fp, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(resample_fingerprint(fp, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(resample_fingerprint(fp, 1.5), std::invalid_argument);
}

TEST_CASE("cut statistics report sizes per community id") {
  Dendrogram dg = single_linkage(make({{0, 1, 0.25}, {2, 3, 0.25}, {1, 2, 0.5}}), 5);
  std::vector<CutStatistics> stats = cut_statistics(dg, {0.25, 0.5});
  REQUIRE(stats.size() == 2);
  CHECK(stats[0].threshold == 0.25);
  CHECK(stats[0].community_sizes == std::vector<std::size_t>{2, 2, 1});
  CHECK(stats[1].community_sizes == std::vector<std::size_t>{4, 1});
  CHECK_THROWS_AS(cut_statistics(dg, {1.5}), std::invalid_argument);
  CHECK_THROWS_AS(cut_statistics(dg, {std::nan("")}), std::invalid_argument);
}
