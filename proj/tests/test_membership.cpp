#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "hlc/errors.hpp"
#include "hlc/membership.hpp"
#include "support.hpp"

using namespace hlc;

namespace {

Hypergraph from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_hyperedge_list(in).graph;
}

MembershipVector mv(std::map<std::uint32_t, std::size_t> counts) {
  MembershipVector v;
  v.counts = std::move(counts);
  return v;
}

}  // namespace

TEST_CASE("membership counts sum to the hyperdegree") {
  std::mt19937 rng(6060);
  for (int trial = 0; trial < 30; ++trial) {
    Hypergraph g = testsupport::random_hypergraph(rng);
    SparseDistances d = compute_sparse_distances(g, Metric::kJaccard);
    Dendrogram dg = single_linkage(d, g.edge_count());
    for (double t : {0.0, 0.4, 0.8, 1.0}) {
      MembershipMap mm = membership_vectors(g, cut(dg, t));
      CHECK(mm.size() == g.node_count());  // random graphs have no isolated nodes
      for (const auto& [node, vec] : mm) {
        std::size_t total = 0;
        for (const auto& [community, count] : vec.counts) total += count;
        CHECK(total == g.hyperdegree(node));
      }
    }
  }
}

TEST_CASE("membership rejects a clustering of the wrong width") {
  Hypergraph g = from_text("a,b\nb,c\n");
  FlatClustering fc;
  fc.assignment = {0};  // one entry for two hyperedges
  fc.community_count = 1;
  CHECK_THROWS_AS(membership_vectors(g, fc), ConsistencyError);
}

TEST_CASE("entropy of a 3-vs-1 split") {
  // H = ln(4) - (3 ln 3)/4, about 0.5623.
  double h = node_entropy(mv({{0, 3}, {1, 1}}));
  CHECK(h == doctest::Approx(0.5623351446188083).epsilon(1e-12));
}

TEST_CASE("entropy is exactly zero for a single community") {
  CHECK(node_entropy(mv({{7, 5}})) == 0.0);
  CHECK(node_entropy(mv({{0, 1}})) == 0.0);
}

TEST_CASE("entropy peaks on an even split and rejects empty vectors") {
  double even = node_entropy(mv({{0, 2}, {1, 2}}));
  CHECK(even == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  double uneven = node_entropy(mv({{0, 3}, {1, 1}}));
  CHECK(uneven < even);
  CHECK_THROWS_AS(node_entropy(mv({})), std::invalid_argument);
}

TEST_CASE("entropy never exceeds the log of the community count") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph g = testsupport::random_hypergraph(rng);
    Dendrogram dg = single_linkage(compute_sparse_distances(g, Metric::kJaccard), g.edge_count());
    MembershipMap mm = membership_vectors(g, cut(dg, 0.5));
    for (const auto& [node, vec] : mm) {
      double h = node_entropy(vec);
      CHECK(h >= 0.0);
      CHECK(h <= std::log(static_cast<double>(vec.counts.size())) + 1e-12);
    }
  }
}

TEST_CASE("role entropy averages per role and skips role-less nodes") {
  MembershipMap mm;
  mm[0] = mv({{0, 3}, {1, 1}});
  mm[0].node = 0;
  mm[1] = mv({{0, 1}});
  mm[1].node = 1;
  mm[2] = mv({{0, 2}, {1, 2}});
  mm[2].node = 2;
  RoleMap roles{{0, "NUR"}, {1, "NUR"}, {2, "PAT"}};
  std::map<std::string, double> re = role_entropy(mm, roles);
  REQUIRE(re.size() == 2);
  CHECK(re["NUR"] == doctest::Approx(0.5623351446188083 / 2.0));
  CHECK(re["PAT"] == doctest::Approx(std::log(2.0)));

  RoleMap ghost{{5, "ADM"}};  // node 5 has no membership vector
  CHECK(role_entropy(mm, ghost).empty());
}

TEST_CASE("binary membership is the support") {
  BinaryMembership bm = binary_membership(mv({{3, 2}, {0, 1}, {9, 4}}));
  CHECK(bm.communities == std::vector<std::uint32_t>{0, 3, 9});
}

TEST_CASE("membership distributions") {
  // Two hyperedges {a,b} and {b,c} in one community; node b touches both.
  Hypergraph g = from_text("a,b\nb,c\n");
  FlatClustering fc;
  fc.assignment = {0, 0};
  fc.community_count = 1;
  fc.threshold = 1.0;
  MembershipDistributions md = membership_distributions(membership_vectors(g, fc));
  CHECK(md.community_size_histogram == std::map<std::size_t, std::size_t>{{3, 1}});
  CHECK(md.memberships_per_node_histogram == std::map<std::size_t, std::size_t>{{1, 3}});
}

TEST_CASE("role similarity matrix directions and missing entries") {
  std::map<NodeIndex, BinaryMembership> members;
  auto put = [&](NodeIndex n, std::vector<std::uint32_t> cs) {
    BinaryMembership bm;
    bm.node = n;
    bm.communities = std::move(cs);
    members[n] = bm;
  };
  put(0, {0, 1});
  put(1, {0, 1});
  put(2, {0});
  put(3, {2});
  RoleMap roles{{0, "NUR"}, {1, "NUR"}, {2, "PAT"}, {3, "PAT"}};
  RoleSimilarityMatrix m = role_similarity_matrix(members, roles);
  REQUIRE(m.roles == std::vector<std::string>{"NUR", "PAT"});
  // NUR-NUR: single pair (0,1) with identical sets -> 1.
  CHECK(*m.values[0][0] == doctest::Approx(1.0));
  // PAT-PAT: {0} vs {2} -> 0.
  CHECK(*m.values[1][1] == doctest::Approx(0.0));
  // NUR-PAT: pairs (0,2)=1/2, (0,3)=0, (1,2)=1/2, (1,3)=0 -> 1/4.
  CHECK(*m.values[0][1] == doctest::Approx(0.25));
  CHECK(*m.values[1][0] == doctest::Approx(0.25));  // symmetric
}

TEST_CASE("role similarity needs two roled nodes; lone roles are missing") {
  std::map<NodeIndex, BinaryMembership> members;
  BinaryMembership a;
  a.node = 0;
  a.communities = {0};
  members[0] = a;
  RoleMap one{{0, "NUR"}};
  CHECK_THROWS_AS(role_similarity_matrix(members, one), std::invalid_argument);

  BinaryMembership b;
  b.node = 1;
  b.communities = {1};
  members[1] = b;
  RoleMap roles{{0, "NUR"}, {1, "PAT"}};
  RoleSimilarityMatrix m = role_similarity_matrix(members, roles);
  // Diagonals have no within-role pair -> missing; the cross entry exists.
  CHECK_FALSE(m.values[0][0].has_value());
  CHECK_FALSE(m.values[1][1].has_value());
  REQUIRE(m.values[0][1].has_value());
  CHECK(*m.values[0][1] == doctest::Approx(0.0));
}
