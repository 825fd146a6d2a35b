#include "hlc/membership.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hlc/errors.hpp"

namespace hlc {

MembershipMap membership_vectors(const Hypergraph& graph, const FlatClustering& clustering) {
  if (clustering.assignment.size() != graph.edge_count()) {
    throw ConsistencyError("clustering covers " + std::to_string(clustering.assignment.size()) +
                           " hyperedges but the hypergraph has " +
                           std::to_string(graph.edge_count()));
  }
  MembershipMap result;
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    std::uint32_t community = clustering.assignment[e];
    for (NodeIndex v : graph.edge(e).members) {
      MembershipVector& mv = result[v];
      mv.node = v;
      ++mv.counts[community];
    }
  }
  return result;
}

double node_entropy(const MembershipVector& vector) {
  if (vector.counts.empty()) {
    throw std::invalid_argument("entropy undefined for a node with no hyperedges");
  }
  if (vector.counts.size() == 1) return 0.0;  // single community, exactly zero

  std::size_t k = 0;
  for (const auto& [community, count] : vector.counts) k += count;
  // H = ln k - (sum c ln c) / k, algebraically equal to -sum (c/k) ln (c/k)
  // but with one division, keeping uniform cases sharp.
  double weighted = 0.0;
  for (const auto& [community, count] : vector.counts) {
    double c = static_cast<double>(count);
    weighted += c * std::log(c);
  }
  double h = std::log(static_cast<double>(k)) - weighted / static_cast<double>(k);
  return std::max(0.0, h);
}

std::map<std::string, double> role_entropy(const MembershipMap& vectors, const RoleMap& roles) {
  std::map<std::string, std::pair<double, std::size_t>> sums;  // role -> (sum, n)
  for (const auto& [node, mv] : vectors) {
    auto it = roles.find(node);
    if (it == roles.end()) continue;
    auto& [sum, n] = sums[it->second];
    sum += node_entropy(mv);
    ++n;
  }
  std::map<std::string, double> means;
  for (const auto& [role, acc] : sums) means[role] = acc.first / static_cast<double>(acc.second);
  return means;
}

MembershipDistributions membership_distributions(const MembershipMap& vectors) {
  MembershipDistributions dist;
  std::map<std::uint32_t, std::size_t> nodes_per_community;
  for (const auto& [node, mv] : vectors) {
    ++dist.memberships_per_node_histogram[mv.counts.size()];
    for (const auto& [community, count] : mv.counts) ++nodes_per_community[community];
  }
  for (const auto& [community, nodes] : nodes_per_community) {
    ++dist.community_size_histogram[nodes];
  }
  return dist;
}

BinaryMembership binary_membership(const MembershipVector& vector) {
  BinaryMembership bm;
  bm.node = vector.node;
  bm.communities.reserve(vector.counts.size());
  for (const auto& [community, count] : vector.counts) bm.communities.push_back(community);
  return bm;
}

std::map<NodeIndex, BinaryMembership> binary_memberships(const MembershipMap& vectors) {
  std::map<NodeIndex, BinaryMembership> result;
  for (const auto& [node, mv] : vectors) result.emplace(node, binary_membership(mv));
  return result;
}

namespace {

double binary_jaccard(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.empty() && b.empty()) return 0.0;  // convention: nothing in common
  std::size_t ia = 0, ib = 0, inter = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] < b[ib]) {
      ++ia;
    } else if (b[ib] < a[ia]) {
      ++ib;
    } else {
      ++inter;
      ++ia;
      ++ib;
    }
  }
  std::size_t unions = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(unions);
}

}  // namespace

RoleSimilarityMatrix role_similarity_matrix(const std::map<NodeIndex, BinaryMembership>& members,
                                            const RoleMap& roles) {
  // Group participating nodes by role, keeping node order within each group.
  std::map<std::string, std::vector<const BinaryMembership*>> groups;
  std::size_t with_roles = 0;
  for (const auto& [node, bm] : members) {
    auto it = roles.find(node);
    if (it == roles.end()) continue;
    groups[it->second].push_back(&bm);
    ++with_roles;
  }
  if (with_roles < 2) {
    throw std::invalid_argument("role similarity needs at least two nodes with role labels");
  }

  RoleSimilarityMatrix matrix;
  for (const auto& [role, group] : groups) matrix.roles.push_back(role);
  const std::size_t r = matrix.roles.size();
  matrix.values.assign(r, std::vector<std::optional<double>>(r));

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      const auto& gi = groups[matrix.roles[i]];
      const auto& gj = groups[matrix.roles[j]];
      double sum = 0.0;
      std::size_t pairs = 0;
      if (i == j) {
        for (std::size_t u = 0; u < gi.size(); ++u) {
          for (std::size_t w = u + 1; w < gi.size(); ++w) {
            sum += binary_jaccard(gi[u]->communities, gi[w]->communities);
            ++pairs;
          }
        }
      } else {
        for (const BinaryMembership* u : gi) {
          for (const BinaryMembership* w : gj) {
            sum += binary_jaccard(u->communities, w->communities);
            ++pairs;
          }
        }
      }
      if (pairs > 0) {
        matrix.values[i][j] = matrix.values[j][i] = sum / static_cast<double>(pairs);
      }
    }
  }
  return matrix;
}

}  // namespace hlc
