#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hlc/hypergraph.hpp"
#include "hlc/linkage.hpp"

namespace hlc {

// Which communities a node's hyperedges land in, with multiplicities.
// The counts sum to the node's hyperdegree.
struct MembershipVector {
  NodeIndex node = 0;
  std::map<std::uint32_t, std::size_t> counts;  // community id -> #hyperedges

  friend bool operator==(const MembershipVector&, const MembershipVector&) = default;
};

// Support of a MembershipVector: just which communities the node touches.
struct BinaryMembership {
  NodeIndex node = 0;
  std::vector<std::uint32_t> communities;  // sorted ascending

  friend bool operator==(const BinaryMembership&, const BinaryMembership&) = default;
};

struct MembershipDistributions {
  // community size (distinct participating nodes) -> number of communities
  std::map<std::size_t, std::size_t> community_size_histogram;
  // memberships per node (support size) -> number of nodes
  std::map<std::size_t, std::size_t> memberships_per_node_histogram;
};

// Mean pairwise Jaccard similarity of binary memberships between role
// groups. Diagonal entries need two nodes of the role; with fewer the value
// is missing rather than guessed.
struct RoleSimilarityMatrix {
  std::vector<std::string> roles;  // sorted labels
  std::vector<std::vector<std::optional<double>>> values;
};

// Ordered by node so iteration (and every export) is deterministic.
using MembershipMap = std::map<NodeIndex, MembershipVector>;

// Nodes contained in no hyperedge are absent from the result.
MembershipMap membership_vectors(const Hypergraph& graph, const FlatClustering& clustering);

// Natural-log entropy of the node's community distribution; exactly 0 for a
// single community.
double node_entropy(const MembershipVector& vector);

// Mean node entropy per role; roles with no node in the map are omitted.
std::map<std::string, double> role_entropy(const MembershipMap& vectors, const RoleMap& roles);

MembershipDistributions membership_distributions(const MembershipMap& vectors);

BinaryMembership binary_membership(const MembershipVector& vector);

std::map<NodeIndex, BinaryMembership> binary_memberships(const MembershipMap& vectors);

RoleSimilarityMatrix role_similarity_matrix(const std::map<NodeIndex, BinaryMembership>& members,
                                            const RoleMap& roles);

}  // namespace hlc
