#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hlc/hypergraph.hpp"
#include "hlc/linkage.hpp"
#include "hlc/membership.hpp"

namespace hlc {

enum class DegreeClass { kPeripheral, kNonHub, kHub };
enum class ParticipationClass { kSpecialist, kNonGeneralist, kGeneralist };

std::string_view degree_class_name(DegreeClass c);
std::string_view participation_class_name(ParticipationClass c);

// The corrected participation coefficient spans [0,1]: 0 when all of a
// node's hyperedges share one community, 1 when they are spread evenly over
// all communities. kPrintedCompat keeps the uncorrected variant (without the
// complement) purely for auditing against older outputs; it does not stay
// within [0,1].
enum class ParticipationForm { kCorrected, kPrintedCompat };

struct CartographyPoint {
  NodeIndex node = 0;
  std::size_t hyperdegree = 0;
  double participation = 0.0;
  DegreeClass degree_class = DegreeClass::kPeripheral;
  ParticipationClass participation_class = ParticipationClass::kSpecialist;
};

// Nearest-rank 33rd/66th percentile values of one axis; a value <= p33 falls
// in the bottom class, <= p66 in the middle, above it in the top.
struct AxisBreaks {
  double p33 = 0.0;
  double p66 = 0.0;
};

struct Cartography {
  std::vector<CartographyPoint> points;  // ascending node index
  AxisBreaks degree_breaks;
  AxisBreaks participation_breaks;
};

// community_count is the number of communities in the whole cut, not the
// node's own membership count.
double participation_coefficient(const MembershipVector& vector, std::size_t community_count,
                                 ParticipationForm form = ParticipationForm::kCorrected);

// Fills degree/participation classes from the points' own percentiles.
// Needs at least 3 points; fewer degenerate into meaningless thirds.
Cartography classify(std::vector<CartographyPoint> points);

// Full table: membership vectors -> participation -> percentile classes.
// Nodes contained in no hyperedge are left out.
Cartography cartography_table(const Hypergraph& graph, const FlatClustering& clustering,
                              ParticipationForm form = ParticipationForm::kCorrected);

}  // namespace hlc
