#include "hlc/carto.hpp"

#include <algorithm>
#include <stdexcept>

#include "hlc/errors.hpp"

namespace hlc {

std::string_view degree_class_name(DegreeClass c) {
  switch (c) {
    case DegreeClass::kPeripheral:
      return "peripheral";
    case DegreeClass::kNonHub:
      return "non-hub";
    case DegreeClass::kHub:
      return "hub";
  }
  return "?";
}

std::string_view participation_class_name(ParticipationClass c) {
  switch (c) {
    case ParticipationClass::kSpecialist:
      return "specialist";
    case ParticipationClass::kNonGeneralist:
      return "non-generalist";
    case ParticipationClass::kGeneralist:
      return "generalist";
  }
  return "?";
}

double participation_coefficient(const MembershipVector& vector, std::size_t community_count,
                                 ParticipationForm form) {
  if (vector.counts.empty()) {
    throw std::invalid_argument("participation undefined for a node with no hyperedges");
  }
  if (community_count == 0) {
    throw std::invalid_argument("participation needs at least one community");
  }
  if (vector.counts.size() > community_count) {
    throw ConsistencyError("node is a member of more communities than the cut contains");
  }
  if (community_count == 1) return 0.0;

  // Integer numerator/denominator keep the endpoints exact: 0 when one
  // community holds everything, 1 when k is spread evenly over all of them.
  std::uint64_t k = 0;
  std::uint64_t sum_sq = 0;
  for (const auto& [community, count] : vector.counts) {
    k += count;
    sum_sq += static_cast<std::uint64_t>(count) * count;
  }
  const std::uint64_t c = community_count;
  const std::uint64_t k_sq = k * k;
  if (form == ParticipationForm::kPrintedCompat) {
    return static_cast<double>(c * sum_sq) / static_cast<double>((c - 1) * k_sq);
  }
  return static_cast<double>(c * (k_sq - sum_sq)) / static_cast<double>((c - 1) * k_sq);
}

namespace {

// Nearest-rank percentile: value at rank ceil(p*n/100) of the sorted sample.
double nearest_rank(const std::vector<double>& sorted, std::size_t percentile) {
  std::size_t rank = (percentile * sorted.size() + 99) / 100;  // ceil, 1-based
  return sorted[rank - 1];
}

AxisBreaks axis_breaks(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return {nearest_rank(values, 33), nearest_rank(values, 66)};
}

}  // namespace

Cartography classify(std::vector<CartographyPoint> points) {
  if (points.size() < 3) {
    throw std::invalid_argument("cartography classes need at least 3 nodes");
  }
  std::vector<double> degrees, participations;
  degrees.reserve(points.size());
  participations.reserve(points.size());
  for (const CartographyPoint& p : points) {
    degrees.push_back(static_cast<double>(p.hyperdegree));
    participations.push_back(p.participation);
  }

  Cartography carto;
  carto.degree_breaks = axis_breaks(std::move(degrees));
  carto.participation_breaks = axis_breaks(std::move(participations));

  for (CartographyPoint& p : points) {
    double d = static_cast<double>(p.hyperdegree);
    p.degree_class = d <= carto.degree_breaks.p33    ? DegreeClass::kPeripheral
                     : d <= carto.degree_breaks.p66 ? DegreeClass::kNonHub
                                                    : DegreeClass::kHub;
    p.participation_class = p.participation <= carto.participation_breaks.p33
                                ? ParticipationClass::kSpecialist
                            : p.participation <= carto.participation_breaks.p66
                                ? ParticipationClass::kNonGeneralist
                                : ParticipationClass::kGeneralist;
  }
  carto.points = std::move(points);
  return carto;
}

Cartography cartography_table(const Hypergraph& graph, const FlatClustering& clustering,
                              ParticipationForm form) {
  MembershipMap vectors = membership_vectors(graph, clustering);
  std::vector<CartographyPoint> points;
  points.reserve(vectors.size());
  for (const auto& [node, mv] : vectors) {
    CartographyPoint p;
    p.node = node;
    for (const auto& [community, count] : mv.counts) p.hyperdegree += count;
    p.participation = participation_coefficient(mv, clustering.community_count, form);
    points.push_back(p);
  }
  return classify(std::move(points));
}

}  // namespace hlc
