#pragma once

#include <cstdint>
#include <vector>

#include "hlc/linkage.hpp"

namespace hlc {

struct FingerprintPoint {
  double threshold = 0.0;
  std::size_t community_count = 0;

  friend bool operator==(const FingerprintPoint&, const FingerprintPoint&) = default;
};

// Step function mapping cut threshold to community count; each count is
// valid on [threshold, next threshold). Evaluated at 0 and at every distinct
// merge height, which is lossless for a dendrogram.
struct Fingerprint {
  std::size_t leaf_count = 0;
  std::vector<FingerprintPoint> points;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// Invented summary statistic (not part of the standard toolbox): proximity
// data concentrates merges on few recurring distances, giving few distinct
// heights and tall drops; affiliation-style data gives the opposite.
struct SpikinessProfile {
  std::size_t distinct_heights = 0;   // thresholds where the count changes
  double max_drop_fraction = 0.0;     // largest single-step drop / leaf_count
};

struct CutStatistics {
  double threshold = 0.0;
  std::vector<std::size_t> community_sizes;  // hyperedges per community, by community id
};

Fingerprint fingerprint(const Dendrogram& dendrogram);

SpikinessProfile spikiness_profile(const Fingerprint& fp);

// The `count` thresholds with the largest community-count drops (largest
// first; ties broken toward the smaller threshold). Defaults guidance for
// picking "significant" cuts; callers remain free to choose their own.
std::vector<double> suggest_cuts(const Fingerprint& fp, std::size_t count = 3);

// Uniform-grid view for overlaying fingerprints from different datasets.
// Grid covers [0,1]; the right endpoint is always included.
Fingerprint resample_fingerprint(const Fingerprint& fp, double step = 0.01);

std::vector<CutStatistics> cut_statistics(const Dendrogram& dendrogram,
                                          const std::vector<double>& thresholds);

}  // namespace hlc
