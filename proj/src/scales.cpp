#include "hlc/scales.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hlc {

Fingerprint fingerprint(const Dendrogram& dendrogram) {
  Fingerprint fp;
  fp.leaf_count = dendrogram.leaf_count;

  std::size_t count = dendrogram.leaf_count;
  const auto& merges = dendrogram.merges;
  if (merges.empty() || merges.front().height > 0.0) {
    fp.points.push_back({0.0, count});
  }
  std::size_t k = 0;
  while (k < merges.size()) {
    double h = merges[k].height;
    while (k < merges.size() && merges[k].height == h) {
      --count;
      ++k;
    }
    fp.points.push_back({h, count});
  }
  return fp;
}

SpikinessProfile spikiness_profile(const Fingerprint& fp) {
  SpikinessProfile profile;
  std::size_t prev = fp.leaf_count;
  std::size_t max_drop = 0;
  for (const FingerprintPoint& p : fp.points) {
    if (p.community_count < prev) {
      ++profile.distinct_heights;
      max_drop = std::max(max_drop, prev - p.community_count);
    }
    prev = p.community_count;
  }
  if (fp.leaf_count > 0) {
    profile.max_drop_fraction =
        static_cast<double>(max_drop) / static_cast<double>(fp.leaf_count);
  }
  return profile;
}

std::vector<double> suggest_cuts(const Fingerprint& fp, std::size_t count) {
  struct Drop {
    std::size_t amount;
    double threshold;
  };
  std::vector<Drop> drops;
  std::size_t prev = fp.leaf_count;
  for (const FingerprintPoint& p : fp.points) {
    if (p.community_count < prev) drops.push_back({prev - p.community_count, p.threshold});
    prev = p.community_count;
  }
  std::sort(drops.begin(), drops.end(), [](const Drop& a, const Drop& b) {
    return a.amount != b.amount ? a.amount > b.amount : a.threshold < b.threshold;
  });
  if (drops.size() > count) drops.resize(count);

  std::vector<double> cuts;
  cuts.reserve(drops.size());
  for (const Drop& d : drops) cuts.push_back(d.threshold);
  return cuts;
}

Fingerprint resample_fingerprint(const Fingerprint& fp, double step) {
  if (!(step > 0.0) || step > 1.0) {
    throw std::invalid_argument("resampling step must lie in (0, 1]");
  }
  Fingerprint grid;
  grid.leaf_count = fp.leaf_count;

  std::size_t next = 0;            // first original point beyond the grid position
  std::size_t value = fp.leaf_count;  // step-function value before any point
  auto advance_to = [&](double t) {
    while (next < fp.points.size() && fp.points[next].threshold <= t) {
      value = fp.points[next].community_count;
      ++next;
    }
    return value;
  };

  for (std::size_t i = 0;; ++i) {
    double t = static_cast<double>(i) * step;
    if (t > 1.0) break;
    grid.points.push_back({t, advance_to(t)});
  }
  if (grid.points.back().threshold < 1.0) {
    grid.points.push_back({1.0, advance_to(1.0)});
  }
  return grid;
}

std::vector<CutStatistics> cut_statistics(const Dendrogram& dendrogram,
                                          const std::vector<double>& thresholds) {
  std::vector<CutStatistics> stats;
  stats.reserve(thresholds.size());
  for (double t : thresholds) {
    if (std::isnan(t) || t < 0.0 || t > 1.0) {
      throw std::invalid_argument("cut thresholds must lie in [0, 1]");
    }
    FlatClustering fc = cut(dendrogram, t);
    CutStatistics cs;
    cs.threshold = t;
    cs.community_sizes.assign(fc.community_count, 0);
    for (std::uint32_t community : fc.assignment) ++cs.community_sizes[community];
    stats.push_back(std::move(cs));
  }
  return stats;
}

}  // namespace hlc
