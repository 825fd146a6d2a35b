// Command-line front end: parse a hyperedge list, cluster hyperedges by
// overlap distance, and export communities, fingerprints, memberships, and
// cartography tables. Every output is deterministic for a given input and
// configuration, independent of worker count.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hlc/carto.hpp"
#include "hlc/distance.hpp"
#include "hlc/errors.hpp"
#include "hlc/hypergraph.hpp"
#include "hlc/io.hpp"
#include "hlc/linkage.hpp"
#include "hlc/membership.hpp"
#include "hlc/scales.hpp"

namespace fs = std::filesystem;

namespace {

struct Config {
  std::string input;
  std::string roles_path;
  std::string output_dir = ".";
  std::string delimiter = ",";
  std::string metric = "jaccard";
  std::string linkage = "single";
  unsigned workers = 1;
  std::size_t min_size = 1;
  std::size_t avg_cap = 2000;
  double threshold = 0.0;
  std::vector<std::string> cut_stats;  // threshold values or "all-heights"
  double resample_step = 0.0;          // 0 = skip the resampled export
  bool uncorrected_participation = false;
  bool dump_distances = false;
  bool no_cache = false;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hlc::ParseError("cannot open " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw hlc::ParseError("cannot read " + path.string());
  return data;
}

template <typename Fn>
void write_file(const fs::path& path, Fn&& fn) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hlc::ParseError("cannot write " + path.string());
  fn(out);
  out.flush();
  if (!out) throw hlc::ParseError("failed while writing " + path.string());
}

struct LoadedInput {
  hlc::ParseResult parsed;
  std::uint64_t content_hash = 0;
};

LoadedInput load_input(const Config& c) {
  std::string bytes = read_file(c.input);
  std::istringstream in(bytes);
  hlc::ParseOptions options;
  options.delimiter = c.delimiter[0];
  options.min_edge_size = c.min_size;
  LoadedInput li;
  li.parsed = hlc::parse_hyperedge_list(in, options);
  li.content_hash = hlc::fnv1a64(bytes);
  if (li.parsed.graph.edge_count() == 0) {
    throw hlc::ParseError("input contains no usable hyperedges");
  }
  return li;
}

hlc::RoleMap load_roles(const Config& c, hlc::Hypergraph& graph) {
  std::ifstream in(c.roles_path);
  if (!in) throw hlc::ParseError("cannot open " + c.roles_path);
  hlc::RoleParseResult parsed = hlc::parse_roles(in, graph, c.delimiter[0]);
  if (parsed.unknown_nodes > 0) {
    std::cerr << "warning: " << parsed.unknown_nodes
              << " role rows name nodes absent from the hypergraph\n";
  }
  graph.attach_roles(parsed.roles);
  return parsed.roles;
}

hlc::Metric metric_of(const Config& c) {
  return c.metric == "ahn" ? hlc::Metric::kAhn : hlc::Metric::kJaccard;
}

std::string cache_key(const Config& c, std::uint64_t content_hash) {
  std::string tag = "metric=" + c.metric + ";linkage=" + c.linkage +
                    ";min_size=" + std::to_string(c.min_size) + ";delimiter=" + c.delimiter;
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(hlc::fnv1a64(tag, content_hash)));
  return hex;
}

hlc::SparseDistances compute_distances(const Config& c, const hlc::Hypergraph& graph) {
  return hlc::compute_sparse_distances(graph, metric_of(c), c.workers);
}

// Reuses <output-dir>/dendrogram.csv when its meta key matches the input
// content and configuration; otherwise recomputes and refreshes both files.
hlc::Dendrogram obtain_dendrogram(const Config& c, const LoadedInput& li) {
  const std::string key = cache_key(c, li.content_hash);
  const fs::path dir = c.output_dir;
  const fs::path dendro_path = dir / "dendrogram.csv";
  const fs::path meta_path = dir / "dendrogram.meta.json";

  if (!c.no_cache && fs::exists(dendro_path) && fs::exists(meta_path)) {
    try {
      nlohmann::json meta = nlohmann::json::parse(read_file(meta_path));
      if (meta.value("key", "") == key) {
        std::ifstream in(dendro_path);
        hlc::Dendrogram dg = hlc::read_dendrogram(in);
        if (dg.leaf_count == li.parsed.graph.edge_count()) return dg;
      }
    } catch (const std::exception&) {
      // stale or corrupt cache: fall through and recompute
    }
  }

  hlc::SparseDistances distances = compute_distances(c, li.parsed.graph);
  hlc::Dendrogram dg;
  if (c.linkage == "average") {
    hlc::AverageLinkageOptions options;
    options.max_leaves = c.avg_cap;
    dg = hlc::average_linkage(distances, li.parsed.graph.edge_count(), options);
  } else {
    dg = hlc::single_linkage(distances, li.parsed.graph.edge_count());
  }

  fs::create_directories(dir);
  write_file(dendro_path, [&](std::ostream& out) { hlc::write_dendrogram(dg, out); });
  nlohmann::json meta{{"key", key},
                      {"metric", c.metric},
                      {"linkage", c.linkage},
                      {"min_size", c.min_size},
                      {"delimiter", c.delimiter},
                      {"leaf_count", dg.leaf_count}};
  write_file(meta_path, [&](std::ostream& out) { out << meta.dump(2) << '\n'; });
  if (c.dump_distances) {
    write_file(dir / "distances.csv",
               [&](std::ostream& out) { hlc::write_distances(distances, out); });
  }
  return dg;
}

void cmd_stats(const Config& c) {
  LoadedInput li = load_input(c);
  hlc::SizeProfile profile = hlc::size_profile(li.parsed.graph);
  std::cout << "nodes: " << profile.node_count << '\n';
  std::cout << "hyperedges: " << profile.edge_count << '\n';
  std::cout << "duplicates_removed: " << li.parsed.duplicate_edges << '\n';
  std::cout << "dropped_below_min_size: " << li.parsed.dropped_small << '\n';
  for (const auto& [size, count] : profile.edges_by_size) {
    std::cout << "size " << size << ": " << count << '\n';
  }
}

void cmd_cluster(const Config& c) {
  LoadedInput li = load_input(c);
  hlc::Dendrogram dg = obtain_dendrogram(c, li);
  std::cout << "leaves: " << dg.leaf_count << '\n';
  std::cout << "merges: " << dg.merges.size() << '\n';
  std::cout << "distinct_heights: " << hlc::merge_heights(dg).size() << '\n';
  std::cout << "dendrogram: " << (fs::path(c.output_dir) / "dendrogram.csv").string() << '\n';
}

void cmd_cut(const Config& c) {
  LoadedInput li = load_input(c);
  hlc::Dendrogram dg = obtain_dendrogram(c, li);
  hlc::FlatClustering fc = hlc::cut(dg, c.threshold);
  const fs::path dir = c.output_dir;
  write_file(dir / "clustering.csv", [&](std::ostream& out) { hlc::write_clustering(fc, out); });
  write_file(dir / "communities.csv",
             [&](std::ostream& out) { hlc::write_community_members(fc, out); });
  std::cout << "threshold: " << hlc::format_double(c.threshold) << '\n';
  std::cout << "communities: " << fc.community_count << '\n';
}

void cmd_fingerprint(const Config& c) {
  LoadedInput li = load_input(c);
  hlc::Dendrogram dg = obtain_dendrogram(c, li);
  hlc::Fingerprint fp = hlc::fingerprint(dg);
  const fs::path dir = c.output_dir;
  write_file(dir / "fingerprint.csv", [&](std::ostream& out) { hlc::write_fingerprint(fp, out); });
  if (c.resample_step > 0.0) {
    hlc::Fingerprint grid = hlc::resample_fingerprint(fp, c.resample_step);
    write_file(dir / "fingerprint_resampled.csv",
               [&](std::ostream& out) { hlc::write_fingerprint(grid, out); });
  }

  hlc::SpikinessProfile sp = hlc::spikiness_profile(fp);
  std::cout << "points: " << fp.points.size() << '\n';
  std::cout << "spikiness_distinct_heights: " << sp.distinct_heights << '\n';
  std::cout << "spikiness_max_drop_fraction: " << hlc::format_double(sp.max_drop_fraction)
            << '\n';
  std::cout << "note: spikiness is this tool's own summary, not a standard measure\n";
  std::cout << "suggested_cuts:";
  for (double t : hlc::suggest_cuts(fp)) std::cout << ' ' << hlc::format_double(t);
  std::cout << '\n';

  if (!c.cut_stats.empty()) {
    std::vector<double> thresholds;
    for (const std::string& token : c.cut_stats) {
      if (token == "all-heights") {
        std::vector<double> heights = hlc::merge_heights(dg);
        thresholds.insert(thresholds.end(), heights.begin(), heights.end());
      } else {
        try {
          std::size_t used = 0;
          double t = std::stod(token, &used);
          if (used != token.size()) throw std::invalid_argument(token);
          thresholds.push_back(t);
        } catch (const std::exception&) {
          throw std::invalid_argument("bad cut-stats threshold \"" + token + "\"");
        }
      }
    }
    std::vector<hlc::CutStatistics> stats = hlc::cut_statistics(dg, thresholds);
    write_file(dir / "cut_stats.csv",
               [&](std::ostream& out) { hlc::write_cut_statistics(stats, out); });
  }
}

void cmd_membership(const Config& c) {
  LoadedInput li = load_input(c);
  hlc::Dendrogram dg = obtain_dendrogram(c, li);
  hlc::FlatClustering fc = hlc::cut(dg, c.threshold);
  hlc::MembershipMap vectors = hlc::membership_vectors(li.parsed.graph, fc);
  const fs::path dir = c.output_dir;
  write_file(dir / "membership.csv",
             [&](std::ostream& out) { hlc::write_membership(vectors, li.parsed.graph, out); });
  write_file(dir / "distributions.csv", [&](std::ostream& out) {
    hlc::write_distributions(hlc::membership_distributions(vectors), out);
  });
  std::cout << "threshold: " << hlc::format_double(c.threshold) << '\n';
  std::cout << "communities: " << fc.community_count << '\n';
  std::cout << "nodes_with_memberships: " << vectors.size() << '\n';
}

void cmd_similarity(const Config& c) {
  LoadedInput li = load_input(c);
  hlc::RoleMap roles = load_roles(c, li.parsed.graph);
  hlc::Dendrogram dg = obtain_dendrogram(c, li);
  hlc::FlatClustering fc = hlc::cut(dg, c.threshold);
  hlc::MembershipMap vectors = hlc::membership_vectors(li.parsed.graph, fc);
  hlc::RoleSimilarityMatrix matrix =
      hlc::role_similarity_matrix(hlc::binary_memberships(vectors), roles);
  write_file(fs::path(c.output_dir) / "role_matrix.csv",
             [&](std::ostream& out) { hlc::write_role_matrix(matrix, out); });
  std::cout << "threshold: " << hlc::format_double(c.threshold) << '\n';
  std::cout << "roles: " << matrix.roles.size() << '\n';
}

void cmd_entropy(const Config& c) {
  LoadedInput li = load_input(c);
  hlc::RoleMap roles;
  if (!c.roles_path.empty()) roles = load_roles(c, li.parsed.graph);
  hlc::Dendrogram dg = obtain_dendrogram(c, li);
  hlc::FlatClustering fc = hlc::cut(dg, c.threshold);
  hlc::MembershipMap vectors = hlc::membership_vectors(li.parsed.graph, fc);
  const fs::path dir = c.output_dir;
  write_file(dir / "node_entropy.csv",
             [&](std::ostream& out) { hlc::write_node_entropy(vectors, li.parsed.graph, out); });
  if (!roles.empty()) {
    std::map<std::string, double> means = hlc::role_entropy(vectors, roles);
    std::set<std::string> all_roles;
    for (const auto& [node, role] : roles) all_roles.insert(role);
    for (const std::string& role : all_roles) {
      if (!means.count(role)) {
        std::cerr << "warning: role \"" << role << "\" has no participating nodes; omitted\n";
      }
    }
    write_file(dir / "role_entropy.csv",
               [&](std::ostream& out) { hlc::write_role_entropy(means, out); });
  }
  std::cout << "threshold: " << hlc::format_double(c.threshold) << '\n';
  std::cout << "nodes: " << vectors.size() << '\n';
}

void cmd_cartography(const Config& c) {
  LoadedInput li = load_input(c);
  if (!c.roles_path.empty()) load_roles(c, li.parsed.graph);
  hlc::Dendrogram dg = obtain_dendrogram(c, li);
  hlc::FlatClustering fc = hlc::cut(dg, c.threshold);
  hlc::ParticipationForm form = c.uncorrected_participation
                                    ? hlc::ParticipationForm::kPrintedCompat
                                    : hlc::ParticipationForm::kCorrected;
  hlc::Cartography carto = hlc::cartography_table(li.parsed.graph, fc, form);
  if (carto.points.size() < li.parsed.graph.node_count()) {
    std::cerr << "warning: " << (li.parsed.graph.node_count() - carto.points.size())
              << " nodes have no hyperedges and were left out\n";
  }
  write_file(fs::path(c.output_dir) / "cartography.csv",
             [&](std::ostream& out) { hlc::write_cartography(carto, li.parsed.graph, out); });
  std::cout << "threshold: " << hlc::format_double(c.threshold) << '\n';
  std::cout << "nodes: " << carto.points.size() << '\n';
  std::cout << "degree_breaks: " << hlc::format_double(carto.degree_breaks.p33) << ' '
            << hlc::format_double(carto.degree_breaks.p66) << '\n';
  std::cout << "participation_breaks: " << hlc::format_double(carto.participation_breaks.p33)
            << ' ' << hlc::format_double(carto.participation_breaks.p66) << '\n';
}

void cmd_correlate(const Config& c) {
  LoadedInput li = load_input(c);
  hlc::SparseDistances jaccard =
      hlc::compute_sparse_distances(li.parsed.graph, hlc::Metric::kJaccard, c.workers);
  hlc::SparseDistances ahn =
      hlc::compute_sparse_distances(li.parsed.graph, hlc::Metric::kAhn, c.workers);
  if (c.dump_distances) {
    fs::create_directories(c.output_dir);
    write_file(fs::path(c.output_dir) / "distances_jaccard.csv",
               [&](std::ostream& out) { hlc::write_distances(jaccard, out); });
    write_file(fs::path(c.output_dir) / "distances_ahn.csv",
               [&](std::ostream& out) { hlc::write_distances(ahn, out); });
  }
  hlc::Correlation corr = hlc::pearson_correlation(jaccard, ahn);
  std::cout << "pearson_r: " << hlc::format_double(corr.r) << '\n';
  std::cout << "n_pairs: " << corr.n_pairs << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"hyperlink community toolkit: cluster hyperedges by overlap distance"};
  app.require_subcommand(1);
  Config c;

  auto check_delimiter = CLI::Validator(
      [](std::string& v) -> std::string {
        return v.size() == 1 ? "" : "delimiter must be a single character";
      },
      "CHAR");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", c.input, "hyperedge list, one hyperedge per line")
        ->required();
    sub->add_option("--delimiter", c.delimiter, "field delimiter (default ,)")
        ->check(check_delimiter);
    sub->add_option("--min-size", c.min_size, "drop hyperedges with fewer nodes (default 1)")
        ->check(CLI::PositiveNumber);
  };
  auto add_pipeline = [&](CLI::App* sub) {
    add_input(sub);
    sub->add_option("-o,--output-dir", c.output_dir, "directory for exports (default .)");
    sub->add_option("--metric", c.metric, "overlap distance: jaccard or ahn")
        ->check(CLI::IsMember({"jaccard", "ahn"}));
    sub->add_option("--linkage", c.linkage, "single (default) or average")
        ->check(CLI::IsMember({"single", "average"}));
    sub->add_option("--workers", c.workers, "threads for the distance stage")
        ->check(CLI::Range(1u, 256u));
    sub->add_option("--avg-cap", c.avg_cap, "hyperedge cap for average linkage");
    sub->add_flag("--no-cache", c.no_cache, "recompute even if a cached dendrogram matches");
  };
  auto add_threshold = [&](CLI::App* sub) {
    sub->add_option("-t,--threshold", c.threshold, "cut threshold in [0,1]")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
  };

  CLI::App* stats = app.add_subcommand("stats", "hypergraph size profile");
  add_input(stats);
  stats->callback([&] { cmd_stats(c); });

  CLI::App* cluster = app.add_subcommand("cluster", "build and cache the dendrogram");
  add_pipeline(cluster);
  cluster->add_flag("--dump-distances", c.dump_distances, "also write distances.csv");
  cluster->callback([&] { cmd_cluster(c); });

  CLI::App* cut = app.add_subcommand("cut", "flat communities at one threshold");
  add_pipeline(cut);
  add_threshold(cut);
  cut->callback([&] { cmd_cut(c); });

  CLI::App* fingerprint = app.add_subcommand("fingerprint", "community counts across thresholds");
  add_pipeline(fingerprint);
  fingerprint->add_option("--resample-step", c.resample_step,
                          "also write a uniform-grid fingerprint with this step")
      ->check(CLI::Range(0.0, 1.0));
  fingerprint->add_option("--cut-stats", c.cut_stats,
                          "thresholds (or all-heights) for community-size statistics");
  fingerprint->callback([&] { cmd_fingerprint(c); });

  CLI::App* membership = app.add_subcommand("membership", "node membership vectors at a cut");
  add_pipeline(membership);
  add_threshold(membership);
  membership->callback([&] { cmd_membership(c); });

  CLI::App* similarity = app.add_subcommand("similarity", "role-to-role membership similarity");
  add_pipeline(similarity);
  add_threshold(similarity);
  similarity->add_option("--roles", c.roles_path, "node,role metadata file")->required();
  similarity->callback([&] { cmd_similarity(c); });

  CLI::App* entropy = app.add_subcommand("entropy", "node (and role) membership entropy");
  add_pipeline(entropy);
  add_threshold(entropy);
  entropy->add_option("--roles", c.roles_path, "node,role metadata file");
  entropy->callback([&] { cmd_entropy(c); });

  CLI::App* cartography = app.add_subcommand("cartography", "hyperdegree/participation roles");
  add_pipeline(cartography);
  add_threshold(cartography);
  cartography->add_option("--roles", c.roles_path, "node,role metadata file");
  cartography->add_flag("--uncorrected-participation", c.uncorrected_participation,
                        "audit mode: uncorrected participation variant (not confined to [0,1])");
  cartography->callback([&] { cmd_cartography(c); });

  CLI::App* correlate = app.add_subcommand("correlate", "Pearson r between the two metrics");
  add_input(correlate);
  correlate->add_option("-o,--output-dir", c.output_dir, "directory for exports (default .)");
  correlate->add_option("--workers", c.workers, "threads for the distance stage")
      ->check(CLI::Range(1u, 256u));
  correlate->add_flag("--dump-distances", c.dump_distances, "write both distance dumps");
  correlate->callback([&] { cmd_correlate(c); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hlc::ConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const hlc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
