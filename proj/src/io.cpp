#include "hlc/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <initializer_list>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "hlc/errors.hpp"

namespace hlc {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits on the delimiter keeping empty fields (a missing matrix value is an
// empty cell), trimming stray whitespace from each.
std::vector<std::string> split_fields(std::string_view line, char delimiter = ',') {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = line.find(delimiter, start);
    if (end == std::string_view::npos) {
      fields.emplace_back(trim(line.substr(start)));
      return fields;
    }
    fields.emplace_back(trim(line.substr(start, end - start)));
    start = end + 1;
  }
}

double parse_double(std::string_view token, std::size_t line_number) {
  std::string s(token);
  if (s.empty()) throw ParseError("expected a number, got an empty field", line_number);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ParseError("malformed number \"" + s + "\"", line_number);
  }
  return v;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line_number,
                         std::uint64_t max = std::numeric_limits<std::uint64_t>::max()) {
  std::string s(token);
  if (s.empty() || s.front() == '-' || s.front() == '+') {
    throw ParseError("expected a non-negative integer, got \"" + s + "\"", line_number);
  }
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || errno == ERANGE || v > max) {
    throw ParseError("malformed or out-of-range integer \"" + s + "\"", line_number);
  }
  return v;
}

// Pulls content lines one at a time; blank lines are skipped, comment lines
// are stashed for parsers that expect "# key=value" metadata.
class LineScanner {
 public:
  explicit LineScanner(std::istream& in) : in_(in) {}

  bool next(std::string& content) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      std::string_view t = trim(line);
      if (t.empty()) continue;
      if (t.front() == '#') {
        comments_.emplace_back(trim(t.substr(1)));
        continue;
      }
      content.assign(t);
      return true;
    }
    if (in_.bad()) throw ParseError("stream error while reading", line_number_);
    return false;
  }

  std::size_t line_number() const { return line_number_; }
  const std::vector<std::string>& comments() const { return comments_; }

  // Value of "key=..." within any comment seen so far.
  std::string meta(std::string_view key) const {
    for (const std::string& c : comments_) {
      for (const std::string& token : split_fields(c, ' ')) {
        std::size_t eq = token.find('=');
        if (eq != std::string::npos && std::string_view(token).substr(0, eq) == key) {
          return token.substr(eq + 1);
        }
      }
    }
    return {};
  }

  std::string require_meta(std::string_view key) const {
    std::string v = meta(key);
    if (v.empty()) {
      throw ParseError("missing \"# " + std::string(key) + "=...\" metadata", line_number_);
    }
    return v;
  }

 private:
  std::istream& in_;
  std::size_t line_number_ = 0;
  std::vector<std::string> comments_;
};

void require_header(LineScanner& scan, std::string_view expected) {
  std::string line;
  if (!scan.next(line) || line != expected) {
    throw ParseError("expected header \"" + std::string(expected) + "\"", scan.line_number());
  }
}

std::vector<std::string> require_fields(const std::string& line, std::size_t n,
                                        std::size_t line_number) {
  std::vector<std::string> fields = split_fields(line);
  if (fields.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " fields, got " +
                         std::to_string(fields.size()),
                     line_number);
  }
  return fields;
}

}  // namespace

// --- distances -------------------------------------------------------------

void write_distances(const SparseDistances& distances, std::ostream& out) {
  for (const DistanceEntry& e : distances.entries) {
    out << e.i << ',' << e.j << ',' << format_double(e.d) << '\n';
  }
}

SparseDistances read_distances(std::istream& in, Metric metric) {
  SparseDistances result;
  result.metric = metric;
  LineScanner scan(in);
  std::string line;
  while (scan.next(line)) {
    std::vector<std::string> f = require_fields(line, 3, scan.line_number());
    DistanceEntry e;
    e.i = static_cast<EdgeIndex>(parse_uint(f[0], scan.line_number(), 0xffffffffu));
    e.j = static_cast<EdgeIndex>(parse_uint(f[1], scan.line_number(), 0xffffffffu));
    e.d = parse_double(f[2], scan.line_number());
    if (e.i >= e.j) throw ParseError("distance rows need i < j", scan.line_number());
    if (!result.entries.empty()) {
      const DistanceEntry& prev = result.entries.back();
      if (std::pair(prev.i, prev.j) >= std::pair(e.i, e.j)) {
        throw ParseError("distance rows must be in canonical (i,j) order", scan.line_number());
      }
    }
    result.entries.push_back(e);
  }
  return result;
}

// --- dendrogram ------------------------------------------------------------

void write_dendrogram(const Dendrogram& dendrogram, std::ostream& out) {
  out << "left,right,height,size\n";
  for (const Merge& m : dendrogram.merges) {
    out << m.left << ',' << m.right << ',' << format_double(m.height) << ',' << m.size << '\n';
  }
}

Dendrogram read_dendrogram(std::istream& in) {
  LineScanner scan(in);
  require_header(scan, "left,right,height,size");

  std::vector<Merge> merges;
  std::string line;
  while (scan.next(line)) {
    std::vector<std::string> f = require_fields(line, 4, scan.line_number());
    Merge m;
    m.left = static_cast<std::uint32_t>(parse_uint(f[0], scan.line_number(), 0xffffffffu));
    m.right = static_cast<std::uint32_t>(parse_uint(f[1], scan.line_number(), 0xffffffffu));
    m.height = parse_double(f[2], scan.line_number());
    m.size = static_cast<std::uint32_t>(parse_uint(f[3], scan.line_number(), 0xffffffffu));
    if (m.height < 0.0 || m.height > 1.0) {
      throw ParseError("merge height outside [0, 1]", scan.line_number());
    }
    merges.push_back(m);
  }

  Dendrogram dg;
  dg.leaf_count = merges.size() + 1;  // complete dendrogram: n - 1 merges
  dg.merges = std::move(merges);

  // Structural checks so a mangled file cannot masquerade as a dendrogram.
  const std::size_t n = dg.leaf_count;
  std::vector<char> consumed(n + dg.merges.size(), 0);
  double prev = 0.0;
  for (std::size_t k = 0; k < dg.merges.size(); ++k) {
    const Merge& m = dg.merges[k];
    if (m.height < prev) throw ParseError("merge heights must be non-decreasing");
    prev = m.height;
    if (m.left == m.right || m.left >= n + k || m.right >= n + k) {
      throw ParseError("merge " + std::to_string(k) + " references an invalid cluster");
    }
    if (consumed[m.left] || consumed[m.right]) {
      throw ParseError("cluster consumed as a child twice in merge " + std::to_string(k));
    }
    consumed[m.left] = consumed[m.right] = 1;
    auto size_of = [&](std::uint32_t id) {
      return id < n ? 1u : dg.merges[id - n].size;
    };
    if (m.size != size_of(m.left) + size_of(m.right)) {
      throw ParseError("merge " + std::to_string(k) + " size mismatch");
    }
  }
  return dg;
}

// --- flat clustering --------------------------------------------------------

void write_clustering(const FlatClustering& clustering, std::ostream& out) {
  out << "# threshold=" << format_double(clustering.threshold) << '\n';
  out << "hyperedge_index,community_id\n";
  for (std::size_t e = 0; e < clustering.assignment.size(); ++e) {
    out << e << ',' << clustering.assignment[e] << '\n';
  }
}

FlatClustering read_clustering(std::istream& in) {
  LineScanner scan(in);
  require_header(scan, "hyperedge_index,community_id");

  std::vector<std::pair<std::size_t, std::uint32_t>> rows;
  std::string line;
  while (scan.next(line)) {
    std::vector<std::string> f = require_fields(line, 2, scan.line_number());
    rows.emplace_back(parse_uint(f[0], scan.line_number()),
                      static_cast<std::uint32_t>(parse_uint(f[1], scan.line_number(),
                                                            0xffffffffu)));
  }

  FlatClustering fc;
  fc.threshold = parse_double(scan.require_meta("threshold"), scan.line_number());
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  fc.assignment.assign(rows.size(), kUnset);
  for (const auto& [e, c] : rows) {
    if (e >= rows.size() || fc.assignment[e] != kUnset) {
      throw ParseError("hyperedge indices must cover 0.." + std::to_string(rows.size() - 1) +
                       " exactly once");
    }
    fc.assignment[e] = c;
  }
  // Community ids must be dense and first appear in ascending order.
  std::uint32_t next_id = 0;
  for (std::uint32_t c : fc.assignment) {
    if (c == next_id) {
      ++next_id;
    } else if (c > next_id) {
      throw ParseError("community ids must be dense, in order of first hyperedge");
    }
  }
  fc.community_count = next_id;
  return fc;
}

void write_community_members(const FlatClustering& clustering, std::ostream& out) {
  out << "community_id,hyperedge_index\n";
  std::vector<std::vector<EdgeIndex>> members(clustering.community_count);
  for (std::size_t e = 0; e < clustering.assignment.size(); ++e) {
    members[clustering.assignment[e]].push_back(static_cast<EdgeIndex>(e));
  }
  for (std::size_t c = 0; c < members.size(); ++c) {
    for (EdgeIndex e : members[c]) out << c << ',' << e << '\n';
  }
}

std::vector<std::vector<EdgeIndex>> read_community_members(std::istream& in) {
  LineScanner scan(in);
  require_header(scan, "community_id,hyperedge_index");

  std::vector<std::vector<EdgeIndex>> members;
  std::string line;
  while (scan.next(line)) {
    std::vector<std::string> f = require_fields(line, 2, scan.line_number());
    std::size_t c = parse_uint(f[0], scan.line_number());
    EdgeIndex e = static_cast<EdgeIndex>(parse_uint(f[1], scan.line_number(), 0xffffffffu));
    if (c > members.size()) {
      throw ParseError("community ids must appear in ascending order", scan.line_number());
    }
    if (c == members.size()) members.emplace_back();
    members[c].push_back(e);
  }
  return members;
}

// --- fingerprint -------------------------------------------------------------

void write_fingerprint(const Fingerprint& fp, std::ostream& out) {
  out << "# leaf_count=" << fp.leaf_count << '\n';
  out << "threshold,community_count\n";
  for (const FingerprintPoint& p : fp.points) {
    out << format_double(p.threshold) << ',' << p.community_count << '\n';
  }
}

Fingerprint read_fingerprint(std::istream& in) {
  LineScanner scan(in);
  require_header(scan, "threshold,community_count");

  Fingerprint fp;
  std::string line;
  while (scan.next(line)) {
    std::vector<std::string> f = require_fields(line, 2, scan.line_number());
    FingerprintPoint p;
    p.threshold = parse_double(f[0], scan.line_number());
    p.community_count = parse_uint(f[1], scan.line_number());
    if (!fp.points.empty()) {
      if (p.threshold <= fp.points.back().threshold) {
        throw ParseError("fingerprint thresholds must be strictly increasing",
                         scan.line_number());
      }
      if (p.community_count > fp.points.back().community_count) {
        throw ParseError("fingerprint counts must be non-increasing", scan.line_number());
      }
    }
    fp.points.push_back(p);
  }
  fp.leaf_count = parse_uint(scan.require_meta("leaf_count"), scan.line_number());
  return fp;
}

// --- cut statistics ----------------------------------------------------------

void write_cut_statistics(const std::vector<CutStatistics>& stats, std::ostream& out) {
  out << "threshold,community_id,size\n";
  for (const CutStatistics& cs : stats) {
    for (std::size_t c = 0; c < cs.community_sizes.size(); ++c) {
      out << format_double(cs.threshold) << ',' << c << ',' << cs.community_sizes[c] << '\n';
    }
  }
}

std::vector<CutStatistics> read_cut_statistics(std::istream& in) {
  LineScanner scan(in);
  require_header(scan, "threshold,community_id,size");

  std::vector<CutStatistics> stats;
  std::string line;
  while (scan.next(line)) {
    std::vector<std::string> f = require_fields(line, 3, scan.line_number());
    double t = parse_double(f[0], scan.line_number());
    std::size_t c = parse_uint(f[1], scan.line_number());
    std::size_t size = parse_uint(f[2], scan.line_number());
    if (c == 0) {
      stats.push_back({t, {}});
    } else if (stats.empty() || c != stats.back().community_sizes.size()) {
      throw ParseError("community ids must increment from 0 within each threshold",
                       scan.line_number());
    }
    if (stats.back().threshold != t) {
      throw ParseError("threshold changed mid-group", scan.line_number());
    }
    stats.back().community_sizes.push_back(size);
  }
  return stats;
}

// --- membership ---------------------------------------------------------------

void write_membership(const MembershipMap& vectors, const Hypergraph& graph, std::ostream& out) {
  out << "node,community_id,count\n";
  for (const auto& [node, mv] : vectors) {
    for (const auto& [community, count] : mv.counts) {
      out << graph.label(node) << ',' << community << ',' << count << '\n';
    }
  }
}

std::vector<MembershipRow> read_membership(std::istream& in) {
  LineScanner scan(in);
  require_header(scan, "node,community_id,count");

  std::vector<MembershipRow> rows;
  std::string line;
  while (scan.next(line)) {
    std::vector<std::string> f = require_fields(line, 3, scan.line_number());
    MembershipRow row;
    row.node = f[0];
    row.community = static_cast<std::uint32_t>(parse_uint(f[1], scan.line_number(),
                                                          0xffffffffu));
    row.count = parse_uint(f[2], scan.line_number());
    if (row.count == 0) throw ParseError("membership counts must be >= 1", scan.line_number());
    rows.push_back(std::move(row));
  }
  return rows;
}

// --- distributions -------------------------------------------------------------

void write_distributions(const MembershipDistributions& dist, std::ostream& out) {
  out << "statistic,value,count\n";
  for (const auto& [value, count] : dist.community_size_histogram) {
    out << "community_size," << value << ',' << count << '\n';
  }
  for (const auto& [value, count] : dist.memberships_per_node_histogram) {
    out << "memberships_per_node," << value << ',' << count << '\n';
  }
}

MembershipDistributions read_distributions(std::istream& in) {
  LineScanner scan(in);
  require_header(scan, "statistic,value,count");

  MembershipDistributions dist;
  std::string line;
  while (scan.next(line)) {
    std::vector<std::string> f = require_fields(line, 3, scan.line_number());
    std::size_t value = parse_uint(f[1], scan.line_number());
    std::size_t count = parse_uint(f[2], scan.line_number());
    std::map<std::size_t, std::size_t>* histogram = nullptr;
    if (f[0] == "community_size") {
      histogram = &dist.community_size_histogram;
    } else if (f[0] == "memberships_per_node") {
      histogram = &dist.memberships_per_node_histogram;
    } else {
      throw ParseError("unknown statistic \"" + f[0] + "\"", scan.line_number());
    }
    if (!histogram->emplace(value, count).second) {
      throw ParseError("duplicate histogram value", scan.line_number());
    }
  }
  return dist;
}

// --- role similarity matrix -------------------------------------------------

void write_role_matrix(const RoleSimilarityMatrix& matrix, std::ostream& out) {
  out << "role";
  for (const std::string& role : matrix.roles) out << ',' << role;
  out << '\n';
  for (std::size_t i = 0; i < matrix.roles.size(); ++i) {
    out << matrix.roles[i];
    for (std::size_t j = 0; j < matrix.roles.size(); ++j) {
      out << ',';
      if (matrix.values[i][j]) out << format_double(*matrix.values[i][j]);
    }
    out << '\n';
  }
}

RoleSimilarityMatrix read_role_matrix(std::istream& in) {
  LineScanner scan(in);
  std::string line;
  if (!scan.next(line)) throw ParseError("missing role matrix header");
  std::vector<std::string> header = split_fields(line);
  if (header.empty() || header[0] != "role") {
    throw ParseError("role matrix header must start with \"role\"", scan.line_number());
  }

  RoleSimilarityMatrix matrix;
  matrix.roles.assign(header.begin() + 1, header.end());
  const std::size_t r = matrix.roles.size();
  while (scan.next(line)) {
    std::vector<std::string> f = require_fields(line, r + 1, scan.line_number());
    std::size_t i = matrix.values.size();
    if (i >= r || f[0] != matrix.roles[i]) {
      throw ParseError("role matrix rows must mirror the header labels", scan.line_number());
    }
    std::vector<std::optional<double>> row(r);
    for (std::size_t j = 0; j < r; ++j) {
      if (f[j + 1].empty()) continue;
      double v = parse_double(f[j + 1], scan.line_number());
      if (v < 0.0 || v > 1.0) {
        throw ParseError("similarity outside [0, 1]", scan.line_number());
      }
      row[j] = v;
    }
    matrix.values.push_back(std::move(row));
  }
  if (matrix.values.size() != r) throw ParseError("role matrix row count mismatch");
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (matrix.values[i][j] != matrix.values[j][i]) {
        throw ParseError("role matrix must be symmetric");
      }
    }
  }
  return matrix;
}

// --- entropy tables -----------------------------------------------------------

void write_node_entropy(const MembershipMap& vectors, const Hypergraph& graph,
                        std::ostream& out) {
  out << "node,entropy\n";
  for (const auto& [node, mv] : vectors) {
    out << graph.label(node) << ',' << format_double(node_entropy(mv)) << '\n';
  }
}

std::vector<std::pair<std::string, double>> read_node_entropy(std::istream& in) {
  LineScanner scan(in);
  require_header(scan, "node,entropy");
  std::vector<std::pair<std::string, double>> rows;
  std::string line;
  while (scan.next(line)) {
    std::vector<std::string> f = require_fields(line, 2, scan.line_number());
    rows.emplace_back(f[0], parse_double(f[1], scan.line_number()));
  }
  return rows;
}

void write_role_entropy(const std::map<std::string, double>& means, std::ostream& out) {
  out << "role,mean_entropy\n";
  for (const auto& [role, mean] : means) {
    out << role << ',' << format_double(mean) << '\n';
  }
}

std::map<std::string, double> read_role_entropy(std::istream& in) {
  LineScanner scan(in);
  require_header(scan, "role,mean_entropy");
  std::map<std::string, double> means;
  std::string line;
  while (scan.next(line)) {
    std::vector<std::string> f = require_fields(line, 2, scan.line_number());
    if (!means.emplace(f[0], parse_double(f[1], scan.line_number())).second) {
      throw ParseError("duplicate role \"" + f[0] + "\"", scan.line_number());
    }
  }
  return means;
}

// --- cartography ----------------------------------------------------------------

void write_cartography(const Cartography& carto, const Hypergraph& graph, std::ostream& out) {
  out << "# degree_p33=" << format_double(carto.degree_breaks.p33)
      << " degree_p66=" << format_double(carto.degree_breaks.p66)
      << " participation_p33=" << format_double(carto.participation_breaks.p33)
      << " participation_p66=" << format_double(carto.participation_breaks.p66) << '\n';
  out << "node,role_label,hyperdegree,participation,degree_class,participation_class\n";
  for (const CartographyPoint& p : carto.points) {
    const std::string* role = graph.role_of(p.node);
    out << graph.label(p.node) << ',' << (role ? *role : "") << ',' << p.hyperdegree << ','
        << format_double(p.participation) << ',' << degree_class_name(p.degree_class) << ','
        << participation_class_name(p.participation_class) << '\n';
  }
}

CartographyFile read_cartography(std::istream& in) {
  LineScanner scan(in);
  require_header(scan, "node,role_label,hyperdegree,participation,degree_class,participation_class");

  CartographyFile file;
  std::vector<CartographyFileRow> rows;
  std::string line;
  auto check_class = [&](const std::string& value, std::initializer_list<std::string_view> ok) {
    for (std::string_view v : ok) {
      if (value == v) return;
    }
    throw ParseError("unknown class label \"" + value + "\"", scan.line_number());
  };
  while (scan.next(line)) {
    std::vector<std::string> f = require_fields(line, 6, scan.line_number());
    CartographyFileRow row;
    row.node = f[0];
    row.role = f[1];
    row.hyperdegree = parse_uint(f[2], scan.line_number());
    row.participation = parse_double(f[3], scan.line_number());
    check_class(f[4], {"peripheral", "non-hub", "hub"});
    check_class(f[5], {"specialist", "non-generalist", "generalist"});
    row.degree_class = f[4];
    row.participation_class = f[5];
    rows.push_back(std::move(row));
  }
  file.degree_breaks.p33 = parse_double(scan.require_meta("degree_p33"), 0);
  file.degree_breaks.p66 = parse_double(scan.require_meta("degree_p66"), 0);
  file.participation_breaks.p33 = parse_double(scan.require_meta("participation_p33"), 0);
  file.participation_breaks.p66 = parse_double(scan.require_meta("participation_p66"), 0);
  file.rows = std::move(rows);
  return file;
}

}  // namespace hlc
