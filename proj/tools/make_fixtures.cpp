// Deterministic builder for the bundled datasets under data/. Every fixture
// is synthesized from a fixed seed and checked against its expected size
// profile before anything is written, so regeneration is reproducible.
//
// Usage: make-fixtures [output-dir]   (default: data)

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

using Members = std::vector<std::string>;

std::string two_digits(std::size_t n) {
  std::string s = std::to_string(n);
  return s.size() < 2 ? "0" + s : s;
}

std::string padded(std::size_t n, std::size_t width) {
  std::string s = std::to_string(n);
  while (s.size() < width) s.insert(s.begin(), '0');
  return s;
}

class Builder {
 public:
  // Canonicalizes and rejects duplicates; returns whether the edge is new.
  bool add(Members members) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) return false;
    if (!seen_.insert(members).second) return false;
    edges_.push_back(std::move(members));
    return true;
  }

  std::size_t count_of_size(std::size_t s) const {
    std::size_t n = 0;
    for (const Members& e : edges_) {
      if (e.size() == s) ++n;
    }
    return n;
  }

  std::set<std::string> nodes() const {
    std::set<std::string> all;
    for (const Members& e : edges_) all.insert(e.begin(), e.end());
    return all;
  }

  void check(std::size_t node_count, const std::map<std::size_t, std::size_t>& profile,
             const std::string& name) const {
    std::map<std::size_t, std::size_t> actual;
    for (const Members& e : edges_) ++actual[e.size()];
    if (actual != profile) {
      std::string msg = name + ": size profile mismatch:";
      for (const auto& [s, c] : actual) msg += " " + std::to_string(s) + ":" + std::to_string(c);
      throw std::runtime_error(msg);
    }
    if (nodes().size() != node_count) {
      throw std::runtime_error(name + ": expected " + std::to_string(node_count) +
                               " nodes, produced " + std::to_string(nodes().size()));
    }
  }

  void write(const fs::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const Members& e : edges_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i > 0) out << ',';
        out << e[i];
      }
      out << '\n';
    }
  }

  const std::vector<Members>& edges() const { return edges_; }

 private:
  std::set<Members> seen_;
  std::vector<Members> edges_;
};

template <typename T>
std::vector<T> sample_distinct(std::vector<T> pool, std::size_t k, std::mt19937& rng) {
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  return pool;
}

std::size_t pick_index(std::size_t n, std::mt19937& rng) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Fills with distinct pairs from a shuffled enumeration until `builder` holds
// `target` edges of size 2 — the guaranteed-termination tail of dyad filling.
void fill_dyads_from_all_pairs(Builder& b, const std::vector<std::string>& nodes,
                               std::size_t target, std::mt19937& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) pairs.emplace_back(i, j);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (const auto& [i, j] : pairs) {
    if (b.count_of_size(2) >= target) return;
    b.add({nodes[i], nodes[j]});
  }
}

// --- Baboons: every pair plus sampled triads/quads --------------------------

void make_baboons(const fs::path& dir) {
  std::mt19937 rng(7001);
  std::vector<std::string> baboons;
  for (std::size_t i = 1; i <= 13; ++i) baboons.push_back("b" + two_digits(i));

  Builder b;
  for (std::size_t i = 0; i < baboons.size(); ++i) {
    for (std::size_t j = i + 1; j < baboons.size(); ++j) b.add({baboons[i], baboons[j]});
  }
  while (b.count_of_size(3) < 142) b.add(sample_distinct(baboons, 3, rng));
  while (b.count_of_size(4) < 11) b.add(sample_distinct(baboons, 4, rng));

  b.check(13, {{2, 78}, {3, 142}, {4, 11}}, "baboons");
  b.write(dir / "baboons.csv");
}

// --- Hospital: wards, a nurse pool, and admins -------------------------------
//
// Ward interactions carry at most one nurse, so ward communities and the
// nurse-only pool stay separate until the generic dyad-overlap level; nurses
// span two wards plus the pool while patients stay inside their ward.

struct HospitalStaff {
  std::vector<std::string> admins, doctors, nurses, patients;
  std::vector<std::vector<std::string>> ward_patients{5}, ward_doctors{5};
  std::vector<std::vector<std::string>> ward_nurses{5};  // primary + secondary
};

HospitalStaff hospital_staff() {
  HospitalStaff h;
  for (std::size_t i = 1; i <= 8; ++i) h.admins.push_back("ADM" + two_digits(i));
  for (std::size_t i = 1; i <= 11; ++i) h.doctors.push_back("MED" + two_digits(i));
  for (std::size_t i = 1; i <= 27; ++i) h.nurses.push_back("NUR" + two_digits(i));
  for (std::size_t i = 1; i <= 29; ++i) h.patients.push_back("PAT" + two_digits(i));
  for (std::size_t i = 0; i < h.patients.size(); ++i) {
    h.ward_patients[i % 5].push_back(h.patients[i]);
  }
  for (std::size_t i = 0; i < h.doctors.size(); ++i) {
    h.ward_doctors[i % 5].push_back(h.doctors[i]);
  }
  for (std::size_t i = 0; i < h.nurses.size(); ++i) {
    h.ward_nurses[i % 5].push_back(h.nurses[i]);
    h.ward_nurses[(i + 1) % 5].push_back(h.nurses[i]);
  }
  return h;
}

void make_hospital(const fs::path& dir) {
  std::mt19937 rng(7002);
  HospitalStaff h = hospital_staff();

  auto ward_floor = [&](std::size_t w) {  // patients + doctors of a ward
    std::vector<std::string> floor = h.ward_patients[w];
    floor.insert(floor.end(), h.ward_doctors[w].begin(), h.ward_doctors[w].end());
    return floor;
  };

  Builder b;
  std::vector<Members> ward_triads, pool_triads, admin_triads;
  auto add_triad = [&](std::vector<Members>& bucket, Members m) {
    if (b.add(m)) {
      std::sort(m.begin(), m.end());
      bucket.push_back(std::move(m));
      return true;
    }
    return false;
  };

  // Coverage first: every patient/doctor in a ward triad, every nurse in a
  // pool triad, every admin in an admin triad.
  for (std::size_t w = 0; w < 5; ++w) {
    std::vector<std::string> floor = ward_floor(w);
    for (std::size_t i = 0; i < floor.size(); i += 2) {
      const std::string& nurse = h.ward_nurses[w][i % h.ward_nurses[w].size()];
      add_triad(ward_triads, {floor[i], floor[(i + 1) % floor.size()], nurse});
    }
  }
  for (std::size_t i = 0; i + 2 < h.nurses.size() + 2; i += 3) {
    add_triad(pool_triads, {h.nurses[i % 27], h.nurses[(i + 1) % 27], h.nurses[(i + 2) % 27]});
  }
  for (std::size_t i = 0; i < 8; i += 3) {
    add_triad(admin_triads,
              {h.admins[i % 8], h.admins[(i + 1) % 8], h.admins[(i + 2) % 8]});
  }

  // Quota fill. Ward triads: one nurse at most, rest from the ward floor.
  while (ward_triads.size() < 570) {
    std::size_t w = pick_index(5, rng);
    std::vector<std::string> floor = ward_floor(w);
    Members m;
    if (pick_index(10, rng) < 7) {
      m = sample_distinct(floor, 2, rng);
      m.push_back(h.ward_nurses[w][pick_index(h.ward_nurses[w].size(), rng)]);
    } else {
      m = sample_distinct(floor, 3, rng);
    }
    add_triad(ward_triads, std::move(m));
  }
  while (pool_triads.size() < 70) {
    add_triad(pool_triads, sample_distinct(h.nurses, 3, rng));
  }
  while (admin_triads.size() < 17) {
    add_triad(admin_triads, sample_distinct(h.admins, 3, rng));
  }

  // Quads/quints respect the one-nurse rule as well.
  while (b.count_of_size(4) < 50) {
    std::size_t w = pick_index(5, rng);
    Members m = sample_distinct(ward_floor(w), 3, rng);
    m.push_back(h.ward_nurses[w][pick_index(h.ward_nurses[w].size(), rng)]);
    b.add(std::move(m));
  }
  while (b.count_of_size(4) < 56) b.add(sample_distinct(h.nurses, 4, rng));
  while (b.count_of_size(4) < 58) b.add(sample_distinct(h.admins, 4, rng));
  for (std::size_t w : {0u, 2u}) {
    Members m = sample_distinct(h.ward_patients[w], 3, rng);
    m.push_back(h.ward_doctors[w][0]);
    m.push_back(h.ward_nurses[w][pick_index(h.ward_nurses[w].size(), rng)]);
    if (!b.add(std::move(m))) throw std::runtime_error("hospital: quint collision");
  }

  // Dyads. Most are 2-subsets of existing triads, so they sit strictly inside
  // an interaction and attach to its community early.
  auto covered_dyad = [&](const std::vector<Members>& triads) {
    const Members& t = triads[pick_index(triads.size(), rng)];
    std::size_t skip = pick_index(3, rng);
    Members m;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != skip) m.push_back(t[i]);
    }
    return m;
  };
  auto fill = [&](std::size_t target, auto&& make) {
    std::size_t attempts = 0;
    while (b.count_of_size(2) < target && attempts < 20000) {
      if (!b.add(make())) ++attempts;
    }
  };
  fill(700, [&] { return covered_dyad(ward_triads); });
  fill(870, [&] { return covered_dyad(pool_triads); });
  fill(890, [&] { return covered_dyad(admin_triads); });
  fill(1010, [&] { return sample_distinct(h.nurses, 2, rng); });
  fill(1050, [&] {
    return Members{h.admins[pick_index(8, rng)], h.nurses[pick_index(27, rng)]};
  });
  fill(1080, [&] { return sample_distinct(h.doctors, 2, rng); });
  std::vector<std::string> everyone;
  everyone.insert(everyone.end(), h.admins.begin(), h.admins.end());
  everyone.insert(everyone.end(), h.doctors.begin(), h.doctors.end());
  everyone.insert(everyone.end(), h.nurses.begin(), h.nurses.end());
  everyone.insert(everyone.end(), h.patients.begin(), h.patients.end());
  fill_dyads_from_all_pairs(b, everyone, 1108, rng);

  b.check(75, {{2, 1108}, {3, 657}, {4, 58}, {5, 2}}, "hospital");
  b.write(dir / "hospital.csv");

  std::ofstream roles(dir / "hospital_roles.csv", std::ios::binary);
  if (!roles) throw std::runtime_error("cannot write hospital_roles.csv");
  for (const std::string& n : h.admins) roles << n << ",ADM\n";
  for (const std::string& n : h.doctors) roles << n << ",MED\n";
  for (const std::string& n : h.nurses) roles << n << ",NUR\n";
  for (const std::string& n : h.patients) roles << n << ",PAT\n";
}

// --- NDC classes analog: topic pools, singletons, long size tail ------------

void make_ndc(const fs::path& dir) {
  std::mt19937 rng(7003);
  const std::size_t node_count = 1161;
  std::vector<std::string> nodes;
  for (std::size_t i = 1; i <= node_count; ++i) nodes.push_back("d" + padded(i, 4));

  // Topics partition the nodes; sizes cycle 9..28 and absorb the remainder.
  std::vector<std::vector<std::string>> topics;
  std::vector<std::string> shuffled = nodes;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::size_t at = 0;
  for (std::size_t t = 0; at < shuffled.size(); ++t) {
    std::size_t want = 9 + (t * 7) % 20;
    want = std::min(want, shuffled.size() - at);
    if (shuffled.size() - at - want < 9) want = shuffled.size() - at;
    topics.emplace_back(shuffled.begin() + at, shuffled.begin() + at + want);
    at += want;
  }

  const std::map<std::size_t, std::size_t> profile = {
      {1, 130}, {2, 297}, {3, 121}, {4, 125}, {5, 94},  {6, 66}, {7, 52}, {8, 41}, {9, 33},
      {10, 26}, {11, 21}, {12, 17}, {13, 13}, {14, 11}, {15, 9}, {16, 7}, {17, 6}, {18, 4},
      {19, 4},  {20, 3},  {21, 2},  {22, 2},  {23, 2},  {24, 1}, {25, 1}};

  Builder b;
  // Coverage: walk each topic in chunks of its own size class so every node
  // shows up at least once; remaining quotas are sampled afterwards.
  std::map<std::size_t, std::size_t> left = profile;
  for (std::size_t t = 0; t < topics.size(); ++t) {
    const std::vector<std::string>& pool = topics[t];
    std::size_t covered = 0;
    while (covered < pool.size()) {
      std::size_t want = 0;  // largest remaining size that fits
      for (auto it = left.rbegin(); it != left.rend(); ++it) {
        if (it->second > 0 && it->first >= 2 && it->first <= pool.size() - covered) {
          want = it->first;
          break;
        }
      }
      if (want == 0) {
        if (left[1] > 0 && pool.size() - covered >= 1) {
          want = 1;
        } else {
          break;  // cover the stragglers through sampled edges below
        }
      }
      Members m(pool.begin() + covered, pool.begin() + covered + want);
      if (b.add(std::move(m))) --left[want];
      covered += want;
    }
  }

  auto sample_edge = [&](std::size_t size) {
    const std::vector<std::string>& pool = topics[pick_index(topics.size(), rng)];
    Members m;
    if (size <= pool.size()) {
      m = sample_distinct(pool, size, rng);
      // occasional cross-topic member keeps topics loosely connected
      if (size >= 3 && pick_index(10, rng) == 0) {
        m[0] = nodes[pick_index(node_count, rng)];
      }
    } else {
      std::vector<std::string> wide = pool;
      const std::vector<std::string>& other = topics[pick_index(topics.size(), rng)];
      wide.insert(wide.end(), other.begin(), other.end());
      std::sort(wide.begin(), wide.end());
      wide.erase(std::unique(wide.begin(), wide.end()), wide.end());
      if (wide.size() < size) return false;
      m = sample_distinct(wide, size, rng);
    }
    return b.add(std::move(m));
  };
  for (const auto& [size, total] : profile) {
    if (size == 1) continue;
    while (b.count_of_size(size) < total) sample_edge(size);
  }
  while (b.count_of_size(1) < profile.at(1)) {
    b.add({nodes[pick_index(node_count, rng)]});
  }

  b.check(node_count, profile, "ndc_classes");
  b.write(dir / "ndc_classes.csv");
}

// --- High school: sparse friendship circles ----------------------------------
//
// Interactions concentrate in small circles, each covered by two triads that
// do not share members; every circle dyad nests inside one of them, and the
// remaining dyads reach across circles. Low hyperdegree keeps a node's
// co-appearance neighborhood close to its own triad, which is what lets
// neighborhood-based and set-based overlap agree: nested pairs score near
// zero on both, cross ties score high on both.

void make_high_school(const fs::path& dir) {
  std::mt19937 rng(7004);
  std::vector<std::vector<std::string>> classes(9);
  std::vector<std::string> teachers, students;
  for (std::size_t c = 0; c < 9; ++c) {
    for (std::size_t i = 1; i <= 35; ++i) {
      classes[c].push_back("c" + std::to_string(c + 1) + "s" + two_digits(i));
      students.push_back(classes[c].back());
    }
  }
  for (std::size_t i = 1; i <= 12; ++i) teachers.push_back("t" + two_digits(i));

  // Circles per class: five of six students plus one of five; each circle is
  // covered by two triads with disjoint or near-disjoint membership.
  struct Circle {
    std::size_t cls;
    std::vector<std::string> members;
  };
  std::vector<Circle> circles;
  for (std::size_t c = 0; c < 9; ++c) {
    for (std::size_t k = 0; k < 5; ++k) {
      circles.push_back({c, {classes[c].begin() + 6 * k, classes[c].begin() + 6 * (k + 1)}});
    }
    circles.push_back({c, {classes[c].begin() + 30, classes[c].end()}});
  }

  Builder b;
  std::vector<Members> first_triads;  // one per circle, reused for quads
  for (const Circle& circle : circles) {
    const std::vector<std::string>& m = circle.members;
    Members head = {m[0], m[1], m[2]};
    b.add(head);
    first_triads.push_back(head);
    if (m.size() == 6) {
      b.add({m[3], m[4], m[5]});
    } else {
      b.add({m[2], m[3], m[4]});
    }
    b.add({m[0], m[1]});
    b.add({m[3], m[4]});
  }

  // Islands: triads drawn from three different classes, plus a nested dyad.
  while (b.count_of_size(3) < 150) {
    std::vector<std::size_t> cs = sample_distinct<std::size_t>({0, 1, 2, 3, 4, 5, 6, 7, 8}, 3, rng);
    Members m;
    for (std::size_t c : cs) m.push_back(classes[c][pick_index(35, rng)]);
    if (b.add(m)) b.add({m[0], m[1]});
  }

  // Teachers join a circle triad as a fourth participant, twice each.
  for (std::size_t i = 0; i < teachers.size(); ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      std::size_t cls = (i + 4 * k) % 9;
      std::size_t at = cls * 6 + (i * 2 + k * 3) % 6;
      Members m = first_triads[at];
      m.push_back(teachers[i]);
      if (!b.add(std::move(m))) throw std::runtime_error("high_school: teacher quad collision");
    }
  }
  // A few circles hold a quad of the head triad plus one more member.
  for (std::size_t at : {3u, 12u, 21u, 30u, 39u, 48u}) {
    Members m = first_triads[at];
    m.push_back(circles[at].members[3]);
    if (!b.add(std::move(m))) throw std::runtime_error("high_school: circle quad collision");
  }

  // Cross ties: same class across circles, a few across classes, teachers
  // among themselves.
  while (b.count_of_size(2) < 386) {
    std::size_t c = pick_index(9, rng);
    std::size_t i = pick_index(35, rng), j = pick_index(35, rng);
    if (i / 6 == j / 6) continue;  // different circles only
    b.add({classes[c][i], classes[c][j]});
  }
  while (b.count_of_size(2) < 416) {
    Members m = sample_distinct(students, 2, rng);
    b.add(std::move(m));
  }
  while (b.count_of_size(2) < 440) {
    b.add(sample_distinct(teachers, 2, rng));
  }

  // Two circles meet in full.
  for (std::size_t at : {5u, 29u}) {
    if (circles[at].members.size() != 5) throw std::runtime_error("high_school: quint slot");
    Members m = circles[at].members;
    if (!b.add(std::move(m))) throw std::runtime_error("high_school: quint collision");
  }

  b.check(327, {{2, 440}, {3, 150}, {4, 30}, {5, 2}}, "high_school");
  b.write(dir / "high_school.csv");
}

// --- Primary school scale fixture: dense proximity data ----------------------

void make_primary_school(const fs::path& dir) {
  std::mt19937 rng(7005);
  std::vector<std::vector<std::string>> classes(10);
  std::vector<std::string> teachers, everyone;
  for (std::size_t c = 0; c < 10; ++c) {
    for (std::size_t i = 1; i <= 23; ++i) {
      classes[c].push_back("g" + std::to_string(c + 1) + "s" + two_digits(i));
      everyone.push_back(classes[c].back());
    }
  }
  for (std::size_t i = 1; i <= 12; ++i) {
    teachers.push_back("t" + two_digits(i));
    everyone.push_back(teachers.back());
  }

  Builder b;
  // All within-class pairs, then teacher ties, then playground mixing.
  for (const std::vector<std::string>& cls : classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) b.add({cls[i], cls[j]});
    }
  }
  for (std::size_t i = 0; i < teachers.size(); ++i) {
    const std::vector<std::string>& cls = classes[i % 10];
    for (std::size_t k = 0; k < 12; ++k) b.add({teachers[i], cls[k]});
  }
  auto mixed_pair = [&] {
    std::size_t c1 = pick_index(10, rng), c2 = pick_index(10, rng);
    return Members{classes[c1][pick_index(23, rng)], classes[c2][pick_index(23, rng)]};
  };
  std::size_t attempts = 0;
  while (b.count_of_size(2) < 7700 && attempts < 200000) {
    if (!b.add(mixed_pair())) ++attempts;
  }
  fill_dyads_from_all_pairs(b, everyone, 7748, rng);

  auto class_with_teacher = [&](std::size_t k) {
    std::size_t c = pick_index(10, rng);
    Members m = sample_distinct(classes[c], k, rng);
    if (pick_index(6, rng) == 0) m[0] = teachers[pick_index(12, rng)];
    return m;
  };
  while (b.count_of_size(3) < 4300) b.add(class_with_teacher(3));
  while (b.count_of_size(3) < 4600) {  // lunchtime mixing across classes
    Members m = mixed_pair();
    m.push_back(classes[pick_index(10, rng)][pick_index(23, rng)]);
    b.add(std::move(m));
  }
  while (b.count_of_size(4) < 347) b.add(class_with_teacher(4));
  while (b.count_of_size(5) < 9) b.add(class_with_teacher(5));

  b.check(242, {{2, 7748}, {3, 4600}, {4, 347}, {5, 9}}, "primary_school");
  b.write(dir / "primary_school.csv");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    fs::path dir = argc > 1 ? argv[1] : "data";
    fs::create_directories(dir);
    make_baboons(dir);
    make_hospital(dir);
    make_ndc(dir);
    make_high_school(dir);
    make_primary_school(dir);
    std::cout << "fixtures written to " << dir.string() << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
