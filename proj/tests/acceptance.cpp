// Acceptance suite: one PASS/FAIL line per criterion.
//
// usage: acceptance <path to csg executable> <data directory>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "common.hpp"
#include "csg/check.hpp"
#include "csg/decomposition.hpp"
#include "csg/gaps.hpp"
#include "csg/invariants.hpp"
#include "oracle.hpp"

using csg::AffineSemigroup;
using csg::GapSemigroup;
using csg::IntVec;
using fixtures::kRunning;

namespace {

std::string g_cli;
std::string g_data;

// Collects failed expectations of one criterion.
struct Probe {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string join(const std::vector<IntVec>& vs) {
  std::string out;
  for (const auto& v : vs) out += v.to_string();
  return out;
}

bool subset(const std::vector<IntVec>& small, const std::vector<IntVec>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string capture(const std::string& command) {
  std::array<char, 4096> buffer{};
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + command);
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  const int status = pclose(pipe);
  out += "\n[exit " + std::to_string(status) + "]";
  return out;
}

void criterion_check(Probe& p) {
  p.expect(csg::check_c_semigroup(AffineSemigroup(kRunning)).is_c_semigroup, "running example rejected");
  auto gens = kRunning;
  gens.erase(std::find(gens.begin(), gens.end(), IntVec{1, 1, 0}));
  const auto r = csg::check_c_semigroup(AffineSemigroup(gens));
  p.expect(!r.is_c_semigroup, "variant without (1,1,0) accepted");
  p.expect(r.failure == csg::CheckFailure::gamma_uncovered, "variant fails for another reason: " + r.message());
  p.expect(r.ray_vector == IntVec{0, 1, 0} && r.missing == IntVec{0, 1}, "unexpected diagnostic: " + r.message());
  const std::string cli = capture(g_cli + " check " + g_data + "/running_example.json");
  p.expect(cli == "true\n\n[exit 0]", "csg check printed " + cli);
}

void criterion_cone(Probe& p) {
  const csg::Cone c = csg::Cone::from_generators(kRunning);
  std::vector<IntVec> normals;
  for (const auto& h : c.facets()) normals.push_back(h.normal);
  p.expect(csg::canonical_set(normals) == csg::canonical_set({{0, 2, -1}, {1, 0, -1}, {0, 0, 1}}),
           "facets " + join(normals));
  p.expect(csg::canonical_set(c.ray_vectors()) == csg::canonical_set({{1, 0, 0}, {2, 1, 2}, {0, 1, 0}}),
           "rays " + join(c.ray_vectors()));
}

void criterion_gamma(Probe& p) {
  const csg::Cone c = csg::Cone::from_generators(kRunning);
  const auto gammas = csg::gamma_sets(c);
  auto gamma = [&](const IntVec& a) { return gammas[fixtures::ray_index(c, a)].gamma; };
  p.expect(gamma({1, 0, 0}) == csg::canonical_set({{0, 2}, {1, 1}, {2, 0}}), "Gamma of (1,0,0)");
  p.expect(gamma({2, 1, 2}) == csg::canonical_set({{0, 1}, {1, 0}}), "Gamma of (2,1,2)");
  p.expect(gamma({0, 1, 0}) == csg::canonical_set({{0, 1}, {1, 0}}), "Gamma of (0,1,0)");
  const auto a = csg::unit_zonotope(c);
  p.expect(a == csg::canonical_set({{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {2, 1, 1}, {2, 1, 2},
                                    {2, 2, 2}, {3, 1, 2}, {3, 2, 2}}),
           "A = " + join(a));
  const auto d = csg::ray_generator_zonotope(AffineSemigroup(kRunning));
  p.expect(d == csg::canonical_set({{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {2, 0, 0},
                                    {2, 1, 0}, {2, 1, 1}, {2, 1, 2}, {2, 2, 2}, {3, 1, 1}, {3, 1, 2},
                                    {3, 2, 2}, {3, 2, 3}, {4, 1, 2}, {4, 2, 2}, {4, 2, 3}, {4, 2, 4},
                                    {4, 3, 4}, {5, 2, 3}, {5, 2, 4}, {5, 3, 4}, {6, 2, 4}, {6, 3, 4}}),
           "D = " + join(d));
}

void criterion_gaps(Probe& p) {
  const auto start = std::chrono::steady_clock::now();
  const AffineSemigroup s(kRunning);
  const auto g = csg::gap_computation(s);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  p.expect(g.gaps == csg::canonical_set(fixtures::kRunningGaps), "gaps " + join(g.gaps));
  auto anchor = [&](const IntVec& a) { return g.anchors[fixtures::ray_index(s.cone(), a)]; };
  p.expect(anchor({1, 0, 0}).bound == 13 && anchor({2, 1, 2}).bound == 24 && anchor({0, 1, 0}).bound == 12,
           "n values");
  p.expect(anchor({1, 0, 0}).anchor == IntVec{14, 0, 0} && anchor({2, 1, 2}).anchor == IntVec{10, 5, 10} &&
               anchor({0, 1, 0}).anchor == IntVec{0, 13, 0},
           "x values");
  p.expect(seconds < 5.0, "took " + std::to_string(seconds) + " s");
}

void criterion_special(Probe& p) {
  const AffineSemigroup s(kRunning);
  const auto gaps = csg::compute_gaps(s);
  const auto expected = csg::canonical_set({{2, 2, 1}, {2, 3, 2}, {4, 1, 2}, {8, 4, 7}});
  p.expect(csg::pseudo_frobenius(s, gaps) == expected, "PF " + join(csg::pseudo_frobenius(s, gaps)));
  p.expect(csg::special_gaps(s, gaps) == expected, "SG " + join(csg::special_gaps(s, gaps)));
}

void criterion_bound(Probe& p) {
  const auto running = csg::embedding_bound(AffineSemigroup(kRunning));
  p.expect(running.bound == 9 && running.embedding_dimension == 11,
           "running example: bound " + std::to_string(running.bound));
  const auto eleven = csg::embedding_bound(AffineSemigroup(fixtures::kTightEleven));
  p.expect(eleven.bound == 11 && eleven.embedding_dimension == 11, "first tight example: bound " + std::to_string(eleven.bound));
  const auto thirteen = csg::embedding_bound(AffineSemigroup(fixtures::kTightThirteen));
  p.expect(thirteen.bound == 13 && thirteen.embedding_dimension == 13,
           "second tight example: bound " + std::to_string(thirteen.bound));
}

void criterion_decomposition(Probe& p) {
  const auto start = std::chrono::steady_clock::now();
  const auto parts = csg::decompose(kRunning);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const csg::Cone cone = csg::Cone::from_generators(kRunning);
  const auto all = csg::canonical_set(fixtures::kRunningGaps);
  std::vector<IntVec> covered;
  for (const auto& c : parts) {
    p.expect(csg::is_irreducible(GapSemigroup(cone, c.gaps)), "reducible component " + join(c.generators));
    p.expect(subset(c.gaps, all), "component gaps outside H(S)");
    covered.insert(covered.end(), c.gaps.begin(), c.gaps.end());
  }
  p.expect(csg::canonical_set(covered) == all, "union of component gaps differs from H(S)");
  // Pinned regression. Of the six listed components, the second and fourth
  // contain the first, so the search keeps the other four.
  std::set<std::vector<IntVec>> expected;
  for (std::size_t k : {0, 2, 4, 5}) expected.insert(csg::canonical_set(fixtures::kSixComponents[k]));
  std::set<std::vector<IntVec>> found;
  for (const auto& c : parts) found.insert(c.generators);
  p.expect(found == expected, "components differ from the pinned set");
  p.expect(seconds < 60.0, "took " + std::to_string(seconds) + " s");
}

void criterion_oracle(Probe& p) {
  std::mt19937_64 rng(2024);
  int passing = 0;
  int attempts = 0;
  while (passing < 50 && attempts < 5000) {
    ++attempts;
    const auto gens = oracle::random_2d(rng);
    const auto ints = oracle::to_int_vecs(gens);
    const bool general = csg::is_c_semigroup(ints).is_c_semigroup;
    p.expect(general == oracle::simplified_check_2d(oracle::minimal_generators(gens)),
             "planar criterion disagrees on " + join(ints));
    if (!general) continue;
    ++passing;
    const auto expected = oracle::gaps2(gens);
    const auto gaps = csg::compute_gaps(ints);
    p.expect(expected && oracle::to_set(gaps) == *expected, "gap mismatch on " + join(ints));
  }
  p.expect(passing == 50, "only " + std::to_string(passing) + " passing sets generated");
}

void criterion_corollary(Probe& p) {
  std::mt19937_64 rng(77);
  int accepted = 0;
  for (int k = 0; k < 20; ++k) {
    const auto gens = oracle::random_n2(rng);
    const auto ints = oracle::to_int_vecs(gens);
    const bool general = csg::is_c_semigroup(ints).is_c_semigroup;
    accepted += general ? 1 : 0;
    p.expect(general == oracle::n2_corollary(oracle::minimal_generators(gens)), "disagreement on " + join(ints));
  }
  p.expect(accepted > 0 && accepted < 20, "fixtures all share one verdict");
}

void criterion_round_trip(Probe& p) {
  std::vector<std::vector<IntVec>> fixtures_list{kRunning, fixtures::kTightEleven, fixtures::kTightThirteen};
  for (const auto& c : fixtures::kSixComponents) fixtures_list.push_back(c);
  for (const auto& c : csg::decompose(kRunning)) fixtures_list.push_back(c.generators);
  for (const auto& gens : fixtures_list) {
    const AffineSemigroup s(gens);
    const auto gaps = csg::compute_gaps(s);
    const GapSemigroup g(s.cone(), gaps);
    const auto rebuilt = csg::generators_from_gaps(g);
    p.expect(rebuilt == s.generators(), "generators not recovered for " + join(s.generators()));
    p.expect(csg::compute_gaps(rebuilt) == gaps, "gaps not recovered for " + join(s.generators()));
  }
}

void criterion_determinism(Probe& p) {
  const std::vector<std::pair<std::string, std::string>> runs{
      {"check", "running_example.json"}, {"gaps", "running_example.json"},     {"pf", "running_example.json"},
      {"sg", "running_example.json"},    {"bound", "running_example.json"},    {"decompose", "running_example.json"},
      {"rays", "running_example.json"},  {"construct-family", "tight_eleven.json"}};
  for (const auto& [command, file] : runs) {
    for (const std::string format : {"text", "json"}) {
      const std::string base = g_cli + " " + command + " --format " + format;
      const std::string path = " " + g_data + "/" + file;
      const std::string first = capture(base + path);
      p.expect(first.size() > 10 && first.ends_with("[exit 0]"), command + " failed: " + first);
      for (int k = 0; k < 2; ++k) p.expect(capture(base + path) == first, command + " " + format + " differs across runs");
      p.expect(capture(base + " --parallel 1" + path) == first, command + " " + format + " differs at --parallel 1");
      p.expect(capture(base + " --parallel 8" + path) == first, command + " " + format + " differs at --parallel 8");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <csg executable> <data directory>\n";
    return 2;
  }
  g_cli = argv[1];
  g_data = argv[2];

  const std::vector<std::pair<std::string, std::function<void(Probe&)>>> criteria{
      {"C-semigroup check on the running example and its Gamma-uncovered variant", criterion_check},
      {"facets and extremal rays of the running example", criterion_cone},
      {"Gamma sets, set A and set D", criterion_gamma},
      {"gap set with intermediate bounds and anchors", criterion_gaps},
      {"pseudo-Frobenius elements and special gaps", criterion_special},
      {"embedding-dimension bound on three examples", criterion_bound},
      {"decomposition into irreducible C-semigroups", criterion_decomposition},
      {"gaps and planar criterion against brute force on 50 random planar sets", criterion_oracle},
      {"N^2 criterion on 20 random fixtures", criterion_corollary},
      {"generator/gap round trips", criterion_round_trip},
      {"byte-identical CLI output across runs and worker counts", criterion_determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Probe probe;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(probe);
    } catch (const std::exception& e) {
      probe.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const bool ok = probe.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << ms << " ms)\n";
    for (const auto& f : probe.failures) std::cout << "        " << f << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
