// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mislab/closed_forms.hpp"
#include "mislab/complexity.hpp"
#include "mislab/duality.hpp"
#include "mislab/graph.hpp"
#include "mislab/oracles.hpp"
#include "test_util.hpp"

using namespace mislab;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  std::string name;
  double time_limit_seconds;
  // Returns an empty string on success, otherwise the first failure.
  std::function<std::string()> check;
};

std::string mismatch(const std::string& what, const std::string& got, const std::string& want) {
  return what + ": got " + got + ", expected " + want;
}

std::string figure_one() {
  std::ifstream in(MISLAB_TEST_DATA "/figure1_complexity.csv");
  if (!in) return "fixture missing";
  const auto start = Clock::now();
  const ComplexityTable table(1000);
  const double build = std::chrono::duration<double>(Clock::now() - start).count();
  if (build >= 1.0) return "table build took " + std::to_string(build) + " s";
  std::size_t m = 0;
  std::size_t c = 0;
  char comma = 0;
  std::size_t rows = 0;
  while (in >> m >> comma >> c) {
    ++rows;
    if (m != rows) return "fixture out of order at row " + std::to_string(rows);
    if (table[m] != c) {
      return mismatch("c(" + std::to_string(m) + ")", std::to_string(table[m]), std::to_string(c));
    }
  }
  if (rows != 1000) return "fixture has " + std::to_string(rows) + " rows";
  const std::pair<std::size_t, std::size_t> anchors[] = {{10, 7}, {107, 16}, {719, 23}, {1000, 21}};
  for (auto [am, ac] : anchors) {
    if (table[am] != ac) return mismatch("anchor c(" + std::to_string(am) + ")", std::to_string(table[am]), std::to_string(ac));
  }
  return {};
}

std::string moon_moser() {
  for (std::size_t n = 1; n <= 7; ++n) {
    if (oracle::g(n) != ell(n)) {
      return mismatch("g(" + std::to_string(n) + ")", to_string(oracle::g(n)), to_string(ell(n)));
    }
  }
  if (oracle::g(7) != 12) return "g(7) != 12";
  return {};
}

std::string extremal_uniqueness() {
  const auto seven = oracle::extremal_graphs_up_to_iso(7);
  if (seven.size() != 2) return mismatch("classes at n=7", std::to_string(seven.size()), "2");
  const auto six = oracle::extremal_graphs_up_to_iso(6);
  if (six.size() != 1) return mismatch("classes at n=6", std::to_string(six.size()), "1");
  const auto two_edges = oracle::canonical_code(extremal_graph(7, ExtremalVariant::TwoEdges));
  const auto k4 = oracle::canonical_code(extremal_graph(7, ExtremalVariant::K4));
  const auto a = oracle::canonical_code(seven[0]);
  const auto b = oracle::canonical_code(seven[1]);
  if (!((a == two_edges && b == k4) || (a == k4 && b == two_edges))) {
    return "n=7 classes are not {triangle + two edges, triangle + K4}";
  }
  return {};
}

std::string inverse_relation() {
  for (std::size_t n = 1; n <= 200; ++n) {
    if (s_of(ell(n)) != n) return mismatch("s(ell(" + std::to_string(n) + "))", std::to_string(s_of(ell(n))), std::to_string(n));
  }
  for (std::size_t m = 1; m <= 12; ++m) {
    if (oracle::s(m) != s_of(m)) return mismatch("oracle s(" + std::to_string(m) + ")", std::to_string(oracle::s(m)), std::to_string(s_of(m)));
  }
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto direct = oracle::s(m, oracle::CoverSearch::Direct);
    if (direct != s_of(m)) return mismatch("direct s(" + std::to_string(m) + ")", std::to_string(direct), std::to_string(s_of(m)));
  }
  return {};
}

std::string construction_soundness() {
  const ComplexityTable table(300);
  for (std::size_t m = 1; m <= 300; ++m) {
    const Graph g = graph_from_expression(minimal_expression(m, table));
    if (g.order() != table[m]) return mismatch("order for m=" + std::to_string(m), std::to_string(g.order()), std::to_string(table[m]));
    if (count_mis(g) != m) return mismatch("MIS count for m=" + std::to_string(m), to_string(count_mis(g)), std::to_string(m));
    if (m <= 60 && enumerate_mis(g).size() != m) return "enumeration disagrees at m=" + std::to_string(m);
  }
  const Graph fig = graph_from_expression(parse_expression("(1+1)((1+1)(1+1)+1)"));
  if (fig.order() != 7 || count_mis(fig) != 10) return "worked example is not 7 vertices / 10 MISes";
  return {};
}

std::string check_round_trip(const Graph& g) {
  const SeparatingCover c = cover_from_graph(g);
  if (!validate_cover(c).valid()) return "cover does not validate";
  if (c.set_count() > g.order()) return "cover has more sets than vertices";
  if (count_mis(graph_from_cover(c)) < count_mis(g)) return "round trip lost MISes";
  return {};
}

std::string duality_round_trip() {
  std::size_t exhaustive = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Edge> pairs;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if ((mask >> k) & 1U) edges.push_back(pairs[k]);
      }
      const Graph g(n, edges);
      bool isolated = false;
      for (std::size_t v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
      if (isolated) continue;
      ++exhaustive;
      if (auto why = check_round_trip(g); !why.empty()) return why + " (exhaustive, n=" + std::to_string(n) + ")";
    }
  }
  // Labelled graphs without isolated vertices on 2..5 vertices: 1 + 4 + 41 + 768.
  if (exhaustive != 814) return mismatch("exhaustive population", std::to_string(exhaustive), "814");
  std::mt19937_64 rng(6'000'008);
  std::size_t sampled = 0;
  while (sampled < 10'000) {
    const std::size_t n = 6 + rng() % 3;
    const Graph g = testing::random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0, rng);
    bool isolated = false;
    for (std::size_t v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
    if (isolated) continue;
    ++sampled;
    if (auto why = check_round_trip(g); !why.empty()) return why + " (random, n=" + std::to_string(n) + ")";
  }
  std::printf("      %zu exhaustive + %zu random graphs\n", exhaustive, sampled);
  return {};
}

std::string perrin_cycles() {
  if (count_mis(cycle_graph(4)) != 2 || count_mis(cycle_graph(5)) != 5) return "m(C_4) or m(C_5) wrong";
  for (std::size_t j = 3; j <= 25; ++j) {
    if (count_mis(cycle_graph(j)) != perrin(j)) return mismatch("m(C_" + std::to_string(j) + ")", to_string(count_mis(cycle_graph(j))), to_string(perrin(j)));
  }
  return {};
}

std::string selfridge() {
  const std::size_t limit = static_cast<std::size_t>(ell(25)) + 1;
  const ComplexityTable table(limit);
  std::vector<std::size_t> largest(26, 0);
  for (std::size_t m = 1; m <= limit; ++m) {
    if (table[m] <= 25) largest[table[m]] = m;
  }
  for (std::size_t n = 1; n <= 25; ++n) {
    if (largest[n] != ell(n)) return mismatch("largest of complexity " + std::to_string(n), std::to_string(largest[n]), to_string(ell(n)));
  }
  for (std::size_t n = 1; n <= 40; ++n) {
    if (max_with_ones(n) != ell(n)) return mismatch("max_with_ones(" + std::to_string(n) + ")", to_string(max_with_ones(n)), to_string(ell(n)));
  }
  return {};
}

std::string property_suites() {
  std::mt19937_64 rng(10'000);
  std::size_t violations = 0;
  for (int trial = 0; trial < 10'000; ++trial) {
    const Graph g = testing::random_graph(1 + rng() % 10, static_cast<double>(rng() % 1000) / 1000.0, rng);
    const Graph h = testing::random_graph(1 + rng() % 10, static_cast<double>(rng() % 1000) / 1000.0, rng);
    const BigNat mg = count_mis(g);
    const BigNat mh = count_mis(h);
    if (count_mis(disjoint_union(g, h)) != mg * mh) ++violations;
    if (count_mis(join(g, h)) != mg + mh) ++violations;
    for (std::size_t v = 0; v < g.order(); ++v) {
      VertexSet just_v;
      just_v.insert(v);
      if (mg > count_mis(remove_vertices(g, just_v)) + count_mis(remove_vertices(g, closed_neighborhood(g, v)))) {
        ++violations;
      }
    }
  }
  for (std::size_t n = 1; n < 200; ++n) violations += ell(n) < ell(n + 1) ? 0 : 1;
  for (std::size_t a = 1; a < 120; ++a) {
    for (std::size_t b = 1; a + b <= 120; ++b) violations += ell(a) * ell(b) <= ell(a + b) ? 0 : 1;
  }
  return violations == 0 ? std::string{} : std::to_string(violations) + " violations";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"figure-1 reproduction (c(m), m <= 1000)", 5.0, figure_one},
      {"moon-moser g(n) = ell(n), n <= 7", 600.0, moon_moser},
      {"extremal uniqueness (n = 6: 1 class, n = 7: 2)", 600.0, extremal_uniqueness},
      {"inverse relation s(ell(n)) = n and oracle s", 600.0, inverse_relation},
      {"construction soundness m <= 300", 30.0, construction_soundness},
      {"duality round trip", 300.0, duality_round_trip},
      {"perrin = m(C_j), j = 3..25", 60.0, perrin_cycles},
      {"selfridge: largest of complexity n is ell(n)", 60.0, selfridge},
      {"property suites (product, join, branching, ell)", 600.0, property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    std::string why;
    try {
      why = c.check();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (why.empty() && seconds > c.time_limit_seconds) {
      why = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.time_limit_seconds) + " s";
    }
    std::printf("%s  %-52s %8.2f s%s%s\n", why.empty() ? "PASS" : "FAIL", c.name.c_str(), seconds,
                why.empty() ? "" : "  ", why.c_str());
    std::fflush(stdout);
    failures += why.empty() ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
