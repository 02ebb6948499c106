#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mislab/bignat.hpp"
#include "mislab/graph.hpp"

// Brute-force computations kept independent of the closed forms and of the
// graph-core counters, for cross-checking at desk scale.
namespace mislab::oracle {

/// Max product over all partitions of n, 1 <= n <= 45.
BigNat ell(std::size_t n);

/// Max MIS count over all labelled graphs on n vertices, 1 <= n <= 7
/// (n = 8 only with allow_eight; 2^28 graphs).
BigNat g(std::size_t n, bool allow_eight = false);

enum class CoverSearch {
  Direct,     ///< every family of nonempty subsets, m <= 4
  Reduction,  ///< min{n : g(n) >= m}, m <= 12
};

std::size_t s(std::size_t m, CoverSearch mode = CoverSearch::Reduction);

/// Least n with m reachable from n ones, via forward reachable-value sets
/// capped at 10m. 1 <= m <= 500.
std::size_t c(std::size_t m);

/// c(m) for m = 1..limit from a single reachable-set sweep (cap 10 * limit).
std::vector<std::size_t> c_range(std::size_t limit);

/// Upper-triangle adjacency bits under the lexicographically smallest
/// relabelling; equal codes iff isomorphic. Graphs of at most 8 vertices.
std::uint64_t canonical_code(const Graph& graph);
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// One representative (canonically labelled) of each isomorphism class
/// attaining g(n), ordered by canonical code. 1 <= n <= 7.
std::vector<Graph> extremal_graphs_up_to_iso(std::size_t n);

struct Report {
  std::string quantity;
  std::string input;
  std::string oracle_value;
  std::string closed_value;
  bool agree = false;
  double elapsed_seconds = 0.0;
};

/// quantity, input, oracle, closed form, "ok"/"MISMATCH", tab-separated;
/// elapsed seconds appended as a sixth field when `with_timing` is set.
void write_report(std::ostream& out, const Report& r, bool with_timing = false);

enum class Level { Quick, Full };

/// Runs every oracle agreement check; Quick uses n <= 6 and m <= 300.
std::vector<Report> verify(Level level);

}  // namespace mislab::oracle
