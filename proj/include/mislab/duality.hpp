#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mislab/graph.hpp"

namespace mislab {

using ElementSet = boost::dynamic_bitset<>;

/// A family of nonempty subsets of {0, ..., ground_size-1}. Repeated sets are
/// dropped on construction, keeping the first occurrence.
class SeparatingCover {
 public:
  SeparatingCover() = default;
  /// Throws std::invalid_argument on empty sets or sets sized differently from
  /// the ground set.
  SeparatingCover(std::size_t ground_size, std::vector<ElementSet> sets);

  static SeparatingCover from_lists(std::size_t ground_size,
                                    const std::vector<std::vector<std::size_t>>& sets);

  std::size_t ground_size() const { return ground_size_; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  std::size_t set_count() const { return sets_.size(); }
  std::vector<std::vector<std::size_t>> as_lists() const;

  friend bool operator==(const SeparatingCover&, const SeparatingCover&) = default;

 private:
  std::size_t ground_size_ = 0;
  std::vector<ElementSet> sets_;
};

struct CoverReport {
  bool covering = false;
  bool separating = false;
  /// Smallest element lying in no set.
  std::optional<std::size_t> uncovered;
  /// Lexicographically first pair x < y with no disjoint S, T, x in S, y in T.
  std::optional<std::pair<std::size_t, std::size_t>> unseparated;

  bool valid() const { return covering && separating; }
};

CoverReport validate_cover(const SeparatingCover& c);

/// Ground set: the MISes of g in canonical order. One set per vertex v holding
/// the MISes that contain v, deduplicated. Rejects the empty graph, isolated
/// vertices (n >= 2), and graphs with more MISes than `cap`.
SeparatingCover cover_from_graph(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// One vertex per set, adjacent when the sets are disjoint. Rejects invalid
/// covers (with the validator's witness) and covers of more than 128 sets.
Graph graph_from_cover(const SeparatingCover& c);

/// For each element x, the sets containing x greedily extended by ascending
/// vertex index to a maximal independent set of graph_from_cover(c).
std::vector<VertexSet> mis_witnesses(const SeparatingCover& c, const Graph& g);

/// A separating cover on exactly m elements with at most s(m) sets.
SeparatingCover minimal_cover(std::size_t m);

/// JSON: {"ground_size": m, "sets": [[...], ...]}.
void write_cover(std::ostream& out, const SeparatingCover& c);
SeparatingCover read_cover(std::istream& in);

}  // namespace mislab
