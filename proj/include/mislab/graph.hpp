#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mislab/bignat.hpp"

namespace mislab {

inline constexpr std::size_t kMaxVertices = 128;

/// Subset of {0, ..., 127}, stored as two 64-bit words.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static VertexSet range(std::size_t n);  // {0, ..., n-1}
  static VertexSet of(std::initializer_list<std::size_t> vertices);

  bool contains(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  bool empty() const { return (words_[0] | words_[1]) == 0; }
  std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
  }
  bool intersects(const VertexSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }
  bool is_subset_of(const VertexSet& o) const { return (*this - o).empty(); }

  /// Smallest member; undefined on the empty set.
  std::size_t front() const {
    return words_[0] != 0 ? static_cast<std::size_t>(std::countr_zero(words_[0]))
                          : 64 + static_cast<std::size_t>(std::countr_zero(words_[1]));
  }
  /// Largest member plus one, 0 for the empty set.
  std::size_t end_bound() const {
    if (words_[1] != 0) return 128 - static_cast<std::size_t>(std::countl_zero(words_[1]));
    return 64 - static_cast<std::size_t>(std::countl_zero(words_[0]));
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < 2; ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }

  std::vector<std::size_t> elements() const;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) {
    a.words_[0] &= b.words_[0];
    a.words_[1] &= b.words_[1];
    return a;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) {
    a.words_[0] |= b.words_[0];
    a.words_[1] |= b.words_[1];
    return a;
  }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) {
    a.words_[0] &= ~b.words_[0];
    a.words_[1] &= ~b.words_[1];
    return a;
  }
  VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
  VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
  VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::size_t hash() const {
    return std::hash<std::uint64_t>{}(words_[0] * 0x9E3779B97F4A7C15ULL ^ words_[1]);
  }

  std::array<std::uint64_t, 2> words() const { return words_; }

 private:
  std::array<std::uint64_t, 2> words_{};
};

/// Lexicographic order on the ascending element sequences; {0,2} < {1}.
bool canonical_less(const VertexSet& a, const VertexSet& b);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph on at most 128 vertices with bitset adjacency rows.
/// Immutable once built; equality is label-exact.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);
  /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
  /// Repeated edges collapse.
  Graph(std::size_t n, std::span<const Edge> edges);

  /// Rows must be symmetric, loop-free and within range.
  static Graph from_adjacency(std::size_t n, std::span<const VertexSet> rows);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const;
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].contains(v); }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }
  /// Edges (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::size_t n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

Graph complete_graph(std::size_t k);
Graph cycle_graph(std::size_t j);
Graph path_graph(std::size_t k);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// Subgraph induced by `keep`, relabelled in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);
/// G - X.
Graph remove_vertices(const Graph& g, const VertexSet& removed);

/// {v} together with its neighbours. Throws std::out_of_range for v >= order.
VertexSet closed_neighborhood(const Graph& g, std::size_t v);

bool is_independent(const Graph& g, const VertexSet& s);
/// Independent and no vertex outside `s` can be added.
bool is_maximal_independent(const Graph& g, const VertexSet& s);

/// Raised when enumeration would produce more sets than allowed.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t cap, std::size_t partial);
  std::size_t cap() const { return cap_; }
  std::size_t partial_count() const { return partial_; }

 private:
  std::size_t cap_;
  std::size_t partial_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// Every maximal independent set of g exactly once, in canonical order.
/// Throws CapExceeded once more than `cap` sets have been found.
std::vector<VertexSet> enumerate_mis(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// Number of maximal independent sets. Exact at any size: components are
/// counted separately and multiplied, and the branching is memoized on
/// (undecided vertices, vertices still needing a chosen neighbour).
/// The empty graph has one MIS, the empty set.
BigNat count_mis(const Graph& g);

enum class ExtremalVariant { Default, TwoEdges, K4 };

/// Disjoint triangles plus an edge, two edges or a K_4 according to n mod 3;
/// attains the maximum MIS count for n vertices. Non-default variants are
/// valid only for n = 1 (mod 3), n >= 4.
Graph extremal_graph(std::size_t n, ExtremalVariant variant = ExtremalVariant::Default);

/// Text format: "p <n> <m>", then m lines "e <u> <v>" (0-based, u < v),
/// lines starting with "c" are comments.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

}  // namespace mislab
