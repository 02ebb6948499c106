#include "mislab/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

namespace mislab {

VertexSet VertexSet::range(std::size_t n) {
  if (n > kMaxVertices) throw std::invalid_argument("vertex set limited to 128 elements");
  VertexSet s;
  if (n >= 64) {
    s.words_[0] = ~std::uint64_t{0};
    s.words_[1] = n == 128 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 64)) - 1;
  } else {
    s.words_[0] = (std::uint64_t{1} << n) - 1;
  }
  return s;
}

VertexSet VertexSet::of(std::initializer_list<std::size_t> vertices) {
  VertexSet s;
  for (std::size_t v : vertices) {
    if (v >= kMaxVertices) throw std::invalid_argument("vertex index out of range");
    s.insert(v);
  }
  return s;
}

std::vector<std::size_t> VertexSet::elements() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  const VertexSet diff = (a - b) | (b - a);
  if (diff.empty()) return false;
  const std::size_t x = diff.front();
  // Both agree below x. The one holding x continues with x; the other either
  // continues with something larger or has ended (and then is a prefix).
  const VertexSet& holder = a.contains(x) ? a : b;
  const VertexSet& other = a.contains(x) ? b : a;
  const bool other_ended = other.end_bound() <= x;
  const bool holder_first = !other_ended;
  return (&holder == &a) == holder_first;
}

Graph::Graph(std::size_t n) : n_(n) {
  if (n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds 128 vertices");
  }
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
}

Graph Graph::from_adjacency(std::size_t n, std::span<const VertexSet> rows) {
  Graph g(n);
  if (rows.size() != n) throw std::invalid_argument("adjacency row count differs from order");
  const VertexSet all = VertexSet::range(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!rows[v].is_subset_of(all) || rows[v].contains(v)) {
      throw std::invalid_argument("bad adjacency row for vertex " + std::to_string(v));
    }
    g.adj_[v] = rows[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    rows[v].for_each([&](std::size_t u) {
      if (!rows[u].contains(v)) throw std::invalid_argument("adjacency is not symmetric");
    });
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < n_; ++v) twice += adj_[v].size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < n_; ++u) {
    adj_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + static_cast<std::ptrdiff_t>(a.n_),
                    b.adj_.begin());
}

Graph complete_graph(std::size_t k) {
  if (k > kMaxVertices) throw std::invalid_argument("complete_graph: k exceeds 128");
  std::vector<VertexSet> rows(k);
  const VertexSet all = VertexSet::range(k);
  for (std::size_t v = 0; v < k; ++v) {
    rows[v] = all;
    rows[v].erase(v);
  }
  return Graph::from_adjacency(k, rows);
}

Graph cycle_graph(std::size_t j) {
  if (j < 3) throw std::invalid_argument("cycle_graph: length must be at least 3");
  if (j > kMaxVertices) throw std::invalid_argument("cycle_graph: length exceeds 128");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < j; ++i) edges.emplace_back(i, (i + 1) % j);
  return Graph(j, edges);
}

Graph path_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph(k, edges);
}

namespace {

std::vector<VertexSet> union_rows(const Graph& g, const Graph& h, bool cross) {
  const std::size_t n = g.order() + h.order();
  if (n > kMaxVertices) {
    throw std::invalid_argument("combined order " + std::to_string(n) + " exceeds 128 vertices");
  }
  const std::size_t shift = g.order();
  VertexSet g_side = VertexSet::range(shift);
  VertexSet h_side = VertexSet::range(n) - g_side;
  std::vector<VertexSet> rows(n);
  for (std::size_t v = 0; v < g.order(); ++v) {
    rows[v] = g.neighbors(v);
    if (cross) rows[v] |= h_side;
  }
  for (std::size_t v = 0; v < h.order(); ++v) {
    VertexSet r;
    h.neighbors(v).for_each([&](std::size_t u) { r.insert(u + shift); });
    if (cross) r |= g_side;
    rows[v + shift] = r;
  }
  return rows;
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto rows = union_rows(g, h, false);
  return Graph::from_adjacency(rows.size(), rows);
}

Graph join(const Graph& g, const Graph& h) {
  const auto rows = union_rows(g, h, true);
  return Graph::from_adjacency(rows.size(), rows);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (!keep.is_subset_of(g.vertices())) {
    throw std::invalid_argument("induced_subgraph: vertex set exceeds graph order");
  }
  const auto kept = keep.elements();
  std::array<std::size_t, kMaxVertices> label{};
  for (std::size_t i = 0; i < kept.size(); ++i) label[kept[i]] = i;
  std::vector<VertexSet> rows(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    (g.neighbors(kept[i]) & keep).for_each([&](std::size_t u) { rows[i].insert(label[u]); });
  }
  return Graph::from_adjacency(kept.size(), rows);
}

Graph remove_vertices(const Graph& g, const VertexSet& removed) {
  return induced_subgraph(g, g.vertices() - removed);
}

VertexSet closed_neighborhood(const Graph& g, std::size_t v) {
  if (v >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(g.order()));
  }
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = s.is_subset_of(g.vertices());
  if (ok) s.for_each([&](std::size_t v) { ok = ok && !g.neighbors(v).intersects(s); });
  return ok;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  bool ok = true;
  (g.vertices() - s).for_each([&](std::size_t v) { ok = ok && g.neighbors(v).intersects(s); });
  return ok;
}

CapExceeded::CapExceeded(std::size_t cap, std::size_t partial)
    : std::runtime_error("MIS enumeration exceeded cap of " + std::to_string(cap) + " sets (" +
                         std::to_string(partial) + " found so far)"),
      cap_(cap),
      partial_(partial) {}

namespace {

// Vertex of `pool` with most neighbours inside `pool`; lowest index on ties.
std::size_t max_degree_vertex(const Graph& g, const VertexSet& pool) {
  std::size_t best = pool.front();
  std::size_t best_deg = 0;
  bool first = true;
  pool.for_each([&](std::size_t v) {
    const std::size_t d = (g.neighbors(v) & pool).size();
    if (first || d > best_deg) {
      best = v;
      best_deg = d;
      first = false;
    }
  });
  return best;
}

// Some vertex waiting for a chosen neighbour has none left among the undecided.
bool stranded(const Graph& g, const VertexSet& undecided, const VertexSet& waiting) {
  bool dead = false;
  waiting.for_each([&](std::size_t x) { dead = dead || !g.neighbors(x).intersects(undecided); });
  return dead;
}

struct Enumerator {
  const Graph& g;
  std::size_t cap;
  std::vector<VertexSet> out;

  // chosen: in the set; undecided: free vertices (none adjacent to chosen);
  // waiting: excluded vertices not yet dominated by chosen.
  void run(const VertexSet& chosen, const VertexSet& undecided, const VertexSet& waiting) {
    if (undecided.empty()) {
      if (waiting.empty()) {
        if (out.size() == cap) throw CapExceeded(cap, out.size());
        out.push_back(chosen);
      }
      return;
    }
    if (stranded(g, undecided, waiting)) return;
    const std::size_t v = max_degree_vertex(g, undecided);
    VertexSet with = chosen;
    with.insert(v);
    run(with, undecided - closed_neighborhood(g, v), waiting - g.neighbors(v));
    VertexSet without = undecided;
    without.erase(v);
    VertexSet still_waiting = waiting;
    still_waiting.insert(v);
    run(chosen, without, still_waiting);
  }
};

struct StateKey {
  VertexSet undecided;
  VertexSet waiting;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    return k.undecided.hash() * 31 + k.waiting.hash();
  }
};

struct Counter {
  const Graph& g;
  std::unordered_map<StateKey, BigNat, StateKeyHash> memo;

  // Components of the state: undecided vertices link to undecided and waiting
  // neighbours; a waiting vertex links only to undecided neighbours.
  BigNat count(const VertexSet& undecided, const VertexSet& waiting) {
    const VertexSet live = undecided | waiting;
    VertexSet unseen = live;
    BigNat product = 1;
    while (!unseen.empty()) {
      VertexSet comp;
      VertexSet frontier;
      frontier.insert(unseen.front());
      while (!frontier.empty()) {
        const std::size_t u = frontier.front();
        frontier.erase(u);
        comp.insert(u);
        const VertexSet reach = undecided.contains(u) ? g.neighbors(u) & live
                                                      : g.neighbors(u) & undecided;
        frontier |= reach - comp;
      }
      unseen -= comp;
      product *= count_connected(undecided & comp, waiting & comp);
      if (product == 0) break;
    }
    return product;
  }

  BigNat count_connected(const VertexSet& undecided, const VertexSet& waiting) {
    if (undecided.empty()) return waiting.empty() ? 1 : 0;
    if (stranded(g, undecided, waiting)) return 0;
    if (undecided.size() == 1 && waiting.is_subset_of(g.neighbors(undecided.front()))) return 1;
    const StateKey key{undecided, waiting};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::size_t v = max_degree_vertex(g, undecided);
    BigNat total = count(undecided - closed_neighborhood(g, v), waiting - g.neighbors(v));
    VertexSet without = undecided;
    without.erase(v);
    VertexSet still_waiting = waiting;
    still_waiting.insert(v);
    total += count(without, still_waiting);
    memo.emplace(key, total);
    return total;
  }
};

}  // namespace

std::vector<VertexSet> enumerate_mis(const Graph& g, std::size_t cap) {
  Enumerator e{g, cap, {}};
  e.run(VertexSet{}, g.vertices(), VertexSet{});
  std::sort(e.out.begin(), e.out.end(), canonical_less);
  return std::move(e.out);
}

BigNat count_mis(const Graph& g) {
  Counter c{g, {}};
  return c.count(g.vertices(), VertexSet{});
}

Graph extremal_graph(std::size_t n, ExtremalVariant variant) {
  if (n == 0 || n > kMaxVertices) {
    throw std::invalid_argument("extremal_graph: n must be in 1..128");
  }
  const bool special = n % 3 == 1 && n >= 4;
  if (variant != ExtremalVariant::Default && !special) {
    throw std::invalid_argument("extremal_graph: variant two-edges/k4 needs n = 1 (mod 3), n >= 4");
  }
  if (n == 1) return complete_graph(1);
  const std::size_t i = n / 3;
  std::vector<std::size_t> blocks;
  switch (n % 3) {
    case 0:
      blocks.assign(i, 3);
      break;
    case 2:
      blocks.assign(i, 3);
      blocks.push_back(2);
      break;
    default:
      blocks.assign(i - 1, 3);
      if (variant == ExtremalVariant::K4) {
        blocks.push_back(4);
      } else {
        blocks.push_back(2);
        blocks.push_back(2);
      }
  }
  Graph g(0);
  for (std::size_t b : blocks) g = disjoint_union(g, complete_graph(b));
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << "p " << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << "e " << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("graph file line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (have_header) fail("duplicate 'p' line");
      if (!(ls >> n >> m)) fail("expected 'p <n> <m>'");
      if (n > kMaxVertices) fail("more than 128 vertices");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail("edge before 'p' line");
      std::size_t u = 0;
      std::size_t v = 0;
      if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
      if (!(u < v)) fail("edge endpoints must satisfy u < v");
      if (v >= n) fail("endpoint out of range");
      edges.emplace_back(u, v);
    } else {
      fail("unknown line type '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing content");
  }
  if (!have_header) throw std::invalid_argument("graph file: missing 'p' line");
  if (edges.size() != m) {
    throw std::invalid_argument("graph file: header declares " + std::to_string(m) +
                                " edges, found " + std::to_string(edges.size()));
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("graph file: duplicate edge");
  }
  return Graph(n, edges);
}

}  // namespace mislab
