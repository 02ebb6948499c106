#include "mislab/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

#include <boost/dynamic_bitset.hpp>

#include "mislab/closed_forms.hpp"
#include "mislab/complexity.hpp"

namespace mislab::oracle {

namespace {

void best_product(std::size_t remaining, std::size_t max_part, std::uint64_t acc,
                  std::uint64_t& best) {
  if (remaining == 0) {
    best = std::max(best, acc);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    best_product(remaining - part, part, acc * part, best);
  }
}

constexpr std::size_t kMaxScanOrder = 8;

// Vertex pairs (u, v), u < v, in row-major order; bit k of a graph index is pair k.
std::vector<std::pair<std::size_t, std::size_t>> vertex_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

using SmallAdjacency = std::array<std::uint8_t, kMaxScanOrder>;

SmallAdjacency adjacency_of(std::uint64_t index,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  SmallAdjacency adj{};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if ((index >> k) & 1U) {
      adj[pairs[k].first] |= static_cast<std::uint8_t>(1U << pairs[k].second);
      adj[pairs[k].second] |= static_cast<std::uint8_t>(1U << pairs[k].first);
    }
  }
  return adj;
}

// Straight from the definition: every subset, independent and dominating.
std::uint32_t subset_mis_count(std::size_t n, const SmallAdjacency& adj) {
  const std::uint32_t full = (1U << n) - 1;
  std::array<bool, 256> independent{};
  std::array<std::uint8_t, 256> reach{};
  independent[0] = true;
  std::uint32_t count = full == 0 ? 1 : 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    const std::uint32_t rest = s & (s - 1);
    independent[s] = independent[rest] && (adj[low] & rest) == 0;
    reach[s] = reach[rest] | adj[low];
    if (independent[s] && ((s | reach[s]) & full) == full) ++count;
  }
  return count;
}

// Applies `visit(index, mis_count)` to every labelled graph on n vertices,
// spreading index ranges across hardware threads.
void scan_graphs(std::size_t n,
                 const std::function<void(std::uint64_t, std::uint32_t, std::size_t)>& visit,
                 std::size_t& workers_out) {
  const auto pairs = vertex_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
  workers_out = workers;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::uint64_t i = w; i < total; i += workers) {
        visit(i, subset_mis_count(n, adjacency_of(i, pairs)), w);
      }
    });
  }
  for (auto& t : threads) t.join();
}

std::uint32_t scan_max(std::size_t n) {
  std::size_t workers = 0;
  std::vector<std::uint32_t> best(64, 0);
  scan_graphs(
      n, [&](std::uint64_t, std::uint32_t count, std::size_t w) { best[w] = std::max(best[w], count); },
      workers);
  return *std::max_element(best.begin(), best.end());
}

bool small_family_separates(std::size_t m, const std::vector<std::uint32_t>& family) {
  std::uint32_t all = 0;
  for (auto s : family) all |= s;
  if (all != (1U << m) - 1) return false;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x + 1; y < m; ++y) {
      bool found = false;
      for (auto s : family) {
        for (auto t : family) {
          found = found || (((s >> x) & 1U) && ((t >> y) & 1U) && (s & t) == 0);
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

// Families of `size` distinct nonempty subsets, listed in increasing order.
bool some_family_separates(std::size_t m, std::size_t size, std::uint32_t next,
                           std::vector<std::uint32_t>& family) {
  if (family.size() == size) return small_family_separates(m, family);
  for (std::uint32_t s = next; s < (1U << m); ++s) {
    family.push_back(s);
    const bool ok = some_family_separates(m, size, s + 1, family);
    family.pop_back();
    if (ok) return true;
  }
  return false;
}

std::string str(std::size_t x) { return std::to_string(x); }

}  // namespace

BigNat ell(std::size_t n) {
  if (n == 0 || n > 45) throw std::invalid_argument("oracle ell: n must be in 1..45");
  std::uint64_t best = 0;
  best_product(n, n, 1, best);
  return BigNat(best);
}

BigNat g(std::size_t n, bool allow_eight) {
  const std::size_t max_n = allow_eight ? 8 : 7;
  if (n == 0 || n > max_n) {
    throw std::invalid_argument("oracle g: n must be in 1.." + std::to_string(max_n));
  }
  static std::mutex mutex;
  static std::array<std::optional<std::uint32_t>, kMaxScanOrder + 1> cache;
  {
    std::lock_guard lock(mutex);
    if (cache[n]) return *cache[n];
  }
  const std::uint32_t value = scan_max(n);
  std::lock_guard lock(mutex);
  cache[n] = value;
  return value;
}

std::size_t s(std::size_t m, CoverSearch mode) {
  if (mode == CoverSearch::Direct) {
    if (m == 0 || m > 4) throw std::invalid_argument("oracle s (direct): m must be in 1..4");
    std::vector<std::uint32_t> family;
    for (std::size_t size = 1;; ++size) {
      if (some_family_separates(m, size, 1, family)) return size;
    }
  }
  if (m == 0 || m > 12) throw std::invalid_argument("oracle s (reduction): m must be in 1..12");
  for (std::size_t n = 1;; ++n) {
    if (g(n) >= m) return n;
  }
}

std::vector<std::size_t> c_range(std::size_t limit) {
  if (limit == 0 || limit > 500) throw std::invalid_argument("oracle c: m must be in 1..500");
  const std::size_t cap = 10 * limit;
  using Bits = boost::dynamic_bitset<>;
  std::vector<Bits> reach(1);  // reach[n]: values <= cap built from exactly n ones
  std::vector<std::vector<std::size_t>> values(1);
  reach.emplace_back(cap + 1);
  reach[1].set(1);
  values.push_back({1});

  std::vector<std::size_t> result(limit + 1, 0);
  std::size_t found = 0;
  auto record = [&](std::size_t n) {
    for (std::size_t v : values[n]) {
      if (v <= limit && result[v] == 0) {
        result[v] = n;
        ++found;
      }
    }
  };
  record(1);
  for (std::size_t n = 2; found < limit; ++n) {
    if (n > 200) throw std::logic_error("oracle c: no expression found within 200 ones");
    Bits next(cap + 1);
    for (std::size_t a = 1; a <= n / 2; ++a) {
      const Bits& other = reach[n - a];
      for (std::size_t x : values[a]) {
        next |= other << x;
        for (std::size_t y : values[n - a]) {
          if (x * y > cap) break;
          next.set(x * y);
        }
      }
    }
    std::vector<std::size_t> listed;
    for (auto v = next.find_first(); v != Bits::npos; v = next.find_next(v)) listed.push_back(v);
    reach.push_back(std::move(next));
    values.push_back(std::move(listed));
    record(n);
  }
  result.erase(result.begin());
  return result;
}

std::size_t c(std::size_t m) {
  if (m == 0 || m > 500) throw std::invalid_argument("oracle c: m must be in 1..500");
  return c_range(m).back();
}

std::uint64_t canonical_code(const Graph& graph) {
  const std::size_t n = graph.order();
  if (n > kMaxScanOrder) throw std::invalid_argument("canonical_code: at most 8 vertices");
  const auto pairs = vertex_pairs(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    // Most significant bit is the first pair; vertex k of the relabelled graph is perm[k].
    std::uint64_t code = 0;
    for (const auto& [u, v] : pairs) code = (code << 1) | (graph.adjacent(perm[u], perm[v]) ? 1 : 0);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  const auto pairs = vertex_pairs(n);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if ((code >> (pairs.size() - 1 - k)) & 1U) edges.push_back(pairs[k]);
  }
  return Graph(n, edges);
}

std::vector<Graph> extremal_graphs_up_to_iso(std::size_t n) {
  if (n == 0 || n > 7) throw std::invalid_argument("extremal_graphs_up_to_iso: n must be in 1..7");
  const auto target = g(n).convert_to<std::uint32_t>();
  const auto pairs = vertex_pairs(n);
  std::mutex mutex;
  std::vector<std::uint64_t> hits;
  std::size_t workers = 0;
  scan_graphs(
      n,
      [&](std::uint64_t index, std::uint32_t count, std::size_t) {
        if (count != target) return;
        std::lock_guard lock(mutex);
        hits.push_back(index);
      },
      workers);
  std::set<std::uint64_t> codes;
  for (std::uint64_t index : hits) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((index >> k) & 1U) edges.push_back(pairs[k]);
    }
    codes.insert(canonical_code(Graph(n, edges)));
  }
  std::vector<Graph> out;
  for (std::uint64_t code : codes) out.push_back(graph_from_code(n, code));
  return out;
}

void write_report(std::ostream& out, const Report& r, bool with_timing) {
  out << r.quantity << '\t' << r.input << '\t' << r.oracle_value << '\t' << r.closed_value << '\t'
      << (r.agree ? "ok" : "MISMATCH");
  if (with_timing) out << '\t' << r.elapsed_seconds;
  out << '\n';
}

std::vector<Report> verify(Level level) {
  const bool full = level == Level::Full;
  const std::size_t max_n = full ? 7 : 6;
  const std::size_t max_c = full ? 500 : 300;
  std::vector<Report> reports;
  using Clock = std::chrono::steady_clock;

  auto timed = [&](std::string quantity, std::string input, auto&& oracle_fn, auto&& closed_fn) {
    const auto start = Clock::now();
    Report r{std::move(quantity), std::move(input), oracle_fn(), closed_fn(), false, 0.0};
    r.agree = r.oracle_value == r.closed_value;
    r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    reports.push_back(std::move(r));
  };

  for (std::size_t n = 1; n <= 40; ++n) {
    timed("ell", str(n), [&] { return to_string(ell(n)); }, [&] { return to_string(mislab::ell(n)); });
  }
  for (std::size_t n = 1; n <= 40; ++n) {
    timed("max_with_ones", str(n), [&] { return to_string(ell(n)); },
          [&] { return to_string(max_with_ones(n)); });
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    timed("g", str(n), [&] { return to_string(g(n)); }, [&] { return to_string(mislab::ell(n)); });
  }
  const std::size_t max_m = g(max_n).convert_to<std::size_t>();
  for (std::size_t m = 1; m <= max_m; ++m) {
    timed("s_reduction", str(m), [&] { return str(s(m)); },
          [&] { return str(s_of(BigNat(m))); });
  }
  for (std::size_t m = 1; m <= 4; ++m) {
    timed("s_direct", str(m), [&] { return str(s(m, CoverSearch::Direct)); },
          [&] { return str(s_of(BigNat(m))); });
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    timed(
        "g_from_s", str(n),
        [&] {
          std::size_t best = 0;
          for (std::size_t m = 1; m <= max_m; ++m) {
            if (s(m) <= n) best = m;
          }
          return str(best);
        },
        [&] { return to_string(g(n)); });
  }
  {
    const auto start = Clock::now();
    const auto oracle_values = c_range(max_c);
    const ComplexityTable table(max_c);
    const double setup = std::chrono::duration<double>(Clock::now() - start).count();
    for (std::size_t m = 1; m <= max_c; ++m) {
      Report r{"c", str(m), str(oracle_values[m - 1]), str(table[m]), false,
               m == 1 ? setup : 0.0};
      r.agree = r.oracle_value == r.closed_value;
      reports.push_back(std::move(r));
    }
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    timed("extremal_classes", str(n), [&] { return str(extremal_graphs_up_to_iso(n).size()); },
          [&] { return str(n % 3 == 1 && n >= 4 ? 2 : 1); });
    if (n % 3 != 1) {
      timed("extremal_form", str(n),
            [&] { return std::to_string(canonical_code(extremal_graphs_up_to_iso(n).front())); },
            [&] { return std::to_string(canonical_code(extremal_graph(n))); });
    }
  }
  return reports;
}

}  // namespace mislab::oracle
