#include "mislab/duality.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mislab/closed_forms.hpp"

namespace mislab {

SeparatingCover::SeparatingCover(std::size_t ground_size, std::vector<ElementSet> sets)
    : ground_size_(ground_size) {
  for (auto& s : sets) {
    if (s.size() != ground_size) {
      throw std::invalid_argument("cover set sized " + std::to_string(s.size()) +
                                  " for ground set of " + std::to_string(ground_size));
    }
    if (s.none()) throw std::invalid_argument("separating cover may not contain the empty set");
    if (std::find(sets_.begin(), sets_.end(), s) == sets_.end()) sets_.push_back(std::move(s));
  }
}

SeparatingCover SeparatingCover::from_lists(std::size_t ground_size,
                                            const std::vector<std::vector<std::size_t>>& sets) {
  std::vector<ElementSet> bits;
  bits.reserve(sets.size());
  for (const auto& list : sets) {
    ElementSet s(ground_size);
    for (std::size_t x : list) {
      if (x >= ground_size) {
        throw std::invalid_argument("element " + std::to_string(x) + " outside ground set of " +
                                    std::to_string(ground_size));
      }
      s.set(x);
    }
    bits.push_back(std::move(s));
  }
  return SeparatingCover(ground_size, std::move(bits));
}

std::vector<std::vector<std::size_t>> SeparatingCover::as_lists() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(sets_.size());
  for (const auto& s : sets_) {
    auto& list = out.emplace_back();
    for (auto x = s.find_first(); x != ElementSet::npos; x = s.find_next(x)) list.push_back(x);
  }
  return out;
}

CoverReport validate_cover(const SeparatingCover& c) {
  const std::size_t m = c.ground_size();
  const std::size_t k = c.set_count();
  const std::size_t words = std::max<std::size_t>(1, (k + 63) / 64);

  // signature[x]: which sets contain x.
  std::vector<std::uint64_t> signature(m * words, 0);
  for (std::size_t s = 0; s < k; ++s) {
    const ElementSet& set = c.sets()[s];
    for (auto x = set.find_first(); x != ElementSet::npos; x = set.find_next(x)) {
      signature[x * words + s / 64] |= std::uint64_t{1} << (s % 64);
    }
  }
  std::vector<std::uint64_t> disjoint_from(k * words, 0);
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = 0; t < k; ++t) {
      if (!c.sets()[s].intersects(c.sets()[t])) {
        disjoint_from[s * words + t / 64] |= std::uint64_t{1} << (t % 64);
      }
    }
  }
  // reach[x]: sets disjoint from some set containing x.
  std::vector<std::uint64_t> reach(m * words, 0);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t s = 0; s < k; ++s) {
      if ((signature[x * words + s / 64] >> (s % 64)) & 1U) {
        for (std::size_t w = 0; w < words; ++w) reach[x * words + w] |= disjoint_from[s * words + w];
      }
    }
  }

  CoverReport report;
  report.covering = true;
  for (std::size_t x = 0; x < m && report.covering; ++x) {
    bool any = false;
    for (std::size_t w = 0; w < words; ++w) any = any || signature[x * words + w] != 0;
    if (!any) {
      report.covering = false;
      report.uncovered = x;
    }
  }
  report.separating = true;
  for (std::size_t x = 0; x < m && report.separating; ++x) {
    const std::uint64_t* rx = &reach[x * words];
    for (std::size_t y = x + 1; y < m; ++y) {
      const std::uint64_t* sy = &signature[y * words];
      bool split = false;
      for (std::size_t w = 0; w < words && !split; ++w) split = (rx[w] & sy[w]) != 0;
      if (!split) {
        report.separating = false;
        report.unseparated = std::make_pair(x, y);
        break;
      }
    }
  }
  return report;
}

SeparatingCover cover_from_graph(const Graph& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("cover_from_graph: graph has no vertices");
  if (n >= 2) {
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree(v) == 0) {
        throw std::invalid_argument("cover_from_graph: vertex " + std::to_string(v) +
                                    " is isolated, so its MISes cannot be separated");
      }
    }
  }
  const auto mis = enumerate_mis(g, cap);
  std::vector<ElementSet> sets(n, ElementSet(mis.size()));
  for (std::size_t i = 0; i < mis.size(); ++i) {
    mis[i].for_each([&](std::size_t v) { sets[v].set(i); });
  }
  return SeparatingCover(mis.size(), std::move(sets));
}

std::vector<VertexSet> mis_witnesses(const SeparatingCover& c, const Graph& g) {
  std::vector<VertexSet> out;
  out.reserve(c.ground_size());
  for (std::size_t x = 0; x < c.ground_size(); ++x) {
    VertexSet chosen;
    VertexSet blocked;
    for (std::size_t s = 0; s < c.set_count(); ++s) {
      if (c.sets()[s].test(x)) chosen.insert(s);
    }
    chosen.for_each([&](std::size_t s) { blocked |= g.neighbors(s); });
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (!chosen.contains(v) && !blocked.contains(v)) {
        chosen.insert(v);
        blocked |= g.neighbors(v);
      }
    }
    out.push_back(chosen);
  }
  return out;
}

Graph graph_from_cover(const SeparatingCover& c) {
  const CoverReport report = validate_cover(c);
  if (!report.valid()) {
    std::string why = "graph_from_cover: not a separating cover";
    if (report.uncovered) why += "; element " + std::to_string(*report.uncovered) + " uncovered";
    if (report.unseparated) {
      why += "; elements " + std::to_string(report.unseparated->first) + " and " +
             std::to_string(report.unseparated->second) + " not separated";
    }
    throw std::invalid_argument(why);
  }
  const std::size_t k = c.set_count();
  if (k > kMaxVertices) {
    throw std::invalid_argument("graph_from_cover: " + std::to_string(k) + " sets exceed 128");
  }
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = s + 1; t < k; ++t) {
      if (!c.sets()[s].intersects(c.sets()[t])) edges.emplace_back(s, t);
    }
  }
  Graph g(k, edges);

  // Distinct maximal witnesses certify at least ground_size MISes.
  auto witnesses = mis_witnesses(c, g);
  std::sort(witnesses.begin(), witnesses.end(), canonical_less);
  if (std::adjacent_find(witnesses.begin(), witnesses.end()) != witnesses.end()) {
    throw std::logic_error("graph_from_cover: two elements share an MIS witness");
  }
  return g;
}

SeparatingCover minimal_cover(std::size_t m) {
  if (m == 0) throw std::invalid_argument("minimal_cover: m must be positive");
  if (m > 1'000'000) throw std::invalid_argument("minimal_cover: m limited to 1000000");
  const std::size_t n = s_of(BigNat(m));
  const SeparatingCover full = cover_from_graph(extremal_graph(n));
  std::vector<ElementSet> kept;
  for (ElementSet s : full.sets()) {
    s.resize(m);
    if (s.any()) kept.push_back(std::move(s));
  }
  return SeparatingCover(m, std::move(kept));
}

void write_cover(std::ostream& out, const SeparatingCover& c) {
  nlohmann::ordered_json j;
  j["ground_size"] = c.ground_size();
  j["sets"] = c.as_lists();
  out << j.dump() << '\n';
}

SeparatingCover read_cover(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
    return SeparatingCover::from_lists(j.at("ground_size").get<std::size_t>(),
                                       j.at("sets").get<std::vector<std::vector<std::size_t>>>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("cover file: ") + e.what());
  }
}

}  // namespace mislab
