#include "toughcirc/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace toughcirc {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Splits cells by neighbor counts into every other cell until the ordered
// partition is equitable. Splitting depends only on the structure, never on
// labels, so isomorphic inputs get corresponding partitions.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<VertexSet> masks;
    for (const auto& cell : cells) {
      VertexSet m;
      for (Vertex v : cell) m.insert(v);
      masks.push_back(m);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() < 2) continue;
      std::map<std::vector<int>, std::vector<Vertex>> groups;
      for (Vertex v : cells[i]) {
        std::vector<int> sig;
        sig.reserve(masks.size());
        for (VertexSet m : masks) sig.push_back((g.neighbors(v) & m).size());
        groups[sig].push_back(v);
      }
      if (groups.size() == 1) continue;
      Cells split;
      for (auto& [sig, members] : groups) split.push_back(std::move(members));
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), split.begin(), split.end());
      changed = true;
      break;
    }
  }
}

std::uint64_t code_of(const Graph& g, const std::vector<Vertex>& at_label) {
  std::uint64_t code = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(at_label[i], at_label[j]) ? 1U : 0U);
  }
  return code;
}

struct Best {
  bool found = false;
  std::uint64_t code = 0;
  std::vector<Vertex> at_label;
};

void search(const Graph& g, Cells cells, Best& best) {
  refine(g, cells);
  auto open = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (open == cells.end()) {
    std::vector<Vertex> at_label;
    for (const auto& c : cells) at_label.push_back(c.front());
    std::uint64_t code = code_of(g, at_label);
    if (!best.found || code > best.code) best = {true, code, std::move(at_label)};
    return;
  }
  const std::size_t i = static_cast<std::size_t>(open - cells.begin());
  for (Vertex v : cells[i]) {
    Cells next;
    next.reserve(cells.size() + 1);
    next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(i));
    next.push_back({v});
    std::vector<Vertex> rest;
    for (Vertex u : cells[i]) {
      if (u != v) rest.push_back(u);
    }
    next.push_back(std::move(rest));
    next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(i) + 1, cells.end());
    search(g, std::move(next), best);
  }
}

Best canonical_labeling(const Graph& g) {
  if (g.order() > 11) throw GraphError("canonical code supports at most 11 vertices");
  Best best;
  if (g.order() == 0) {
    best.found = true;
    return best;
  }
  std::vector<Vertex> all;
  for (Vertex v = 0; v < g.order(); ++v) all.push_back(v);
  search(g, Cells{all}, best);
  return best;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return canonical_labeling(g).code; }

Graph canonical_form(const Graph& g) {
  Best best = canonical_labeling(g);
  std::vector<Vertex> perm(g.order());
  for (int label = 0; label < g.order(); ++label) perm[best.at_label[label]] = label;
  return relabel(g, perm);
}

std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) throw GraphError("enumeration supports 1 <= n <= 8");
  std::vector<Graph> level{Graph::from_edges(1, {})};
  for (int m = 2; m <= n; ++m) {
    std::unordered_map<std::uint64_t, Graph> seen;
    for (const Graph& base : level) {
      const auto base_edges = base.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        auto edges = base_edges;
        for (Vertex v : VertexSet(mask)) edges.emplace_back(v, m - 1);
        Graph h = Graph::from_edges(m, edges);
        Best best = canonical_labeling(h);
        if (seen.count(best.code)) continue;
        std::vector<Vertex> perm(m);
        for (int label = 0; label < m; ++label) perm[best.at_label[label]] = label;
        seen.emplace(best.code, relabel(h, perm));
      }
    }
    std::vector<std::pair<std::uint64_t, Graph>> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [code, graph] : sorted) level.push_back(std::move(graph));
  }
  return level;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace toughcirc
