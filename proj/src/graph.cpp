#include "toughcirc/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace toughcirc {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, 64]");
  }
  Graph g;
  g.n_ = n;
  g.rows_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint out of range");
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    g.rows_[u] |= std::uint64_t{1} << v;
    g.rows_[v] |= std::uint64_t{1} << u;
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : rows_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// graph6: size header N(n), then the upper triangle x(0,1) x(0,2) x(1,2)
// x(0,3) ... packed big-endian into 6-bit groups, each offset by 63.
Graph parse_graph6(std::string_view text) {
  auto sextet = [&](std::size_t pos) -> int {
    if (pos >= text.size()) throw ParseError("truncated graph6 word", text.size());
    int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("character out of graph6 range", pos);
    return c - 63;
  };

  if (text.empty()) throw ParseError("empty graph6 word", 0);
  std::size_t pos = 0;
  long n = 0;
  int head = sextet(0);
  if (head < 63) {
    n = head;
    pos = 1;
  } else {
    if (text.size() > 1 && text[1] == '~') {
      throw ParseError("graph6 8-byte size header exceeds supported size", 1);
    }
    n = (long{sextet(1)} << 12) | (long{sextet(2)} << 6) | sextet(3);
    if (n < 63) throw ParseError("non-minimal graph6 size header", 0);
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6 word has " + std::to_string(n) + " vertices; at most 64 supported", 0);
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t data_bytes = (bits + 5) / 6;
  if (text.size() > pos + data_bytes) throw ParseError("trailing characters after graph6 word", pos + data_bytes);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = sextet(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < data_bytes * 6; ++k) {
    if ((sextet(pos + k / 6) >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding bits", pos + k / 6);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxVertices) throw GraphError("graph6 encoding supports at most 64 vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph complete(int n) {
  if (n < 1) throw GraphError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle graph needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw GraphError("path graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw GraphError("complete bipartite graph needs both sides >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::from_edges(a + b, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw GraphError("random graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<int> index(g.order(), -1);
  int k = 0;
  for (Vertex v : keep) index[v] = k++;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (keep.contains(u) && keep.contains(v)) edges.emplace_back(index[u], index[v]);
  }
  return Graph::from_edges(k, edges);
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw GraphError("minimum degree of the empty graph is undefined");
  int best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

Components components(const Graph& g, VertexSet removed) {
  Components out;
  out.label.assign(g.order(), -1);
  VertexSet unseen = g.vertices() - removed;
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next = (next & unseen) - comp;
      comp |= next;
      frontier = next;
    }
    for (Vertex v : comp) out.label[v] = out.count;
    unseen -= comp;
    ++out.count;
  }
  return out;
}

int count_components(const Graph& g, VertexSet alive) {
  int count = 0;
  while (!alive.empty()) {
    VertexSet comp = VertexSet::single(alive.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next = (next & alive) - comp;
      comp |= next;
      frontier = next;
    }
    alive -= comp;
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return count_components(g, g.vertices()) <= 1; }

int girth(const Graph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          int len = dist[u] + dist[v] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

// The Petersen graph is the unique 3-regular graph of girth 5 on 10 vertices.
bool is_petersen(const Graph& g) {
  if (g.order() != 10 || g.edge_count() != 15) return false;
  for (Vertex v = 0; v < 10; ++v) {
    if (g.degree(v) != 3) return false;
  }
  return girth(g) == 5;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<Vertex>& map, VertexSet used, Vertex next) {
  if (next == a.order()) return true;
  for (Vertex cand = 0; cand < b.order(); ++cand) {
    if (used.contains(cand) || a.degree(next) != b.degree(cand)) continue;
    bool ok = true;
    for (Vertex prev = 0; prev < next && ok; ++prev) {
      ok = a.adjacent(prev, next) == b.adjacent(map[prev], cand);
    }
    if (!ok) continue;
    map[next] = cand;
    VertexSet with = used;
    with.insert(cand);
    if (extend_isomorphism(a, b, map, with, next + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<int> da, db;
  for (Vertex v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  std::vector<Vertex> map(a.order(), -1);
  if (!extend_isomorphism(a, b, map, {}, 0)) return std::nullopt;
  return map;
}

}  // namespace toughcirc
