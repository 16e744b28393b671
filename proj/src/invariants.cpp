#include "toughcirc/invariants.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

namespace toughcirc {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw GraphError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

VertexSet OrientedCycle::vertex_set() const {
  VertexSet s;
  for (Vertex v : verts) s.insert(v);
  return s;
}

OrientedCycle OrientedCycle::reversed() const {
  return {{verts.rbegin(), verts.rend()}};
}

OrientedCycle OrientedCycle::canonical() const {
  if (verts.empty()) return *this;
  auto rotate_min = [](std::vector<Vertex> v) {
    auto it = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), it, v.end());
    return v;
  };
  auto fwd = rotate_min(verts);
  auto bwd = rotate_min({verts.rbegin(), verts.rend()});
  return {std::min(fwd, bwd)};
}

VertexSet Path::vertex_set() const {
  VertexSet s;
  for (Vertex v : verts) s.insert(v);
  return s;
}

Path Path::reversed() const { return {{verts.rbegin(), verts.rend()}}; }

bool is_valid_cycle(const Graph& g, const OrientedCycle& c) {
  const int t = c.length();
  if (t < 3) return false;
  VertexSet seen;
  for (int i = 0; i < t; ++i) {
    Vertex v = c.verts[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (!g.adjacent(v, c.verts[(i + 1) % t])) return false;
  }
  return true;
}

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.verts.empty()) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < p.verts.size(); ++i) {
    Vertex v = p.verts[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.adjacent(p.verts[i - 1], v)) return false;
  }
  return true;
}

namespace {

// Vertices reachable from `from` through `alive` (excluding `from` itself
// unless it lies in `alive`).
VertexSet reach(const Graph& g, VertexSet seeds, VertexSet alive) {
  VertexSet comp = seeds & alive;
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & alive) - comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

// Max number of internally vertex-disjoint s-t paths (s, t non-adjacent),
// by unit-capacity augmenting paths on the split-vertex network. Vertex v
// becomes v_in = 2v, v_out = 2v+1.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int stop_at) {
  const int n = g.order();
  const int nodes = 2 * n;
  std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a) * nodes + b]; };
  for (Vertex v = 0; v < n; ++v) {
    at(2 * v, 2 * v + 1) = (v == s || v == t) ? n : 1;
    for (Vertex w : g.neighbors(v)) at(2 * v + 1, 2 * w) = n;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(nodes);
  while (flow < stop_at) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[sink] < 0) {
      int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < nodes; ++b) {
        if (parent[b] < 0 && at(a, b) > 0) {
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[sink] < 0) break;
    for (int b = sink; b != source; b = parent[b]) {
      --at(parent[b], b);
      ++at(b, parent[b]);
    }
    ++flow;
  }
  return flow;
}

// Subsets of {0..n-1} of size k in increasing numeric order (Gosper).
template <typename F>
void for_each_subset_of_size(int n, int k, F&& f) {
  if (k == 0) {
    f(VertexSet{});
    return;
  }
  if (k > n) return;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = n >= 64 ? 0 : std::uint64_t{1} << n;
  while (true) {
    if (!f(VertexSet(s))) return;
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    if (r == 0) return;  // overflow past bit 63
    s = (((r ^ s) >> 2) / c) | r;
    if (limit != 0 && s >= limit) return;
  }
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (g.is_complete()) return n - 1;
  int best = n - 1;
  for (Vertex s = 0; s < n; ++s) {
    // Some minimum cut avoids one of the first best+1 vertices, so sources
    // beyond that index cannot improve the answer.
    if (s > best) break;
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, local_connectivity(g, s, t, best));
    }
  }
  return best;
}

Toughness toughness(const Graph& g) {
  const int n = g.order();
  if (g.is_complete()) return {true, {}, {}};
  const VertexSet all = g.vertices();
  if (count_components(g, all) > 1) return {false, Rational{0, 1}, VertexSet{}};

  std::optional<Rational> best;
  VertexSet witness;
  for (int k = 1; k <= n - 2; ++k) {
    // Removing k vertices leaves at most n - k components.
    if (best && Rational::make(k, n - k) >= *best) break;
    for_each_subset_of_size(n, k, [&](VertexSet cut) {
      const VertexSet rest = all - cut;
      Components comps = components(g, cut);
      if (comps.count < 2) return true;
      Rational ratio = Rational::make(k, comps.count);
      if (best && ratio >= *best) return true;
      // Every cut vertex must see two components; otherwise dropping it
      // from the cut gives a strictly smaller ratio.
      for (Vertex v : cut) {
        std::uint64_t seen = 0;
        for (Vertex w : g.neighbors(v) & rest) seen |= std::uint64_t{1} << comps.label[w];
        if (std::popcount(seen) < 2) return true;
      }
      best = ratio;
      witness = cut;
      return true;
    });
  }
  return {false, *best, witness};
}

Toughness toughness_exhaustive(const Graph& g) {
  const int n = g.order();
  if (n > 30) throw GraphError("exhaustive toughness limited to 30 vertices");
  if (g.is_complete()) return {true, {}, {}};
  const VertexSet all = g.vertices();
  std::optional<Rational> best;
  VertexSet witness;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet cut(mask);
    int count = count_components(g, all - cut);
    if (count < 2) continue;
    Rational ratio = Rational::make(cut.size(), count);
    if (!best || ratio < *best) {
      best = ratio;
      witness = cut;
    }
  }
  return {false, *best, witness};
}

namespace {

// Vertex order used for branching: ascending degree, then id.
std::vector<Vertex> branching_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  return order;
}

class LongestCycleSearch {
 public:
  explicit LongestCycleSearch(const Graph& g) : g_(g), order_(branching_order(g)) {}

  void run() {
    VertexSet allowed = g_.vertices();
    for (Vertex start : order_) {
      if (best_ >= allowed.size()) break;
      start_ = start;
      path_.assign(1, start);
      extend(start, VertexSet::single(start), allowed);
      allowed.erase(start);
    }
  }

  int best() const { return best_; }
  const std::vector<Vertex>& best_cycle() const { return best_cycle_; }

 private:
  void extend(Vertex tail, VertexSet visited, VertexSet allowed) {
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && len > best_ && g_.adjacent(tail, start_)) {
      best_ = len;
      best_cycle_ = path_;
    }
    const VertexSet open = allowed - visited;
    // Upper bound: everything still reachable from the tail.
    VertexSet reachable = reach(g_, g_.neighbors(tail) & open, open);
    if (len + reachable.size() <= best_) return;
    if ((reachable & g_.neighbors(start_)).empty()) return;
    for (Vertex v : order_) {
      if (!open.contains(v) || !g_.adjacent(tail, v)) continue;
      path_.push_back(v);
      VertexSet next = visited;
      next.insert(v);
      extend(v, next, allowed);
      path_.pop_back();
      if (best_ == allowed.size()) return;
    }
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  int best_ = 0;
  std::vector<Vertex> best_cycle_;
};

}  // namespace

Circumference circumference(const Graph& g) {
  if (g.order() == 0) return {0, std::nullopt};
  LongestCycleSearch search(g);
  search.run();
  if (search.best() >= 3) {
    return {search.best(), OrientedCycle{search.best_cycle()}.canonical()};
  }
  return {g.edge_count() > 0 ? 2 : 1, std::nullopt};
}

bool is_hamiltonian(const Graph& g) { return g.order() >= 3 && circumference(g).length == g.order(); }

namespace {

class LongestPathSearch {
 public:
  LongestPathSearch(const Graph& g, VertexSet alive) : g_(g), alive_(alive) {}

  void run() {
    for (Vertex start : alive_) {
      path_.assign(1, start);
      extend(start, VertexSet::single(start));
    }
  }

  std::vector<Path>& found() { return found_; }

 private:
  void extend(Vertex tail, VertexSet visited) {
    const int len = static_cast<int>(path_.size()) - 1;
    if (path_.front() <= path_.back()) {
      if (len > best_) {
        best_ = len;
        found_.clear();
      }
      if (len == best_) found_.push_back({path_});
    }
    const VertexSet open = alive_ - visited;
    VertexSet reachable = reach(g_, g_.neighbors(tail) & open, open);
    if (len + reachable.size() < best_) return;
    for (Vertex v : g_.neighbors(tail) & open) {
      path_.push_back(v);
      VertexSet next = visited;
      next.insert(v);
      extend(v, next);
      path_.pop_back();
    }
  }

  const Graph& g_;
  VertexSet alive_;
  std::vector<Vertex> path_;
  int best_ = -1;
  std::vector<Path> found_;
};

}  // namespace

PathList longest_paths_in(const Graph& g, VertexSet forbidden, std::size_t cap) {
  LongestPathSearch search(g, g.vertices() - forbidden);
  search.run();
  PathList out;
  out.paths = std::move(search.found());
  std::sort(out.paths.begin(), out.paths.end());
  if (out.paths.size() > cap) {
    out.paths.resize(cap);
    out.truncated = true;
  }
  return out;
}

std::optional<Path> longest_path_in(const Graph& g, VertexSet forbidden) {
  PathList all = longest_paths_in(g, forbidden, 1);
  if (all.paths.empty()) return std::nullopt;
  return all.paths.front();
}

namespace {

void longest_between(const Graph& g, Vertex tail, Vertex target, VertexSet open, int len, int& best) {
  if (tail == target) {
    best = std::max(best, len);
    return;
  }
  VertexSet reachable = reach(g, g.neighbors(tail) & open, open);
  if (!reachable.contains(target) || len + reachable.size() <= best) return;
  for (Vertex v : g.neighbors(tail) & open) {
    VertexSet next = open;
    next.erase(v);
    longest_between(g, v, target, next, len + 1, best);
  }
}

}  // namespace

int longest_path_between(const Graph& g, Vertex x, Vertex y, VertexSet allowed) {
  if (!allowed.contains(x) || !allowed.contains(y)) return -1;
  if (x == y) return 0;
  int best = -1;
  VertexSet open = allowed;
  open.erase(x);
  longest_between(g, x, y, open, 0, best);
  return best;
}

namespace {

class CycleEnumerator {
 public:
  CycleEnumerator(const Graph& g, int target, std::size_t cap) : g_(g), target_(target), cap_(cap) {}

  void run() {
    for (Vertex s = 0; s < g_.order() && !out_.truncated; ++s) {
      start_ = s;
      // Cycles are rooted at their smallest vertex.
      VertexSet open = g_.vertices() - VertexSet::range(s + 1);
      path_.assign(1, s);
      extend(s, open);
    }
    std::sort(out_.cycles.begin(), out_.cycles.end());
  }

  CycleList& result() { return out_; }

 private:
  void extend(Vertex tail, VertexSet open) {
    if (out_.truncated) return;
    const int len = static_cast<int>(path_.size());
    if (len == target_) {
      // Second vertex below the last one picks one of the two orientations.
      if (g_.adjacent(tail, start_) && path_[1] < path_.back()) {
        if (out_.cycles.size() == cap_) {
          out_.truncated = true;
          return;
        }
        out_.cycles.push_back({path_});
      }
      return;
    }
    VertexSet reachable = reach(g_, g_.neighbors(tail) & open, open);
    if (len + reachable.size() < target_) return;
    for (Vertex v : g_.neighbors(tail) & open) {
      path_.push_back(v);
      VertexSet next = open;
      next.erase(v);
      extend(v, next);
      path_.pop_back();
    }
  }

  const Graph& g_;
  int target_;
  std::size_t cap_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  CycleList out_;
};

}  // namespace

CycleList all_longest_cycles(const Graph& g, std::size_t cap) {
  Circumference c = circumference(g);
  if (!c.witness) throw GraphError("graph is acyclic; no longest cycle to enumerate");
  CycleEnumerator e(g, c.length, cap);
  e.run();
  return std::move(e.result());
}

}  // namespace toughcirc
