#include "toughcirc/surgery.hpp"

#include <algorithm>
#include <random>

namespace toughcirc {

SegmentDecomposition::SegmentDecomposition(const Graph& g, OrientedCycle cycle, Path path)
    : cycle_(std::move(cycle)), path_(std::move(path)) {
  if (!is_valid_cycle(g, cycle_)) throw GraphError("segment decomposition needs a valid cycle");
  if (!is_valid_path(g, path_)) throw GraphError("segment decomposition needs a valid path");
  const VertexSet on_c = cycle_.vertex_set();
  if (!(on_c & path_.vertex_set()).empty()) throw GraphError("path shares vertices with the cycle");
  nx_ = g.neighbors(path_.front()) & on_c;
  ny_ = g.neighbors(path_.back()) & on_c;
  if (nx_.empty() || ny_.empty()) throw GraphError("path endpoint has no neighbor on the cycle");
  attach_ = nx_ | ny_;
  outside_ = g.vertices() - on_c - path_.vertex_set();

  pos_.assign(g.order(), -1);
  for (int i = 0; i < cycle_.length(); ++i) pos_[cycle_.verts[i]] = i;
  for (int i = 0; i < cycle_.length(); ++i) {
    if (attach_.contains(cycle_.verts[i])) xi_pos_.push_back(i);
  }
  seg_of_.assign(g.order(), -1);
  for (int i = 0; i < s(); ++i) {
    for (Vertex v : interior(i)) seg_of_[v] = i;
  }
}

int SegmentDecomposition::segment_length(int i) const {
  if (s() == 1) return cycle_.length();
  const int t = cycle_.length();
  return ((xi_pos_[mod_s(i + 1)] - xi_pos_[mod_s(i)]) % t + t) % t;
}

std::vector<Vertex> SegmentDecomposition::segment(int i) const {
  std::vector<Vertex> out;
  const int start = xi_pos_[mod_s(i)];
  for (int k = 0; k <= segment_length(i); ++k) out.push_back(cycle_.at(start + k));
  return out;
}

std::vector<Vertex> SegmentDecomposition::interior(int i) const {
  auto seg = segment(i);
  return {seg.begin() + 1, seg.end() - 1};
}

VertexSet SegmentDecomposition::interior_set(int i) const {
  VertexSet out;
  for (Vertex v : interior(i)) out.insert(v);
  return out;
}

int SegmentDecomposition::forward_distance(Vertex u, Vertex v) const {
  const int t = cycle_.length();
  return ((pos_[v] - pos_[u]) % t + t) % t;
}

std::vector<Vertex> SegmentDecomposition::forward_arc(Vertex u, Vertex v) const {
  std::vector<Vertex> out;
  for (int k = 0; k <= forward_distance(u, v); ++k) out.push_back(cycle_.at(pos_[u] + k));
  return out;
}

std::vector<Vertex> SegmentDecomposition::backward_arc(Vertex u, Vertex v) const {
  std::vector<Vertex> out;
  for (int k = 0; k <= forward_distance(v, u); ++k) out.push_back(cycle_.at(pos_[u] - k));
  return out;
}

SegmentDecomposition segment_decomposition(const Graph& g, const OrientedCycle& c, const Path& p) {
  return SegmentDecomposition(g, c, p);
}

namespace {

void collect_intermediate(const Graph& g, const SegmentDecomposition& d, int a, int max_len,
                          std::vector<Vertex>& path, VertexSet used, IntermediatePathMap& out) {
  const Vertex tail = path.back();
  const int edges = static_cast<int>(path.size()) - 1;
  if (edges + 1 > max_len) return;
  for (Vertex w : g.neighbors(tail)) {
    int b = d.interior_segment_of(w);
    if (b > a) {
      std::vector<Vertex> verts = path;
      verts.push_back(w);
      out[{a, b}].push_back({Path{std::move(verts)}, a, b});
    }
  }
  if (edges + 2 > max_len) return;
  for (Vertex u : g.neighbors(tail) & d.outside()) {
    if (used.contains(u)) continue;
    path.push_back(u);
    VertexSet next = used;
    next.insert(u);
    collect_intermediate(g, d, a, max_len, path, next, out);
    path.pop_back();
  }
}

}  // namespace

IntermediatePathMap enumerate_intermediate_paths(const Graph& g, const SegmentDecomposition& d, int max_len) {
  if (max_len < 1) throw GraphError("intermediate path bound must be >= 1");
  IntermediatePathMap out;
  for (int a = 0; a < d.s(); ++a) {
    for (Vertex z : d.interior(a)) {
      std::vector<Vertex> path{z};
      collect_intermediate(g, d, a, max_len, path, VertexSet::single(z), out);
    }
  }
  for (auto& [key, list] : out) {
    std::sort(list.begin(), list.end(), [](const IntermediatePath& l, const IntermediatePath& r) {
      if (l.length() != r.length()) return l.length() < r.length();
      return l.path < r.path;
    });
  }
  return out;
}

bool intermediate_set_is_edges(const Graph& g, const SegmentDecomposition& d, int a, int b) {
  const VertexSet ia = d.interior_set(a);
  const VertexSet ib = d.interior_set(b);
  Components comps = components(g, g.vertices() - d.outside());
  for (int k = 0; k < comps.count; ++k) {
    VertexSet touch;
    for (Vertex v : d.outside()) {
      if (comps.label[v] == k) touch |= g.neighbors(v);
    }
    if (!(touch & ia).empty() && !(touch & ib).empty()) return false;
  }
  return true;
}

std::vector<Edge> intermediate_edges(const Graph& g, const SegmentDecomposition& d, int a, int b) {
  std::vector<Edge> out;
  const VertexSet ib = d.interior_set(b);
  for (Vertex z : d.interior(a)) {
    for (Vertex w : g.neighbors(z) & ib) out.emplace_back(z, w);
  }
  return out;
}

namespace {

// Cycle-arc spans used by the constructions. A span whose start is one step
// past its end is empty; full wraps never occur in a valid rewiring.
class Builder {
 public:
  explicit Builder(const SegmentDecomposition& d) : d_(d) {}

  Builder& add(Vertex v) {
    seq_.push_back(v);
    return *this;
  }
  template <typename It>
  Builder& add(It first, It last) {
    seq_.insert(seq_.end(), first, last);
    return *this;
  }
  Builder& add(const std::vector<Vertex>& vs) { return add(vs.begin(), vs.end()); }
  Builder& fwd(Vertex u, Vertex v) {
    if (u != d_.succ(v)) add(d_.forward_arc(u, v));
    return *this;
  }
  Builder& bwd(Vertex u, Vertex v) {
    if (u != d_.pred(v)) add(d_.backward_arc(u, v));
    return *this;
  }
  OrientedCycle build() { return {std::move(seq_)}; }

 private:
  const SegmentDecomposition& d_;
  std::vector<Vertex> seq_;
};

std::optional<SurgeryMove> finish(const Graph& g, const SegmentDecomposition& d, std::string name,
                                  OrientedCycle result) {
  if (!is_valid_cycle(g, result)) return std::nullopt;
  SurgeryMove m;
  m.name = std::move(name);
  m.delta = result.length() - d.cycle().length();
  m.result = std::move(result);
  m.path_length = d.path().length();
  return m;
}

// Both orientations of P.
std::vector<std::vector<Vertex>> path_orientations(const Path& p) {
  if (p.verts.size() == 1) return {p.verts};
  return {p.verts, p.reversed().verts};
}

}  // namespace

std::vector<SurgeryMove> splice_variants(const Graph& g, const SegmentDecomposition& d, const Path& l, int a,
                                         int b) {
  if (a == b) throw GraphError("splice needs two distinct segments");
  if (a < 0 || b < 0 || a >= d.s() || b >= d.s()) throw GraphError("segment index out of range");
  Path bridge = l;
  if (d.interior_segment_of(bridge.front()) == b && d.interior_segment_of(bridge.back()) == a) {
    bridge = bridge.reversed();
  }
  if (d.interior_segment_of(bridge.front()) != a || d.interior_segment_of(bridge.back()) != b) {
    throw GraphError("intermediate path endpoints are not in the named segment interiors");
  }
  if (bridge.length() < 1 || !is_valid_path(g, bridge)) throw GraphError("intermediate path is not a path");
  for (std::size_t i = 1; i + 1 < bridge.verts.size(); ++i) {
    if (!d.outside().contains(bridge.verts[i])) throw GraphError("intermediate path runs through C or P");
  }

  const Vertex z = bridge.front();
  const Vertex w = bridge.back();
  const std::vector<Vertex> mid(bridge.verts.begin() + 1, bridge.verts.end() - 1);
  const Vertex xa = d.xi(a);
  const Vertex xa1 = d.xi(a + 1);
  const Vertex xb = d.xi(b);
  const Vertex xb1 = d.xi(b + 1);

  std::vector<SurgeryMove> out;
  for (const auto& pv : path_orientations(d.path())) {
    // xi_a P xi_b <-C z L w C-> xi_a, dropping xi_a..z and xi_b..w.
    auto fwd = finish(g, d, "lemma2-splice",
                      Builder(d).add(xa).add(pv).bwd(xb, z).add(mid).fwd(w, d.pred(xa)).build());
    if (fwd) {
      fwd->dropped_a = d.forward_distance(xa, z);
      fwd->dropped_b = d.forward_distance(xb, w);
      fwd->bridge_length = bridge.length();
      out.push_back(std::move(*fwd));
    }
    // Mirror image: xi_{a+1} P xi_{b+1} C-> z L w <-C xi_{a+1}.
    auto bwd = finish(g, d, "lemma2-splice-mirror",
                      Builder(d).add(xa1).add(pv).fwd(xb1, z).add(mid).bwd(w, d.succ(xa1)).build());
    if (bwd) {
      bwd->dropped_a = d.forward_distance(z, xa1);
      bwd->dropped_b = d.forward_distance(w, xb1);
      bwd->bridge_length = bridge.length();
      out.push_back(std::move(*bwd));
    }
  }
  return out;
}

std::optional<SurgeryMove> splice_intermediate(const Graph& g, const SegmentDecomposition& d, const Path& l, int a,
                                               int b) {
  auto all = splice_variants(g, d, l, a, b);
  if (all.empty()) return std::nullopt;
  return *std::max_element(all.begin(), all.end(),
                           [](const SurgeryMove& x, const SurgeryMove& y) { return x.delta < y.delta; });
}

std::vector<SurgeryMove> insertion_moves(const Graph& g, const SegmentDecomposition& d) {
  std::vector<SurgeryMove> out;
  if (d.s() < 2) return out;
  for (const auto& pv : path_orientations(d.path())) {
    for (int a = 0; a < d.s(); ++a) {
      const Vertex xa = d.xi(a);
      auto m = finish(g, d, "insertion", Builder(d).add(xa).add(pv).fwd(d.xi(a + 1), d.pred(xa)).build());
      if (m) {
        m->dropped_a = d.segment_length(a);
        out.push_back(std::move(*m));
      }
    }
  }
  return out;
}

namespace {

void emit_if_longer(const Graph& g, const SegmentDecomposition& d, const char* name, OrientedCycle cycle,
                    std::vector<SurgeryMove>& out) {
  auto m = finish(g, d, name, std::move(cycle));
  if (m && m->delta > 0) out.push_back(std::move(*m));
}

// Detours Q = y..z from a vertex y of P to an interior vertex z of segment a,
// with internal vertices off C and P.
void collect_detours(const Graph& g, const SegmentDecomposition& d, VertexSet targets, int max_len,
                     std::vector<Vertex>& q, VertexSet used, std::vector<std::vector<Vertex>>& out) {
  const int edges = static_cast<int>(q.size()) - 1;
  if (edges + 1 > max_len) return;
  for (Vertex z : g.neighbors(q.back()) & targets) {
    out.push_back(q);
    out.back().push_back(z);
  }
  if (edges + 2 > max_len) return;
  for (Vertex u : g.neighbors(q.back()) & d.outside()) {
    if (used.contains(u)) continue;
    q.push_back(u);
    VertexSet next = used;
    next.insert(u);
    collect_detours(g, d, targets, max_len, q, next, out);
    q.pop_back();
  }
}

void claim_moves_oriented(const Graph& g, const SegmentDecomposition& d, int max_len,
                          std::vector<SurgeryMove>& out) {
  const int s = d.s();
  if (s < 2) return;
  for (const auto& pv : path_orientations(d.path())) {
    // Chord xi_a^- xi_b^+ with xi_a, xi_b, xi_f in cyclic order.
    if (s >= 3) {
      for (int a = 0; a < s; ++a) {
        for (int j = 1; j < s; ++j) {
          for (int k = j + 1; k < s; ++k) {
            const Vertex xa = d.xi(a);
            const Vertex xb = d.xi(a + j);
            const Vertex xf = d.xi(a + k);
            if (!g.adjacent(d.pred(xa), d.succ(xb))) continue;
            if (g.adjacent(d.pred(xf), xa)) {
              emit_if_longer(g, d, "claim3-a",
                             Builder(d)
                                 .add(xf)
                                 .add(pv)
                                 .bwd(xb, xa)
                                 .bwd(d.pred(xf), d.succ(xb))
                                 .bwd(d.pred(xa), d.succ(xf))
                                 .build(),
                             out);
            }
            if (g.adjacent(d.pred(xf), xb)) {
              emit_if_longer(g, d, "claim3-b",
                             Builder(d)
                                 .add(xf)
                                 .add(pv)
                                 .fwd(xa, xb)
                                 .bwd(d.pred(xf), d.succ(xb))
                                 .bwd(d.pred(xa), d.succ(xf))
                                 .build(),
                             out);
            }
          }
        }
      }
    }

    for (int a = 0; a < s; ++a) {
      for (int b = 0; b < s; ++b) {
        if (a == b) continue;
        const Vertex xa = d.xi(a);
        const Vertex xb = d.xi(b);
        const Vertex xa_plus = d.succ(xa);
        // Chord xi_a^+ w with w on xi_b .. xi_a^-.
        for (Vertex w : d.forward_arc(xb, d.pred(xa))) {
          if (!g.adjacent(xa_plus, w)) continue;
          if (g.adjacent(d.pred(xb), d.pred(w))) {
            emit_if_longer(g, d, "claim4-a",
                           Builder(d)
                               .add(xa)
                               .add(pv)
                               .fwd(xb, d.pred(w))
                               .bwd(d.pred(xb), xa_plus)
                               .fwd(w, d.pred(xa))
                               .build(),
                           out);
          }
          if (g.adjacent(d.pred(xb), d.succ(w))) {
            emit_if_longer(g, d, "claim4-b",
                           Builder(d)
                               .add(xa)
                               .add(pv)
                               .fwd(xb, w)
                               .fwd(xa_plus, d.pred(xb))
                               .fwd(d.succ(w), d.pred(xa))
                               .build(),
                           out);
          }
        }
        // Chord xi_a^+ w with w on xi_b^+ .. xi_a, crossed by xi_b^+ w^+.
        for (Vertex w : d.forward_arc(d.succ(xb), xa)) {
          if (!g.adjacent(xa_plus, w) || !g.adjacent(d.succ(xb), d.succ(w))) continue;
          emit_if_longer(g, d, "claim5",
                         Builder(d)
                             .add(xa)
                             .add(pv)
                             .bwd(xb, xa_plus)
                             .bwd(w, d.succ(xb))
                             .fwd(d.succ(w), d.pred(xa))
                             .build(),
                         out);
        }
      }
    }

    // Detour Q from P into the interior of a segment whose ends see x and y.
    const Vertex x1 = pv.front();
    const Vertex x2 = pv.back();
    for (int a = 0; a < s; ++a) {
      const Vertex xa = d.xi(a);
      const Vertex xa1 = d.xi(a + 1);
      if (!g.adjacent(x1, xa) || !g.adjacent(x2, xa1)) continue;
      const VertexSet targets = d.interior_set(a);
      if (targets.empty()) continue;
      for (std::size_t iy = 0; iy < pv.size(); ++iy) {
        const Vertex y = pv[iy];
        std::vector<std::vector<Vertex>> detours;
        std::vector<Vertex> q{y};
        collect_detours(g, d, targets, max_len, q, VertexSet::single(y), detours);
        for (const auto& detour : detours) {
          const Vertex z = detour.back();
          const std::vector<Vertex> mid(detour.begin() + 1, detour.end() - 1);
          const std::vector<Vertex> mid_rev(mid.rbegin(), mid.rend());
          const std::vector<Vertex> head(pv.begin(), pv.begin() + iy + 1);  // x1 .. y
          const std::vector<Vertex> tail(pv.begin() + iy, pv.end());        // y .. x2
          emit_if_longer(g, d, "claim17-a", Builder(d).add(xa).add(head).add(mid).fwd(z, d.pred(xa)).build(), out);
          emit_if_longer(g, d, "claim17-b",
                         Builder(d).add(z).add(mid_rev).add(tail).fwd(xa1, d.pred(z)).build(), out);
          if (g.adjacent(x1, x2) && y != x1 && y != x2) {
            emit_if_longer(g, d, "claim17-c",
                           Builder(d)
                               .add(xa)
                               .add(x1)
                               .add(tail.rbegin(), tail.rend())
                               .add(mid)
                               .fwd(z, d.pred(xa))
                               .build(),
                           out);
            emit_if_longer(g, d, "claim17-d",
                           Builder(d)
                               .add(z)
                               .add(mid_rev)
                               .add(head.rbegin(), head.rend())
                               .add(x2)
                               .fwd(xa1, d.pred(z))
                               .build(),
                           out);
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<SurgeryMove> claim_moves(const Graph& g, const SegmentDecomposition& d, int max_len) {
  std::vector<SurgeryMove> out;
  claim_moves_oriented(g, d, max_len, out);
  // The mirrored statements are the same constructions on the reversed cycle.
  SegmentDecomposition mirror(g, d.cycle().reversed(), d.path());
  claim_moves_oriented(g, mirror, max_len, out);
  return out;
}

namespace {

void consider(std::optional<SurgeryMove>& best, SurgeryMove m) {
  if (m.delta <= 0) return;
  if (!best || m.delta > best->delta) best = std::move(m);
}

bool endpoints_attached(const Graph& g, const Path& p, VertexSet on_c) {
  return !(g.neighbors(p.front()) & on_c).empty() && !(g.neighbors(p.back()) & on_c).empty();
}

}  // namespace

std::optional<SurgeryMove> best_improving_move(const Graph& g, const OrientedCycle& c, const SurgeryLimits& limits) {
  if (!is_valid_cycle(g, c)) throw GraphError("improvement needs a valid cycle");
  const VertexSet on_c = c.vertex_set();

  std::vector<Path> candidates;
  for (auto& p : longest_paths_in(g, on_c, static_cast<std::size_t>(limits.path_candidates)).paths) {
    if (endpoints_attached(g, p, on_c)) candidates.push_back(std::move(p));
  }
  // Single external vertices widen the catalogue beyond the longest paths.
  for (Vertex v : g.vertices() - on_c) {
    Path single{{v}};
    if (endpoints_attached(g, single, on_c) &&
        std::find(candidates.begin(), candidates.end(), single) == candidates.end()) {
      candidates.push_back(std::move(single));
    }
  }

  std::optional<SurgeryMove> best;
  for (const Path& p : candidates) {
    SegmentDecomposition d(g, c, p);
    for (auto& m : insertion_moves(g, d)) consider(best, std::move(m));
    for (auto& [key, list] : enumerate_intermediate_paths(g, d, limits.max_intermediate_len)) {
      for (const auto& l : list) {
        for (auto& m : splice_variants(g, d, l.path, l.a, l.b)) consider(best, std::move(m));
      }
    }
    for (auto& m : claim_moves(g, d, limits.max_intermediate_len)) consider(best, std::move(m));
  }
  return best;
}

std::optional<OrientedCycle> improve_once(const Graph& g, const OrientedCycle& c, const SurgeryLimits& limits) {
  auto m = best_improving_move(g, c, limits);
  if (!m) return std::nullopt;
  return std::move(m->result);
}

namespace {

bool has_cycle(const Graph& g) { return g.edge_count() > g.order() - count_components(g, g.vertices()); }

// Greedy walk: always step to the unvisited neighbor with the fewest
// unvisited neighbors (ties broken at random), then close the cycle through
// the earliest path vertex adjacent to the tail.
std::optional<OrientedCycle> greedy_cycle(const Graph& g, std::mt19937_64& rng) {
  const int n = g.order();
  Vertex start = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
  std::vector<Vertex> path{start};
  VertexSet visited = VertexSet::single(start);
  while (true) {
    const VertexSet open = g.neighbors(path.back()) - visited;
    if (open.empty()) break;
    int best_score = n + 1;
    std::vector<Vertex> ties;
    for (Vertex v : open) {
      int score = (g.neighbors(v) - visited).size();
      if (score < best_score) {
        best_score = score;
        ties.clear();
      }
      if (score == best_score) ties.push_back(v);
    }
    Vertex next = ties[rng() % ties.size()];
    path.push_back(next);
    visited.insert(next);
  }
  const Vertex tail = path.back();
  for (std::size_t i = 0; i + 2 < path.size(); ++i) {
    if (g.adjacent(path[i], tail)) return OrientedCycle{{path.begin() + static_cast<std::ptrdiff_t>(i), path.end()}};
  }
  return std::nullopt;
}

// Any cycle, from the first DFS back edge.
OrientedCycle some_cycle(const Graph& g) {
  std::vector<int> parent(g.order(), -2);
  std::vector<int> depth(g.order(), 0);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (parent[v] == -2) {
          parent[v] = u;
          depth[v] = depth[u] + 1;
          stack.push_back(v);
        } else if (v != parent[u] && parent[v] != u) {
          // Non-tree edge u-v: climb to the common ancestor.
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{v};
          while (left.back() != right.back()) {
            if (depth[left.back()] >= depth[right.back()]) {
              left.push_back(parent[left.back()]);
            } else {
              right.push_back(parent[right.back()]);
            }
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          return OrientedCycle{left};
        }
      }
    }
  }
  throw GraphError("graph is acyclic");
}

}  // namespace

std::optional<OrientedCycle> heuristic_longest_cycle(const Graph& g, std::uint64_t seed, const SurgeryLimits& limits) {
  if (!has_cycle(g)) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::optional<OrientedCycle> best;
  const int rounds = std::max(1, limits.restarts);
  for (int r = 0; r < rounds; ++r) {
    auto cycle = greedy_cycle(g, rng);
    if (!cycle) {
      if (best) continue;
      cycle = some_cycle(g);
    }
    while (auto next = improve_once(g, *cycle, limits)) cycle = std::move(next);
    if (!best || cycle->length() > best->length()) best = std::move(cycle);
    if (best->length() == g.order()) break;
  }
  if (!best) best = some_cycle(g);
  return best->canonical();
}

}  // namespace toughcirc
