#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toughcirc/graph.hpp"
#include "toughcirc/invariants.hpp"

namespace toughcirc {

/// A cycle C cut into elementary segments by the attachment vertices
/// N_C(x) + N_C(y) of an external path P = x..y.
///
/// Segment i runs forward along the stored orientation of C from xi[i] to
/// xi[i+1] (indices mod s). Every h-th successor/predecessor is index
/// arithmetic modulo |C| on that orientation.
class SegmentDecomposition {
 public:
  SegmentDecomposition(const Graph& g, OrientedCycle cycle, Path path);

  const OrientedCycle& cycle() const { return cycle_; }
  const Path& path() const { return path_; }
  int s() const { return static_cast<int>(xi_pos_.size()); }
  /// Attachment vertices in cyclic order; xi(0) has the least position.
  Vertex xi(int i) const { return cycle_.at(xi_pos_[mod_s(i)]); }
  const std::vector<int>& xi_positions() const { return xi_pos_; }
  VertexSet attachments() const { return attach_; }
  VertexSet cycle_neighbors_of_x() const { return nx_; }
  VertexSet cycle_neighbors_of_y() const { return ny_; }
  bool symmetric_attachment() const { return nx_ == ny_; }

  /// |I_i|, the number of cycle edges on segment i.
  int segment_length(int i) const;
  /// xi(i) .. xi(i+1) inclusive.
  std::vector<Vertex> segment(int i) const;
  /// Segment minus its two attachment endpoints.
  std::vector<Vertex> interior(int i) const;
  VertexSet interior_set(int i) const;
  /// Segment whose interior holds v, or -1.
  int interior_segment_of(Vertex v) const { return seg_of_[v]; }

  /// Position of v on the cycle, or -1.
  int pos(Vertex v) const { return pos_[v]; }
  bool on_cycle(Vertex v) const { return pos_[v] >= 0; }
  /// v^{+h} (negative h gives predecessors).
  Vertex succ(Vertex v, int h = 1) const { return cycle_.at(pos_[v] + h); }
  Vertex pred(Vertex v, int h = 1) const { return cycle_.at(pos_[v] - h); }
  /// Number of edges on the forward arc u -> v.
  int forward_distance(Vertex u, Vertex v) const;
  /// Vertices u, u^+, ..., v.
  std::vector<Vertex> forward_arc(Vertex u, Vertex v) const;
  /// Vertices u, u^-, ..., v.
  std::vector<Vertex> backward_arc(Vertex u, Vertex v) const;

  /// Vertices outside C and P; intermediate paths route through these.
  VertexSet outside() const { return outside_; }

 private:
  int mod_s(int i) const {
    const int k = s();
    return ((i % k) + k) % k;
  }

  OrientedCycle cycle_;
  Path path_;
  std::vector<int> pos_;
  std::vector<int> xi_pos_;
  std::vector<int> seg_of_;
  VertexSet attach_;
  VertexSet nx_;
  VertexSet ny_;
  VertexSet outside_;
};

/// Builds the decomposition; throws GraphError when P meets C or an endpoint
/// of P has no neighbor on C.
SegmentDecomposition segment_decomposition(const Graph& g, const OrientedCycle& c, const Path& p);

/// Path z..w with z in the interior of segment a, w in the interior of
/// segment b (a < b), internal vertices outside C and P.
struct IntermediatePath {
  Path path;
  int a = 0;
  int b = 0;
  int length() const { return path.length(); }
  Vertex z() const { return path.front(); }
  Vertex w() const { return path.back(); }
};

using IntermediatePathMap = std::map<std::pair<int, int>, std::vector<IntermediatePath>>;

/// All intermediate paths of length <= max_len, keyed by segment pair (a, b)
/// with a < b. Pairs without paths are absent from the map.
IntermediatePathMap enumerate_intermediate_paths(const Graph& g, const SegmentDecomposition& d, int max_len);

/// True when no intermediate path of length >= 2 joins segments a and b,
/// i.e. every member of the intermediate set is a single edge.
bool intermediate_set_is_edges(const Graph& g, const SegmentDecomposition& d, int a, int b);

/// Intermediate edges between the interiors of segments a and b.
std::vector<Edge> intermediate_edges(const Graph& g, const SegmentDecomposition& d, int a, int b);

/// A candidate rewiring of C. `delta` is result length minus |C|.
struct SurgeryMove {
  std::string name;
  OrientedCycle result;
  int delta = 0;
  /// Arc lengths dropped from C and the lengths of the inserted pieces; the
  /// splice identity reads |C'| = |C| - dropped_a - dropped_b + bridge + path + 2.
  int dropped_a = 0;
  int dropped_b = 0;
  int bridge_length = 0;
  int path_length = 0;
};

/// Every valid splice of P and L into C: both orientations of P, dropping
/// either the arcs xi_a..z and xi_b..w or the arcs z..xi_{a+1} and
/// w..xi_{b+1}. Throws GraphError when a == b or L does not join the
/// interiors of segments a and b.
std::vector<SurgeryMove> splice_variants(const Graph& g, const SegmentDecomposition& d, const Path& l, int a, int b);

/// The longest valid splice variant, or nullopt.
std::optional<SurgeryMove> splice_intermediate(const Graph& g, const SegmentDecomposition& d, const Path& l, int a,
                                               int b);

/// Replaces segment a by xi_a, P, xi_{a+1} when the endpoints of P see both
/// ends of the segment. Every valid replacement is returned, including ones
/// that do not lengthen the cycle.
std::vector<SurgeryMove> insertion_moves(const Graph& g, const SegmentDecomposition& d);

/// Longer-cycle constructions from the forbidden configurations of the
/// extremality claims (segment-end chords, crossing chords around xi_b, and
/// detours Q from P into a segment interior). Only strictly lengthening,
/// validated cycles are returned; a longest C therefore yields nothing.
std::vector<SurgeryMove> claim_moves(const Graph& g, const SegmentDecomposition& d, int max_len = 3);

struct SurgeryLimits {
  int max_intermediate_len = 3;
  int path_candidates = 8;
  int restarts = 16;
};

/// Best strictly lengthening move over all catalogued constructions, or
/// nullopt. Throws GraphError when c is not a cycle of g.
std::optional<SurgeryMove> best_improving_move(const Graph& g, const OrientedCycle& c,
                                               const SurgeryLimits& limits = {});

std::optional<OrientedCycle> improve_once(const Graph& g, const OrientedCycle& c, const SurgeryLimits& limits = {});

/// Greedy DFS cycle plus improve_once to a fixed point, over several seeded
/// restarts. nullopt iff g is acyclic.
std::optional<OrientedCycle> heuristic_longest_cycle(const Graph& g, std::uint64_t seed,
                                                     const SurgeryLimits& limits = {});

}  // namespace toughcirc
