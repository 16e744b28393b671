#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "toughcirc/graph.hpp"

namespace toughcirc {

/// Non-negative rational in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

/// Exact toughness. `infinite` holds exactly for complete graphs; otherwise
/// `value` = |witness_cut| / s(G - witness_cut) is the minimum over all
/// disconnecting sets.
struct Toughness {
  bool infinite = false;
  Rational value;
  VertexSet witness_cut;

  std::string str() const { return infinite ? "inf" : value.str(); }
  /// Comparison against a finite threshold; infinity exceeds everything.
  bool greater_than(Rational t) const { return infinite || value > t; }
  bool at_least(Rational t) const { return infinite || value >= t; }
  friend bool operator==(const Toughness& a, const Toughness& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

/// Simple cycle v1..vt (t >= 3) read in stored order; v_t closes to v_1.
struct OrientedCycle {
  std::vector<Vertex> verts;

  int length() const { return static_cast<int>(verts.size()); }
  VertexSet vertex_set() const;
  /// Vertex at position i taken modulo the length (negative i allowed).
  Vertex at(int i) const {
    const int t = length();
    return verts[((i % t) + t) % t];
  }
  OrientedCycle reversed() const;
  /// Least rotation of the lexicographically smaller orientation.
  OrientedCycle canonical() const;
  bool operator==(const OrientedCycle&) const = default;
  auto operator<=>(const OrientedCycle&) const = default;
};

/// Simple path; a single vertex is a path of length 0.
struct Path {
  std::vector<Vertex> verts;

  int length() const { return static_cast<int>(verts.size()) - 1; }
  Vertex front() const { return verts.front(); }
  Vertex back() const { return verts.back(); }
  VertexSet vertex_set() const;
  Path reversed() const;
  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

bool is_valid_cycle(const Graph& g, const OrientedCycle& c);
bool is_valid_path(const Graph& g, const Path& p);

/// Minimum number of vertices whose removal disconnects G or leaves a single
/// vertex; n-1 for complete graphs. Max-flow over non-adjacent pairs.
int vertex_connectivity(const Graph& g);

/// Exact toughness. Enumerates cuts by increasing size, keeping only cuts in
/// which every removed vertex touches at least two remaining components,
/// and stops once |S| / (n - |S|) can no longer beat the best ratio.
Toughness toughness(const Graph& g);

/// Reference toughness over every vertex subset; exponential, for checking.
Toughness toughness_exhaustive(const Graph& g);

struct Circumference {
  /// Longest cycle length. Acyclic graphs report 1 (no edges) or 2 (at least
  /// one edge); the empty graph reports 0.
  int length = 0;
  std::optional<OrientedCycle> witness;
};

/// Exact circumference by branch and bound over simple paths.
Circumference circumference(const Graph& g);

bool is_hamiltonian(const Graph& g);

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

struct PathList {
  std::vector<Path> paths;
  bool truncated = false;
};

/// A longest simple path of G - forbidden (lexicographically least among
/// the longest, oriented with front <= back); nullopt when nothing remains.
std::optional<Path> longest_path_in(const Graph& g, VertexSet forbidden);

/// Every longest path of G - forbidden, one orientation each (front <= back),
/// sorted lexicographically and truncated to `cap`.
PathList longest_paths_in(const Graph& g, VertexSet forbidden, std::size_t cap = kUnlimited);

/// Length of a longest x-y path inside `allowed`, or -1 when none exists.
int longest_path_between(const Graph& g, Vertex x, Vertex y, VertexSet allowed);

struct CycleList {
  std::vector<OrientedCycle> cycles;
  bool truncated = false;
};

/// Every longest cycle in canonical form, sorted; throws GraphError on an
/// acyclic graph.
CycleList all_longest_cycles(const Graph& g, std::size_t cap = kUnlimited);

}  // namespace toughcirc
