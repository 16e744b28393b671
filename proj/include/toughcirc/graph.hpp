#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toughcirc {

using Vertex = int;

/// Largest vertex count supported; adjacency rows are single 64-bit words.
inline constexpr int kMaxVertices = 64;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 input. `offset` is the zero-based byte offset of the
/// first offending character (or the input length for truncated words).
class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : GraphError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A subset of {0..63}, stored as a bit mask.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  /// {0..n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex first() const { return std::countr_zero(bits_); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate pairs collapse; loops and
  /// out-of-range endpoints throw GraphError.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(rows_[v]); }
  int degree(Vertex v) const { return std::popcount(rows_[v]); }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

inline Graph from_edges(int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

Graph complete(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen();
/// Erdos-Renyi G(n, p). The bit stream depends only on the seed, so the
/// output is reproducible across platforms.
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);
/// Subgraph induced by `keep`, vertices renumbered in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

int min_degree(const Graph& g);

struct Components {
  int count = 0;
  /// Component id per vertex; -1 for removed vertices.
  std::vector<int> label;
};

/// Connected components of G minus `removed`.
Components components(const Graph& g, VertexSet removed = {});
/// Component count only; the hot path of the cut enumerations.
int count_components(const Graph& g, VertexSet alive);
bool is_connected(const Graph& g);

/// Length of a shortest cycle, or 0 when the graph is acyclic.
int girth(const Graph& g);

bool is_petersen(const Graph& g);

/// Explicit isomorphism search by backtracking with degree filtering.
/// Returns a mapping a -> b, or nullopt when the graphs are not isomorphic.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace toughcirc
