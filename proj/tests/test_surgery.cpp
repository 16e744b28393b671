#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "toughcirc/enumerate.hpp"
#include "toughcirc/surgery.hpp"

using namespace toughcirc;

namespace {

const OrientedCycle kHex{{0, 1, 2, 3, 4, 5}};

// C6 on 0..5 with extra vertices and edges.
Graph hex_plus(int n, std::vector<Edge> extra) {
  for (int i = 0; i < 6; ++i) extra.emplace_back(i, (i + 1) % 6);
  return from_edges(n, extra);
}

bool splice_identity_holds(const SegmentDecomposition& d, const SurgeryMove& m) {
  return m.result.length() ==
         d.cycle().length() - m.dropped_a - m.dropped_b + m.bridge_length + m.path_length + 2;
}

// A random cycle of g found by a randomized DFS, or nothing.
std::optional<OrientedCycle> random_cycle(const Graph& g, std::mt19937_64& rng) {
  const int n = g.order();
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Vertex> walk{static_cast<Vertex>(rng() % n)};
    VertexSet used = VertexSet::single(walk[0]);
    while (true) {
      std::vector<Vertex> options;
      for (Vertex u : g.neighbors(walk.back()) - used) options.push_back(u);
      if (options.empty()) break;
      Vertex u = options[rng() % options.size()];
      walk.push_back(u);
      used.insert(u);
    }
    for (std::size_t i = 0; i + 2 < walk.size(); ++i) {
      if (g.adjacent(walk[i], walk.back())) return OrientedCycle{{walk.begin() + static_cast<std::ptrdiff_t>(i), walk.end()}};
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("surgery") {
  TEST_CASE("segment decomposition, two attachments") {
    Graph g = hex_plus(7, {{6, 0}, {6, 3}});
    SegmentDecomposition d(g, kHex, Path{{6}});
    CHECK(d.s() == 2);
    CHECK(d.xi(0) == 0);
    CHECK(d.xi(1) == 3);
    CHECK(d.segment(0) == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(d.segment(1) == std::vector<Vertex>{3, 4, 5, 0});
    CHECK(d.segment_length(0) == 3);
    CHECK(d.segment_length(1) == 3);
    CHECK(d.interior(0) == std::vector<Vertex>{1, 2});
    CHECK(d.interior_segment_of(4) == 1);
    CHECK(d.interior_segment_of(0) == -1);
    CHECK(d.symmetric_attachment());
    CHECK(d.succ(5) == 0);
    CHECK(d.pred(0) == 5);
    CHECK(d.forward_arc(4, 1) == std::vector<Vertex>{4, 5, 0, 1});
    CHECK(d.backward_arc(1, 4) == std::vector<Vertex>{1, 0, 5, 4});
  }

  TEST_CASE("segment decomposition, one attachment") {
    Graph g = hex_plus(7, {{6, 0}});
    SegmentDecomposition d(g, kHex, Path{{6}});
    CHECK(d.s() == 1);
    CHECK(d.segment_length(0) == 6);
    CHECK(d.interior(0).size() == 5);
    CHECK(claim_moves(g, d).empty());
  }

  TEST_CASE("segment decomposition, path with distinct ends") {
    Graph g = hex_plus(8, {{6, 7}, {6, 0}, {7, 3}});
    SegmentDecomposition d(g, kHex, Path{{6, 7}});
    CHECK(d.s() == 2);
    CHECK(d.xi(0) == 0);
    CHECK(d.xi(1) == 3);
    CHECK_FALSE(d.symmetric_attachment());
  }

  TEST_CASE("segment decomposition rejects bad input") {
    Graph g = hex_plus(8, {{6, 0}});
    CHECK_THROWS_AS(SegmentDecomposition(g, kHex, Path{{7}}), GraphError);     // unattached
    CHECK_THROWS_AS(SegmentDecomposition(g, kHex, Path{{0}}), GraphError);     // on the cycle
    CHECK_THROWS_AS(SegmentDecomposition(g, OrientedCycle{{0, 2, 4}}, Path{{6}}), GraphError);
  }

  TEST_CASE("intermediate paths") {
    Graph plain = hex_plus(7, {{6, 0}, {6, 3}});
    SegmentDecomposition d0(plain, kHex, Path{{6}});
    for (const auto& [key, list] : enumerate_intermediate_paths(plain, d0, 4)) CHECK(list.empty());
    CHECK(intermediate_edges(plain, d0, 0, 1).empty());

    Graph chord = hex_plus(7, {{6, 0}, {6, 3}, {1, 4}});
    SegmentDecomposition d1(chord, kHex, Path{{6}});
    auto map1 = enumerate_intermediate_paths(chord, d1, 3);
    REQUIRE(map1[{0, 1}].size() == 1);
    CHECK(map1[{0, 1}][0].length() == 1);
    CHECK(intermediate_set_is_edges(chord, d1, 0, 1));
    CHECK(intermediate_edges(chord, d1, 0, 1) == std::vector<Edge>{{1, 4}});

    Graph detour = hex_plus(8, {{6, 0}, {6, 3}, {7, 1}, {7, 4}});
    SegmentDecomposition d2(detour, kHex, Path{{6}});
    auto map2 = enumerate_intermediate_paths(detour, d2, 3);
    REQUIRE(map2[{0, 1}].size() == 1);
    CHECK(map2[{0, 1}][0].path.verts == std::vector<Vertex>{1, 7, 4});
    CHECK_FALSE(intermediate_set_is_edges(detour, d2, 0, 1));
    CHECK(enumerate_intermediate_paths(detour, d2, 1)[{0, 1}].empty());
  }

  TEST_CASE("splice on the hexagon with a chord") {
    Graph g = hex_plus(7, {{6, 0}, {6, 3}, {1, 4}});
    SegmentDecomposition d(g, kHex, Path{{6}});
    auto m = splice_intermediate(g, d, Path{{1, 4}}, 0, 1);
    REQUIRE(m.has_value());
    CHECK(m->result.length() == 7);
    CHECK(is_valid_cycle(g, m->result));
    CHECK(m->delta == 1);
    CHECK(splice_identity_holds(d, *m));
    bool found_listed = false;
    for (const auto& v : splice_variants(g, d, Path{{1, 4}}, 0, 1)) {
      CHECK(splice_identity_holds(d, v));
      if (v.result == OrientedCycle{{0, 6, 3, 2, 1, 4, 5}}) {
        found_listed = true;
        CHECK(v.dropped_a == 1);
        CHECK(v.dropped_b == 1);
        CHECK(v.bridge_length == 1);
        CHECK(v.path_length == 0);
      }
    }
    CHECK(found_listed);
    CHECK_THROWS_AS(splice_intermediate(g, d, Path{{1, 2}}, 0, 1), GraphError);
  }

  TEST_CASE("splice absent without an intermediate path") {
    Graph g = hex_plus(7, {{6, 0}, {6, 3}});
    SegmentDecomposition d(g, kHex, Path{{6}});
    CHECK(enumerate_intermediate_paths(g, d, 5)[{0, 1}].empty());
    CHECK_FALSE(improve_once(g, kHex).has_value());
  }

  TEST_CASE("splice with a two-vertex external path") {
    Graph g = hex_plus(8, {{6, 7}, {6, 0}, {7, 3}, {1, 4}});
    SegmentDecomposition d(g, kHex, Path{{6, 7}});
    auto m = splice_intermediate(g, d, Path{{1, 4}}, 0, 1);
    REQUIRE(m.has_value());
    CHECK(m->result.length() == 8);
    CHECK(is_valid_cycle(g, m->result));
    CHECK(splice_identity_holds(d, *m));
  }

  TEST_CASE("claim move lengthens a non-longest cycle") {
    // 6 sees 0, 2 and 4; chord 5-3 and edge 3-0 close a 7-cycle.
    Graph g = hex_plus(7, {{6, 0}, {6, 2}, {6, 4}, {5, 3}, {3, 0}});
    SegmentDecomposition d(g, kHex, Path{{6}});
    auto moves = claim_moves(g, d);
    REQUIRE_FALSE(moves.empty());
    bool lengthened = false;
    for (const auto& m : moves) {
      CHECK(is_valid_cycle(g, m.result));
      CHECK(m.delta == m.result.length() - 6);
      lengthened = lengthened || m.delta >= 1;
    }
    CHECK(lengthened);
  }

  TEST_CASE("insertion move") {
    Graph g = hex_plus(7, {{6, 0}, {6, 1}});
    SegmentDecomposition d(g, kHex, Path{{6}});
    auto moves = insertion_moves(g, d);
    REQUIRE_FALSE(moves.empty());
    CHECK(moves[0].result.length() == 7);
    CHECK(is_valid_cycle(g, moves[0].result));
  }

  TEST_CASE("improve_once examples") {
    Graph g = hex_plus(7, {{6, 0}, {6, 3}, {1, 4}});
    auto better = improve_once(g, kHex);
    REQUIRE(better.has_value());
    CHECK(better->length() == 7);
    CHECK(is_valid_cycle(g, *better));

    CHECK_FALSE(improve_once(complete(5), OrientedCycle{{0, 1, 2, 3, 4}}).has_value());
    CHECK_FALSE(improve_once(cycle_graph(5), OrientedCycle{{0, 1, 2, 3, 4}}).has_value());
  }

  TEST_CASE("heuristic examples") {
    auto k6 = heuristic_longest_cycle(complete(6), 1);
    REQUIRE(k6.has_value());
    CHECK(k6->length() == 6);
    auto c8 = heuristic_longest_cycle(cycle_graph(8), 1);
    REQUIRE(c8.has_value());
    CHECK(c8->length() == 8);
    CHECK_FALSE(heuristic_longest_cycle(path_graph(5), 1).has_value());
    CHECK(heuristic_longest_cycle(petersen(), 3) == heuristic_longest_cycle(petersen(), 3));
  }

  TEST_CASE("fuzz: decompositions and moves stay valid") {
    std::mt19937_64 rng(20240601);
    std::size_t checked = 0;
    for (int round = 0; round < 600; ++round) {
      const int n = 7 + static_cast<int>(rng() % 6);
      Graph g = random_gnp(n, 0.3 + 0.05 * static_cast<double>(rng() % 6), rng());
      auto c = random_cycle(g, rng);
      if (!c) continue;
      REQUIRE(is_valid_cycle(g, *c));
      PathList paths = longest_paths_in(g, c->vertex_set(), 4);
      for (const auto& p : paths.paths) {
        const VertexSet on_c = c->vertex_set();
        if ((g.neighbors(p.front()) & on_c).empty() || (g.neighbors(p.back()) & on_c).empty()) continue;
        SegmentDecomposition d(g, *c, p);
        int total = 0;
        for (int i = 0; i < d.s(); ++i) total += d.segment_length(i);
        REQUIRE(total == c->length());
        for (const auto& m : insertion_moves(g, d)) REQUIRE(is_valid_cycle(g, m.result));
        for (const auto& m : claim_moves(g, d)) {
          REQUIRE(is_valid_cycle(g, m.result));
          REQUIRE(m.delta > 0);
        }
        for (const auto& [key, list] : enumerate_intermediate_paths(g, d, 3)) {
          for (const auto& l : list) {
            REQUIRE(is_valid_path(g, l.path));
            for (const auto& m : splice_variants(g, d, l.path, key.first, key.second)) {
              REQUIRE(is_valid_cycle(g, m.result));
              REQUIRE(splice_identity_holds(d, m));
              ++checked;
            }
          }
        }
        if (auto better = improve_once(g, *c)) {
          REQUIRE(is_valid_cycle(g, *better));
          REQUIRE(better->length() > c->length());
        }
      }
    }
    CHECK(checked > 0);
  }

  TEST_CASE("no move lengthens a longest cycle, connected n <= 7") {
    for (int n = 4; n <= 7; ++n) {
      for (const Graph& g : connected_graphs(n)) {
        if (oracle::longest_cycle(g) < 3) continue;
        for (const auto& c : all_longest_cycles(g).cycles) {
          REQUIRE_FALSE(improve_once(g, c).has_value());
          REQUIRE_FALSE(improve_once(g, c.reversed()).has_value());
        }
      }
    }
  }

  TEST_CASE("heuristic never exceeds the exact value, connected n <= 7") {
    for (int n = 3; n <= 7; ++n) {
      for (const Graph& g : connected_graphs(n)) {
        const int exact = oracle::longest_cycle(g);
        auto h = heuristic_longest_cycle(g, 5);
        if (exact < 3) {
          REQUIRE_FALSE(h.has_value());
          continue;
        }
        REQUIRE(h.has_value());
        REQUIRE(is_valid_cycle(g, *h));
        REQUIRE(h->length() <= exact);
      }
    }
  }
}
