// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "toughcirc/enumerate.hpp"
#include "toughcirc/graph.hpp"
#include "toughcirc/invariants.hpp"
#include "toughcirc/surgery.hpp"
#include "toughcirc/verifier.hpp"

using namespace toughcirc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::string corpus_path(int n) { return std::string(TOUGHCIRC_DATA_DIR) + "/connected_n" + std::to_string(n) + ".g6"; }

// Connected graphs n = 1..8 from the corpus files.
std::vector<Graph> load_corpus() {
  std::vector<Graph> out;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& line : read_lines(corpus_path(n))) out.push_back(parse_graph6(line));
  }
  return out;
}

Outcome criterion_petersen() {
  Outcome o;
  const auto start = Clock::now();
  Graph p = petersen();
  Toughness t = toughness(p);
  if (t.infinite || t.value != Rational::make(4, 3)) o.fail("tau=" + t.str());
  if (vertex_connectivity(p) != 3) o.fail("kappa");
  if (min_degree(p) != 3) o.fail("delta");
  if (circumference(p).length != 9) o.fail("c");
  if (is_hamiltonian(p)) o.fail("hamiltonian");
  if (!is_petersen(p)) o.fail("is_petersen");
  if (check_theorem_1(p).status != Status::PetersenException) o.fail("theorem 1 status");
  if (check_corollary_1(p).status != Status::PetersenException) o.fail("corollary 1 status");
  const double secs = seconds_since(start);
  if (secs >= 1.0) o.fail("runtime " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "tau=4/3 kappa=3 delta=3 c=9 in " + std::to_string(secs) + " s";
  return o;
}

Outcome criterion_sweep(const std::vector<Graph>& corpus, Report& report) {
  Outcome o;
  const auto start = Clock::now();
  VerifyConfig cfg;
  cfg.max_intermediate_len = 8;
  cfg.max_cycles = kUnlimited;
  cfg.max_paths = kUnlimited;
  std::vector<TheoremId> all(kAllTheorems.begin(), kAllTheorems.end());
  report = batch_verify(corpus, all, cfg, 0, "connected n<=8");
  const double secs = seconds_since(start);
  if (report.graphs != 12113) o.fail("expected 12113 graphs, got " + std::to_string(report.graphs));
  if (report.total_counterexamples() != 0) {
    const Verdict& v = report.counterexamples.front();
    o.fail(std::to_string(report.total_counterexamples()) + " counterexamples, first " + v.graph6 + " " +
           theorem_name(v.theorem) + ": " + v.detail);
  }
  for (TheoremId id : all) {
    if (report.count(id, Status::ResourceLimit) != 0) o.fail("resource limit hit for " + theorem_name(id));
  }
  if (report.lemma_stats.truncated) o.fail("lemma enumeration truncated");
  if (secs > 600) o.fail("runtime " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream d;
    d << report.graphs << " graphs, holds:";
    for (TheoremId id : all) d << " " << theorem_name(id) << "=" << report.count(id, Status::Holds);
    d << ", " << secs << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome criterion_sampled() {
  Outcome o;
  const auto start = Clock::now();
  std::vector<Graph> graphs;
  const double ps[] = {0.3, 0.5, 0.7};
  std::mt19937_64 seeds(10000);
  for (int i = 0; i < 10000; ++i) graphs.push_back(random_gnp(10, ps[i % 3], seeds()));
  graphs.push_back(petersen());
  std::vector<TheoremId> all(kAllTheorems.begin(), kAllTheorems.end());
  Report r = batch_verify(graphs, all, {}, 0, "G(10,p)");
  if (r.total_counterexamples() != 0) {
    o.fail(std::to_string(r.total_counterexamples()) + " counterexamples, first " + r.counterexamples[0].graph6);
  }
  for (const auto& v : r.petersen_exceptions) {
    if (!is_petersen(parse_graph6(v.graph6))) o.fail("exception on a non-Petersen graph " + v.graph6);
  }
  const std::size_t exceptions = r.count(TheoremId::Theorem1, Status::PetersenException);
  std::size_t petersen_samples = 0;
  for (const auto& g : graphs) petersen_samples += is_petersen(g) ? 1 : 0;
  if (exceptions != petersen_samples) o.fail("theorem 1 exceptions " + std::to_string(exceptions));
  const double secs = seconds_since(start);
  if (secs > 1800) o.fail("runtime");
  if (o.pass) {
    o.detail = std::to_string(graphs.size()) + " graphs, theorem 1 holds=" +
               std::to_string(r.count(TheoremId::Theorem1, Status::Holds)) +
               " exceptions=" + std::to_string(exceptions) + ", " + std::to_string(secs) + " s";
  }
  return o;
}

// Splice identity and extremality are checked over the same enumeration.
void criteria_surgery(const std::vector<Graph>& corpus, const Report& sweep, Outcome& identity,
                      Outcome& extremal) {
  std::size_t splices = 0, pairs = 0, cycles = 0;
  SurgeryLimits limits;
  limits.max_intermediate_len = 8;
  limits.path_candidates = 1 << 20;
  for (const Graph& g : corpus) {
    const Circumference circ = circumference(g);
    if (!circ.witness || circ.length >= g.order()) continue;
    for (const auto& c : all_longest_cycles(g).cycles) {
      ++cycles;
      if (improve_once(g, c, limits) || improve_once(g, c.reversed(), limits)) {
        extremal.fail("improve_once lengthens a longest cycle in " + encode_graph6(g));
      }
      const VertexSet on_c = c.vertex_set();
      for (const auto& p : longest_paths_in(g, on_c).paths) {
        if ((g.neighbors(p.front()) & on_c).empty() || (g.neighbors(p.back()) & on_c).empty()) continue;
        ++pairs;
        SegmentDecomposition d(g, c, p);
        for (const auto& [key, list] : enumerate_intermediate_paths(g, d, 8)) {
          for (const auto& l : list) {
            for (const auto& m : splice_variants(g, d, l.path, key.first, key.second)) {
              ++splices;
              const int expected = c.length() - m.dropped_a - m.dropped_b + m.bridge_length + m.path_length + 2;
              if (m.result.length() != expected || !is_valid_cycle(g, m.result)) {
                identity.fail("identity violated on " + encode_graph6(g));
              }
              if (m.delta > 0) extremal.fail("splice lengthens a longest cycle in " + encode_graph6(g));
            }
          }
        }
        for (const auto& m : claim_moves(g, d, 8)) extremal.fail(m.name + " fires on " + encode_graph6(g));
        for (const auto& m : insertion_moves(g, d)) {
          if (m.delta > 0) extremal.fail(m.name + " lengthens a longest cycle in " + encode_graph6(g));
        }
      }
    }
  }
  if (sweep.lemma_stats.splice_identity_violations != 0) identity.fail("verifier recorded identity violations");
  if (splices == 0) identity.fail("no splices produced");
  if (identity.pass) {
    identity.detail = std::to_string(splices) + " splices over " + std::to_string(pairs) +
                      " (C,P) pairs, plus " + std::to_string(sweep.lemma_stats.splices) +
                      " in the verifier, 0 violations";
  }
  if (extremal.pass) {
    extremal.detail = std::to_string(cycles) + " longest cycles and " + std::to_string(pairs) +
                      " (C,P) pairs, no lengthening move";
  }
}

Outcome criterion_oracles(const std::vector<Graph>& corpus) {
  Outcome o;
  std::size_t circ_checked = 0, tough_checked = 0;
  for (const Graph& g : corpus) {
    const int ref = oracle::longest_cycle(g);
    const Circumference c = circumference(g);
    const int expected = ref >= 3 ? ref : (g.edge_count() == 0 ? 1 : 2);
    if (c.length != expected) o.fail("circumference differs on " + encode_graph6(g));
    if (ref >= 3 && (!c.witness || !is_valid_cycle(g, *c.witness) || c.witness->length() != ref)) {
      o.fail("bad witness on " + encode_graph6(g));
    }
    ++circ_checked;
  }
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : all_graphs(n)) {
      if (!(toughness(g) == toughness_exhaustive(g))) o.fail("toughness differs on " + encode_graph6(g));
      bool inf = false;
      Rational ref = oracle::toughness(g, inf);
      Toughness t = toughness(g);
      if (t.infinite != inf || (!inf && t.value != ref)) o.fail("toughness oracle differs on " + encode_graph6(g));
      ++tough_checked;
    }
  }
  if (o.pass) {
    o.detail = "circumference on " + std::to_string(circ_checked) + " connected graphs, toughness on " +
               std::to_string(tough_checked) + " graphs n<=7";
  }
  return o;
}

Outcome criterion_heuristic(const std::vector<Graph>& corpus) {
  Outcome o;
  std::size_t tested = 0, matched = 0;
  auto bounded = [&](const Graph& g) {
    const Circumference exact = circumference(g);
    auto h = heuristic_longest_cycle(g, 1);
    ++tested;
    if (!exact.witness) {
      if (h) o.fail("heuristic cycle on acyclic " + encode_graph6(g));
      return false;
    }
    if (!h || !is_valid_cycle(g, *h) || h->length() > exact.length) {
      o.fail("invalid heuristic cycle on " + encode_graph6(g));
      return false;
    }
    const bool match = h->length() == exact.length;
    matched += match ? 1 : 0;
    return match;
  };
  for (const Graph& g : corpus) bounded(g);
  std::mt19937_64 seeds(77);
  for (int i = 0; i < 300; ++i) bounded(random_gnp(12, 0.25 + 0.05 * (i % 5), seeds()));

  std::vector<std::pair<std::string, Graph>> curated;
  for (int n = 3; n <= 12; ++n) curated.emplace_back("K" + std::to_string(n), complete(n));
  for (int n = 3; n <= 12; ++n) curated.emplace_back("C" + std::to_string(n), cycle_graph(n));
  for (int m = 2; m <= 5; ++m) curated.emplace_back("K" + std::to_string(m) + "," + std::to_string(m), complete_bipartite(m, m));
  curated.emplace_back("Petersen", petersen());
  for (const auto& [name, g] : curated) {
    if (!bounded(g)) o.fail("heuristic misses exact c on " + name);
  }
  if (o.pass) {
    o.detail = std::to_string(tested) + " graphs bounded (" + std::to_string(matched) + " exact), " +
               std::to_string(curated.size()) + " curated graphs exact";
  }
  return o;
}

Outcome criterion_graph6() {
  Outcome o;
  std::size_t round_trips = 0, lines = 0;
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : all_graphs(n)) {
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (const Graph& h : {g, relabel(g, perm)}) {
        if (parse_graph6(encode_graph6(h)) != h) o.fail("parse(encode(G)) != G");
        ++round_trips;
      }
    }
  }
  for (int n = 1; n <= 8; ++n) {
    for (const auto& line : read_lines(corpus_path(n))) {
      if (encode_graph6(parse_graph6(line)) != line) o.fail("encode(parse(w)) != w for " + line);
      ++lines;
    }
    const auto expected = connected_graphs(n);
    const auto file = read_lines(corpus_path(n));
    if (file.size() != expected.size()) o.fail("corpus size mismatch at n=" + std::to_string(n));
  }
  if (o.pass) {
    o.detail = std::to_string(round_trips) + " graphs round-tripped, " + std::to_string(lines) +
               " corpus lines bit-exact";
  }
  return o;
}

}  // namespace

int main() {
  struct Line {
    int id;
    std::string name;
    Outcome outcome;
  };
  std::vector<Line> results;
  auto run = [&](int id, const std::string& name, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << "  " << name << ": " << o.detail << std::endl;
    results.push_back({id, name, o});
  };

  std::vector<Graph> corpus;
  try {
    corpus = load_corpus();
  } catch (const std::exception& e) {
    std::cout << "FAIL  corpus: " << e.what() << "\n";
    return 1;
  }

  Report sweep;
  run(1, "Petersen fixture", criterion_petersen);
  run(2, "exhaustive sweep n<=8", [&] { return criterion_sweep(corpus, sweep); });
  run(3, "sampled sweep G(10,p)", criterion_sampled);
  Outcome identity, extremal;
  try {
    criteria_surgery(corpus, sweep, identity, extremal);
  } catch (const std::exception& e) {
    identity.fail(std::string("exception: ") + e.what());
    extremal.fail(std::string("exception: ") + e.what());
  }
  run(4, "splice length identity", [&] { return identity; });
  run(5, "extremality soundness", [&] { return extremal; });
  run(6, "oracle equivalence", [&] { return criterion_oracles(corpus); });
  run(7, "heuristic sanity", [&] { return criterion_heuristic(corpus); });
  run(8, "graph6 round trip", criterion_graph6);

  bool all = true;
  for (const auto& r : results) all = all && r.outcome.pass;
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
