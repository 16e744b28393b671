#include "toughcirc/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>

namespace toughcirc {

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::A: return "A";
    case TheoremId::B: return "B";
    case TheoremId::C: return "C";
    case TheoremId::Theorem1: return "1";
    case TheoremId::Corollary1: return "C1";
    case TheoremId::Lemma1: return "L1";
    case TheoremId::Lemma2: return "L2";
    case TheoremId::Lemma3: return "L3";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(const std::string& name) {
  for (TheoremId id : kAllTheorems) {
    if (theorem_name(id) == name) return id;
  }
  return std::nullopt;
}

std::vector<TheoremId> parse_theorem_list(const std::string& csv) {
  std::vector<TheoremId> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto id = parse_theorem(item);
    if (!id) throw GraphError("unknown theorem '" + item + "' (expected A,B,C,1,C1,L1,L2,L3)");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
  }
  if (out.empty()) throw GraphError("empty theorem selection");
  return out;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::HypothesisNotMet: return "HypothesisNotMet";
    case Status::Holds: return "Holds";
    case Status::PetersenException: return "PetersenException";
    case Status::Counterexample: return "Counterexample";
    case Status::ResourceLimit: return "ResourceLimit";
  }
  return "?";
}

GraphProfile make_profile(const Graph& g, const VerifyConfig& cfg) {
  if (g.order() > cfg.max_n) {
    throw GraphError("graph order " + std::to_string(g.order()) + " exceeds exact-solver cap " +
                     std::to_string(cfg.max_n));
  }
  GraphProfile p;
  p.graph = g;
  p.graph6 = encode_graph6(g);
  p.n = g.order();
  p.edges = g.edge_count();
  p.delta = p.n > 0 ? min_degree(g) : 0;
  p.kappa = vertex_connectivity(g);
  p.tau = toughness(g);
  p.circ = circumference(g);
  p.circ.length += cfg.fault_circumference_offset;
  p.petersen = is_petersen(g);
  return p;
}

namespace {

Verdict base_verdict(TheoremId id, const GraphProfile& p) {
  Verdict v;
  v.theorem = id;
  v.graph6 = p.graph6;
  v.n = p.n;
  v.delta = p.delta;
  v.kappa = p.kappa;
  v.tau = p.tau;
  v.c = p.c();
  v.cycle = p.circ.witness;
  return v;
}

std::string cycle_text(const std::vector<Vertex>& verts) {
  std::string out;
  for (Vertex v : verts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Verdict theorem_A(const GraphProfile& p) {
  Verdict v = base_verdict(TheoremId::A, p);
  if (p.kappa < 2) return v;
  v.status = p.c() >= std::min(p.n, 2 * p.delta) ? Status::Holds : Status::Counterexample;
  return v;
}

Verdict theorem_B(const GraphProfile& p) {
  Verdict v = base_verdict(TheoremId::B, p);
  v.cut = p.tau.witness_cut;
  if (!p.tau.at_least(Rational{1, 1})) return v;
  v.status = p.c() >= std::min(p.n, 2 * p.delta + 2) ? Status::Holds : Status::Counterexample;
  return v;
}

Verdict theorem_1(const GraphProfile& p) {
  Verdict v = base_verdict(TheoremId::Theorem1, p);
  v.cut = p.tau.witness_cut;
  if (!p.tau.greater_than(Rational{1, 1})) return v;
  if (p.c() >= std::min(p.n, 2 * p.delta + 5)) {
    v.status = Status::Holds;
  } else {
    v.status = p.petersen ? Status::PetersenException : Status::Counterexample;
  }
  return v;
}

// Hamiltonicity is read as c >= n so that K1 and K2 (cycles of length 1 and
// 2 by convention) satisfy the conclusion.
Verdict corollary_1(const GraphProfile& p) {
  Verdict v = base_verdict(TheoremId::Corollary1, p);
  v.cut = p.tau.witness_cut;
  if (!p.tau.greater_than(Rational{1, 1}) || 2 * p.delta < p.n - 5) return v;
  if (p.c() >= p.n) {
    v.status = Status::Holds;
  } else {
    v.status = p.petersen ? Status::PetersenException : Status::Counterexample;
  }
  return v;
}

Verdict theorem_C(const GraphProfile& p, VertexSet vset, const VerifyConfig& cfg) {
  Verdict v = base_verdict(TheoremId::C, p);
  const Graph& g = p.graph;
  if (p.n > cfg.theorem_c_max_n) {
    v.status = Status::ResourceLimit;
    v.detail = "all-pairs longest paths capped at n=" + std::to_string(cfg.theorem_c_max_n);
    return v;
  }
  if (p.n < 3 || p.c() != p.n || !p.circ.witness) return v;
  const int t = vset.size();
  for (Vertex u : vset) {
    if (g.degree(u) < t) return v;
  }
  v.cut = vset;
  for (Vertex x = 0; x < p.n; ++x) {
    for (Vertex y = x + 1; y < p.n; ++y) {
      int len = longest_path_between(g, x, y, g.vertices());
      if (len < t) {
        v.status = Status::Counterexample;
        v.detail = "pair " + std::to_string(x) + "," + std::to_string(y) + " longest path " + std::to_string(len) +
                   " < t=" + std::to_string(t);
        return v;
      }
    }
  }
  v.status = Status::Holds;
  v.detail = "t=" + std::to_string(t);
  return v;
}

// Largest t such that t vertices have degree >= t; those vertices, highest
// degree first, ties by id.
VertexSet degree_witness_set(const Graph& g) {
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int t = 0;
  while (t < g.order() && g.degree(order[t]) >= t + 1) ++t;
  VertexSet out;
  for (int i = 0; i < t; ++i) out.insert(order[i]);
  return out;
}

// Extremal structures the lemmas quantify over: every longest cycle with a
// nonempty complement.
struct Extremes {
  std::vector<OrientedCycle> cycles;
  bool truncated = false;
};

Extremes non_hamiltonian_longest_cycles(const GraphProfile& p, const VerifyConfig& cfg) {
  Extremes e;
  if (!p.circ.witness || p.circ.witness->length() >= p.n) return e;
  CycleList all = all_longest_cycles(p.graph, cfg.max_cycles);
  e.cycles = std::move(all.cycles);
  e.truncated = all.truncated;
  return e;
}

Verdict lemma_1(const GraphProfile& p, const VerifyConfig& cfg) {
  Verdict v = base_verdict(TheoremId::Lemma1, p);
  const Graph& g = p.graph;
  Extremes ex = non_hamiltonian_longest_cycles(p, cfg);
  v.stats.truncated = ex.truncated;
  for (const auto& c : ex.cycles) {
    const VertexSet on_c = c.vertex_set();
    PathList paths = longest_paths_in(g, on_c, cfg.max_paths);
    v.stats.truncated = v.stats.truncated || paths.truncated;
    for (const auto& path : paths.paths) {
      const int pbar = path.length();
      if (pbar < 1) continue;
      const VertexSet nx = g.neighbors(path.front()) & on_c;
      const VertexSet ny = g.neighbors(path.back()) & on_c;
      if (nx.size() < 2 || ny.size() < 2 || nx == ny) continue;
      ++v.stats.configurations;
      const int sigma = std::max((nx - ny).size(), (ny - nx).size());
      const int bound = pbar == 1 ? 3 * p.delta + sigma - 1 : std::max(2 * pbar + 8, 4 * p.delta - 2 * pbar);
      if (c.length() < bound) {
        v.status = Status::Counterexample;
        v.cycle = c;
        v.path = path;
        v.detail = "|C|=" + std::to_string(c.length()) + " < " + std::to_string(bound) + " (pbar=" +
                   std::to_string(pbar) + ")";
        return v;
      }
    }
  }
  if (v.stats.configurations > 0) v.status = Status::Holds;
  return v;
}

bool has_independent_pair(const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].first != edges[j].first && edges[i].second != edges[j].second) return true;
    }
  }
  return false;
}

Verdict lemma_2(const GraphProfile& p, const VerifyConfig& cfg) {
  Verdict v = base_verdict(TheoremId::Lemma2, p);
  const Graph& g = p.graph;
  Extremes ex = non_hamiltonian_longest_cycles(p, cfg);
  v.stats.truncated = ex.truncated;

  auto fail = [&](const OrientedCycle& c, const Path& path, std::string why) {
    v.status = Status::Counterexample;
    v.cycle = c;
    v.path = path;
    v.detail = std::move(why);
  };

  for (const auto& c : ex.cycles) {
    const VertexSet on_c = c.vertex_set();
    PathList paths = longest_paths_in(g, on_c, cfg.max_paths);
    v.stats.truncated = v.stats.truncated || paths.truncated;
    for (const auto& path : paths.paths) {
      const VertexSet nx = g.neighbors(path.front()) & on_c;
      const VertexSet ny = g.neighbors(path.back()) & on_c;
      if (nx != ny || nx.size() < 2) continue;
      ++v.stats.configurations;
      SegmentDecomposition d(g, c, path);
      const int pbar = path.length();

      for (const auto& [key, list] : enumerate_intermediate_paths(g, d, cfg.max_intermediate_len)) {
        const auto [a, b] = key;
        const int pair_len = d.segment_length(a) + d.segment_length(b);
        for (const auto& l : list) {
          if (pair_len < 2 * pbar + 2 * l.length() + 4) {
            fail(c, path, "(a1) |I_a|+|I_b|=" + std::to_string(pair_len) + " with |L|=" + std::to_string(l.length()) +
                              " L=" + cycle_text(l.path.verts));
            return v;
          }
          for (const auto& m : splice_variants(g, d, l.path, a, b)) {
            ++v.stats.splices;
            if (m.result.length() != c.length() - m.dropped_a - m.dropped_b + m.bridge_length + m.path_length + 2) {
              ++v.stats.splice_identity_violations;
            }
            if (m.delta > 0) ++v.stats.lengthening_splices;
          }
        }
      }
      if (v.stats.splice_identity_violations > 0 || v.stats.lengthening_splices > 0) {
        fail(c, path, "splice bookkeeping failed on a longest cycle");
        return v;
      }

      for (int a = 0; a < d.s(); ++a) {
        for (int b = a + 1; b < d.s(); ++b) {
          if (!intermediate_set_is_edges(g, d, a, b)) continue;
          const auto edges = intermediate_edges(g, d, a, b);
          const int pair_len = d.segment_length(a) + d.segment_length(b);
          const int i = static_cast<int>(edges.size());
          if (i >= 1 && i <= 3 && pair_len < 2 * pbar + i + 5) {
            fail(c, path, "(a2) |I_a|+|I_b|=" + std::to_string(pair_len) + " with " + std::to_string(i) + " edges");
            return v;
          }
          if (has_independent_pair(edges) && pair_len < 2 * pbar + 8) {
            fail(c, path, "(a3) |I_a|+|I_b|=" + std::to_string(pair_len) + " with independent edges");
            return v;
          }
        }
      }
    }
  }
  if (v.stats.configurations > 0) v.status = Status::Holds;
  return v;
}

Verdict lemma_3(const GraphProfile& p, const VerifyConfig& cfg) {
  Verdict v = base_verdict(TheoremId::Lemma3, p);
  const Graph& g = p.graph;
  Extremes ex = non_hamiltonian_longest_cycles(p, cfg);
  v.stats.truncated = ex.truncated;
  for (const auto& c : ex.cycles) {
    ++v.stats.configurations;
    if (c.length() >= p.kappa * (p.delta + 1)) continue;
    const VertexSet on_c = c.vertex_set();
    PathList paths = longest_paths_in(g, on_c, cfg.max_paths);
    v.stats.truncated = v.stats.truncated || paths.truncated;
    bool found = false;
    for (const auto& path : paths.paths) {
      if ((g.neighbors(path.front()) & on_c).size() >= 2 && (g.neighbors(path.back()) & on_c).size() >= 2) {
        found = true;
        v.path = path;
        break;
      }
    }
    if (!found) {
      v.status = Status::Counterexample;
      v.cycle = c;
      v.detail = "|C|=" + std::to_string(c.length()) + " < kappa(delta+1)=" + std::to_string(p.kappa * (p.delta + 1)) +
                 " and no longest external path has both ends with two cycle neighbors";
      return v;
    }
  }
  if (v.stats.configurations > 0) v.status = Status::Holds;
  return v;
}

}  // namespace

Verdict check(TheoremId id, const GraphProfile& p, const VerifyConfig& cfg) {
  switch (id) {
    case TheoremId::A: return theorem_A(p);
    case TheoremId::B: return theorem_B(p);
    case TheoremId::C: return theorem_C(p, degree_witness_set(p.graph), cfg);
    case TheoremId::Theorem1: return theorem_1(p);
    case TheoremId::Corollary1: return corollary_1(p);
    case TheoremId::Lemma1: return lemma_1(p, cfg);
    case TheoremId::Lemma2: return lemma_2(p, cfg);
    case TheoremId::Lemma3: return lemma_3(p, cfg);
  }
  throw GraphError("unknown theorem");
}

Verdict check_theorem_A(const Graph& g) { return theorem_A(make_profile(g)); }
Verdict check_theorem_B(const Graph& g) { return theorem_B(make_profile(g)); }
Verdict check_theorem_1(const Graph& g) { return theorem_1(make_profile(g)); }
Verdict check_corollary_1(const Graph& g) { return corollary_1(make_profile(g)); }

Verdict check_theorem_C(const Graph& g, VertexSet vset, const VerifyConfig& cfg) {
  if (!vset.subset_of(g.vertices())) throw GraphError("vertex set outside the graph");
  return theorem_C(make_profile(g, cfg), vset, cfg);
}

Verdict check_lemma_1(const Graph& g, const VerifyConfig& cfg) { return lemma_1(make_profile(g, cfg), cfg); }
Verdict check_lemma_2(const Graph& g, const VerifyConfig& cfg) { return lemma_2(make_profile(g, cfg), cfg); }
Verdict check_lemma_3(const Graph& g, const VerifyConfig& cfg) { return lemma_3(make_profile(g, cfg), cfg); }

std::size_t Report::count(TheoremId id, Status s) const {
  auto it = std::find(theorems.begin(), theorems.end(), id);
  if (it == theorems.end()) return 0;
  return counts[static_cast<std::size_t>(it - theorems.begin())][static_cast<std::size_t>(s)];
}

std::size_t Report::total_counterexamples() const { return counterexamples.size(); }

namespace {

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  if (const char* env = std::getenv("TOUGHCIRC_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

struct Job {
  std::size_t line = 0;
  std::optional<Graph> graph;
};

GraphResult evaluate(const Job& job, const std::vector<TheoremId>& theorems, const VerifyConfig& cfg) {
  GraphResult r;
  r.line = job.line;
  const Graph& g = *job.graph;
  if (g.order() > cfg.max_n) {
    for (TheoremId id : theorems) {
      Verdict v;
      v.theorem = id;
      v.status = Status::ResourceLimit;
      v.graph6 = encode_graph6(g);
      v.n = g.order();
      v.detail = "n exceeds exact-solver cap " + std::to_string(cfg.max_n);
      r.verdicts.push_back(std::move(v));
    }
    return r;
  }
  GraphProfile p = make_profile(g, cfg);
  for (TheoremId id : theorems) r.verdicts.push_back(check(id, p, cfg));
  return r;
}

Report run_jobs(const std::vector<Job>& jobs, std::vector<ParseFailure> failures,
                const std::vector<TheoremId>& theorems, const VerifyConfig& cfg, int workers, std::string corpus) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.corpus = std::move(corpus);
  report.theorems = theorems;
  report.parse_failures = std::move(failures);
  report.counts.assign(theorems.size(), {});
  report.results.resize(jobs.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) report.results[i] = evaluate(jobs[i], theorems, cfg);
  };
  const int w = std::min<int>(resolve_workers(workers), static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (int k = 1; k < w; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  report.graphs = jobs.size();
  for (const auto& r : report.results) {
    for (std::size_t k = 0; k < r.verdicts.size(); ++k) {
      const Verdict& v = r.verdicts[k];
      ++report.counts[k][static_cast<std::size_t>(v.status)];
      if (v.status == Status::Counterexample) report.counterexamples.push_back(v);
      if (v.status == Status::PetersenException) report.petersen_exceptions.push_back(v);
      report.lemma_stats.configurations += v.stats.configurations;
      report.lemma_stats.splices += v.stats.splices;
      report.lemma_stats.splice_identity_violations += v.stats.splice_identity_violations;
      report.lemma_stats.lengthening_splices += v.stats.lengthening_splices;
      report.lemma_stats.truncated = report.lemma_stats.truncated || v.stats.truncated;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

Report batch_verify(std::istream& in, const std::vector<TheoremId>& theorems, const VerifyConfig& cfg, int workers,
                    std::string corpus) {
  std::vector<Job> jobs;
  std::vector<ParseFailure> failures;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      jobs.push_back({lineno, parse_graph6(line)});
    } catch (const GraphError& e) {
      failures.push_back({lineno, e.what()});
    }
  }
  return run_jobs(jobs, std::move(failures), theorems, cfg, workers, std::move(corpus));
}

Report batch_verify(const std::vector<Graph>& graphs, const std::vector<TheoremId>& theorems,
                    const VerifyConfig& cfg, int workers, std::string corpus) {
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < graphs.size(); ++i) jobs.push_back({i + 1, graphs[i]});
  return run_jobs(jobs, {}, theorems, cfg, workers, std::move(corpus));
}

std::string format_record(const Verdict& v) {
  std::ostringstream out;
  out << v.graph6 << '\t' << theorem_name(v.theorem) << '\t' << status_name(v.status) << '\t' << v.n << '\t'
      << v.delta << '\t' << v.kappa << '\t';
  if (v.tau.infinite) {
    out << "inf\t1";
  } else {
    out << v.tau.value.num << '\t' << v.tau.value.den;
  }
  out << '\t' << v.c;
  return out.str();
}

void write_records(std::ostream& out, const Report& r) {
  for (const auto& res : r.results) {
    for (const auto& v : res.verdicts) out << format_record(v) << '\n';
  }
  for (const auto& f : r.parse_failures) out << "# line " << f.line << ": " << f.message << '\n';
}

void write_table(std::ostream& out, const Report& r) {
  out << "corpus: " << r.corpus << "\n";
  out << "graphs: " << r.graphs << "  parse failures: " << r.parse_failures.size() << "\n\n";
  out << std::left << std::setw(8) << "theorem";
  for (Status s : kAllStatuses) out << std::right << std::setw(18) << status_name(s);
  out << "\n";
  for (std::size_t k = 0; k < r.theorems.size(); ++k) {
    out << std::left << std::setw(8) << theorem_name(r.theorems[k]);
    for (std::size_t s = 0; s < kAllStatuses.size(); ++s) out << std::right << std::setw(18) << r.counts[k][s];
    out << "\n";
  }
  if (r.lemma_stats.configurations > 0) {
    out << "\nlemma configurations: " << r.lemma_stats.configurations << "  splices: " << r.lemma_stats.splices
        << "  identity violations: " << r.lemma_stats.splice_identity_violations << "\n";
  }
  if (r.lemma_stats.truncated) out << "warning: some lemma quantifiers were truncated by caps\n";
  for (const auto& v : r.petersen_exceptions) {
    out << "petersen exception: " << theorem_name(v.theorem) << " " << v.graph6 << "\n";
  }
  for (const auto& v : r.counterexamples) {
    out << "COUNTEREXAMPLE " << format_record(v);
    if (!v.detail.empty()) out << "  [" << v.detail << "]";
    out << "\n";
  }
  for (const auto& f : r.parse_failures) out << "parse failure line " << f.line << ": " << f.message << "\n";
}

}  // namespace toughcirc
