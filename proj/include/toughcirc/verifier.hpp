#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "toughcirc/graph.hpp"
#include "toughcirc/invariants.hpp"
#include "toughcirc/surgery.hpp"

namespace toughcirc {

enum class TheoremId {
  A,           // 2-connected => c >= min{n, 2delta}
  B,           // 1-tough => c >= min{n, 2delta+2}
  C,           // long paths between all pairs in hamiltonian graphs
  Theorem1,    // tau > 1 => c >= min{n, 2delta+5} or Petersen
  Corollary1,  // tau > 1, 2delta >= n-5 => hamiltonian or Petersen
  Lemma1,
  Lemma2,
  Lemma3,
};

inline constexpr std::array<TheoremId, 8> kAllTheorems = {
    TheoremId::A,          TheoremId::B,      TheoremId::C,      TheoremId::Theorem1,
    TheoremId::Corollary1, TheoremId::Lemma1, TheoremId::Lemma2, TheoremId::Lemma3,
};

/// Short names used on the command line: A, B, C, 1, C1, L1, L2, L3.
std::string theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(const std::string& name);
/// Comma-separated list; throws GraphError on an unknown name.
std::vector<TheoremId> parse_theorem_list(const std::string& csv);

enum class Status { HypothesisNotMet, Holds, PetersenException, Counterexample, ResourceLimit };

inline constexpr std::array<Status, 5> kAllStatuses = {
    Status::HypothesisNotMet, Status::Holds, Status::PetersenException, Status::Counterexample, Status::ResourceLimit,
};

std::string status_name(Status s);

struct VerifyConfig {
  /// Intermediate paths longer than this are not enumerated (lemma 2 checks).
  int max_intermediate_len = 3;
  /// Caps on the extremal structures the lemma checkers quantify over.
  std::size_t max_cycles = 50000;
  std::size_t max_paths = 5000;
  /// Theorem C runs all-pairs longest-path queries; larger graphs report
  /// ResourceLimit.
  int theorem_c_max_n = 10;
  /// Exact solvers refuse graphs above this order.
  int max_n = 16;
  /// Test hook: added to the computed circumference before checking.
  int fault_circumference_offset = 0;
};

/// The invariant values every checker reads.
struct GraphProfile {
  Graph graph;
  std::string graph6;
  int n = 0;
  int edges = 0;
  int delta = 0;
  int kappa = 0;
  Toughness tau;
  Circumference circ;
  bool petersen = false;

  int c() const { return circ.length; }
};

GraphProfile make_profile(const Graph& g, const VerifyConfig& cfg = {});

/// Bookkeeping from the lemma checkers: how many (C, P) configurations were
/// examined and what the splice cross-checks saw.
struct LemmaStats {
  std::size_t configurations = 0;
  std::size_t splices = 0;
  std::size_t splice_identity_violations = 0;
  std::size_t lengthening_splices = 0;
  bool truncated = false;
};

struct Verdict {
  TheoremId theorem = TheoremId::A;
  Status status = Status::HypothesisNotMet;
  std::string graph6;
  int n = 0;
  int delta = 0;
  int kappa = 0;
  Toughness tau;
  int c = 0;
  std::optional<OrientedCycle> cycle;
  std::optional<Path> path;
  VertexSet cut;
  std::string detail;
  LemmaStats stats;
};

Verdict check(TheoremId id, const GraphProfile& p, const VerifyConfig& cfg = {});

Verdict check_theorem_A(const Graph& g);
Verdict check_theorem_B(const Graph& g);
Verdict check_theorem_1(const Graph& g);
Verdict check_corollary_1(const Graph& g);
/// Explicit vertex set form; the batch form picks the largest t for which t
/// vertices of degree >= t exist.
Verdict check_theorem_C(const Graph& g, VertexSet vset, const VerifyConfig& cfg = {});
Verdict check_lemma_1(const Graph& g, const VerifyConfig& cfg = {});
Verdict check_lemma_2(const Graph& g, const VerifyConfig& cfg = {});
Verdict check_lemma_3(const Graph& g, const VerifyConfig& cfg = {});

struct ParseFailure {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct GraphResult {
  std::size_t line = 0;
  std::vector<Verdict> verdicts;
};

struct Report {
  std::string corpus;
  std::vector<TheoremId> theorems;
  std::size_t graphs = 0;
  /// counts[theorem index][status index]
  std::vector<std::array<std::size_t, kAllStatuses.size()>> counts;
  std::vector<Verdict> counterexamples;
  std::vector<Verdict> petersen_exceptions;
  std::vector<ParseFailure> parse_failures;
  std::vector<GraphResult> results;
  LemmaStats lemma_stats;
  double seconds = 0.0;

  std::size_t count(TheoremId id, Status s) const;
  std::size_t total_counterexamples() const;
};

/// Verifies every graph6 line of `in`. Blank lines are skipped; malformed
/// lines become parse failures. `workers` <= 0 reads TOUGHCIRC_WORKERS
/// (default 1). Results keep input order.
Report batch_verify(std::istream& in, const std::vector<TheoremId>& theorems, const VerifyConfig& cfg = {},
                    int workers = 0, std::string corpus = "-");

Report batch_verify(const std::vector<Graph>& graphs, const std::vector<TheoremId>& theorems,
                    const VerifyConfig& cfg = {}, int workers = 0, std::string corpus = "memory");

/// One tab-separated line per (graph, theorem):
/// graph6 theorem status n delta kappa tau_num tau_den c
std::string format_record(const Verdict& v);
void write_records(std::ostream& out, const Report& r);
void write_table(std::ostream& out, const Report& r);

}  // namespace toughcirc
