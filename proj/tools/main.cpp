// toughcirc command-line interface.
//
//   toughcirc compute <g6|->
//   toughcirc verify [--theorems A,B,1,C1,L1,L2,L3] [--format table|records] <file|->
//   toughcirc search <g6> [--seed N] [--exact]
//   toughcirc gen <family> [params] [--count N] [--seed N]
//
// Exit codes: 0 success, 1 counterexample found (verify), 2 usage, input or
// resource-cap error.

#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toughcirc/enumerate.hpp"
#include "toughcirc/graph.hpp"
#include "toughcirc/invariants.hpp"
#include "toughcirc/surgery.hpp"
#include "toughcirc/verifier.hpp"

namespace tc = toughcirc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitError = 2;

std::string read_graph_arg(const std::string& arg) {
  if (arg != "-") return arg;
  std::string line;
  std::getline(std::cin, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string join(const std::vector<tc::Vertex>& vs) {
  std::string out;
  for (auto v : vs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

int cmd_compute(const std::string& arg, int max_n) {
  tc::Graph g;
  try {
    g = tc::parse_graph6(read_graph_arg(arg));
  } catch (const tc::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (g.order() > max_n) {
    std::cerr << "error: n=" << g.order() << " exceeds the exact-solver cap " << max_n << " (raise with --max-n)\n";
    return kExitError;
  }
  const int delta = g.order() > 0 ? tc::min_degree(g) : 0;
  std::cout << "n=" << g.order() << " m=" << g.edge_count() << " δ=" << delta << " κ=" << tc::vertex_connectivity(g)
            << " τ=" << tc::toughness(g).str() << " c=" << tc::circumference(g).length
            << " hamiltonian=" << (tc::is_hamiltonian(g) ? "true" : "false")
            << " petersen=" << (tc::is_petersen(g) ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& theorems, const std::string& format,
               const tc::VerifyConfig& cfg, int workers) {
  std::vector<tc::TheoremId> selection;
  try {
    selection = tc::parse_theorem_list(theorems);
  } catch (const tc::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  tc::Report report;
  if (input == "-") {
    report = tc::batch_verify(std::cin, selection, cfg, workers, "-");
  } else {
    std::ifstream file(input);
    if (!file) {
      std::cerr << "error: cannot read " << input << "\n";
      return kExitError;
    }
    report = tc::batch_verify(file, selection, cfg, workers, input);
  }
  if (format == "records") {
    tc::write_records(std::cout, report);
  } else {
    tc::write_table(std::cout, report);
  }
  std::cerr << "verified " << report.graphs << " graphs in " << report.seconds << " s\n";
  return report.total_counterexamples() > 0 ? kExitCounterexample : kExitOk;
}

int cmd_search(const std::string& arg, std::uint64_t seed, bool exact, const tc::SurgeryLimits& limits, int max_n) {
  tc::Graph g;
  try {
    g = tc::parse_graph6(read_graph_arg(arg));
  } catch (const tc::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  auto cycle = tc::heuristic_longest_cycle(g, seed, limits);
  if (!cycle) {
    std::cout << "acyclic\n";
    return kExitOk;
  }
  std::cout << "cycle: " << join(cycle->verts) << "\n";
  std::cout << "length: " << cycle->length() << "\n";
  if (exact) {
    if (g.order() > max_n) {
      std::cerr << "error: n=" << g.order() << " exceeds the exact-solver cap " << max_n << "\n";
      return kExitError;
    }
    const int c = tc::circumference(g).length;
    std::cout << "exact: " << c << " " << (c == cycle->length() ? "MATCH" : "GAP") << "\n";
  }
  return kExitOk;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params, int count, std::uint64_t seed) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw tc::GraphError("family '" + family + "' takes " + std::to_string(k) + " parameter(s)");
    }
  };
  std::vector<tc::Graph> out;
  try {
    if (family == "complete") {
      need(1);
      out.push_back(tc::complete(std::stoi(params[0])));
    } else if (family == "cycle") {
      need(1);
      out.push_back(tc::cycle_graph(std::stoi(params[0])));
    } else if (family == "path") {
      need(1);
      out.push_back(tc::path_graph(std::stoi(params[0])));
    } else if (family == "bipartite") {
      need(2);
      out.push_back(tc::complete_bipartite(std::stoi(params[0]), std::stoi(params[1])));
    } else if (family == "petersen") {
      need(0);
      out.push_back(tc::petersen());
    } else if (family == "gnp") {
      need(2);
      const int n = std::stoi(params[0]);
      const double p = std::stod(params[1]);
      std::mt19937_64 master(seed);
      for (int i = 0; i < count; ++i) out.push_back(tc::random_gnp(n, p, master()));
    } else if (family == "connected") {
      need(1);
      out = tc::connected_graphs(std::stoi(params[0]));
    } else if (family == "all") {
      need(1);
      out = tc::all_graphs(std::stoi(params[0]));
    } else {
      std::cerr << "error: unknown family '" << family
                << "' (expected complete, cycle, path, bipartite, petersen, gnp, connected, all)\n";
      return kExitError;
    }
  } catch (const std::logic_error& e) {
    std::cerr << "error: bad parameter: " << e.what() << "\n";
    return kExitError;
  } catch (const tc::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  for (const auto& g : out) std::cout << tc::encode_graph6(g) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toughness, connectivity and circumference; cycle surgery; theorem verification"};
  app.require_subcommand(1);

  int max_n = 16;

  auto* compute = app.add_subcommand("compute", "Print the invariants of one graph");
  std::string compute_graph;
  compute->add_option("graph", compute_graph, "graph6 word, or - for stdin")->required();
  compute->add_option("--max-n", max_n, "Refuse graphs above this order")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check theorems over a graph6 corpus");
  std::string verify_input = "-";
  std::string theorems = "A,B,1,C1,L1,L2,L3";
  std::string format = "table";
  int workers = 0;
  tc::VerifyConfig cfg;
  verify->add_option("input", verify_input, "graph6 file, or - for stdin");
  verify->add_option("--theorems", theorems, "Comma-separated subset of A,B,C,1,C1,L1,L2,L3");
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "records"}));
  verify->add_option("--workers", workers, "Worker threads (default: TOUGHCIRC_WORKERS or 1)");
  verify->add_option("--max-intermediate-len", cfg.max_intermediate_len, "Longest intermediate path enumerated")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-cycles", cfg.max_cycles, "Cap on longest cycles examined per graph");
  verify->add_option("--max-paths", cfg.max_paths, "Cap on longest external paths examined per cycle");
  verify->add_option("--max-n", cfg.max_n, "Exact-solver order cap")->check(CLI::PositiveNumber);
  verify->add_option("--theorem-c-max-n", cfg.theorem_c_max_n, "Order cap for the all-pairs path check");
  verify->add_option("--fault-circumference-offset", cfg.fault_circumference_offset)->group("");

  auto* search = app.add_subcommand("search", "Heuristic longest cycle by cycle surgery");
  std::string search_graph;
  std::uint64_t search_seed = 1;
  bool exact = false;
  tc::SurgeryLimits limits;
  search->add_option("graph", search_graph, "graph6 word, or - for stdin")->required();
  search->add_option("--seed", search_seed, "Random seed");
  search->add_flag("--exact", exact, "Also compute the exact circumference");
  search->add_option("--restarts", limits.restarts, "Greedy restarts")->check(CLI::PositiveNumber);
  search->add_option("--max-intermediate-len", limits.max_intermediate_len)->check(CLI::PositiveNumber);
  search->add_option("--path-candidates", limits.path_candidates)->check(CLI::PositiveNumber);
  search->add_option("--max-n", max_n, "Order cap for --exact")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Emit graph6 lines for a generator family");
  std::string family;
  std::vector<std::string> params;
  int count = 1;
  std::uint64_t gen_seed = 1;
  gen->add_option("family", family, "complete, cycle, path, bipartite, petersen, gnp, connected, all")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--count", count, "Number of random graphs")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (*compute) return cmd_compute(compute_graph, max_n);
  if (*verify) return cmd_verify(verify_input, theorems, format, cfg, workers);
  if (*search) return cmd_search(search_graph, search_seed, exact, limits, max_n);
  if (*gen) return cmd_gen(family, params, count, gen_seed);
  return kExitError;
}
