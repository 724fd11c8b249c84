// Command-line front door for good-decomposition work on subcubic graphs.
//
// Exit codes: 0 success / good, 1 verification failed or not good,
// 2 budget exceeded, 64 usage or input error.

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <thread>

#include "gooddecomp/clawfree_solver.hpp"
#include "gooddecomp/dot.hpp"
#include "gooddecomp/exact_solver.hpp"
#include "gooddecomp/generators.hpp"
#include "gooddecomp/graph6.hpp"

using nlohmann::json;
using namespace gooddecomp;

namespace {

constexpr int kExitGood = 0;
constexpr int kExitNotGood = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

std::uint64_t default_max_nodes() {
  if (const char* env = std::getenv("GOODDECOMP_MAX_NODES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return SearchLimits{}.max_nodes;
}

std::string read_input(const std::string& positional, const std::string& file) {
  if (!positional.empty()) return positional;
  std::istream* in = &std::cin;
  std::ifstream f;
  if (!file.empty() && file != "-") {
    f.open(file);
    if (!f) throw std::runtime_error("cannot open " + file);
    in = &f;
  }
  std::string line;
  std::getline(*in, line);
  return line;
}

json edges_json(const std::vector<Edge>& es) {
  json arr = json::array();
  for (const Edge& e : es) arr.push_back({e.u, e.v});
  return arr;
}

json trace_json(const CaseTrace& trace) {
  json arr = json::array();
  for (const auto& entry : trace)
    arr.push_back({{"case", to_string(entry.tag)}, {"vertices", entry.vertices}});
  return arr;
}

json classify_graph(const Graph& g) {
  json out{{"schema", 1}};
  out["n"] = g.vertex_count();
  out["m"] = g.edge_count();
  switch (degree_class(g)) {
    case DegreeClass::cubic: out["degree_class"] = "cubic"; break;
    case DegreeClass::subcubic_not_cubic: out["degree_class"] = "subcubic_not_cubic"; break;
    case DegreeClass::exceeds_three: out["degree_class"] = "exceeds_three"; break;
  }
  out["connected"] = is_connected(g);
  const auto cut = bridges(g);
  out["bridges"] = edges_json(cut);
  out["two_edge_connected"] = is_two_edge_connected(g);
  if (auto claw = find_claw(g)) {
    out["claw_free"] = false;
    out["claw_witness"] = {{"center", claw->center},
                           {"leaves", {claw->leaves[0], claw->leaves[1], claw->leaves[2]}}};
  } else {
    out["claw_free"] = true;
  }
  out["triangle_count"] = triangles(g).size();
  if (auto cyc = find_induced_cycle_longer_than(g, 4)) {
    out["four_chordal"] = false;
    out["induced_cycle_witness"] = cyc->cycle;
  } else {
    out["four_chordal"] = true;
  }
  return out;
}

struct DecomposeOptions {
  std::string method = "auto";
  std::uint64_t max_nodes = default_max_nodes();
  std::uint64_t time_limit_ms = 0;
  bool want_trace = false;
  std::string dot_path;
};

int run_decompose_one(const Graph& g, const DecomposeOptions& opts, json& record) {
  SearchLimits limits;
  limits.max_nodes = opts.max_nodes;
  if (opts.time_limit_ms > 0)
    limits.wall_clock = std::chrono::milliseconds(opts.time_limit_ms);

  SearchOutcome outcome;
  std::string method = opts.method;
  CaseTrace trace;
  if (opts.method == "clawfree") {
    auto res = decompose_clawfree(g);
    outcome.kind = SearchOutcome::Kind::Good;
    outcome.decomposition = std::move(res.decomposition);
    trace = std::move(res.trace);
  } else if (opts.method == "exact") {
    outcome = find_good_decomposition(g, limits);
  } else {
    auto res = decompose_auto(g, limits);
    outcome = std::move(res.outcome);
    method = res.method;
    trace = std::move(res.trace);
  }

  record["status"] = to_string(outcome.kind);
  record["method"] = method;
  record["nodes"] = outcome.stats.nodes;
  if (outcome.decomposition) {
    auto d = *outcome.decomposition;
    d.sort_parts();
    record["decomposition"] = decomposition_to_json(d);
    if (!opts.dot_path.empty()) {
      const std::string dot = to_dot(g, d);
      if (opts.dot_path == "-") {
        std::cerr << dot;
      } else {
        std::ofstream f(opts.dot_path);
        f << dot;
      }
    }
  }
  if (opts.want_trace) record["trace"] = trace_json(trace);

  switch (outcome.kind) {
    case SearchOutcome::Kind::Good: return kExitGood;
    case SearchOutcome::Kind::NotGood: return kExitNotGood;
    case SearchOutcome::Kind::BudgetExceeded: return kExitBudget;
  }
  return kExitUsage;
}

struct BatchOptions {
  int jobs = 1;
  DecomposeOptions dec;
  bool include_decompositions = false;
};

int run_batch(std::istream& in, const BatchOptions& opts) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);

  std::vector<json> records(lines.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= lines.size()) break;
      json rec{{"schema", 1}, {"line", i + 1}, {"graph6", lines[i]}};
      try {
        const Graph g = parse_graph6(lines[i]);
        rec["classify"] = classify_graph(g);
        if (!is_connected(g)) {
          rec["status"] = "error";
          rec["error"] = "disconnected graph";
        } else if (degree_class(g) == DegreeClass::exceeds_three) {
          rec["status"] = "error";
          rec["error"] = "maximum degree exceeds 3";
        } else {
          json dec_rec;
          run_decompose_one(g, opts.dec, dec_rec);
          rec["status"] = dec_rec["status"];
          rec["method"] = dec_rec["method"];
          rec["nodes"] = dec_rec["nodes"];
          if (opts.include_decompositions && dec_rec.contains("decomposition"))
            rec["decomposition"] = dec_rec["decomposition"];
          if (opts.dec.want_trace && dec_rec.contains("trace")) rec["trace"] = dec_rec["trace"];
        }
      } catch (const std::exception& e) {
        rec["status"] = "error";
        rec["error"] = e.what();
      }
      records[i] = std::move(rec);
    }
  };
  const int jobs = std::max(1, opts.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::uint64_t good = 0, not_good = 0, budget = 0, errors = 0;
  for (auto& rec : records) {
    const std::string status = rec["status"];
    if (status == "good") ++good;
    else if (status == "not_good") ++not_good;
    else if (status == "budget_exceeded") ++budget;
    else ++errors;
    std::cout << rec.dump() << "\n";
  }
  const json summary{{"schema", 1},  {"summary", true},          {"total", records.size()},
                     {"good", good}, {"not_good", not_good},     {"budget_exceeded", budget},
                     {"errors", errors}};
  std::cout << summary.dump() << "\n";
  return not_good > 0 ? kExitNotGood : (budget > 0 ? kExitBudget : kExitGood);
}

Graph make_family(const std::string& family, int n, std::uint64_t seed, const std::string& filter,
                  int retry_cap) {
  if (family == "cycle") return cycle(n);
  if (family == "complete") return complete(n);
  if (family == "k33") return complete_bipartite(3, 3);
  if (family == "petersen") return petersen();
  if (family == "prism") return prism(n);
  if (family == "random") {
    GenFilter f = GenFilter::none;
    if (filter == "claw_free") f = GenFilter::claw_free;
    else if (filter == "four_chordal") f = GenFilter::four_chordal;
    else if (filter != "none") throw GenError("unknown filter: " + filter);
    return random_connected_subcubic(n, seed, f, retry_cap);
  }
  throw GenError("unknown family: " + family);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"good decompositions (spanning tree + matching + 2-regular) of subcubic graphs"};
  app.require_subcommand(1);

  std::string input, input_file;
  DecomposeOptions dec;
  BatchOptions batch;
  std::string decomp_file;
  std::string family = "cycle", gen_filter = "none";
  int gen_n = 5, gen_count = 1, gen_retry_cap = 100'000;
  std::uint64_t gen_seed = 0;
  bool gen_inflate = false;

  auto* classify = app.add_subcommand("classify", "structural predicates of one graph as JSON");
  classify->add_option("graph6", input, "graph6 string (reads stdin when omitted)");
  classify->add_option("--file", input_file, "read the graph6 line from this file");

  auto* decompose = app.add_subcommand("decompose", "find a good decomposition of one graph");
  decompose->add_option("graph6", input, "graph6 string (reads stdin when omitted)");
  decompose->add_option("--file", input_file, "read the graph6 line from this file");
  decompose->add_option("--method", dec.method, "exact | clawfree | auto")
      ->check(CLI::IsMember({"exact", "clawfree", "auto"}));
  decompose->add_option("--max-nodes", dec.max_nodes, "search node budget");
  decompose->add_option("--time-limit-ms", dec.time_limit_ms, "wall clock budget in ms");
  decompose->add_flag("--trace", dec.want_trace, "include the proof-case trace");
  decompose->add_option("--dot", dec.dot_path, "write colored DOT here ('-' for stderr)");

  auto* verify_cmd = app.add_subcommand("verify", "check a decomposition JSON against a graph");
  verify_cmd->add_option("graph6", input, "graph6 string")->required();
  verify_cmd->add_option("decomposition", decomp_file,
                         "decomposition JSON file (reads stdin when omitted)");

  auto* gen = app.add_subcommand("gen", "emit graph6 lines for a graph family");
  gen->add_option("--family", family, "cycle | complete | k33 | petersen | prism | random")
      ->required();
  gen->add_option("-n", gen_n, "vertex count / cycle length parameter");
  gen->add_option("--seed", gen_seed, "random family seed");
  gen->add_option("--filter", gen_filter, "random family filter: none | claw_free | four_chordal");
  gen->add_option("--retry-cap", gen_retry_cap, "random family rejection cap");
  gen->add_option("--count", gen_count, "emit this many graphs (random: seeds seed..seed+count-1)");
  gen->add_flag("--inflate", gen_inflate, "apply triangle inflation (family must be cubic)");

  auto* batch_cmd = app.add_subcommand("batch", "process a graph6 stream to JSON-lines records");
  batch_cmd->add_option("--file", input_file, "read graph6 lines from this file (default stdin)");
  batch_cmd->add_option("--jobs", batch.jobs, "worker threads")->check(CLI::PositiveNumber);
  batch_cmd->add_option("--method", batch.dec.method, "exact | clawfree | auto")
      ->check(CLI::IsMember({"exact", "clawfree", "auto"}));
  batch_cmd->add_option("--max-nodes", batch.dec.max_nodes, "search node budget per graph");
  batch_cmd->add_flag("--trace", batch.dec.want_trace, "include proof-case traces");
  batch_cmd->add_flag("--decompositions", batch.include_decompositions,
                      "include decompositions in records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) {
      const Graph g = parse_graph6(read_input(input, input_file));
      std::cout << classify_graph(g).dump() << "\n";
      return kExitGood;
    }
    if (decompose->parsed()) {
      const Graph g = parse_graph6(read_input(input, input_file));
      if (!is_connected(g)) {
        std::cerr << "error: input graph is disconnected\n";
        return kExitUsage;
      }
      if (degree_class(g) == DegreeClass::exceeds_three) {
        std::cerr << "error: maximum degree exceeds 3\n";
        return kExitUsage;
      }
      json record{{"schema", 1}};
      const int code = run_decompose_one(g, dec, record);
      std::cout << record.dump() << "\n";
      return code;
    }
    if (verify_cmd->parsed()) {
      const Graph g = parse_graph6(input);
      std::string text;
      if (!decomp_file.empty() && decomp_file != "-") {
        std::ifstream f(decomp_file);
        if (!f) throw std::runtime_error("cannot open " + decomp_file);
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
      } else {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
      }
      const auto rep = verify(g, parse_decomposition(text));
      json out{{"schema", 1}, {"ok", rep.ok}};
      json vio = json::array();
      for (const auto& [code, detail] : rep.violations)
        vio.push_back({{"code", to_string(code)}, {"detail", detail}});
      out["violations"] = vio;
      if (!rep.two_regular_cycles.empty()) out["two_regular_cycles"] = rep.two_regular_cycles;
      std::cout << out.dump() << "\n";
      return rep.ok ? kExitGood : kExitNotGood;
    }
    if (gen->parsed()) {
      for (int i = 0; i < gen_count; ++i) {
        Graph g = make_family(family, gen_n, gen_seed + i, gen_filter, gen_retry_cap);
        if (gen_inflate) g = triangle_inflation(g);
        std::cout << write_graph6(g) << "\n";
      }
      return kExitGood;
    }
    if (batch_cmd->parsed()) {
      if (!input_file.empty() && input_file != "-") {
        std::ifstream f(input_file);
        if (!f) throw std::runtime_error("cannot open " + input_file);
        return run_batch(f, batch);
      }
      return run_batch(std::cin, batch);
    }
  } catch (const ClawfreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.graph6_dump.empty()) std::cerr << "graph6: " << e.graph6_dump << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
