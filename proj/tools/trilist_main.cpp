// trilist: list triangles with orientation-based kernels and exact counters.
//
// Subcommands: count, list, verify, bench, stats. Every JSON document carries
// schema_version. Exit codes: 0 success, 1 input/parse failure, 2 usage
// error, 3 verification failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trilist/engine.hpp"
#include "trilist/graph.hpp"
#include "trilist/oracle.hpp"
#include "trilist/ordering.hpp"
#include "trilist/parallel.hpp"
#include "trilist/report.hpp"

namespace {

using namespace trilist;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

struct CommonArgs {
  std::string input;
  std::string format = "edgelist";
  bool compact = false;
  bool one_indexed = false;
  std::string out;
  bool pretty = false;
};

struct RunArgs {
  std::string algo = "aot";
  std::string order;        // empty: per-algorithm default
  std::string local_order;  // empty: per-algorithm default
  unsigned threads = 1;
  VertexId chunk = 64;
};

void add_common(CLI::App* cmd, CommonArgs& c) {
  cmd->add_option("input", c.input, "edge list file, .gz transparent, '-' for stdin")
      ->required();
  cmd->add_option("--format", c.format, "input format")
      ->check(CLI::IsMember({"edgelist"}))
      ->capture_default_str();
  cmd->add_flag("--compact", c.compact, "renumber ids by first appearance");
  cmd->add_flag("--one-indexed", c.one_indexed, "input counts vertices from 1");
  cmd->add_option("--out", c.out, "write the report here instead of stdout");
  cmd->add_flag("--pretty", c.pretty, "indent JSON output");
}

CLI::Validator order_validator() {
  return CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          parse_order_spec(s);
          return {};
        } catch (const std::invalid_argument& e) {
          return e.what();
        }
      },
      "ORDER");
}

CLI::Validator local_order_validator() {
  return CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          parse_local_order(s);
          return {};
        } catch (const std::invalid_argument& e) {
          return e.what();
        }
      },
      "LOCAL");
}

void add_run(CLI::App* cmd, RunArgs& r, bool with_algo = true) {
  if (with_algo)
    cmd->add_option("--algo", r.algo, "listing kernel")
        ->check(CLI::IsMember({"cf", "cf-hash", "kclist", "aot"}))
        ->capture_default_str();
  cmd->add_option("--order", r.order,
                  "vertex order: id|degree|degeneracy|random:SEED "
                  "(default: degree; degeneracy for kclist)")
      ->check(order_validator());
  cmd->add_option("--local-order", r.local_order,
                  "adjacency layout: rank-asc|degree-desc|random:SEED "
                  "(default: rank-asc; degree-desc for aot)")
      ->check(local_order_validator());
  cmd->add_option("--threads", r.threads, "worker count")
      ->envname("TRILIST_THREADS")
      ->check(CLI::Range(1u, 4096u))
      ->capture_default_str();
  cmd->add_option("--chunk", r.chunk, "pivots per work-queue grab")
      ->check(CLI::Range(1u, 1u << 30))
      ->capture_default_str();
}

// Per-algorithm defaults: the node-iterator kernel is meant for degeneracy
// order, the others for degree order; the adaptive kernel defaults to the
// degree-desc layout it was designed around.
OrderSpec resolve_order(const RunArgs& r, Algorithm algo) {
  if (!r.order.empty()) return parse_order_spec(r.order);
  return {algo == Algorithm::kclist3 ? OrderKind::degeneracy : OrderKind::degree, 0};
}

LocalOrder resolve_local(const RunArgs& r, Algorithm algo) {
  if (!r.local_order.empty()) return parse_local_order(r.local_order);
  if (algo == Algorithm::aot) return {LocalOrderPolicy::degree_desc, 0};
  return {LocalOrderPolicy::rank_asc, 0};
}

LoadResult load_input(const CommonArgs& c, double& seconds) {
  detail::StopWatch timer;
  LoadOptions opt;
  opt.one_indexed = c.one_indexed;
  opt.compact_ids = c.compact;
  LoadResult r = load_edge_list_file(c.input, opt);
  seconds = timer.seconds();
  return r;
}

int emit(const CommonArgs& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << c.out << "' for writing\n";
    return kExitInput;
  }
  f << text;
  return f.good() ? kExitOk : kExitInput;
}

int emit_json(const CommonArgs& c, const json& doc) {
  return emit(c, doc.dump(c.pretty ? 2 : -1) + "\n");
}

std::vector<Algorithm> parse_algorithms(const std::vector<std::string>& names) {
  std::vector<Algorithm> algos;
  for (const std::string& n : names) algos.push_back(parse_algorithm(n));
  return algos;
}

// cf's merge kernel only runs on the rank-ascending layout; an explicit
// request for anything else is a usage contradiction.
bool merge_layout_conflict(Algorithm algo, const RunArgs& r) {
  return algo == Algorithm::cf_merge && !r.local_order.empty() &&
         parse_local_order(r.local_order).policy != LocalOrderPolicy::rank_asc;
}

struct PreparedRun {
  OrientedGraph oriented;
  OrderSpec order;
  LocalOrder local;
  PhaseTimings timings;
};

PreparedRun prepare(const Graph& g, const RunArgs& r, Algorithm algo, double load_s) {
  PreparedRun p;
  p.order = resolve_order(r, algo);
  p.local = algo == Algorithm::cf_merge ? LocalOrder{LocalOrderPolicy::rank_asc, 0}
                                        : resolve_local(r, algo);
  p.timings.load_s = load_s;

  detail::StopWatch order_timer;
  VertexOrder order = make_order(g, p.order);
  p.timings.order_s = order_timer.seconds();

  detail::StopWatch orient_timer;
  p.oriented = orient(g, order);
  if (p.local.policy != LocalOrderPolicy::rank_asc)
    p.oriented = apply_local_order(p.oriented, p.local);
  p.timings.orient_s = orient_timer.seconds();
  return p;
}

json run_document(const char* command, const CommonArgs& c, const LoadResult& loaded) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"dataset", c.input},
          {"n", loaded.graph.num_vertices()},
          {"m", loaded.graph.num_edges()},
          {"load", to_json(loaded.diagnostics)}};
}

int cmd_count(const CommonArgs& c, const RunArgs& r) {
  Algorithm algo = parse_algorithm(r.algo);
  if (merge_layout_conflict(algo, r)) {
    std::cerr << "error: --algo cf requires --local-order rank-asc\n";
    return kExitUsage;
  }
  double load_s = 0;
  LoadResult loaded = load_input(c, load_s);
  PreparedRun p = prepare(loaded.graph, r, algo, load_s);

  RunStats stats = run_parallel_count(algo, p.oriented, {r.threads, r.chunk});
  p.timings.list_s = stats.wall_time_s;

  json doc = run_document("count", c, loaded);
  doc["algorithm"] = to_string(algo);
  doc["order"] = to_string(p.order);
  doc["local_order"] = to_string(p.local);
  doc["workers"] = r.threads;
  doc["chunk"] = r.chunk;
  doc["triangles"] = stats.triangles;
  doc["stats"] = to_json(stats);
  doc["costs"] = to_json(cost_model(p.oriented));
  doc["timings"] = to_json(p.timings);
  return emit_json(c, doc);
}

int cmd_list(const CommonArgs& c, const RunArgs& r, bool sorted) {
  Algorithm algo = parse_algorithm(r.algo);
  if (merge_layout_conflict(algo, r)) {
    std::cerr << "error: --algo cf requires --local-order rank-asc\n";
    return kExitUsage;
  }
  double load_s = 0;
  LoadResult loaded = load_input(c, load_s);
  PreparedRun p = prepare(loaded.graph, r, algo, load_s);

  std::vector<std::vector<std::array<VertexId, 3>>> buffers;
  run_parallel_collecting(algo, p.oriented, {r.threads, r.chunk}, buffers);

  std::vector<Triangle> triangles;
  for (const auto& buf : buffers)
    for (const auto& t : buf) triangles.push_back(canonical_triangle(t[0], t[1], t[2]));
  if (sorted) std::sort(triangles.begin(), triangles.end());

  std::ostringstream out;
  for (const Triangle& t : triangles) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
  return emit(c, out.str());
}

int cmd_verify(const CommonArgs& c, const RunArgs& r,
               const std::vector<std::string>& algo_names,
               const std::vector<std::string>& order_names, VertexId oracle_cap,
               const std::string& fault) {
  std::vector<Algorithm> algos = parse_algorithms(algo_names);
  for (Algorithm a : algos)
    if (merge_layout_conflict(a, r)) {
      std::cerr << "error: --algos cf requires --local-order rank-asc\n";
      return kExitUsage;
    }
  LocalOrder local =
      r.local_order.empty() ? LocalOrder{} : parse_local_order(r.local_order);

  double load_s = 0;
  LoadResult loaded = load_input(c, load_s);
  const Graph& g = loaded.graph;

  RunOptions opt;
  opt.check_bitmap_between_pivots = true;
  opt.aot_skip_negative_phase = fault == "drop-negative-phase";

  std::optional<std::vector<Triangle>> oracle;
  if (g.num_vertices() <= oracle_cap)
    oracle = brute_force_triangles(g, {oracle_cap});

  json orders = json::array();
  bool pass = true;
  bool cross_order_consistent = true;
  std::uint64_t first_count = 0;
  bool have_first = false;

  for (const std::string& name : order_names) {
    VertexOrder order = make_order(g, parse_order_spec(name));
    VerifyReport report = verify_equivalence(g, algos, order, local,
                                             oracle ? &*oracle : nullptr, opt);
    pass = pass && report.pass;
    // all orders must land on the same canonical set size; combined with the
    // per-order set equality this pins the full cross product
    if (!have_first) {
      first_count = report.reference_count;
      have_first = true;
    } else if (report.reference_count != first_count) {
      cross_order_consistent = false;
    }
    orders.push_back({{"order", name}, {"report", to_json(report)}});
  }
  pass = pass && cross_order_consistent;

  json doc = run_document("verify", c, loaded);
  doc["algorithms"] = algo_names;
  doc["local_order"] = to_string(local);
  doc["oracle_used"] = bool(oracle);
  doc["oracle_cap"] = oracle_cap;
  if (oracle) doc["oracle_triangles"] = oracle->size();
  doc["orders"] = orders;
  doc["cross_order_consistent"] = cross_order_consistent;
  doc["pass"] = pass;

  int code = emit_json(c, doc);
  if (code != kExitOk) return code;
  return pass ? kExitOk : kExitVerify;
}

int cmd_bench(const CommonArgs& c, const RunArgs& r,
              const std::vector<std::string>& algo_names,
              const std::vector<std::string>& order_names,
              const std::vector<unsigned>& threads_list, unsigned repeats, bool csv) {
  BenchSettings settings;
  settings.algorithms = parse_algorithms(algo_names);
  for (const std::string& name : order_names)
    settings.orders.push_back(parse_order_spec(name));
  settings.local_order =
      r.local_order.empty() ? LocalOrder{} : parse_local_order(r.local_order);
  settings.thread_counts = threads_list.empty() ? std::vector<unsigned>{1} : threads_list;
  settings.chunk = r.chunk;
  settings.repeats = repeats;

  double load_s = 0;
  LoadResult loaded = load_input(c, load_s);
  std::vector<BenchRow> rows = run_bench(loaded.graph, c.input, settings, load_s);

  if (csv) return emit(c, bench_rows_to_csv(rows));
  json arr = json::array();
  for (const BenchRow& row : rows) arr.push_back(to_json(row));
  json doc = run_document("bench", c, loaded);
  doc["repeats"] = repeats;
  doc["rows"] = arr;
  return emit_json(c, doc);
}

int cmd_stats(const CommonArgs& c, const RunArgs& r) {
  double load_s = 0;
  LoadResult loaded = load_input(c, load_s);
  OrderSpec spec = r.order.empty() ? OrderSpec{} : parse_order_spec(r.order);

  detail::StopWatch order_timer;
  VertexOrder order = make_order(loaded.graph, spec);
  double order_s = order_timer.seconds();
  detail::StopWatch orient_timer;
  OrientedGraph og = orient(loaded.graph, order);
  PhaseTimings timings{load_s, order_s, orient_timer.seconds(), 0};

  json doc = run_document("stats", c, loaded);
  doc["order"] = to_string(spec);
  doc["max_out_degree"] = og.max_out_degree();
  doc["costs"] = to_json(cost_model(og));
  doc["timings"] = to_json(timings);
  return emit_json(c, doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orientation-based triangle listing toolkit"};
  app.set_version_flag("--version", "0.1.0");
  app.require_subcommand(1);

  CommonArgs count_c, list_c, verify_c, bench_c, stats_c;
  RunArgs count_r, list_r, verify_r, bench_r, stats_r;
  bool list_sorted = false;
  std::vector<std::string> verify_algos = {"cf", "cf-hash", "kclist", "aot"};
  std::vector<std::string> verify_orders = {"degree", "degeneracy", "id"};
  VertexId oracle_cap = 2000;
  std::string fault = "none";
  std::vector<std::string> bench_algos = {"cf", "cf-hash", "kclist", "aot"};
  std::vector<std::string> bench_orders = {"degree"};
  std::vector<unsigned> bench_threads = {1};
  unsigned bench_repeats = 3;
  bool bench_csv = false;

  CLI::App* count = app.add_subcommand("count", "count triangles, print a JSON report");
  add_common(count, count_c);
  add_run(count, count_r);

  CLI::App* list = app.add_subcommand("list", "write triangles, one 'a b c' per line");
  add_common(list, list_c);
  add_run(list, list_r);
  list->add_flag("--sorted", list_sorted, "sort output lexicographically");

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check kernels against each other and the brute-force oracle");
  add_common(verify, verify_c);
  add_run(verify, verify_r, /*with_algo=*/false);
  verify->add_option("--algos", verify_algos, "kernels to cross-check")
      ->delimiter(',')
      ->check(CLI::IsMember({"cf", "cf-hash", "kclist", "aot"}))
      ->capture_default_str();
  verify->add_option("--orders", verify_orders, "vertex orders to cover")
      ->delimiter(',')
      ->check(order_validator())
      ->capture_default_str();
  verify->add_option("--oracle-cap", oracle_cap,
                     "skip the brute-force oracle above this vertex count")
      ->capture_default_str();
  verify->add_option("--inject-fault", fault, "test hook")
      ->check(CLI::IsMember({"none", "drop-negative-phase"}))
      ->group("");  // hidden

  CLI::App* bench = app.add_subcommand("bench", "time kernels over a cross product");
  add_common(bench, bench_c);
  add_run(bench, bench_r, /*with_algo=*/false);
  bench->add_option("--algos", bench_algos, "kernels to time")
      ->delimiter(',')
      ->check(CLI::IsMember({"cf", "cf-hash", "kclist", "aot"}))
      ->capture_default_str();
  bench->add_option("--orders", bench_orders, "vertex orders to time")
      ->delimiter(',')
      ->check(order_validator())
      ->capture_default_str();
  bench->add_option("--threads-list", bench_threads, "worker counts to time")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--repeats", bench_repeats, "repetitions per cell")
      ->check(CLI::Range(1u, 1000u))
      ->capture_default_str();
  bench->add_flag("--csv", bench_csv, "emit CSV instead of JSON");

  CLI::App* stats = app.add_subcommand("stats", "orientation cost model, no listing");
  add_common(stats, stats_c);
  add_run(stats, stats_r, /*with_algo=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(count_c, count_r);
    if (*list) return cmd_list(list_c, list_r, list_sorted);
    if (*verify)
      return cmd_verify(verify_c, verify_r, verify_algos, verify_orders, oracle_cap, fault);
    if (*bench)
      return cmd_bench(bench_c, bench_r, bench_algos, bench_orders, bench_threads,
                       bench_repeats, bench_csv);
    if (*stats) return cmd_stats(stats_c, stats_r);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
