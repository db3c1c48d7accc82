#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "trilist/engine.hpp"
#include "trilist/graph.hpp"
#include "trilist/ordering.hpp"
#include "trilist/parallel.hpp"

namespace trilist {

/// Version stamp carried by every JSON document this toolkit emits.
inline constexpr int kSchemaVersion = 1;

struct PhaseTimings {
  double load_s = 0;
  double order_s = 0;
  double orient_s = 0;
  double list_s = 0;
};

/// One benchmark cell: algorithm x order x worker count on one dataset.
struct BenchRow {
  std::string dataset;
  VertexId n = 0;
  EdgeCount m = 0;
  std::string algorithm;
  std::string order;
  std::string local_order;  // the layout that actually ran
  unsigned workers = 1;
  VertexId chunk = 64;
  unsigned repeats = 1;
  RunStats stats;  // counters are identical across repeats (asserted)
  std::vector<double> list_times_s;
  double median_list_s = 0;
  PhaseTimings timings;
  CostModel costs;
};

nlohmann::json to_json(const RunStats& s);
nlohmann::json to_json(const CostModel& c);
nlohmann::json to_json(const LoadDiagnostics& d);
nlohmann::json to_json(const PhaseTimings& t);
nlohmann::json to_json(const BenchRow& row);
nlohmann::json to_json(const VerifyReport& report);

std::string bench_rows_to_csv(const std::vector<BenchRow>& rows);

struct BenchSettings {
  std::vector<Algorithm> algorithms;
  std::vector<OrderSpec> orders;
  LocalOrder local_order;  // cf always runs its required rank-asc layout
  std::vector<unsigned> thread_counts = {1};
  VertexId chunk = 64;
  unsigned repeats = 1;
  RunOptions run_options;
};

/// Runs the full cross product and collects one row per cell. Counters must
/// repeat exactly; a mismatch raises std::logic_error.
std::vector<BenchRow> run_bench(const Graph& g, const std::string& dataset,
                                const BenchSettings& settings, double load_seconds);

}  // namespace trilist
