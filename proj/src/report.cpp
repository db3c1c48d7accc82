#include "trilist/report.hpp"

#include <algorithm>
#include <sstream>

namespace trilist {

using nlohmann::json;

json to_json(const RunStats& s) {
  return {{"triangles", s.triangles},
          {"probes", s.probes},
          {"merge_comparisons", s.merge_comparisons},
          {"table_builds", s.table_builds},
          {"positive_triangles", s.positive_triangles},
          {"negative_triangles", s.negative_triangles},
          {"wall_time_s", s.wall_time_s}};
}

json to_json(const CostModel& c) {
  return {{"cf_cost", c.cf_cost}, {"kclist_cost", c.kclist_cost}, {"aot_cost", c.aot_cost}};
}

json to_json(const LoadDiagnostics& d) {
  return {{"lines_read", d.lines_read},
          {"edges_parsed", d.edges_parsed},
          {"self_loops_dropped", d.self_loops_dropped},
          {"duplicates_dropped", d.duplicates_dropped}};
}

json to_json(const PhaseTimings& t) {
  return {{"load_s", t.load_s}, {"order_s", t.order_s}, {"orient_s", t.orient_s},
          {"list_s", t.list_s}};
}

json to_json(const BenchRow& row) {
  return {{"dataset", row.dataset},
          {"n", row.n},
          {"m", row.m},
          {"algorithm", row.algorithm},
          {"order", row.order},
          {"local_order", row.local_order},
          {"workers", row.workers},
          {"chunk", row.chunk},
          {"repeats", row.repeats},
          {"stats", to_json(row.stats)},
          {"list_times_s", row.list_times_s},
          {"median_list_s", row.median_list_s},
          {"timings", to_json(row.timings)},
          {"costs", to_json(row.costs)}};
}

namespace {

json to_json(const Triangle& t) { return json::array({t.a, t.b, t.c}); }

json samples_to_json(const std::vector<Triangle>& samples) {
  json arr = json::array();
  for (const Triangle& t : samples) arr.push_back(to_json(t));
  return arr;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::size_t k = xs.size();
  if (k == 0) return 0;
  return k % 2 ? xs[k / 2] : (xs[k / 2 - 1] + xs[k / 2]) / 2;
}

}  // namespace

json to_json(const VerifyReport& report) {
  json results = json::array();
  for (const VerifyAlgorithmResult& r : report.results) {
    results.push_back({{"algorithm", to_string(r.algorithm)},
                       {"pass", r.pass},
                       {"unique_triangles", r.unique_triangles},
                       {"duplicate_emissions", r.duplicate_emissions},
                       {"missing_count", r.missing_count},
                       {"extra_count", r.extra_count},
                       {"missing_samples", samples_to_json(r.missing_samples)},
                       {"extra_samples", samples_to_json(r.extra_samples)},
                       {"stats", to_json(r.stats)}});
  }
  return {{"pass", report.pass},
          {"reference", report.reference},
          {"reference_count", report.reference_count},
          {"results", results}};
}

std::string bench_rows_to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "dataset,n,m,algorithm,order,local_order,workers,chunk,repeats,"
         "triangles,probes,merge_comparisons,table_builds,positive_triangles,"
         "negative_triangles,median_list_s,load_s,order_s,orient_s,"
         "cf_cost,kclist_cost,aot_cost\n";
  for (const BenchRow& r : rows) {
    out << r.dataset << ',' << r.n << ',' << r.m << ',' << r.algorithm << ',' << r.order
        << ',' << r.local_order << ',' << r.workers << ',' << r.chunk << ',' << r.repeats
        << ',' << r.stats.triangles << ',' << r.stats.probes << ','
        << r.stats.merge_comparisons << ',' << r.stats.table_builds << ','
        << r.stats.positive_triangles << ',' << r.stats.negative_triangles << ','
        << r.median_list_s << ',' << r.timings.load_s << ',' << r.timings.order_s << ','
        << r.timings.orient_s << ',' << r.costs.cf_cost << ',' << r.costs.kclist_cost
        << ',' << r.costs.aot_cost << '\n';
  }
  return out.str();
}

std::vector<BenchRow> run_bench(const Graph& g, const std::string& dataset,
                                const BenchSettings& settings, double load_seconds) {
  std::vector<BenchRow> rows;
  for (const OrderSpec& spec : settings.orders) {
    detail::StopWatch order_timer;
    VertexOrder order = make_order(g, spec);
    double order_s = order_timer.seconds();

    detail::StopWatch orient_timer;
    OrientedGraph base = orient(g, order);
    double orient_s = orient_timer.seconds();

    CostModel costs = cost_model(base);
    bool need_local = settings.local_order.policy != LocalOrderPolicy::rank_asc;
    OrientedGraph localized;
    if (need_local) localized = apply_local_order(base, settings.local_order);

    for (Algorithm algo : settings.algorithms) {
      bool merge = algo == Algorithm::cf_merge;
      const OrientedGraph& target = (merge || !need_local) ? base : localized;

      BenchRow row;
      row.dataset = dataset;
      row.n = g.num_vertices();
      row.m = g.num_edges();
      row.algorithm = to_string(algo);
      row.order = to_string(spec);
      row.local_order = merge ? "rank-asc" : to_string(settings.local_order);
      row.chunk = settings.chunk;
      row.repeats = settings.repeats;
      row.timings.load_s = load_seconds;
      row.timings.order_s = order_s;
      row.timings.orient_s = orient_s;
      row.costs = costs;

      for (unsigned workers : settings.thread_counts) {
        BenchRow cell = row;
        cell.workers = workers;
        for (unsigned rep = 0; rep < std::max(1u, settings.repeats); ++rep) {
          RunStats stats = run_parallel_count(algo, target, {workers, settings.chunk},
                                              settings.run_options);
          if (rep == 0)
            cell.stats = stats;
          else if (!cell.stats.counters_equal(stats))
            throw std::logic_error("counters differ across benchmark repeats");
          cell.list_times_s.push_back(stats.wall_time_s);
        }
        cell.median_list_s = median(cell.list_times_s);
        cell.timings.list_s = cell.median_list_s;
        rows.push_back(std::move(cell));
      }
    }
  }
  return rows;
}

}  // namespace trilist
