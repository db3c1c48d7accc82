#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trilist/engine.hpp"
#include "trilist/graph.hpp"
#include "trilist/oracle.hpp"
#include "trilist/ordering.hpp"
#include "trilist/parallel.hpp"

namespace py = pybind11;
using namespace trilist;

namespace {

py::dict stats_dict(const RunStats& s) {
  py::dict d;
  d["triangles"] = s.triangles;
  d["probes"] = s.probes;
  d["merge_comparisons"] = s.merge_comparisons;
  d["table_builds"] = s.table_builds;
  d["positive_triangles"] = s.positive_triangles;
  d["negative_triangles"] = s.negative_triangles;
  d["wall_time_s"] = s.wall_time_s;
  return d;
}

std::vector<std::tuple<VertexId, VertexId, VertexId>> to_tuples(
    const std::vector<Triangle>& ts) {
  std::vector<std::tuple<VertexId, VertexId, VertexId>> out;
  out.reserve(ts.size());
  for (const Triangle& t : ts) out.emplace_back(t.a, t.b, t.c);
  return out;
}

OrientedGraph prepare(const Graph& g, const std::string& order,
                      const std::string& local_order) {
  OrientedGraph og = orient(g, make_order(g, parse_order_spec(order)));
  LocalOrder local = parse_local_order(local_order);
  if (local.policy != LocalOrderPolicy::rank_asc) og = apply_local_order(og, local);
  return og;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "orientation-based triangle listing kernels with exact counters";
  m.attr("__version__") = "0.1.0";
  m.attr("ALGORITHMS") = std::vector<std::string>{"cf", "cf-hash", "kclist", "aot"};

  py::register_exception<ParseError>(m, "ParseFailure", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def_static(
          "from_edges",
          [](VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
            return Graph::from_edges(n, edges);
          },
          py::arg("min_vertices"), py::arg("edges"),
          "build a normalized graph from (u, v) pairs")
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("degree", &Graph::degree, py::arg("u"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def(
          "neighbors",
          [](const Graph& g, VertexId u) {
            auto nb = g.neighbors(u);
            return std::vector<VertexId>(nb.begin(), nb.end());
          },
          py::arg("u"))
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  py::class_<OrientedGraph>(m, "OrientedGraph")
      .def_property_readonly("num_vertices", &OrientedGraph::num_vertices)
      .def_property_readonly("num_edges", &OrientedGraph::num_edges)
      .def("out_degree", &OrientedGraph::out_degree, py::arg("u"))
      .def("in_degree", &OrientedGraph::in_degree, py::arg("u"))
      .def("rank", &OrientedGraph::rank, py::arg("u"))
      .def("max_out_degree", &OrientedGraph::max_out_degree)
      .def(
          "out_neighbors",
          [](const OrientedGraph& g, VertexId u) {
            auto nb = g.out_neighbors(u);
            return std::vector<VertexId>(nb.begin(), nb.end());
          },
          py::arg("u"))
      .def(
          "in_neighbors",
          [](const OrientedGraph& g, VertexId u) {
            auto nb = g.in_neighbors(u);
            return std::vector<VertexId>(nb.begin(), nb.end());
          },
          py::arg("u"))
      .def("__repr__", [](const OrientedGraph& g) {
        return "OrientedGraph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def(
      "load_edge_list",
      [](const std::string& path, bool compact_ids, bool one_indexed) {
        LoadOptions opt;
        opt.compact_ids = compact_ids;
        opt.one_indexed = one_indexed;
        LoadResult r = load_edge_list_file(path, opt);
        py::dict diag;
        diag["lines_read"] = r.diagnostics.lines_read;
        diag["edges_parsed"] = r.diagnostics.edges_parsed;
        diag["self_loops_dropped"] = r.diagnostics.self_loops_dropped;
        diag["duplicates_dropped"] = r.diagnostics.duplicates_dropped;
        return py::make_tuple(std::move(r.graph), diag);
      },
      py::arg("path"), py::arg("compact_ids") = false, py::arg("one_indexed") = false,
      "load an edge list (gzip transparent); returns (Graph, diagnostics)");

  m.def(
      "load_edge_list_text",
      [](const std::string& text, bool compact_ids, bool one_indexed) {
        LoadOptions opt;
        opt.compact_ids = compact_ids;
        opt.one_indexed = one_indexed;
        return load_edge_list_text(text, opt).graph;
      },
      py::arg("text"), py::arg("compact_ids") = false, py::arg("one_indexed") = false);

  m.def(
      "orient",
      [](const Graph& g, const std::string& order, const std::string& local_order) {
        return prepare(g, order, local_order);
      },
      py::arg("graph"), py::arg("order") = "degree", py::arg("local_order") = "rank-asc",
      "orient by a vertex order: id|degree|degeneracy|random:SEED");

  m.def(
      "edge_polarity",
      [](const OrientedGraph& g, VertexId u, VertexId v) {
        return edge_polarity(g, u, v) == EdgePolarity::positive ? "positive" : "negative";
      },
      py::arg("oriented"), py::arg("u"), py::arg("v"));

  m.def(
      "cost_model",
      [](const OrientedGraph& g) {
        CostModel cm = cost_model(g);
        py::dict d;
        d["cf_cost"] = cm.cf_cost;
        d["kclist_cost"] = cm.kclist_cost;
        d["aot_cost"] = cm.aot_cost;
        return d;
      },
      py::arg("oriented"));

  m.def(
      "run",
      [](const OrientedGraph& g, const std::string& algo, unsigned threads,
         VertexId chunk) {
        RunStats s =
            run_parallel_count(parse_algorithm(algo), g, ParallelConfig{threads, chunk});
        return stats_dict(s);
      },
      py::arg("oriented"), py::arg("algo") = "aot", py::arg("threads") = 1,
      py::arg("chunk") = 64, "count triangles; returns the stats dict");

  m.def(
      "count_triangles",
      [](const Graph& g, const std::string& algo, const std::string& order,
         const std::string& local_order, unsigned threads) {
        Algorithm a = parse_algorithm(algo);
        OrientedGraph og =
            prepare(g, order, a == Algorithm::cf_merge ? "rank-asc" : local_order);
        return run_parallel_count(a, og, ParallelConfig{threads, 64}).triangles;
      },
      py::arg("graph"), py::arg("algo") = "aot", py::arg("order") = "degree",
      py::arg("local_order") = "rank-asc", py::arg("threads") = 1);

  m.def(
      "list_triangles",
      [](const OrientedGraph& g, const std::string& algo) {
        std::vector<std::array<VertexId, 3>> raw;
        run_collecting(parse_algorithm(algo), g, raw);
        auto canon = canonicalize_emissions(raw);
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
        return to_tuples(canon);
      },
      py::arg("oriented"), py::arg("algo") = "aot",
      "canonical sorted (a, b, c) tuples");

  m.def(
      "brute_force_triangles",
      [](const Graph& g, VertexId cap) {
        return to_tuples(brute_force_triangles(g, {cap}));
      },
      py::arg("graph"), py::arg("cap") = 2000);

  m.def(
      "verify_equivalence",
      [](const Graph& g, const std::vector<std::string>& algos, const std::string& order,
         const std::string& local_order, bool against_oracle) {
        std::vector<Algorithm> as;
        for (const auto& name : algos) as.push_back(parse_algorithm(name));
        std::vector<Triangle> oracle;
        if (against_oracle) oracle = brute_force_triangles(g);
        VerifyReport report =
            verify_equivalence(g, as, make_order(g, parse_order_spec(order)),
                               parse_local_order(local_order),
                               against_oracle ? &oracle : nullptr);
        py::dict d;
        d["pass"] = report.pass;
        d["reference"] = report.reference;
        d["reference_count"] = report.reference_count;
        py::list results;
        for (const auto& r : report.results) {
          py::dict e;
          e["algorithm"] = to_string(r.algorithm);
          e["pass"] = r.pass;
          e["unique_triangles"] = r.unique_triangles;
          e["duplicate_emissions"] = r.duplicate_emissions;
          e["missing_count"] = r.missing_count;
          e["extra_count"] = r.extra_count;
          e["stats"] = stats_dict(r.stats);
          results.append(e);
        }
        d["results"] = results;
        return d;
      },
      py::arg("graph"),
      py::arg("algos") = std::vector<std::string>{"cf", "cf-hash", "kclist", "aot"},
      py::arg("order") = "degree", py::arg("local_order") = "rank-asc",
      py::arg("against_oracle") = true);
}
