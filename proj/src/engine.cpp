#include "trilist/engine.hpp"

#include <algorithm>

namespace trilist {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::cf_merge: return "cf";
    case Algorithm::cf_hash: return "cf-hash";
    case Algorithm::kclist3: return "kclist";
    case Algorithm::aot: return "aot";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "cf") return Algorithm::cf_merge;
  if (name == "cf-hash") return Algorithm::cf_hash;
  if (name == "kclist") return Algorithm::kclist3;
  if (name == "aot") return Algorithm::aot;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (expected cf|cf-hash|kclist|aot)");
}

RunStats run_counting(Algorithm algo, const OrientedGraph& g, const RunOptions& opt) {
  NullSink sink;
  return run_algorithm(algo, g, sink, opt);
}

RunStats run_collecting(Algorithm algo, const OrientedGraph& g,
                        std::vector<std::array<VertexId, 3>>& out, const RunOptions& opt) {
  CollectingSink sink{&out};
  return run_algorithm(algo, g, sink, opt);
}

CostModel cost_model(const OrientedGraph& g) {
  CostModel cm;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    std::uint64_t du = g.out_degree(u);
    for (VertexId v : g.out_neighbors(u)) {
      std::uint64_t dv = g.out_degree(v);
      cm.cf_cost += du + dv;
      cm.kclist_cost += dv;
      cm.aot_cost += std::min(du, dv);
    }
  }
  return cm;
}

std::vector<Triangle> canonicalize_emissions(std::span<const std::array<VertexId, 3>> raw) {
  std::vector<Triangle> out;
  out.reserve(raw.size());
  for (const auto& t : raw) out.push_back(canonical_triangle(t[0], t[1], t[2]));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Walks two sorted unique lists, recording set differences with capped samples.
void diff_sets(const std::vector<Triangle>& reference, const std::vector<Triangle>& got,
               VerifyAlgorithmResult& r) {
  std::size_t i = 0, j = 0;
  while (i < reference.size() || j < got.size()) {
    if (j == got.size() || (i < reference.size() && reference[i] < got[j])) {
      if (r.missing_samples.size() < VerifyReport::kMaxSamples)
        r.missing_samples.push_back(reference[i]);
      ++r.missing_count, ++i;
    } else if (i == reference.size() || got[j] < reference[i]) {
      if (r.extra_samples.size() < VerifyReport::kMaxSamples)
        r.extra_samples.push_back(got[j]);
      ++r.extra_count, ++j;
    } else {
      ++i, ++j;
    }
  }
}

}  // namespace

VerifyReport verify_equivalence(const Graph& g, std::span<const Algorithm> algorithms,
                                const VertexOrder& order, const LocalOrder& local,
                                const std::vector<Triangle>* reference,
                                const RunOptions& opt) {
  OrientedGraph oriented = orient(g, order);
  // The merge kernel needs the rank-ascending layout; others honor `local`.
  const OrientedGraph* for_merge = &oriented;
  OrientedGraph localized;
  const OrientedGraph* for_rest = &oriented;
  if (local.policy != LocalOrderPolicy::rank_asc) {
    localized = apply_local_order(oriented, local);
    for_rest = &localized;
  }

  VerifyReport report;
  std::vector<Triangle> baseline;
  if (reference) {
    baseline = *reference;
    std::sort(baseline.begin(), baseline.end());
    baseline.erase(std::unique(baseline.begin(), baseline.end()), baseline.end());
    report.reference = "oracle";
  }

  std::vector<std::array<VertexId, 3>> raw;
  for (Algorithm algo : algorithms) {
    raw.clear();
    const OrientedGraph& target = algo == Algorithm::cf_merge ? *for_merge : *for_rest;
    VerifyAlgorithmResult r;
    r.algorithm = algo;
    r.stats = run_collecting(algo, target, raw, opt);

    std::vector<Triangle> canon = canonicalize_emissions(raw);
    std::vector<Triangle> unique = canon;
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    r.unique_triangles = unique.size();
    r.duplicate_emissions = canon.size() - unique.size();

    if (!reference && report.results.empty()) {
      baseline = unique;
      report.reference = to_string(algo);
    }
    diff_sets(baseline, unique, r);
    r.pass = r.duplicate_emissions == 0 && r.missing_count == 0 && r.extra_count == 0;
    report.pass = report.pass && r.pass;
    report.results.push_back(std::move(r));
  }
  report.reference_count = baseline.size();
  return report;
}

}  // namespace trilist
