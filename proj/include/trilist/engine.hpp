#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trilist/bitmap.hpp"
#include "trilist/graph.hpp"
#include "trilist/ordering.hpp"

namespace trilist {

enum class Algorithm { cf_merge, cf_hash, kclist3, aot };

inline constexpr std::array<Algorithm, 4> kAllAlgorithms = {
    Algorithm::cf_merge, Algorithm::cf_hash, Algorithm::kclist3, Algorithm::aot};

const char* to_string(Algorithm a);
/// Parses "cf" | "cf-hash" | "kclist" | "aot".
Algorithm parse_algorithm(const std::string& name);

/// Exact operation counts of one listing run. Every counter is deterministic
/// for a given OrientedGraph; only wall_time varies between runs.
struct RunStats {
  std::uint64_t triangles = 0;
  std::uint64_t probes = 0;             // membership look-ups into bitmap/hash set
  std::uint64_t merge_comparisons = 0;  // rank comparisons in merge intersections
  std::uint64_t table_builds = 0;       // probe-structure element insertions
  std::uint64_t positive_triangles = 0; // adaptive out-neighbor phase emissions
  std::uint64_t negative_triangles = 0; // adaptive in-neighbor phase emissions
  double wall_time_s = 0.0;             // listing phase only, excludes load/orient

  /// Sums the integer counters; wall_time_s is left to the caller.
  void add_counters(const RunStats& other) {
    triangles += other.triangles;
    probes += other.probes;
    merge_comparisons += other.merge_comparisons;
    table_builds += other.table_builds;
    positive_triangles += other.positive_triangles;
    negative_triangles += other.negative_triangles;
  }

  bool counters_equal(const RunStats& other) const {
    return triangles == other.triangles && probes == other.probes &&
           merge_comparisons == other.merge_comparisons &&
           table_builds == other.table_builds &&
           positive_triangles == other.positive_triangles &&
           negative_triangles == other.negative_triangles;
  }
};

struct RunOptions {
  bool check_bitmap_between_pivots = false;  // O(n/64) hygiene scan per pivot
  bool cf_hash_reuse_last_table = false;     // skip rebuild if same owner, pivot-scoped
  bool aot_skip_negative_phase = false;      // fault injection hook for the verifier
};

/// Open-addressing set of vertex ids with O(1) generation-based clear.
/// Sized once for the largest out-degree; never rehashes during a run.
class ProbeSet {
 public:
  ProbeSet() { resize_for(0); }
  explicit ProbeSet(std::size_t max_keys) { resize_for(max_keys); }

  void clear() {
    if (++gen_ == 0) {
      std::fill(stamps_.begin(), stamps_.end(), 0u);
      gen_ = 1;
    }
  }

  void insert(VertexId v) {
    std::size_t i = slot(v);
    while (stamps_[i] == gen_) {
      if (keys_[i] == v) return;
      i = (i + 1) & mask_;
    }
    stamps_[i] = gen_;
    keys_[i] = v;
  }

  bool contains(VertexId v) const {
    std::size_t i = slot(v);
    while (stamps_[i] == gen_) {
      if (keys_[i] == v) return true;
      i = (i + 1) & mask_;
    }
    return false;
  }

 private:
  void resize_for(std::size_t max_keys) {
    std::size_t cap = 8;
    while (cap < 2 * max_keys) cap <<= 1;
    keys_.assign(cap, 0);
    stamps_.assign(cap, 0);
    mask_ = cap - 1;
    gen_ = 1;
  }

  std::size_t slot(VertexId v) const {
    return std::size_t((std::uint64_t(v) * 0x9E3779B97F4A7C15ull) >> 32) & mask_;
  }

  std::vector<VertexId> keys_;
  std::vector<std::uint32_t> stamps_;
  std::size_t mask_ = 0;
  std::uint32_t gen_ = 1;
};

/// Per-worker scratch: one Bitmap (kclist3/aot) and one flat set (cf_hash).
/// Allocated once before the timed phase; kernels allocate nothing.
struct Workspace {
  Bitmap bitmap;
  ProbeSet probe_set;

  explicit Workspace(const OrientedGraph& g)
      : bitmap(g.num_vertices()), probe_set(g.max_out_degree()) {}
};

struct NullSink {
  void operator()(VertexId, VertexId, VertexId) const noexcept {}
};

/// Appends raw emissions in algorithm role order (pivot first). Copyable
/// handle over external storage so parallel workers can share a factory.
struct CollectingSink {
  std::vector<std::array<VertexId, 3>>* out;
  void operator()(VertexId a, VertexId b, VertexId c) const { out->push_back({a, b, c}); }
};

namespace detail {

struct StopWatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

inline void assert_rank_sorted(const OrientedGraph& g) {
  if (!g.out_lists_rank_sorted())
    throw std::invalid_argument(
        "merge kernel requires rank-ascending adjacency (local order rank-asc)");
}

inline void check_hygiene(const Bitmap& bm, const RunOptions& opt) {
  if (opt.check_bitmap_between_pivots && !bm.all_clear())
    throw std::logic_error("bitmap left dirty between pivots");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Per-pivot kernels. All work for pivot u happens here so that sequential and
// parallel drivers share code paths; counters land in `stats`, emissions in
// `sink(pivot, neighbor, witness)`.
// ---------------------------------------------------------------------------

template <typename Sink>
void cf_merge_pivot(const OrientedGraph& g, VertexId u, RunStats& stats, Sink& sink) {
  auto nu = g.out_neighbors(u);
  for (VertexId v : nu) {
    auto nv = g.out_neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      ++stats.merge_comparisons;
      VertexId ri = g.rank(nu[i]), rj = g.rank(nv[j]);
      if (ri < rj) {
        ++i;
      } else if (rj < ri) {
        ++j;
      } else {
        ++stats.triangles;
        sink(u, v, nu[i]);
        ++i, ++j;
      }
    }
  }
}

template <typename Sink>
void cf_hash_pivot(const OrientedGraph& g, VertexId u, Workspace& ws, RunStats& stats,
                   Sink& sink, const RunOptions& opt) {
  auto nu = g.out_neighbors(u);
  constexpr VertexId kNoOwner = ~VertexId(0);
  VertexId cached_owner = kNoOwner;  // cache never survives the pivot

  for (VertexId v : nu) {
    // Hash the lexicographically larger side, probe the smaller. A probe of
    // v itself (when probing N+(u)) misses harmlessly: v is never in N+(v).
    bool hash_u = g.out_degree_before(v, u);
    VertexId owner = hash_u ? u : v;
    auto build_side = hash_u ? nu : g.out_neighbors(v);
    auto probe_side = hash_u ? g.out_neighbors(v) : nu;

    if (!opt.cf_hash_reuse_last_table || owner != cached_owner) {
      ws.probe_set.clear();
      for (VertexId w : build_side) ws.probe_set.insert(w);
      stats.table_builds += build_side.size();
      cached_owner = owner;
    }
    for (VertexId w : probe_side) {
      ++stats.probes;
      if (ws.probe_set.contains(w)) {
        ++stats.triangles;
        sink(u, v, w);
      }
    }
  }
}

template <typename Sink>
void kclist3_pivot(const OrientedGraph& g, VertexId u, Workspace& ws, RunStats& stats,
                   Sink& sink, const RunOptions& opt) {
  auto nu = g.out_neighbors(u);
  for (VertexId w : nu) ws.bitmap.set(w);
  stats.table_builds += nu.size();

  for (VertexId v : nu) {
    for (VertexId w : g.out_neighbors(v)) {
      ++stats.probes;
      if (ws.bitmap.test(w)) {
        ++stats.triangles;
        sink(u, v, w);
      }
    }
  }

  for (VertexId w : nu) ws.bitmap.reset(w);
  detail::check_hygiene(ws.bitmap, opt);
}

template <typename Sink>
void aot_pivot(const OrientedGraph& g, VertexId u, Workspace& ws, RunStats& stats,
               Sink& sink, const RunOptions& opt) {
  auto nu = g.out_neighbors(u);
  for (VertexId w : nu) ws.bitmap.set(w);
  stats.table_builds += nu.size();

  // Positive phase: u claims out-edge <u,v> when v precedes u in the
  // (out-degree, id) order, paying deg+(v) probes instead of deg+(u).
  for (VertexId v : nu) {
    if (!g.out_degree_before(v, u)) continue;
    for (VertexId w : g.out_neighbors(v)) {
      ++stats.probes;
      if (ws.bitmap.test(w)) {
        ++stats.triangles;
        ++stats.positive_triangles;
        sink(u, v, w);
      }
    }
  }

  // Negative phase: u claims in-edge <x,u> when x precedes u, paying deg+(x).
  if (!opt.aot_skip_negative_phase) {
    for (VertexId x : g.in_neighbors(u)) {
      if (!g.out_degree_before(x, u)) continue;
      for (VertexId y : g.out_neighbors(x)) {
        ++stats.probes;
        if (ws.bitmap.test(y)) {
          ++stats.triangles;
          ++stats.negative_triangles;
          sink(u, x, y);
        }
      }
    }
  }

  for (VertexId w : nu) ws.bitmap.reset(w);
  detail::check_hygiene(ws.bitmap, opt);
}

/// Runs one pivot of `algo`; shared by the sequential and parallel drivers.
template <typename Sink>
void run_pivot(Algorithm algo, const OrientedGraph& g, VertexId u, Workspace& ws,
               RunStats& stats, Sink& sink, const RunOptions& opt) {
  switch (algo) {
    case Algorithm::cf_merge: cf_merge_pivot(g, u, stats, sink); break;
    case Algorithm::cf_hash: cf_hash_pivot(g, u, ws, stats, sink, opt); break;
    case Algorithm::kclist3: kclist3_pivot(g, u, ws, stats, sink, opt); break;
    case Algorithm::aot: aot_pivot(g, u, ws, stats, sink, opt); break;
  }
}

// ---------------------------------------------------------------------------
// Sequential whole-run drivers. wall_time_s covers the pivot loop only.
// ---------------------------------------------------------------------------

template <typename Sink>
RunStats run_algorithm(Algorithm algo, const OrientedGraph& g, Sink&& sink,
                       const RunOptions& opt = {}) {
  if (algo == Algorithm::cf_merge) detail::assert_rank_sorted(g);
  Workspace ws(g);
  RunStats stats;
  detail::StopWatch timer;
  for (VertexId u = 0; u < g.num_vertices(); ++u) run_pivot(algo, g, u, ws, stats, sink, opt);
  stats.wall_time_s = timer.seconds();
  return stats;
}

template <typename Sink>
RunStats cf_merge(const OrientedGraph& g, Sink&& sink, const RunOptions& opt = {}) {
  return run_algorithm(Algorithm::cf_merge, g, sink, opt);
}
template <typename Sink>
RunStats cf_hash(const OrientedGraph& g, Sink&& sink, const RunOptions& opt = {}) {
  return run_algorithm(Algorithm::cf_hash, g, sink, opt);
}
template <typename Sink>
RunStats kclist3(const OrientedGraph& g, Sink&& sink, const RunOptions& opt = {}) {
  return run_algorithm(Algorithm::kclist3, g, sink, opt);
}
template <typename Sink>
RunStats aot(const OrientedGraph& g, Sink&& sink, const RunOptions& opt = {}) {
  return run_algorithm(Algorithm::aot, g, sink, opt);
}

/// Counting-only convenience (NullSink).
RunStats run_counting(Algorithm algo, const OrientedGraph& g, const RunOptions& opt = {});

/// Runs and returns raw role-ordered emissions alongside the stats.
RunStats run_collecting(Algorithm algo, const OrientedGraph& g,
                        std::vector<std::array<VertexId, 3>>& out,
                        const RunOptions& opt = {});

// ---------------------------------------------------------------------------
// Cost model: closed-form operation counts for an orientation, independent of
// any listing run. For every OrientedGraph, kclist3 probes equal kclist_cost
// and aot probes equal aot_cost as integer identities; cf_cost bounds the
// merge kernel's comparisons from above.
// ---------------------------------------------------------------------------

struct CostModel {
  std::uint64_t cf_cost = 0;      // sum over edges of deg+(u) + deg+(v)
  std::uint64_t kclist_cost = 0;  // sum over edges of deg+(v)
  std::uint64_t aot_cost = 0;     // sum over edges of min(deg+(u), deg+(v))
};

CostModel cost_model(const OrientedGraph& g);

// ---------------------------------------------------------------------------
// Cross-algorithm verification.
// ---------------------------------------------------------------------------

/// Turns raw emissions into a sorted canonical triangle list (duplicates kept).
std::vector<Triangle> canonicalize_emissions(std::span<const std::array<VertexId, 3>> raw);

struct VerifyAlgorithmResult {
  Algorithm algorithm = Algorithm::cf_merge;
  RunStats stats;
  std::uint64_t unique_triangles = 0;
  std::uint64_t duplicate_emissions = 0;
  std::uint64_t missing_count = 0;  // in reference, not emitted
  std::uint64_t extra_count = 0;    // emitted, not in reference
  std::vector<Triangle> missing_samples;
  std::vector<Triangle> extra_samples;
  bool pass = true;
};

struct VerifyReport {
  static constexpr std::size_t kMaxSamples = 32;
  bool pass = true;
  std::string reference;  // "oracle" or the first algorithm's name
  std::uint64_t reference_count = 0;
  std::vector<VerifyAlgorithmResult> results;
};

/// Lists triangles with every requested algorithm under one orientation and
/// compares canonical sets. With no external `reference`, the first
/// algorithm's set is the baseline. cf runs on the rank-ascending layout it
/// requires; the others use `local`.
VerifyReport verify_equivalence(const Graph& g, std::span<const Algorithm> algorithms,
                                const VertexOrder& order, const LocalOrder& local = {},
                                const std::vector<Triangle>* reference = nullptr,
                                const RunOptions& opt = {});

}  // namespace trilist
