#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "trilist/engine.hpp"

namespace trilist {

struct ParallelConfig {
  unsigned workers = 1;
  VertexId chunk = 64;  // pivots taken per grab from the shared queue
};

/// Shared-memory driver: pivots are handed out in chunks from an atomic
/// counter; each worker runs the sequential per-pivot kernel with a private
/// Workspace, RunStats, and its own sink from make_sink(worker_index).
/// Aggregated counters are identical to a sequential run for every worker
/// count and chunk size (kernels are per-pivot deterministic and the cf_hash
/// cache never crosses pivot boundaries). wall_time_s spans the chunk loop.
template <typename SinkFactory>
RunStats run_parallel(Algorithm algo, const OrientedGraph& g, const ParallelConfig& cfg,
                      SinkFactory&& make_sink, const RunOptions& opt = {}) {
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (cfg.chunk < 1) throw std::invalid_argument("chunk must be >= 1");
  if (algo == Algorithm::cf_merge) detail::assert_rank_sorted(g);

  using Sink = std::decay_t<decltype(make_sink(0u))>;
  std::vector<Sink> sinks;
  sinks.reserve(cfg.workers);
  for (unsigned w = 0; w < cfg.workers; ++w) sinks.push_back(make_sink(w));

  std::vector<RunStats> locals(cfg.workers);
  std::atomic<std::uint64_t> next{0};
  const std::uint64_t n = g.num_vertices();

  auto worker_body = [&](unsigned w) {
    Workspace ws(g);
    RunStats& stats = locals[w];
    Sink& sink = sinks[w];
    while (true) {
      std::uint64_t begin = next.fetch_add(cfg.chunk, std::memory_order_relaxed);
      if (begin >= n) break;
      std::uint64_t end = std::min<std::uint64_t>(n, begin + cfg.chunk);
      for (std::uint64_t u = begin; u < end; ++u)
        run_pivot(algo, g, VertexId(u), ws, stats, sink, opt);
    }
  };

  detail::StopWatch timer;
  if (cfg.workers == 1) {
    worker_body(0);
  } else {
    std::vector<std::exception_ptr> errors(cfg.workers);
    std::vector<std::thread> threads;
    threads.reserve(cfg.workers);
    for (unsigned w = 0; w < cfg.workers; ++w)
      threads.emplace_back([&, w] {
        try {
          worker_body(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  RunStats total;
  for (const RunStats& s : locals) total.add_counters(s);
  total.wall_time_s = timer.seconds();
  return total;
}

/// Counting-only parallel run.
RunStats run_parallel_count(Algorithm algo, const OrientedGraph& g, const ParallelConfig& cfg,
                            const RunOptions& opt = {});

/// Parallel run that appends raw emissions into per-worker buffers.
RunStats run_parallel_collecting(Algorithm algo, const OrientedGraph& g,
                                 const ParallelConfig& cfg,
                                 std::vector<std::vector<std::array<VertexId, 3>>>& buffers,
                                 const RunOptions& opt = {});

}  // namespace trilist
