#include "trilist/parallel.hpp"

namespace trilist {

RunStats run_parallel_count(Algorithm algo, const OrientedGraph& g, const ParallelConfig& cfg,
                            const RunOptions& opt) {
  return run_parallel(algo, g, cfg, [](unsigned) { return NullSink{}; }, opt);
}

RunStats run_parallel_collecting(Algorithm algo, const OrientedGraph& g,
                                 const ParallelConfig& cfg,
                                 std::vector<std::vector<std::array<VertexId, 3>>>& buffers,
                                 const RunOptions& opt) {
  buffers.assign(cfg.workers, {});
  return run_parallel(
      algo, g, cfg, [&buffers](unsigned w) { return CollectingSink{&buffers[w]}; }, opt);
}

}  // namespace trilist
