#include <algorithm>

#include "doctest.h"
#include "support/testutil.hpp"
#include "trilist/oracle.hpp"
#include "trilist/parallel.hpp"

using namespace trilist;
using namespace trilist::testing;

TEST_CASE("parallel aggregates are bit-identical to sequential") {
  Graph g = gnp(300, 0.05, 12);
  OrientedGraph og = orient(g, degree_order(g));
  for (Algorithm a : kAllAlgorithms) {
    CAPTURE(to_string(a));
    RunStats seq = run_counting(a, og);
    for (unsigned workers : {1u, 2u, 4u, 8u}) {
      CAPTURE(workers);
      RunStats par = run_parallel_count(a, og, {workers, 64});
      CHECK(par.counters_equal(seq));
    }
  }
}

TEST_CASE("chunk size never changes the aggregates") {
  Graph g = gnp(250, 0.06, 44);
  OrientedGraph og = orient(g, degeneracy_order(g));
  RunStats seq = run_counting(Algorithm::aot, og);
  for (VertexId chunk : {1u, 7u, 64u, 1000u}) {
    CAPTURE(chunk);
    CHECK(run_parallel_count(Algorithm::aot, og, {3, chunk}).counters_equal(seq));
  }
  // cache-enabled cf-hash is chunking-proof too: the cache is pivot-scoped
  RunOptions opt;
  opt.cf_hash_reuse_last_table = true;
  RunStats hash_seq = run_counting(Algorithm::cf_hash, og, opt);
  for (VertexId chunk : {1u, 5u, 128u})
    CHECK(run_parallel_count(Algorithm::cf_hash, og, {4, chunk}, opt)
              .counters_equal(hash_seq));
}

TEST_CASE("invalid configurations are rejected") {
  Graph g = path_graph(4);
  OrientedGraph og = orient(g, id_order(g));
  CHECK_THROWS_AS(run_parallel_count(Algorithm::aot, og, {0, 64}), std::invalid_argument);
  CHECK_THROWS_AS(run_parallel_count(Algorithm::aot, og, {2, 0}), std::invalid_argument);
}

TEST_CASE("parallel collection merges to the sequential triangle set") {
  Graph g = gnp(200, 0.06, 71);
  OrientedGraph og = orient(g, degree_order(g));
  auto expected = brute_force_triangles(g);

  std::vector<std::vector<std::array<VertexId, 3>>> buffers;
  RunStats s = run_parallel_collecting(Algorithm::kclist3, og, {4, 16}, buffers);
  CHECK(s.triangles == expected.size());

  std::vector<std::array<VertexId, 3>> merged;
  for (auto& b : buffers) merged.insert(merged.end(), b.begin(), b.end());
  auto canon = canonicalize_emissions(merged);
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  CHECK(canon == expected);
}

TEST_CASE("parallel cf merge still validates its layout precondition") {
  Graph g = gnp(80, 0.1, 9);
  OrientedGraph shuffled =
      apply_local_order(orient(g, degree_order(g)), {LocalOrderPolicy::random, 4});
  CHECK_THROWS_AS(run_parallel_count(Algorithm::cf_merge, shuffled, {2, 8}),
                  std::invalid_argument);
}
