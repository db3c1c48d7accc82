#pragma once

#include <vector>

#include "trilist/graph.hpp"

namespace trilist {

struct OracleOptions {
  VertexId max_vertices = 2000;  // refuse larger inputs; this is O(m * degmax)
};

/// Brute-force reference: for every edge (u,v) with u < v and every common
/// neighbor w > v, lists (u,v,w). Pure adjacency membership tests; shares
/// nothing with the orientation machinery. Output is lexicographically sorted
/// and duplicate-free by construction. Throws std::invalid_argument if the
/// graph exceeds the size cap.
std::vector<Triangle> brute_force_triangles(const Graph& g, const OracleOptions& opt = {});

}  // namespace trilist
