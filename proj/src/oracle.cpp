#include "trilist/oracle.hpp"

#include <stdexcept>
#include <string>

namespace trilist {

std::vector<Triangle> brute_force_triangles(const Graph& g, const OracleOptions& opt) {
  if (g.num_vertices() > opt.max_vertices)
    throw std::invalid_argument("oracle refuses graphs larger than " +
                                std::to_string(opt.max_vertices) + " vertices");

  std::vector<Triangle> out;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    auto nu = g.neighbors(u);
    for (VertexId v : nu) {
      if (v <= u) continue;
      for (VertexId w : nu) {
        if (w <= v) continue;
        if (g.has_edge(v, w)) out.push_back({u, v, w});
      }
    }
  }
  return out;
}

}  // namespace trilist
