#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trilist/graph.hpp"

namespace trilist {

/// Total order on vertices: rank[u] is u's position, a permutation of 0..n-1.
struct VertexOrder {
  std::vector<VertexId> rank;

  bool is_permutation() const;
  /// Inverse permutation: result[r] is the vertex with rank r.
  std::vector<VertexId> vertices_by_rank() const;
};

VertexOrder id_order(const Graph& g);

/// Ascending (degree, id). Counting sort, O(n + m).
VertexOrder degree_order(const Graph& g);

/// Iterative minimum-degree peeling; ties among equal current degrees are
/// broken by ascending vertex id. The vertex peeled first gets rank 0.
VertexOrder degeneracy_order(const Graph& g);

/// Seeded Fisher-Yates permutation. The draw sequence is fixed by this
/// implementation, so layouts are reproducible across platforms.
VertexOrder random_order(const Graph& g, std::uint64_t seed);

enum class OrderKind { id, degree, degeneracy, random };

struct OrderSpec {
  OrderKind kind = OrderKind::degree;
  std::uint64_t seed = 0;  // used by random only
};

VertexOrder make_order(const Graph& g, const OrderSpec& spec);

/// Parses "id" | "degree" | "degeneracy" | "random:SEED".
/// Throws std::invalid_argument on anything else.
OrderSpec parse_order_spec(const std::string& text);
std::string to_string(const OrderSpec& spec);

enum class LocalOrderPolicy { rank_asc, degree_desc, random };

struct LocalOrder {
  LocalOrderPolicy policy = LocalOrderPolicy::rank_asc;
  std::uint64_t seed = 0;  // used by random only
};

/// Parses "rank-asc" | "degree-desc" | "random:SEED".
LocalOrder parse_local_order(const std::string& text);
std::string to_string(const LocalOrder& local);

/// DAG obtained by pointing every edge of a Graph from lower to higher rank.
/// Out- and in-lists are stored contiguously (CSR); orient() produces them in
/// ascending rank order, apply_local_order() can permute them per vertex.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  VertexId num_vertices() const { return n_; }
  EdgeCount num_edges() const { return m_; }

  std::span<const VertexId> out_neighbors(VertexId u) const {
    return {out_.data() + out_offsets_[u], out_.data() + out_offsets_[u + 1]};
  }
  std::span<const VertexId> in_neighbors(VertexId u) const {
    return {in_.data() + in_offsets_[u], in_.data() + in_offsets_[u + 1]};
  }

  VertexId out_degree(VertexId u) const { return VertexId(out_offsets_[u + 1] - out_offsets_[u]); }
  VertexId in_degree(VertexId u) const { return VertexId(in_offsets_[u + 1] - in_offsets_[u]); }
  VertexId undirected_degree(VertexId u) const { return out_degree(u) + in_degree(u); }

  VertexId rank(VertexId u) const { return order_.rank[u]; }
  const VertexOrder& order() const { return order_; }
  const LocalOrder& local_order() const { return local_; }

  /// (out-degree, id) lexicographic comparison: the tie-broken total order
  /// used by the adaptive phases and by edge polarity.
  bool out_degree_before(VertexId a, VertexId b) const {
    VertexId da = out_degree(a), db = out_degree(b);
    return da != db ? da < db : a < b;
  }

  /// True if every out-list is in strictly ascending rank order.
  bool out_lists_rank_sorted() const;

  VertexId max_out_degree() const;

 private:
  friend OrientedGraph orient(const Graph&, const VertexOrder&);
  friend OrientedGraph apply_local_order(OrientedGraph g, const LocalOrder& local);

  VertexId n_ = 0;
  EdgeCount m_ = 0;
  std::vector<EdgeCount> out_offsets_ = {0};
  std::vector<EdgeCount> in_offsets_ = {0};
  std::vector<VertexId> out_;
  std::vector<VertexId> in_;
  VertexOrder order_;
  LocalOrder local_;
};

/// Orients g by `order`. Throws std::invalid_argument unless order.rank is a
/// permutation of 0..n-1. O(n + m); both list families come out rank-sorted.
OrientedGraph orient(const Graph& g, const VertexOrder& order);

/// Rewrites each adjacency list per the policy:
///   rank_asc     ascending rank (the orient() layout),
///   degree_desc  descending undirected degree, ties by ascending id,
///   random       seeded per-list shuffle.
/// List contents are untouched, so counters of all kernels are unaffected.
OrientedGraph apply_local_order(OrientedGraph g, const LocalOrder& local);

enum class EdgePolarity { positive, negative };

/// Polarity of the directed edge u -> v: positive iff (out-degree, id) of u
/// precedes that of v lexicographically. Throws std::invalid_argument if the
/// edge is absent.
EdgePolarity edge_polarity(const OrientedGraph& g, VertexId u, VertexId v);

}  // namespace trilist
