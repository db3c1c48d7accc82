#include "trilist/ordering.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>
#include <stdexcept>

namespace trilist {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Draw in [0, bound) via the high bits of a 128-bit product. Bias is
// negligible for shuffle purposes and the sequence is platform-independent.
std::uint64_t bounded_draw(std::uint64_t& state, std::uint64_t bound) {
  return std::uint64_t((static_cast<unsigned __int128>(splitmix64(state)) * bound) >> 64);
}

template <typename It>
void fisher_yates(It first, It last, std::uint64_t seed) {
  std::uint64_t state = seed;
  auto n = std::uint64_t(last - first);
  for (std::uint64_t i = n; i > 1; --i)
    std::swap(first[i - 1], first[bounded_draw(state, i)]);
}

std::uint64_t parse_seed(const std::string& text, std::size_t colon, const char* what) {
  std::uint64_t seed = 0;
  const char* b = text.data() + colon + 1;
  const char* e = text.data() + text.size();
  auto [p, ec] = std::from_chars(b, e, seed);
  if (ec != std::errc{} || p != e || b == e)
    throw std::invalid_argument(std::string("bad ") + what + " seed in '" + text + "'");
  return seed;
}

}  // namespace

bool VertexOrder::is_permutation() const {
  std::vector<bool> seen(rank.size(), false);
  for (VertexId r : rank) {
    if (r >= rank.size() || seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

std::vector<VertexId> VertexOrder::vertices_by_rank() const {
  std::vector<VertexId> by_rank(rank.size());
  for (VertexId u = 0; u < rank.size(); ++u) by_rank[rank[u]] = u;
  return by_rank;
}

VertexOrder id_order(const Graph& g) {
  VertexOrder order;
  order.rank.resize(g.num_vertices());
  for (VertexId u = 0; u < g.num_vertices(); ++u) order.rank[u] = u;
  return order;
}

VertexOrder degree_order(const Graph& g) {
  VertexId n = g.num_vertices();
  VertexId max_deg = 0;
  for (VertexId u = 0; u < n; ++u) max_deg = std::max(max_deg, g.degree(u));

  // Counting sort by degree; scanning vertices in ascending id within each
  // bucket makes ties resolve by id automatically.
  std::vector<EdgeCount> start(std::size_t(max_deg) + 2, 0);
  for (VertexId u = 0; u < n; ++u) ++start[g.degree(u) + 1];
  for (std::size_t d = 1; d < start.size(); ++d) start[d] += start[d - 1];

  VertexOrder order;
  order.rank.resize(n);
  for (VertexId u = 0; u < n; ++u) order.rank[u] = VertexId(start[g.degree(u)]++);
  return order;
}

VertexOrder degeneracy_order(const Graph& g) {
  VertexId n = g.num_vertices();
  std::vector<VertexId> deg(n);
  // Lazy-deletion min-heap over (current degree, id) packed into one word;
  // stale entries are skipped on pop.
  std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>> heap;
  for (VertexId u = 0; u < n; ++u) {
    deg[u] = g.degree(u);
    heap.push((std::uint64_t(deg[u]) << 32) | u);
  }
  std::vector<char> removed(n, 0);

  VertexOrder order;
  order.rank.resize(n);
  for (VertexId r = 0; r < n; ++r) {
    VertexId u;
    while (true) {
      std::uint64_t top = heap.top();
      heap.pop();
      u = VertexId(top);
      if (!removed[u] && VertexId(top >> 32) == deg[u]) break;
    }
    removed[u] = 1;
    order.rank[u] = r;
    for (VertexId v : g.neighbors(u))
      if (!removed[v]) heap.push((std::uint64_t(--deg[v]) << 32) | v);
  }
  return order;
}

VertexOrder random_order(const Graph& g, std::uint64_t seed) {
  VertexOrder order = id_order(g);
  fisher_yates(order.rank.begin(), order.rank.end(), seed);
  return order;
}

VertexOrder make_order(const Graph& g, const OrderSpec& spec) {
  switch (spec.kind) {
    case OrderKind::id: return id_order(g);
    case OrderKind::degree: return degree_order(g);
    case OrderKind::degeneracy: return degeneracy_order(g);
    case OrderKind::random: return random_order(g, spec.seed);
  }
  throw std::invalid_argument("unknown order kind");
}

OrderSpec parse_order_spec(const std::string& text) {
  if (text == "id") return {OrderKind::id, 0};
  if (text == "degree") return {OrderKind::degree, 0};
  if (text == "degeneracy") return {OrderKind::degeneracy, 0};
  if (text.rfind("random:", 0) == 0)
    return {OrderKind::random, parse_seed(text, 6, "order")};
  throw std::invalid_argument("unknown order '" + text +
                              "' (expected id|degree|degeneracy|random:SEED)");
}

std::string to_string(const OrderSpec& spec) {
  switch (spec.kind) {
    case OrderKind::id: return "id";
    case OrderKind::degree: return "degree";
    case OrderKind::degeneracy: return "degeneracy";
    case OrderKind::random: return "random:" + std::to_string(spec.seed);
  }
  return "?";
}

LocalOrder parse_local_order(const std::string& text) {
  if (text == "rank-asc") return {LocalOrderPolicy::rank_asc, 0};
  if (text == "degree-desc") return {LocalOrderPolicy::degree_desc, 0};
  if (text.rfind("random:", 0) == 0)
    return {LocalOrderPolicy::random, parse_seed(text, 6, "local order")};
  throw std::invalid_argument("unknown local order '" + text +
                              "' (expected rank-asc|degree-desc|random:SEED)");
}

std::string to_string(const LocalOrder& local) {
  switch (local.policy) {
    case LocalOrderPolicy::rank_asc: return "rank-asc";
    case LocalOrderPolicy::degree_desc: return "degree-desc";
    case LocalOrderPolicy::random: return "random:" + std::to_string(local.seed);
  }
  return "?";
}

bool OrientedGraph::out_lists_rank_sorted() const {
  for (VertexId u = 0; u < n_; ++u) {
    auto nb = out_neighbors(u);
    for (std::size_t i = 1; i < nb.size(); ++i)
      if (rank(nb[i - 1]) >= rank(nb[i])) return false;
  }
  return true;
}

VertexId OrientedGraph::max_out_degree() const {
  VertexId best = 0;
  for (VertexId u = 0; u < n_; ++u) best = std::max(best, out_degree(u));
  return best;
}

OrientedGraph orient(const Graph& g, const VertexOrder& order) {
  VertexId n = g.num_vertices();
  if (order.rank.size() != n || !order.is_permutation())
    throw std::invalid_argument("order is not a permutation of the vertex set");

  OrientedGraph og;
  og.n_ = n;
  og.m_ = g.num_edges();
  og.order_ = order;
  og.out_offsets_.assign(std::size_t(n) + 1, 0);
  og.in_offsets_.assign(std::size_t(n) + 1, 0);

  const auto& rank = order.rank;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.neighbors(u))
      if (rank[u] < rank[v]) {
        ++og.out_offsets_[u + 1];
        ++og.in_offsets_[v + 1];
      }
  for (VertexId u = 0; u < n; ++u) {
    og.out_offsets_[u + 1] += og.out_offsets_[u];
    og.in_offsets_[u + 1] += og.in_offsets_[u];
  }

  // Fill by visiting endpoints in ascending rank, which leaves every list
  // rank-sorted without a per-list sort.
  og.out_.resize(og.m_);
  og.in_.resize(og.m_);
  std::vector<VertexId> by_rank = order.vertices_by_rank();
  std::vector<EdgeCount> cursor(og.out_offsets_.begin(), og.out_offsets_.end() - 1);
  for (VertexId r = 0; r < n; ++r) {
    VertexId head = by_rank[r];
    for (VertexId tail : g.neighbors(head))
      if (rank[tail] < r) og.out_[cursor[tail]++] = head;
  }
  cursor.assign(og.in_offsets_.begin(), og.in_offsets_.end() - 1);
  for (VertexId r = 0; r < n; ++r) {
    VertexId tail = by_rank[r];
    for (VertexId head : g.neighbors(tail))
      if (rank[head] > r) og.in_[cursor[head]++] = tail;
  }
  return og;
}

OrientedGraph apply_local_order(OrientedGraph g, const LocalOrder& local) {
  // The result is a pure function of (graph, order, policy, seed): each case
  // establishes its layout from scratch, discarding the current permutation.
  auto for_each_list = [&](auto&& rewrite) {
    for (VertexId u = 0; u < g.n_; ++u) {
      rewrite(g.out_.begin() + long(g.out_offsets_[u]),
              g.out_.begin() + long(g.out_offsets_[u + 1]), u, std::uint64_t(0));
      rewrite(g.in_.begin() + long(g.in_offsets_[u]),
              g.in_.begin() + long(g.in_offsets_[u + 1]), u, std::uint64_t(1));
    }
  };

  switch (local.policy) {
    case LocalOrderPolicy::rank_asc:
      for_each_list([&](auto b, auto e, VertexId, std::uint64_t) {
        std::sort(b, e, [&](VertexId x, VertexId y) { return g.rank(x) < g.rank(y); });
      });
      break;
    case LocalOrderPolicy::degree_desc:
      for_each_list([&](auto b, auto e, VertexId, std::uint64_t) {
        std::sort(b, e, [&](VertexId x, VertexId y) {
          VertexId dx = g.undirected_degree(x), dy = g.undirected_degree(y);
          return dx != dy ? dx > dy : x < y;
        });
      });
      break;
    case LocalOrderPolicy::random:
      for_each_list([&](auto b, auto e, VertexId u, std::uint64_t side) {
        std::sort(b, e, [&](VertexId x, VertexId y) { return g.rank(x) < g.rank(y); });
        std::uint64_t mix = local.seed;
        std::uint64_t list_key = splitmix64(mix) ^ ((std::uint64_t(u) << 1) | side);
        fisher_yates(b, e, list_key);
      });
      break;
  }
  g.local_ = local;
  return g;
}

EdgePolarity edge_polarity(const OrientedGraph& g, VertexId u, VertexId v) {
  if (u >= g.num_vertices() || v >= g.num_vertices())
    throw std::invalid_argument("vertex id out of range");
  auto nb = g.out_neighbors(u);
  if (std::find(nb.begin(), nb.end(), v) == nb.end())
    throw std::invalid_argument("no directed edge " + std::to_string(u) + " -> " +
                                std::to_string(v));
  return g.out_degree_before(u, v) ? EdgePolarity::positive : EdgePolarity::negative;
}

}  // namespace trilist
