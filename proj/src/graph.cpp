#include "trilist/graph.hpp"

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace trilist {

// Out-of-line hook so file-local load helpers can reach the private builder
// without widening the public surface.
struct GraphBuilderAccess {
  static Graph build(VertexId n, std::vector<std::uint64_t>&& packed, std::uint64_t* dups) {
    return Graph::build_from_packed(n, std::move(packed), dups);
  }
};

namespace {

constexpr std::uint64_t kMaxVertexId = std::numeric_limits<VertexId>::max() - 1;

std::uint64_t pack_edge(VertexId lo, VertexId hi) {
  return (std::uint64_t(lo) << 32) | hi;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

const char* skip_space(const char* p, const char* end) {
  while (p != end && is_space(*p)) ++p;
  return p;
}

std::uint64_t parse_id(const char*& p, const char* end, std::uint64_t line) {
  if (p != end && *p == '-')
    throw ParseError("negative vertex id", line);
  std::uint64_t value = 0;
  auto [next, ec] = std::from_chars(p, end, value);
  if (ec != std::errc{} || (next != end && !is_space(*next))) {
    const char* stop = p;
    while (stop != end && !is_space(*stop) && stop - p < 16) ++stop;
    throw ParseError("malformed vertex id '" + std::string(p, stop) + "'", line);
  }
  p = next;
  return value;
}

struct RawEdges {
  std::vector<std::uint64_t> us, vs;  // parallel arrays of raw 64-bit ids
  LoadDiagnostics diag;
};

// Parses lines delivered by `next_line`; lines may keep a trailing newline.
// Self-loops are dropped here, duplicates later during normalization.
RawEdges parse_lines(const std::function<bool(std::string&)>& next_line,
                     const LoadOptions& opt) {
  RawEdges raw;
  std::string line;
  while (next_line(line)) {
    ++raw.diag.lines_read;
    const char* p = line.data();
    const char* end = p + line.size();
    p = skip_space(p, end);
    if (p == end) continue;
    if (opt.comment_prefixes.find(*p) != std::string::npos) continue;

    std::uint64_t u = parse_id(p, end, raw.diag.lines_read);
    p = skip_space(p, end);
    if (p == end)
      throw ParseError("expected two vertex ids", raw.diag.lines_read);
    std::uint64_t v = parse_id(p, end, raw.diag.lines_read);
    p = skip_space(p, end);
    if (p != end)
      throw ParseError("unexpected trailing content", raw.diag.lines_read);

    if (opt.one_indexed) {
      if (u == 0 || v == 0)
        throw ParseError("vertex id 0 in one-indexed input", raw.diag.lines_read);
      --u, --v;
    }
    if (!opt.compact_ids && (u > kMaxVertexId || v > kMaxVertexId))
      throw ParseError("vertex id exceeds 32-bit range; use compact ids", raw.diag.lines_read);

    ++raw.diag.edges_parsed;
    if (u == v) {
      ++raw.diag.self_loops_dropped;
      continue;
    }
    raw.us.push_back(u);
    raw.vs.push_back(v);
  }
  return raw;
}

// Maps raw 64-bit ids onto 0..n-1. Verbatim mode keeps ids as-is with
// n = max id + 1; compact mode renumbers by first appearance.
VertexId map_ids(RawEdges& raw, bool compact, std::vector<std::uint64_t>& packed) {
  std::uint64_t n = 0;
  packed.reserve(raw.us.size());
  if (compact) {
    std::unordered_map<std::uint64_t, VertexId> remap;
    remap.reserve(raw.us.size() * 2);
    auto intern = [&](std::uint64_t id) {
      auto [it, fresh] = remap.try_emplace(id, VertexId(remap.size()));
      if (fresh && remap.size() > kMaxVertexId + 1)
        throw std::length_error("too many distinct vertices for 32-bit ids");
      return it->second;
    };
    for (std::size_t i = 0; i < raw.us.size(); ++i) {
      VertexId a = intern(raw.us[i]);
      VertexId b = intern(raw.vs[i]);
      packed.push_back(pack_edge(std::min(a, b), std::max(a, b)));
    }
    n = remap.size();
  } else {
    for (std::size_t i = 0; i < raw.us.size(); ++i) {
      auto a = VertexId(raw.us[i]);
      auto b = VertexId(raw.vs[i]);
      n = std::max<std::uint64_t>(n, std::uint64_t(std::max(a, b)) + 1);
      packed.push_back(pack_edge(std::min(a, b), std::max(a, b)));
    }
  }
  return VertexId(n);
}

LoadResult load_from_lines(const std::function<bool(std::string&)>& next_line,
                           const LoadOptions& opt) {
  RawEdges raw = parse_lines(next_line, opt);
  std::vector<std::uint64_t> packed;
  VertexId n = map_ids(raw, opt.compact_ids, packed);
  raw.us = {};
  raw.vs = {};
  LoadResult result;
  result.diagnostics = raw.diag;
  result.graph = GraphBuilderAccess::build(n, std::move(packed),
                                           &result.diagnostics.duplicates_dropped);
  return result;
}

}  // namespace

Triangle canonical_triangle(VertexId x, VertexId y, VertexId z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  return {x, y, z};
}

ParseError::ParseError(const std::string& message, std::uint64_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph Graph::build_from_packed(VertexId n, std::vector<std::uint64_t>&& packed,
                               std::uint64_t* duplicates_out) {
  std::sort(packed.begin(), packed.end());
  auto last = std::unique(packed.begin(), packed.end());
  if (duplicates_out) *duplicates_out = std::uint64_t(packed.end() - last);
  packed.erase(last, packed.end());

  Graph g;
  g.n_ = n;
  g.m_ = packed.size();
  g.offsets_.assign(std::size_t(n) + 1, 0);
  for (std::uint64_t e : packed) {
    ++g.offsets_[VertexId(e >> 32) + 1];
    ++g.offsets_[VertexId(e) + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];

  // One pass over edges sorted by (lo, hi) appends every list in ascending
  // order: vertex u first receives its smaller neighbors (as hi of earlier
  // groups, lo ascending) and then its larger neighbors (its own group,
  // hi ascending).
  g.neighbors_.resize(2 * g.m_);
  std::vector<EdgeCount> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::uint64_t e : packed) {
    auto lo = VertexId(e >> 32), hi = VertexId(e);
    g.neighbors_[cursor[lo]++] = hi;
    g.neighbors_[cursor[hi]++] = lo;
  }
  return g;
}

Graph Graph::from_edges(VertexId min_vertices,
                        std::span<const std::pair<VertexId, VertexId>> edges) {
  std::uint64_t n = min_vertices;
  std::vector<std::uint64_t> packed;
  packed.reserve(edges.size());
  for (auto [u, v] : edges) {
    n = std::max<std::uint64_t>(n, std::uint64_t(std::max(u, v)) + 1);
    if (u == v) continue;
    packed.push_back(pack_edge(std::min(u, v), std::max(u, v)));
  }
  return build_from_packed(VertexId(n), std::move(packed), nullptr);
}

Graph Graph::from_edges(VertexId min_vertices,
                        std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  return from_edges(min_vertices,
                    std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
}

VertexId Graph::degree(VertexId u) const {
  if (u >= n_) throw std::out_of_range("vertex id " + std::to_string(u) + " out of range");
  return VertexId(offsets_[u + 1] - offsets_[u]);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_) return false;
  auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

bool Graph::validate(std::string* why) const {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (offsets_.size() != std::size_t(n_) + 1) return fail("offsets size");
  if (offsets_.front() != 0 || offsets_.back() != 2 * m_) return fail("offset bounds");
  if (neighbors_.size() != 2 * m_) return fail("adjacency size");
  for (VertexId u = 0; u < n_; ++u) {
    if (offsets_[u] > offsets_[u + 1]) return fail("offsets not monotone");
    auto nu = neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (nu[i] >= n_) return fail("neighbor out of range");
      if (nu[i] == u) return fail("self-loop");
      if (i > 0 && nu[i - 1] >= nu[i]) return fail("list not strictly ascending");
      if (!has_edge(nu[i], u)) return fail("asymmetric edge");
    }
  }
  return true;
}

LoadResult load_edge_list(std::istream& in, const LoadOptions& options) {
  return load_from_lines(
      [&in](std::string& line) { return bool(std::getline(in, line)); }, options);
}

LoadResult load_edge_list_text(std::string_view text, const LoadOptions& options) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in, options);
}

LoadResult load_edge_list_file(const std::string& path, const LoadOptions& options) {
  gzFile f = path == "-" ? gzdopen(0, "rb") : gzopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  struct Closer {
    gzFile f;
    ~Closer() { gzclose(f); }
  } closer{f};
  gzbuffer(f, 1 << 20);

  char buf[1 << 16];
  auto next_line = [&](std::string& line) {
    line.clear();
    while (true) {
      if (gzgets(f, buf, sizeof buf) == nullptr) {
        int err = 0;
        const char* msg = gzerror(f, &err);
        if (err != Z_OK && err != Z_STREAM_END)
          throw std::runtime_error("error reading '" + path + "': " + (msg ? msg : ""));
        return !line.empty();
      }
      line += buf;
      if (line.back() == '\n') return true;
    }
  };
  return load_from_lines(next_line, options);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (VertexId v : g.neighbors(u))
      if (v > u) out << u << ' ' << v << '\n';
}

}  // namespace trilist
