#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trilist {

using VertexId = std::uint32_t;
using EdgeCount = std::uint64_t;

/// A triangle with vertices in canonical order (a < b < c).
struct Triangle {
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

Triangle canonical_triangle(VertexId x, VertexId y, VertexId z);

/// Undirected simple graph in CSR form. Immutable after construction.
/// Invariants: adjacency lists are sorted ascending, symmetric, and contain
/// no self-loops or duplicate entries; offsets has n+1 entries ending at 2m.
class Graph {
 public:
  Graph() = default;

  // Builds a normalized graph from raw pairs: direction is ignored,
  // self-loops are dropped, duplicate edges are collapsed. The vertex count
  // is max(min_vertices, largest id + 1).
  static Graph from_edges(VertexId min_vertices,
                          std::span<const std::pair<VertexId, VertexId>> edges);
  static Graph from_edges(VertexId min_vertices,
                          std::initializer_list<std::pair<VertexId, VertexId>> edges);

  VertexId num_vertices() const { return n_; }
  EdgeCount num_edges() const { return m_; }

  std::span<const VertexId> neighbors(VertexId u) const {
    return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
  }

  /// Degree of u; throws std::out_of_range if u >= num_vertices().
  VertexId degree(VertexId u) const;

  /// Membership test by binary search, O(log deg(u)).
  bool has_edge(VertexId u, VertexId v) const;

  const std::vector<EdgeCount>& offsets() const { return offsets_; }
  const std::vector<VertexId>& adjacency() const { return neighbors_; }

  /// Re-checks every storage invariant. Used by tests and debug tooling;
  /// on failure, stores a reason in *why when provided.
  bool validate(std::string* why = nullptr) const;

 private:
  static Graph build_from_packed(VertexId n, std::vector<std::uint64_t>&& packed,
                                 std::uint64_t* duplicates_out);

  friend struct GraphBuilderAccess;

  VertexId n_ = 0;
  EdgeCount m_ = 0;
  std::vector<EdgeCount> offsets_ = {0};
  std::vector<VertexId> neighbors_;
};

struct LoadOptions {
  std::string comment_prefixes = "#%";  // line-leading chars that mark comments
  bool one_indexed = false;             // input numbers vertices from 1
  bool compact_ids = false;             // remap ids to 0..n-1 by first appearance
};

struct LoadDiagnostics {
  std::uint64_t lines_read = 0;
  std::uint64_t edges_parsed = 0;  // pairs seen, before normalization
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicates_dropped = 0;
};

struct LoadResult {
  Graph graph;
  LoadDiagnostics diagnostics;
};

/// Input rejection with the 1-based line it occurred on.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::uint64_t line);
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

LoadResult load_edge_list(std::istream& in, const LoadOptions& options = {});
LoadResult load_edge_list_text(std::string_view text, const LoadOptions& options = {});

/// Reads a whitespace-separated edge list from a file, transparently
/// inflating gzip input. "-" reads stdin.
LoadResult load_edge_list_file(const std::string& path, const LoadOptions& options = {});

/// Writes each undirected edge once, smaller endpoint first, ascending.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace trilist
