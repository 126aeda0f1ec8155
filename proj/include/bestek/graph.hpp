#pragma once

#include "bestek/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bestek {

struct VertexSpec {
  std::string id;
  double measure = 1.0;
};

struct EdgeSpec {
  std::string u;
  std::string v;
  double weight = 1.0;
};

/// An edge in declaration order; `u` and `v` are dense vertex indices.
struct Edge {
  Index u;
  Index v;
  double weight;
};

/// Finite simple graph with positive vertex measure m and symmetric positive
/// edge weight w. Immutable once built; vertex indices follow declaration order.
class WeightedGraph {
 public:
  Index size() const noexcept { return static_cast<Index>(ids_.size()); }

  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(Index x) const;
  /// Throws UnknownVertex.
  Index index_of(std::string_view id) const;
  std::optional<Index> find(std::string_view id) const;

  const Vector& measures() const noexcept { return measures_; }
  double measure(Index x) const { return measures_(x); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Dense symmetric weight matrix, zero on non-adjacent pairs.
  const Matrix& weights() const noexcept { return weights_; }
  double weight(Index x, Index y) const { return weights_(x, y); }
  bool adjacent(Index x, Index y) const { return weights_(x, y) > 0.0; }
  /// Neighbors of x in vertex order.
  std::span<const Index> neighbors(Index x) const;
  /// Position of edge {x,y} in edges(), if present.
  std::optional<std::size_t> edge_index(Index x, Index y) const;

  bool is_connected() const;
  /// True for graphs produced without the connectivity requirement
  /// (see induced_interior_graph).
  bool relaxed() const noexcept { return relaxed_; }

  void check_vertex(Index x) const;

 private:
  WeightedGraph() = default;

  friend WeightedGraph build_graph(std::span<const VertexSpec>, std::span<const EdgeSpec>);
  friend WeightedGraph assemble_relaxed(std::span<const VertexSpec>, std::span<const EdgeSpec>);

  std::vector<std::string> ids_;
  std::unordered_map<std::string, Index> index_;
  Vector measures_;
  std::vector<Edge> edges_;
  Matrix weights_;
  std::vector<std::vector<Index>> adjacency_;
  bool relaxed_ = false;
};

/// Validates and builds a connected weighted graph. Errors: DuplicateVertex,
/// SelfLoop, DuplicateEdge, NonPositiveValue, UnknownVertex, Disconnected.
WeightedGraph build_graph(std::span<const VertexSpec> vertices, std::span<const EdgeSpec> edges);

/// Same validation as build_graph except connectivity; the result is flagged relaxed().
WeightedGraph assemble_relaxed(std::span<const VertexSpec> vertices, std::span<const EdgeSpec> edges);

std::vector<VertexSpec> vertex_specs(const WeightedGraph& g);
std::vector<EdgeSpec> edge_specs(const WeightedGraph& g);

/// Copy of g with every edge weight multiplied by factor.
WeightedGraph scale_weights(const WeightedGraph& g, double factor);

/// A weighted graph with a boundary B (independent, every vertex adjacent to
/// the interior) and interior Ω = V \ B, both non-empty.
class BoundaryGraph {
 public:
  const WeightedGraph& graph() const noexcept { return graph_; }
  /// Boundary vertices in vertex order.
  const std::vector<Index>& boundary() const noexcept { return boundary_; }
  /// Interior vertices in vertex order.
  const std::vector<Index>& interior() const noexcept { return interior_; }
  bool is_boundary(Index x) const { return boundary_position_[static_cast<std::size_t>(x)] >= 0; }
  /// Position of x in boundary(), or -1.
  Index boundary_position(Index x) const { return boundary_position_[static_cast<std::size_t>(x)]; }
  /// Position of x in interior(), or -1.
  Index interior_position(Index x) const { return interior_position_[static_cast<std::size_t>(x)]; }

 private:
  explicit BoundaryGraph(WeightedGraph g) : graph_(std::move(g)) {}
  friend BoundaryGraph attach_boundary(WeightedGraph g, std::span<const Index> boundary);

  WeightedGraph graph_;
  std::vector<Index> boundary_;
  std::vector<Index> interior_;
  std::vector<Index> boundary_position_;
  std::vector<Index> interior_position_;
};

/// Errors: UnknownVertex, EmptyBoundary, EmptyInterior, BoundaryNotIndependent,
/// BoundaryVertexIsolatedFromInterior. Duplicate entries in `boundary` are ignored.
BoundaryGraph attach_boundary(WeightedGraph g, std::span<const Index> boundary);
BoundaryGraph attach_boundary(WeightedGraph g, std::span<const std::string> boundary_ids);

/// Deg(x) = (1/m_x) Σ_y w_xy.
double weighted_degree(const WeightedGraph& g, Index x);
/// Deg_b(x) = (1/m_x) Σ_{y∈B} w_xy for interior x. Throws NotInteriorVertex.
double boundary_degree(const BoundaryGraph& bg, Index x);
/// V_S = Σ_{x∈S} m_x.
double volume(const WeightedGraph& g, std::span<const Index> vertices);

/// Induced graph on a vertex subset together with the map back to the parent.
struct InducedGraph {
  WeightedGraph graph;
  std::vector<Index> parent;  // parent[i] = parent-graph index of vertex i
};

/// Induced graph on Ω with inherited m and w. May be disconnected or edgeless.
InducedGraph induced_interior_graph(const BoundaryGraph& bg);

/// Induced graph on an arbitrary vertex subset (kept in parent order).
InducedGraph induced_subgraph(const WeightedGraph& g, std::span<const Index> vertices);

/// Hop distances from `source`; -1 marks unreachable vertices.
std::vector<Index> hop_distances(const WeightedGraph& g, Index source);

}  // namespace bestek
