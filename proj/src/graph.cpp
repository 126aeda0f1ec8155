#include "bestek/graph.hpp"

#include "bestek/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace bestek {

namespace {

void require_positive(double value, const std::string& what) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw Error(ErrorCode::NonPositiveValue, what + " must be finite and positive, got " + format_double(value));
  }
}

}  // namespace

const std::string& WeightedGraph::id(Index x) const {
  check_vertex(x);
  return ids_[static_cast<std::size_t>(x)];
}

Index WeightedGraph::index_of(std::string_view id) const {
  auto found = find(id);
  if (!found) throw Error(ErrorCode::UnknownVertex, "vertex '" + std::string(id) + "'");
  return *found;
}

std::optional<Index> WeightedGraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const Index> WeightedGraph::neighbors(Index x) const {
  check_vertex(x);
  return adjacency_[static_cast<std::size_t>(x)];
}

std::optional<std::size_t> WeightedGraph::edge_index(Index x, Index y) const {
  if (!adjacent(x, y)) return std::nullopt;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if ((edge.u == x && edge.v == y) || (edge.u == y && edge.v == x)) return e;
  }
  return std::nullopt;
}

bool WeightedGraph::is_connected() const {
  if (size() == 0) return false;
  auto dist = hop_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](Index d) { return d < 0; });
}

void WeightedGraph::check_vertex(Index x) const {
  if (x < 0 || x >= size()) {
    throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(x) + " out of range");
  }
}

WeightedGraph assemble_relaxed(std::span<const VertexSpec> vertices, std::span<const EdgeSpec> edges) {
  WeightedGraph g;
  g.relaxed_ = true;
  g.ids_.reserve(vertices.size());
  g.measures_.resize(static_cast<Index>(vertices.size()));
  for (const auto& spec : vertices) {
    if (g.index_.count(spec.id)) throw Error(ErrorCode::DuplicateVertex, "vertex '" + spec.id + "'");
    require_positive(spec.measure, "measure of vertex '" + spec.id + "'");
    const auto x = static_cast<Index>(g.ids_.size());
    g.index_.emplace(spec.id, x);
    g.ids_.push_back(spec.id);
    g.measures_(x) = spec.measure;
  }

  const Index n = g.size();
  g.weights_ = Matrix::Zero(n, n);
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& spec : edges) {
    if (spec.u == spec.v) throw Error(ErrorCode::SelfLoop, "edge ('" + spec.u + "','" + spec.v + "')");
    const Index u = g.index_of(spec.u);
    const Index v = g.index_of(spec.v);
    if (g.weights_(u, v) > 0.0) {
      throw Error(ErrorCode::DuplicateEdge, "edge ('" + spec.u + "','" + spec.v + "')");
    }
    require_positive(spec.weight, "weight of edge ('" + spec.u + "','" + spec.v + "')");
    g.weights_(u, v) = spec.weight;
    g.weights_(v, u) = spec.weight;
    g.edges_.push_back({u, v, spec.weight});
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

WeightedGraph build_graph(std::span<const VertexSpec> vertices, std::span<const EdgeSpec> edges) {
  WeightedGraph g = assemble_relaxed(vertices, edges);
  if (g.size() == 0) throw Error(ErrorCode::Disconnected, "graph has no vertices");
  auto dist = hop_distances(g, 0);
  for (Index x = 0; x < g.size(); ++x) {
    if (dist[static_cast<std::size_t>(x)] < 0) {
      throw Error(ErrorCode::Disconnected, "vertex '" + g.id(x) + "' is unreachable from '" + g.id(0) + "'");
    }
  }
  g.relaxed_ = false;
  return g;
}

std::vector<VertexSpec> vertex_specs(const WeightedGraph& g) {
  std::vector<VertexSpec> out;
  out.reserve(static_cast<std::size_t>(g.size()));
  for (Index x = 0; x < g.size(); ++x) out.push_back({g.id(x), g.measure(x)});
  return out;
}

std::vector<EdgeSpec> edge_specs(const WeightedGraph& g) {
  std::vector<EdgeSpec> out;
  out.reserve(g.edges().size());
  for (const auto& e : g.edges()) out.push_back({g.id(e.u), g.id(e.v), e.weight});
  return out;
}

WeightedGraph scale_weights(const WeightedGraph& g, double factor) {
  auto edges = edge_specs(g);
  for (auto& e : edges) e.weight *= factor;
  auto vertices = vertex_specs(g);
  return g.relaxed() ? assemble_relaxed(vertices, edges) : build_graph(vertices, edges);
}

BoundaryGraph attach_boundary(WeightedGraph g, std::span<const Index> boundary) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<bool> in_boundary(n, false);
  for (Index x : boundary) {
    g.check_vertex(x);
    in_boundary[static_cast<std::size_t>(x)] = true;
  }

  BoundaryGraph bg(std::move(g));
  const WeightedGraph& graph = bg.graph_;
  bg.boundary_position_.assign(n, -1);
  bg.interior_position_.assign(n, -1);
  for (Index x = 0; x < graph.size(); ++x) {
    const auto ux = static_cast<std::size_t>(x);
    if (in_boundary[ux]) {
      bg.boundary_position_[ux] = static_cast<Index>(bg.boundary_.size());
      bg.boundary_.push_back(x);
    } else {
      bg.interior_position_[ux] = static_cast<Index>(bg.interior_.size());
      bg.interior_.push_back(x);
    }
  }
  if (bg.boundary_.empty()) throw Error(ErrorCode::EmptyBoundary, "boundary set is empty");
  if (bg.interior_.empty()) throw Error(ErrorCode::EmptyInterior, "every vertex is a boundary vertex");

  for (Index x : bg.boundary_) {
    bool touches_interior = false;
    for (Index y : graph.neighbors(x)) {
      if (in_boundary[static_cast<std::size_t>(y)]) {
        const Index a = std::min(x, y);
        const Index b = std::max(x, y);
        throw Error(ErrorCode::BoundaryNotIndependent,
                    "boundary vertices '" + graph.id(a) + "' and '" + graph.id(b) + "' are adjacent");
      }
      touches_interior = true;
    }
    if (!touches_interior) {
      throw Error(ErrorCode::BoundaryVertexIsolatedFromInterior,
                  "boundary vertex '" + graph.id(x) + "' has no interior neighbor");
    }
  }
  return bg;
}

BoundaryGraph attach_boundary(WeightedGraph g, std::span<const std::string> boundary_ids) {
  std::vector<Index> indices;
  indices.reserve(boundary_ids.size());
  for (const auto& id : boundary_ids) indices.push_back(g.index_of(id));
  return attach_boundary(std::move(g), indices);
}

double weighted_degree(const WeightedGraph& g, Index x) {
  g.check_vertex(x);
  return g.weights().row(x).sum() / g.measure(x);
}

double boundary_degree(const BoundaryGraph& bg, Index x) {
  const auto& g = bg.graph();
  g.check_vertex(x);
  if (bg.is_boundary(x)) throw Error(ErrorCode::NotInteriorVertex, "vertex '" + g.id(x) + "' is on the boundary");
  double sum = 0.0;
  for (Index b : bg.boundary()) sum += g.weight(x, b);
  return sum / g.measure(x);
}

double volume(const WeightedGraph& g, std::span<const Index> vertices) {
  double sum = 0.0;
  for (Index x : vertices) {
    g.check_vertex(x);
    sum += g.measure(x);
  }
  return sum;
}

InducedGraph induced_subgraph(const WeightedGraph& g, std::span<const Index> vertices) {
  std::vector<Index> parent(vertices.begin(), vertices.end());
  std::sort(parent.begin(), parent.end());
  parent.erase(std::unique(parent.begin(), parent.end()), parent.end());
  std::vector<bool> keep(static_cast<std::size_t>(g.size()), false);
  std::vector<VertexSpec> vspecs;
  for (Index x : parent) {
    g.check_vertex(x);
    keep[static_cast<std::size_t>(x)] = true;
    vspecs.push_back({g.id(x), g.measure(x)});
  }
  std::vector<EdgeSpec> especs;
  for (const auto& e : g.edges()) {
    if (keep[static_cast<std::size_t>(e.u)] && keep[static_cast<std::size_t>(e.v)]) {
      especs.push_back({g.id(e.u), g.id(e.v), e.weight});
    }
  }
  return {assemble_relaxed(vspecs, especs), std::move(parent)};
}

InducedGraph induced_interior_graph(const BoundaryGraph& bg) {
  return induced_subgraph(bg.graph(), bg.interior());
}

std::vector<Index> hop_distances(const WeightedGraph& g, Index source) {
  g.check_vertex(source);
  std::vector<Index> dist(static_cast<std::size_t>(g.size()), -1);
  std::deque<Index> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const Index x = queue.front();
    queue.pop_front();
    for (Index y : g.neighbors(x)) {
      auto& d = dist[static_cast<std::size_t>(y)];
      if (d < 0) {
        d = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace bestek
