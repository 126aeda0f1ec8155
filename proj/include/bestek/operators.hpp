#pragma once

#include "bestek/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace bestek {

// Vertex functions are Eigen vectors indexed by dense vertex index. Functions
// on B or Ω are indexed by position in BoundaryGraph::boundary()/interior().
// Every operator checks the domain size and throws DomainMismatch.

/// Skew-symmetric edge function. Values are stored per edge of the graph,
/// oriented from Edge::u to Edge::v.
class OneForm {
 public:
  OneForm(const WeightedGraph& g, Vector oriented_values);

  const Vector& oriented_values() const noexcept { return values_; }
  /// α(x,y); zero for non-adjacent pairs, α(y,x) = -α(x,y).
  double operator()(Index x, Index y) const;

 private:
  const WeightedGraph* graph_;
  Vector values_;
};

/// Δu(x) = (1/m_x) Σ_y (u(y) - u(x)) w_xy.
Vector laplacian(const WeightedGraph& g, const Vector& u);

/// du(x,y) = u(y) - u(x) on edges.
OneForm differential(const WeightedGraph& g, const Vector& u);

/// ⟨u,v⟩_S = Σ_{x∈S} u(x) v(x) m_x; S defaults to V.
double inner_product_functions(const WeightedGraph& g, const Vector& u, const Vector& v,
                               std::optional<std::span<const Index>> vertices = std::nullopt);

/// ⟨α,β⟩_S = Σ_{e∈S} α(e) β(e) w_e over edge positions S; defaults to all edges.
double inner_product_forms(const WeightedGraph& g, const OneForm& alpha, const OneForm& beta,
                           std::optional<std::span<const std::size_t>> edges = std::nullopt);

/// Γ(u,v)(x) = (1/2m_x) Σ_y (u(x)-u(y))(v(x)-v(y)) w_xy, by the explicit sum.
Vector gamma(const WeightedGraph& g, const Vector& u, const Vector& v);

/// Γ₂(u,v) = ½(ΔΓ(u,v) - Γ(Δu,v) - Γ(u,Δv)).
Vector gamma2(const WeightedGraph& g, const Vector& u, const Vector& v);

/// Symmetric matrix over an ordered local vertex set.
struct QuadraticForm {
  std::vector<Index> vertices;
  Matrix matrix;

  /// fᵀQf with f a function on the whole vertex set.
  double evaluate(const Vector& f) const;
  /// Restriction of f to `vertices`.
  Vector restrict(const Vector& f) const;
  /// Local position of a vertex, or -1.
  Index position(Index x) const;
};

/// Form over B₁(x) = {x} ∪ N(x) with fᵀQf = Γ(f,f)(x). x comes first,
/// then neighbors in vertex order.
QuadraticForm gamma_form(const WeightedGraph& g, Index x);

/// Form over B₂(x) with fᵀQf = Γ₂(f,f)(x). Ordering: x, the neighbors, then
/// the distance-2 vertices, each group in vertex order.
QuadraticForm gamma2_form(const WeightedGraph& g, Index x);

/// Rank-one form over B₁(x) with fᵀQf = (Δf(x))².
QuadraticForm laplacian_square_form(const WeightedGraph& g, Index x);

/// Re-expresses a form over a superset ordering; missing vertices get zero rows.
QuadraticForm embed(const QuadraticForm& form, const std::vector<Index>& vertices);

/// Residual |⟨Δu,v⟩_Ω + ⟨du,dv⟩ - ⟨∂u/∂n, v⟩_B| of Green's formula.
double check_green_identity(const BoundaryGraph& bg, const Vector& u, const Vector& v);

/// Closed ball of hop radius r around x: x first, then by distance, then vertex order.
std::vector<Index> ball(const WeightedGraph& g, Index x, Index radius);

void check_domain(const WeightedGraph& g, const Vector& u);

}  // namespace bestek
