#include "bestek/operators.hpp"

#include "bestek/error.hpp"

#include <algorithm>
#include <cmath>

namespace bestek {

namespace {

// Row of Δ at y as a dense vector over `local` (position lookup via `pos`).
Vector laplacian_row(const WeightedGraph& g, Index y, const QuadraticForm& local) {
  Vector row = Vector::Zero(static_cast<Index>(local.vertices.size()));
  const double my = g.measure(y);
  const Index py = local.position(y);
  for (Index z : g.neighbors(y)) {
    const double c = g.weight(y, z) / my;
    row(local.position(z)) += c;
    row(py) -= c;
  }
  return row;
}

Vector difference(Index size, Index a, Index b) {
  Vector e = Vector::Zero(size);
  e(a) += 1.0;
  e(b) -= 1.0;
  return e;
}

void symmetrize(Matrix& m) { m = 0.5 * (m + m.transpose()).eval(); }

}  // namespace

void check_domain(const WeightedGraph& g, const Vector& u) {
  if (u.size() != g.size()) {
    throw Error(ErrorCode::DomainMismatch, "function has " + std::to_string(u.size()) +
                                               " values, graph has " + std::to_string(g.size()) + " vertices");
  }
}

OneForm::OneForm(const WeightedGraph& g, Vector oriented_values) : graph_(&g), values_(std::move(oriented_values)) {
  if (values_.size() != static_cast<Index>(g.edges().size())) {
    throw Error(ErrorCode::DomainMismatch, "one-form needs one value per edge");
  }
}

double OneForm::operator()(Index x, Index y) const {
  auto e = graph_->edge_index(x, y);
  if (!e) return 0.0;
  const double v = values_(static_cast<Index>(*e));
  return graph_->edges()[*e].u == x ? v : -v;
}

Vector laplacian(const WeightedGraph& g, const Vector& u) {
  check_domain(g, u);
  Vector out = Vector::Zero(g.size());
  for (Index x = 0; x < g.size(); ++x) {
    double sum = 0.0;
    for (Index y : g.neighbors(x)) sum += (u(y) - u(x)) * g.weight(x, y);
    out(x) = sum / g.measure(x);
  }
  return out;
}

OneForm differential(const WeightedGraph& g, const Vector& u) {
  check_domain(g, u);
  Vector values(static_cast<Index>(g.edges().size()));
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& edge = g.edges()[e];
    values(static_cast<Index>(e)) = u(edge.v) - u(edge.u);
  }
  return OneForm(g, std::move(values));
}

double inner_product_functions(const WeightedGraph& g, const Vector& u, const Vector& v,
                               std::optional<std::span<const Index>> vertices) {
  check_domain(g, u);
  check_domain(g, v);
  if (!vertices) return (u.array() * v.array() * g.measures().array()).sum();
  double sum = 0.0;
  for (Index x : *vertices) {
    g.check_vertex(x);
    sum += u(x) * v(x) * g.measure(x);
  }
  return sum;
}

double inner_product_forms(const WeightedGraph& g, const OneForm& alpha, const OneForm& beta,
                           std::optional<std::span<const std::size_t>> edges) {
  const auto count = static_cast<Index>(g.edges().size());
  if (alpha.oriented_values().size() != count || beta.oriented_values().size() != count) {
    throw Error(ErrorCode::DomainMismatch, "one-form does not belong to this graph");
  }
  double sum = 0.0;
  auto term = [&](std::size_t e) {
    if (e >= g.edges().size()) throw Error(ErrorCode::DomainMismatch, "edge position out of range");
    const auto i = static_cast<Index>(e);
    return alpha.oriented_values()(i) * beta.oriented_values()(i) * g.edges()[e].weight;
  };
  if (edges) {
    for (std::size_t e : *edges) sum += term(e);
  } else {
    for (std::size_t e = 0; e < g.edges().size(); ++e) sum += term(e);
  }
  return sum;
}

Vector gamma(const WeightedGraph& g, const Vector& u, const Vector& v) {
  check_domain(g, u);
  check_domain(g, v);
  Vector out = Vector::Zero(g.size());
  for (Index x = 0; x < g.size(); ++x) {
    double sum = 0.0;
    for (Index y : g.neighbors(x)) sum += (u(x) - u(y)) * (v(x) - v(y)) * g.weight(x, y);
    out(x) = sum / (2.0 * g.measure(x));
  }
  return out;
}

Vector gamma2(const WeightedGraph& g, const Vector& u, const Vector& v) {
  const Vector lu = laplacian(g, u);
  const Vector lv = laplacian(g, v);
  return 0.5 * (laplacian(g, gamma(g, u, v)) - gamma(g, lu, v) - gamma(g, u, lv));
}

double QuadraticForm::evaluate(const Vector& f) const {
  const Vector local = restrict(f);
  return local.dot(matrix * local);
}

Vector QuadraticForm::restrict(const Vector& f) const {
  Vector local(static_cast<Index>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= f.size()) throw Error(ErrorCode::DomainMismatch, "function too short for form");
    local(static_cast<Index>(i)) = f(vertices[i]);
  }
  return local;
}

Index QuadraticForm::position(Index x) const {
  auto it = std::find(vertices.begin(), vertices.end(), x);
  return it == vertices.end() ? -1 : static_cast<Index>(it - vertices.begin());
}

std::vector<Index> ball(const WeightedGraph& g, Index x, Index radius) {
  const auto dist = hop_distances(g, x);
  std::vector<Index> out;
  for (Index r = 0; r <= radius; ++r) {
    for (Index y = 0; y < g.size(); ++y) {
      if (dist[static_cast<std::size_t>(y)] == r) out.push_back(y);
    }
  }
  return out;
}

QuadraticForm gamma_form(const WeightedGraph& g, Index x) {
  g.check_vertex(x);
  QuadraticForm form{ball(g, x, 1), {}};
  const auto size = static_cast<Index>(form.vertices.size());
  form.matrix = Matrix::Zero(size, size);
  const double mx = g.measure(x);
  for (Index y : g.neighbors(x)) {
    const Vector e = difference(size, 0, form.position(y));
    form.matrix += (g.weight(x, y) / (2.0 * mx)) * e * e.transpose();
  }
  symmetrize(form.matrix);
  return form;
}

QuadraticForm laplacian_square_form(const WeightedGraph& g, Index x) {
  g.check_vertex(x);
  QuadraticForm form{ball(g, x, 1), {}};
  const Vector row = laplacian_row(g, x, form);
  form.matrix = row * row.transpose();
  symmetrize(form.matrix);
  return form;
}

QuadraticForm gamma2_form(const WeightedGraph& g, Index x) {
  g.check_vertex(x);
  QuadraticForm form{ball(g, x, 2), {}};
  const auto size = static_cast<Index>(form.vertices.size());
  Matrix q = Matrix::Zero(size, size);
  const double mx = g.measure(x);

  // Γ(f,f)(y) as a form over the local ordering.
  auto local_gamma = [&](Index y) {
    Matrix gy = Matrix::Zero(size, size);
    const Index py = form.position(y);
    for (Index z : g.neighbors(y)) {
      const Vector e = difference(size, py, form.position(z));
      gy += (g.weight(y, z) / (2.0 * g.measure(y))) * e * e.transpose();
    }
    return gy;
  };

  // ½ΔΓ(f,f)(x) = (1/2m_x) Σ_y w_xy (Γ(f,f)(y) - Γ(f,f)(x))
  const Matrix gx = local_gamma(x);
  for (Index y : g.neighbors(x)) q += (g.weight(x, y) / (2.0 * mx)) * (local_gamma(y) - gx);

  // Γ(Δf,f)(x) = (1/2m_x) Σ_y w_xy (Δf(x) - Δf(y)) (f(x) - f(y))
  const Vector ax = laplacian_row(g, x, form);
  for (Index y : g.neighbors(x)) {
    const Vector diff_lap = ax - laplacian_row(g, y, form);
    const Vector e = difference(size, 0, form.position(y));
    q -= (g.weight(x, y) / (2.0 * mx)) * diff_lap * e.transpose();
  }

  symmetrize(q);
  form.matrix = std::move(q);
  return form;
}

QuadraticForm embed(const QuadraticForm& form, const std::vector<Index>& vertices) {
  QuadraticForm out{vertices, Matrix::Zero(static_cast<Index>(vertices.size()), static_cast<Index>(vertices.size()))};
  std::vector<Index> map(form.vertices.size());
  for (std::size_t i = 0; i < form.vertices.size(); ++i) {
    map[i] = out.position(form.vertices[i]);
    if (map[i] < 0) throw Error(ErrorCode::DomainMismatch, "target ordering misses a vertex of the form");
  }
  for (std::size_t i = 0; i < map.size(); ++i) {
    for (std::size_t j = 0; j < map.size(); ++j) {
      out.matrix(map[i], map[j]) = form.matrix(static_cast<Index>(i), static_cast<Index>(j));
    }
  }
  return out;
}

double check_green_identity(const BoundaryGraph& bg, const Vector& u, const Vector& v) {
  const auto& g = bg.graph();
  const Vector lu = laplacian(g, u);
  const double interior = inner_product_functions(g, lu, v, std::span<const Index>(bg.interior()));
  const double energy = inner_product_forms(g, differential(g, u), differential(g, v));
  const Vector normal = -lu;
  const double boundary = inner_product_functions(g, normal, v, std::span<const Index>(bg.boundary()));
  return std::abs(interior + energy - boundary);
}

}  // namespace bestek
