#include "bestek/steklov.hpp"

#include "bestek/error.hpp"
#include "bestek/operators.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>

namespace bestek {

namespace {

Matrix select(const Matrix& a, const std::vector<Index>& rows, const std::vector<Index>& cols) {
  Matrix out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Index>(i), static_cast<Index>(j)) = a(rows[i], cols[j]);
    }
  }
  return out;
}

// Every connected piece of Ω must see the boundary, otherwise L_ΩΩ is singular.
void check_interior_system(const BoundaryGraph& bg) {
  const auto interior = induced_interior_graph(bg);
  const auto& h = interior.graph;
  std::vector<bool> seen(static_cast<std::size_t>(h.size()), false);
  for (Index start = 0; start < h.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    const auto dist = hop_distances(h, start);
    bool touches = false;
    for (Index y = 0; y < h.size(); ++y) {
      if (dist[static_cast<std::size_t>(y)] < 0) continue;
      seen[static_cast<std::size_t>(y)] = true;
      for (Index b : bg.boundary()) touches = touches || bg.graph().adjacent(interior.parent[static_cast<std::size_t>(y)], b);
    }
    if (!touches) {
      throw Error(ErrorCode::SingularInteriorSystem,
                  "interior component containing '" + h.id(start) + "' has no boundary neighbor");
    }
  }
}

struct InteriorSolver {
  Matrix l_bb;
  Matrix l_bo;
  Eigen::LLT<Matrix> l_oo;
};

InteriorSolver factor_interior(const BoundaryGraph& bg) {
  check_interior_system(bg);
  const Matrix l = symmetric_laplacian(bg.graph());
  InteriorSolver s{select(l, bg.boundary(), bg.boundary()), select(l, bg.boundary(), bg.interior()), {}};
  s.l_oo.compute(select(l, bg.interior(), bg.interior()));
  if (s.l_oo.info() != Eigen::Success) {
    throw Error(ErrorCode::SingularInteriorSystem, "interior block of the Laplacian is not positive definite");
  }
  return s;
}

void fix_signs(Matrix& functions) {
  for (Index j = 0; j < functions.cols(); ++j) {
    const double scale = functions.col(j).cwiseAbs().maxCoeff();
    for (Index i = 0; i < functions.rows(); ++i) {
      if (std::abs(functions(i, j)) > 1e-10 * scale) {
        if (functions(i, j) < 0) functions.col(j) *= -1.0;
        break;
      }
    }
  }
}

// Solves A v = λ diag(measures) v through the symmetric reduction M^{-1/2} A M^{-1/2}.
Spectrum generalized_symmetric(SpectrumKind kind, const Matrix& a, const Vector& measures) {
  const Vector inv_sqrt = measures.cwiseSqrt().cwiseInverse();
  Matrix c = inv_sqrt.asDiagonal() * a * inv_sqrt.asDiagonal();
  c = 0.5 * (c + c.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(c);
  Spectrum out{kind, solver.eigenvalues(), inv_sqrt.asDiagonal() * solver.eigenvectors()};
  fix_signs(out.functions);
  return out;
}

}  // namespace

std::vector<std::pair<double, int>> Spectrum::multiplicities() const {
  std::vector<std::pair<double, int>> out;
  for (Index i = 0; i < values.size(); ++i) {
    const double v = values(i);
    if (!out.empty() && std::abs(v - out.back().first) <= 1e-8 * (1.0 + std::abs(out.back().first))) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

Matrix symmetric_laplacian(const WeightedGraph& g) {
  Matrix l = -g.weights();
  for (Index x = 0; x < g.size(); ++x) l(x, x) = g.weights().row(x).sum();
  return l;
}

Vector harmonic_extension(const BoundaryGraph& bg, const Vector& f) {
  if (f.size() != static_cast<Index>(bg.boundary().size())) {
    throw Error(ErrorCode::DomainMismatch, "boundary function has wrong size");
  }
  const auto s = factor_interior(bg);
  const Vector interior = s.l_oo.solve(-s.l_bo.transpose() * f);
  Vector u(bg.graph().size());
  for (std::size_t i = 0; i < bg.boundary().size(); ++i) u(bg.boundary()[i]) = f(static_cast<Index>(i));
  for (std::size_t i = 0; i < bg.interior().size(); ++i) u(bg.interior()[i]) = interior(static_cast<Index>(i));
  return u;
}

Vector normal_derivative(const BoundaryGraph& bg, const Vector& u) {
  const Vector lu = laplacian(bg.graph(), u);
  Vector out(static_cast<Index>(bg.boundary().size()));
  for (std::size_t i = 0; i < bg.boundary().size(); ++i) out(static_cast<Index>(i)) = -lu(bg.boundary()[i]);
  return out;
}

Vector DtNOperator::apply(const Vector& f) const {
  if (f.size() != schur_matrix.cols()) throw Error(ErrorCode::DomainMismatch, "boundary function has wrong size");
  return (schur_matrix * f).cwiseQuotient(measures);
}

Matrix DtNOperator::matrix() const { return measures.cwiseInverse().asDiagonal() * schur_matrix; }

DtNOperator dtn_operator(const BoundaryGraph& bg) {
  const auto s = factor_interior(bg);
  Matrix schur = s.l_bb - s.l_bo * s.l_oo.solve(s.l_bo.transpose());
  schur = 0.5 * (schur + schur.transpose()).eval();
  Vector measures(static_cast<Index>(bg.boundary().size()));
  for (std::size_t i = 0; i < bg.boundary().size(); ++i) measures(static_cast<Index>(i)) = bg.graph().measure(bg.boundary()[i]);
  return {bg.boundary(), std::move(schur), std::move(measures)};
}

Spectrum steklov_spectrum(const DtNOperator& dtn) {
  return generalized_symmetric(SpectrumKind::Steklov, dtn.schur_matrix, dtn.measures);
}

Spectrum steklov_spectrum(const BoundaryGraph& bg) { return steklov_spectrum(dtn_operator(bg)); }

Spectrum laplacian_spectrum(const WeightedGraph& g) {
  return generalized_symmetric(SpectrumKind::Laplacian, symmetric_laplacian(g), g.measures());
}

double sigma2(const Spectrum& steklov) {
  if (steklov.values.size() < 2) throw Error(ErrorCode::InvalidParams, "sigma_2 needs at least two boundary vertices");
  return steklov.values(1);
}

SteklovDiagnostics steklov_eigenfunction_diagnostics(const BoundaryGraph& bg, const Spectrum& steklov) {
  if (steklov.kind != SpectrumKind::Steklov || steklov.functions.rows() != static_cast<Index>(bg.boundary().size())) {
    throw Error(ErrorCode::DomainMismatch, "spectrum does not belong to this boundary graph");
  }
  sigma2(steklov);
  const auto& g = bg.graph();
  SteklovDiagnostics d;
  d.extension = harmonic_extension(bg, steklov.functions.col(1));
  const Vector& u = d.extension;
  d.interior_norm = std::sqrt(inner_product_functions(g, u, u, std::span<const Index>(bg.interior())));
  const auto du = differential(g, u);
  d.rayleigh_quotient = inner_product_forms(g, du, du) / inner_product_functions(g, u, u);
  const auto mu = laplacian_spectrum(g);
  d.mu2 = mu.values.size() > 1 ? mu.values(1) : 0.0;
  d.mu2_residual = (symmetric_laplacian(g) * u - d.mu2 * g.measures().cwiseProduct(u)).norm();
  return d;
}

}  // namespace bestek
