#include "bestek/curvature.hpp"

#include "bestek/error.hpp"
#include "bestek/steklov.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace bestek {

namespace {

constexpr double kEqualityTolerance = 1e-8;

Matrix pinned(const Matrix& a) {
  const Index n = a.rows() - 1;
  return a.bottomRightCorner(n, n);
}

double spectral_norm(const Eigen::SelfAdjointEigenSolver<Matrix>& solver) {
  if (solver.eigenvalues().size() == 0) return 0.0;
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

Vector scatter(const WeightedGraph& g, const std::vector<Index>& vertices, const Vector& local) {
  Vector f = Vector::Zero(g.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) f(vertices[i]) = local(static_cast<Index>(i));
  return f;
}

Matrix pseudo_inverse(const Matrix& t) {
  if (t.rows() == 0) return t;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(t);
  const Vector& ev = solver.eigenvalues();
  const double cutoff = kPseudoInverseCutoff * ev.cwiseAbs().maxCoeff();
  Vector inv = Vector::Zero(ev.size());
  for (Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) > cutoff) inv(i) = 1.0 / ev(i);
  }
  return solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().transpose();
}

void require_positive_k(double K) {
  if (!std::isfinite(K) || !(K > 0.0)) throw Error(ErrorCode::InvalidParams, "K must be positive, got " + format_double(K));
}

}  // namespace

QuadraticForm cd_form(const WeightedGraph& g, Index x, double K, double inverse_dimension) {
  QuadraticForm form = gamma2_form(g, x);
  if (inverse_dimension != 0.0) form.matrix -= inverse_dimension * embed(laplacian_square_form(g, x), form.vertices).matrix;
  if (K != 0.0) form.matrix -= K * embed(gamma_form(g, x), form.vertices).matrix;
  return form;
}

const CdVertexVerdict* CdCheckResult::violation() const {
  auto it = std::find_if(vertices.begin(), vertices.end(), [](const CdVertexVerdict& v) { return !v.holds; });
  return it == vertices.end() ? nullptr : &*it;
}

CdCheckResult cd_check(const WeightedGraph& g, double K, Dimension n, std::optional<Index> x) {
  if (!std::isfinite(K)) throw Error(ErrorCode::InvalidParams, "K must be finite");
  std::vector<Index> targets;
  if (x) {
    g.check_vertex(*x);
    targets.push_back(*x);
  } else {
    for (Index y = 0; y < g.size(); ++y) targets.push_back(y);
  }

  CdCheckResult result;
  for (Index y : targets) {
    const QuadraticForm form = cd_form(g, y, K, n.inverse());
    CdVertexVerdict verdict;
    verdict.vertex = y;
    verdict.witness = Vector::Zero(g.size());
    const Matrix a = pinned(form.matrix);
    if (a.rows() > 0) {
      Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
      verdict.min_eigenvalue = solver.eigenvalues()(0);
      verdict.tolerance = kPsdTolerance * (1.0 + spectral_norm(solver));
      verdict.holds = verdict.min_eigenvalue >= -verdict.tolerance;
      Vector local = Vector::Zero(a.rows() + 1);
      local.tail(a.rows()) = solver.eigenvectors().col(0);
      verdict.witness = scatter(g, form.vertices, local);
    }
    result.holds = result.holds && verdict.holds;
    result.vertices.push_back(std::move(verdict));
  }
  return result;
}

CurvatureResult curvature_at_inverse_dimension(const WeightedGraph& g, Index x, double inverse_dimension) {
  g.check_vertex(x);
  const auto degree = static_cast<Index>(g.neighbors(x).size());
  if (degree == 0) throw Error(ErrorCode::IsolatedVertex, "vertex '" + g.id(x) + "' has no neighbors");

  const QuadraticForm form = cd_form(g, x, 0.0, inverse_dimension);
  const Matrix a = pinned(form.matrix);
  const Index far = a.rows() - degree;

  // Q(Γ) on the neighbor coordinates (with f(x) = 0) is diag(w_xy / 2m_x).
  Vector d(degree);
  for (Index i = 0; i < degree; ++i) d(i) = g.weight(x, form.vertices[static_cast<std::size_t>(i + 1)]) / (2.0 * g.measure(x));

  const Matrix p = a.topLeftCorner(degree, degree);
  const Matrix r = a.topRightCorner(degree, far);
  const Matrix t = a.bottomRightCorner(far, far);

  CurvatureResult result{x, Dimension::infinite(), 0.0, {}, true, 0.0};
  if (far > 0) {
    Eigen::SelfAdjointEigenSolver<Matrix> kernel(t);
    result.kernel_min_eigenvalue = kernel.eigenvalues()(0);
    result.kernel_ok = result.kernel_min_eigenvalue >= -kPsdTolerance * (1.0 + spectral_norm(kernel));
  }

  const Matrix t_pinv = pseudo_inverse(t);
  Matrix schur = p - r * t_pinv * r.transpose();
  const Vector d_inv_sqrt = d.cwiseSqrt().cwiseInverse();
  Matrix pencil = d_inv_sqrt.asDiagonal() * schur * d_inv_sqrt.asDiagonal();
  pencil = 0.5 * (pencil + pencil.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(pencil);
  result.kappa = solver.eigenvalues()(0);

  const Vector near = d_inv_sqrt.cwiseProduct(solver.eigenvectors().col(0));
  Vector local = Vector::Zero(a.rows() + 1);
  local.segment(1, degree) = near;
  if (far > 0) local.tail(far) = -t_pinv * r.transpose() * near;
  result.witness = scatter(g, form.vertices, local);
  return result;
}

CurvatureResult curvature_at(const WeightedGraph& g, Index x, Dimension n) {
  CurvatureResult result = curvature_at_inverse_dimension(g, x, n.inverse());
  result.n = n;
  return result;
}

CurvatureProfile curvature_profile(const WeightedGraph& g, std::span<const Dimension> dimensions) {
  CurvatureProfile profile;
  profile.dimensions.assign(dimensions.begin(), dimensions.end());
  profile.kappa = Matrix::Zero(g.size(), static_cast<Index>(dimensions.size()));
  for (std::size_t j = 0; j < dimensions.size(); ++j) {
    for (Index x = 0; x < g.size(); ++x) profile.kappa(x, static_cast<Index>(j)) = curvature_at(g, x, dimensions[j]).kappa;
    profile.global_min.push_back(g.size() > 0 ? profile.kappa.col(static_cast<Index>(j)).minCoeff() : 0.0);
  }
  return profile;
}

namespace {

LichnerowiczReport finish_report(SpectralSubject subject, double K, Dimension n, bool cd_holds, double value) {
  LichnerowiczReport report{subject, K, n};
  report.cd_holds = cd_holds;
  report.bound = lichnerowicz_bound(K, n);
  report.spectral_value = value;
  report.slack = value - report.bound;
  report.bound_holds = report.slack >= -kEqualityTolerance * report.bound;
  report.equality = std::abs(report.slack) <= kEqualityTolerance * report.bound;
  return report;
}

}  // namespace

LichnerowiczReport verify_lichnerowicz(const WeightedGraph& g, double K, Dimension n) {
  require_positive_k(K);
  if (g.size() < 2) throw Error(ErrorCode::InvalidParams, "mu_2 needs at least two vertices");
  const bool cd = cd_check(g, K, n).holds;
  return finish_report(SpectralSubject::ClosedGraph, K, n, cd, laplacian_spectrum(g).values(1));
}

LichnerowiczReport verify_lichnerowicz(const BoundaryGraph& bg, double K, Dimension n) {
  require_positive_k(K);
  const double s2 = sigma2(steklov_spectrum(bg));
  const bool cd = cd_check(bg.graph(), K, n).holds;
  return finish_report(SpectralSubject::BoundaryGraph, K, n, cd, s2);
}

}  // namespace bestek
