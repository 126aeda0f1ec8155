#include "bestek/rigidity.hpp"

#include "bestek/curvature.hpp"
#include "bestek/error.hpp"
#include "bestek/examples.hpp"
#include "bestek/operators.hpp"
#include "bestek/steklov.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace bestek {

namespace {

void require_positive_k(double K) {
  if (!std::isfinite(K) || !(K > 0.0)) throw Error(ErrorCode::InvalidParams, "K must be positive, got " + format_double(K));
}

double boundary_degree_target(double K, Dimension n) {
  return n.is_infinite() ? K : (n.value() + 2.0) * K / (n.value() - 1.0);
}

bool dimension_is_two(Dimension n) { return !n.is_infinite() && std::abs(n.value() - 2.0) <= 1e-12; }

ConditionVerdict pass() { return {true, true, {}}; }
ConditionVerdict fail(std::string witness) { return {true, false, std::move(witness)}; }

std::vector<Index> iota_indices(Index count) {
  std::vector<Index> out(static_cast<std::size_t>(count));
  std::iota(out.begin(), out.end(), Index{0});
  return out;
}

bool interior_edgeless(const BoundaryGraph& bg) {
  for (const auto& e : bg.graph().edges()) {
    if (!bg.is_boundary(e.u) && !bg.is_boundary(e.v)) return false;
  }
  return true;
}

// A labelled template: vertex count, edges and boundary over labels 0..k-1.
struct Shape {
  int size;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> boundary;
};

const Shape kPath3{3, {{0, 1}, {1, 2}}, {0, 2}};
const Shape kSquare{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0, 2}};
const Shape kSquareDiag{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}}, {0, 2}};

// Brute force over vertex permutations; returns perm with shape label i ↦ vertex perm[i].
std::optional<std::vector<Index>> match_shape(const BoundaryGraph& bg, const Shape& shape) {
  const auto& g = bg.graph();
  if (g.size() != shape.size || g.edges().size() != shape.edges.size()) return std::nullopt;
  if (bg.boundary().size() != shape.boundary.size()) return std::nullopt;
  std::vector<Index> perm = iota_indices(g.size());
  do {
    bool ok = true;
    for (auto [a, b] : shape.edges) ok = ok && g.adjacent(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    for (int b : shape.boundary) ok = ok && bg.is_boundary(perm[static_cast<std::size_t>(b)]);
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

Matrix drop_row_col(const Matrix& a, Index k) {
  const Index n = a.rows();
  Matrix out(n - 1, n - 1);
  for (Index i = 0, r = 0; i < n; ++i) {
    if (i == k) continue;
    for (Index j = 0, c = 0; j < n; ++j) {
      if (j == k) continue;
      out(r, c++) = a(i, j);
    }
    ++r;
  }
  return out;
}

Vector insert_zero(const Vector& v, Index k) {
  Vector out(v.size() + 1);
  out.head(k) = v.head(k);
  out(k) = 0.0;
  out.tail(v.size() - k) = v.tail(v.size() - k);
  return out;
}

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::UnitPath3: return "unit_path3";
    case Classification::UnitSquare: return "unit_square";
    case Classification::UnitSquareDiag: return "unit_square_diag";
    case Classification::WeightedPath3: return "weighted_path3";
    case Classification::WeightedSquare: return "weighted_square";
    case Classification::GeneralEquality: return "general_equality";
    case Classification::NotRigid: return "not_rigid";
  }
  return "unknown";
}

NecessaryConditions check_necessary_conditions(const BoundaryGraph& bg, double K, Dimension n) {
  require_positive_k(K);
  const auto& g = bg.graph();
  const auto& boundary = bg.boundary();
  NecessaryConditions c;

  if (boundary.size() != 2) {
    c.cond1 = fail("|B| = " + std::to_string(boundary.size()));
  } else {
    c.cond1 = pass();
    // name the interior vertex with the fewest boundary neighbors
    int fewest = 2;
    for (Index x : bg.interior()) {
      const int seen = int(g.adjacent(x, boundary[0])) + int(g.adjacent(x, boundary[1]));
      if (seen >= fewest) continue;
      fewest = seen;
      if (seen == 0) {
        c.cond1 = fail("interior vertex '" + g.id(x) + "' is not adjacent to any boundary vertex");
      } else {
        const Index b = g.adjacent(x, boundary[0]) ? boundary[1] : boundary[0];
        c.cond1 = fail("interior vertex '" + g.id(x) + "' is not adjacent to boundary vertex '" + g.id(b) + "'");
      }
    }
  }

  if (boundary.size() != 2) {
    c.cond2 = fail("|B| = " + std::to_string(boundary.size()));
  } else {
    const Index b1 = boundary[0];
    const Index b2 = boundary[1];
    c.cond2 = pass();
    if (!nearly_equal(g.measure(b1), g.measure(b2), kConditionTolerance)) {
      c.cond2 = fail("m('" + g.id(b1) + "') = " + format_double(g.measure(b1)) + " differs from m('" + g.id(b2) +
                     "') = " + format_double(g.measure(b2)));
    } else {
      for (Index x : bg.interior()) {
        if (!nearly_equal(g.weight(b1, x), g.weight(b2, x), kConditionTolerance)) {
          c.cond2 = fail("w('" + g.id(b1) + "','" + g.id(x) + "') = " + format_double(g.weight(b1, x)) +
                         " differs from w('" + g.id(b2) + "','" + g.id(x) + "') = " + format_double(g.weight(b2, x)));
          break;
        }
      }
    }
  }

  const double deg_target = lichnerowicz_bound(K, n);
  c.cond3 = pass();
  for (Index b : boundary) {
    const double deg = weighted_degree(g, b);
    if (!nearly_equal(deg, deg_target, kConditionTolerance)) {
      c.cond3 = fail("Deg('" + g.id(b) + "') = " + format_double(deg) + ", expected " + format_double(deg_target));
      break;
    }
  }

  const double degb_target = boundary_degree_target(K, n);
  c.cond4 = pass();
  for (Index x : bg.interior()) {
    const double degb = boundary_degree(bg, x);
    if (!nearly_equal(degb, degb_target, kConditionTolerance)) {
      c.cond4 = fail("Deg_b('" + g.id(x) + "') = " + format_double(degb) + ", expected " + format_double(degb_target));
      break;
    }
  }
  return c;
}

double InteriorFormAssembly::evaluate(const Vector& f_interior) const {
  if (f_interior.size() != matrix.rows()) throw Error(ErrorCode::DomainMismatch, "interior function has wrong size");
  return f_interior.dot(matrix * f_interior);
}

Matrix InteriorFormAssembly::pinned() const { return drop_row_col(matrix, local_vertex); }

InteriorFormAssembly assemble_interior_form(const BoundaryGraph& bg, double K, Dimension n, Index x) {
  const auto& g = bg.graph();
  g.check_vertex(x);
  if (bg.is_boundary(x)) throw Error(ErrorCode::NotInteriorVertex, "vertex '" + g.id(x) + "' is on the boundary");
  const auto conditions = check_necessary_conditions(bg, K, n);
  if (!conditions.all()) throw Error(ErrorCode::PreconditionViolated, "conditions (1)-(4) do not hold");
  if (!n.is_infinite() && !(n.value() > 2.0)) {
    throw Error(ErrorCode::PreconditionViolated, "the interior form needs n > 2, got " + n.to_string());
  }

  const auto induced = induced_interior_graph(bg);
  const WeightedGraph& h = induced.graph;
  const Index size = h.size();
  const Index hx = bg.interior_position(x);
  const double m = g.measure(bg.boundary()[0]);
  const auto order = iota_indices(size);

  const Matrix g2 = embed(gamma2_form(h, hx), order).matrix;
  const Vector& mv = h.measures();

  Matrix q;
  if (n.is_infinite()) {
    q = g2 + (K * K / (8.0 * m)) * Matrix(mv.asDiagonal()) - (K * K / (8.0 * m * m)) * mv * mv.transpose();
  } else {
    const double nn = n.value();
    const Matrix lap2 = embed(laplacian_square_form(h, hx), order).matrix;
    const Matrix gam = embed(gamma_form(h, hx), order).matrix;
    Vector row = Vector::Zero(size);  // Δ_Ω f(x) = row·f
    for (Index y : h.neighbors(hx)) {
      row(y) += h.weight(hx, y) / h.measure(hx);
      row(hx) -= h.weight(hx, y) / h.measure(hx);
    }
    const double c_gamma = 3.0 * K / (nn - 1.0);
    const double c_mass = (nn + 2.0) * (nn + 2.0) * K * K / (8.0 * m * (nn - 1.0) * (nn - 1.0));
    const double c_cross = (nn + 2.0) * K / ((nn - 1.0) * (nn - 2.0) * m);
    const double c_total = nn * (nn + 2.0) * (nn + 2.0) * K * K / (8.0 * (nn - 2.0) * (nn - 1.0) * (nn - 1.0) * m * m);
    const Matrix cross = 0.5 * (mv * row.transpose() + row * mv.transpose());
    q = g2 - lap2 / (nn - 2.0) + c_gamma * gam + c_mass * Matrix(mv.asDiagonal()) - c_cross * cross -
        c_total * mv * mv.transpose();
  }
  q.row(hx).setZero();
  q.col(hx).setZero();
  q = 0.5 * (q + q.transpose()).eval();

  return {x, hx, bg.interior(), std::move(q), K, n, m};
}

InteriorInequalityResult check_interior_inequality(const BoundaryGraph& bg, double K, Dimension n) {
  if (!check_necessary_conditions(bg, K, n).all()) {
    throw Error(ErrorCode::PreconditionViolated, "conditions (1)-(4) do not hold");
  }
  InteriorInequalityResult result;
  if (dimension_is_two(n)) {
    result.branch = "n=2";
    result.holds = bg.interior().size() == 1;
    result.explanation = result.holds ? "n = 2 with a single interior vertex"
                                      : "n = 2 requires |interior| = 1, found " + std::to_string(bg.interior().size());
    return result;
  }
  if (!n.is_infinite() && n.value() < 2.0) {
    result.branch = "n<2";
    result.holds = false;
    result.explanation = "for 1 < n < 2 the curvature condition fails at interior vertices under (1)-(4)";
    return result;
  }

  result.branch = "n>2";
  result.holds = true;
  for (Index x : bg.interior()) {
    const auto form = assemble_interior_form(bg, K, n, x);
    InteriorVertexVerdict verdict;
    verdict.vertex = x;
    verdict.witness = Vector::Zero(form.matrix.rows());
    const Matrix a = form.pinned();
    if (a.rows() > 0) {
      Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
      verdict.min_eigenvalue = solver.eigenvalues()(0);
      verdict.tolerance = kPsdTolerance * (1.0 + solver.eigenvalues().cwiseAbs().maxCoeff());
      verdict.holds = verdict.min_eigenvalue >= -verdict.tolerance;
      verdict.witness = insert_zero(solver.eigenvectors().col(0), form.local_vertex);
    }
    result.holds = result.holds && verdict.holds;
    result.vertices.push_back(std::move(verdict));
  }
  result.explanation = result.holds ? "interior form is PSD at every interior vertex"
                                    : "interior form has a negative direction";
  return result;
}

ClassificationResult classify_unit_weight(const BoundaryGraph& bg) {
  const auto& g = bg.graph();
  for (Index x = 0; x < g.size(); ++x) {
    if (g.measure(x) != 1.0) throw Error(ErrorCode::WrongWeightClass, "vertex '" + g.id(x) + "' has m != 1");
  }
  for (const auto& e : g.edges()) {
    if (e.weight != 1.0) {
      throw Error(ErrorCode::WrongWeightClass, "edge ('" + g.id(e.u) + "','" + g.id(e.v) + "') has w != 1");
    }
  }

  ClassificationResult r;
  if (match_shape(bg, kPath3)) {
    r = {Classification::UnitPath3, 0.5, Dimension(2.0), 1.0, "path on three vertices, ends on the boundary"};
  } else if (match_shape(bg, kSquare)) {
    r = {Classification::UnitSquare, 2.0, Dimension::infinite(), 1.0, "square, diagonal pair on the boundary"};
  } else if (match_shape(bg, kSquareDiag)) {
    r = {Classification::UnitSquareDiag, 2.0, Dimension::infinite(), 1.0,
         "square with interior diagonal, diagonal pair on the boundary"};
  } else {
    r.detail = "not one of the three unit-weight equality graphs";
  }
  return r;
}

ClassificationResult classify_partial(const BoundaryGraph& bg, double K, Dimension n) {
  require_positive_k(K);
  if (!interior_edgeless(bg)) throw Error(ErrorCode::WrongHypothesis, "interior induced graph has edges");
  const auto& g = bg.graph();
  ClassificationResult r;
  const double tol = kConditionTolerance;

  if (auto perm = match_shape(bg, kPath3)) {
    const Index b1 = (*perm)[0], x = (*perm)[1], b2 = (*perm)[2];
    const double m = g.measure(b1);
    if (!nearly_equal(m, g.measure(b2), tol)) {
      r.detail = "boundary measures differ";
      return r;
    }
    const double w_expected = m * lichnerowicz_bound(K, n);
    const double mx_expected = n.is_infinite() ? 2.0 * m : 2.0 * n.value() * m / (n.value() + 2.0);
    const bool ok = nearly_equal(g.weight(b1, x), w_expected, tol) && nearly_equal(g.weight(b2, x), w_expected, tol) &&
                    nearly_equal(g.measure(x), mx_expected, tol);
    if (!ok) {
      r.detail = "weights or interior measure differ from the weighted path formulas";
      return r;
    }
    return {Classification::WeightedPath3, K, n, m, "weighted path on three vertices"};
  }

  if (auto perm = match_shape(bg, kSquare)) {
    if (!n.is_infinite()) {
      r.detail = "the four-vertex equality graph needs n = inf";
      return r;
    }
    const double m = g.measure(bg.boundary()[0]);
    bool ok = true;
    for (Index x = 0; x < g.size(); ++x) ok = ok && nearly_equal(g.measure(x), m, tol);
    for (const auto& e : g.edges()) ok = ok && nearly_equal(e.weight, m * K / 2.0, tol);
    if (!ok) {
      r.detail = "measures or weights differ from the weighted square formulas";
      return r;
    }
    return {Classification::WeightedSquare, K, n, m, "weighted square, diagonal pair on the boundary"};
  }

  r.detail = "neither a three-vertex path nor a square with boundary diagonal";
  return r;
}

ClassificationResult classify_normalized(const BoundaryGraph& bg) {
  const auto& g = bg.graph();
  for (Index x = 0; x < g.size(); ++x) {
    const double deg = weighted_degree(g, x);
    if (!nearly_equal(deg, 1.0, kConditionTolerance)) {
      throw Error(ErrorCode::WrongWeightClass, "Deg('" + g.id(x) + "') = " + format_double(deg) + " != 1");
    }
  }
  if (!interior_edgeless(bg)) {
    return {Classification::NotRigid, std::nullopt, std::nullopt, std::nullopt,
            "normalized equality graphs have no interior edges"};
  }
  return classify_partial(bg, 1.0, Dimension::infinite());
}

BallScanResult disjoint_ball_scan(const WeightedGraph& interior) {
  BallScanResult result;
  const Index size = interior.size();
  result.connected = size > 0;
  Index diameter = 0;
  Index best = 4;  // radius-2 balls are disjoint beyond hop distance 4
  for (Index x = 0; x < size; ++x) {
    const auto dist = hop_distances(interior, x);
    for (Index y = 0; y < size; ++y) {
      const Index d = dist[static_cast<std::size_t>(y)];
      if (d < 0) result.connected = false;
      diameter = std::max(diameter, d);
      // unreachable pairs rank first, then the largest distance
      const Index rank = d < 0 ? std::numeric_limits<Index>::max() : d;
      if (y > x && rank > best) {
        best = rank;
        result.disjoint_pair = std::make_pair(x, y);
      }
    }
  }
  if (result.connected) result.diameter = diameter;
  return result;
}

std::vector<TwoBallResidual> two_ball_identity_check(const BoundaryGraph& bg, const Vector& u) {
  const auto& g = bg.graph();
  check_domain(g, u);
  std::vector<TwoBallResidual> out;
  for (Index x = 0; x < g.size(); ++x) {
    const auto dist = hop_distances(g, x);
    for (Index z = x + 1; z < g.size(); ++z) {
      if (dist[static_cast<std::size_t>(z)] != 2) continue;
      double num = 0.0;
      double den = 0.0;
      for (Index y : g.neighbors(x)) {
        if (!g.adjacent(y, z)) continue;
        const double c = g.weight(x, y) * g.weight(y, z) / g.measure(y);
        num += u(y) * c;
        den += c;
      }
      out.push_back({x, z, 0.5 * (u(z) + u(x)) - num / den});
    }
  }
  return out;
}

bool RigidityReport::conditions_hold() const {
  return cond1.holds && cond2.holds && cond3.holds && cond4.holds && cond5.holds;
}

bool RigidityReport::biconditional_ok() const { return !cd_holds || bound_equality == conditions_hold(); }

RigidityReport check_rigidity(const BoundaryGraph& bg, double K, Dimension n) {
  require_positive_k(K);
  const auto& g = bg.graph();
  RigidityReport report;
  report.K = K;
  report.n = n;
  report.bound = lichnerowicz_bound(K, n);
  report.cd_holds = cd_check(g, K, n).holds;

  const Spectrum steklov = steklov_spectrum(bg);
  if (steklov.values.size() >= 2) {
    report.sigma2 = steklov.values(1);
    report.slack = *report.sigma2 - report.bound;
    report.bound_equality = std::abs(report.slack) <= kBoundEqualityTolerance * report.bound;
    const auto diag = steklov_eigenfunction_diagnostics(bg, steklov);
    report.diagnostics["sigma2_extension_interior_norm"] = diag.interior_norm;
    report.diagnostics["sigma2_extension_rayleigh_quotient"] = diag.rayleigh_quotient;
    report.diagnostics["mu2"] = diag.mu2;
    report.diagnostics["mu2_residual"] = diag.mu2_residual;
    double worst = 0.0;
    for (const auto& r : two_ball_identity_check(bg, diag.extension)) worst = std::max(worst, std::abs(r.residual));
    report.diagnostics["two_ball_max_residual"] = worst;
  } else {
    report.notes.push_back("sigma_2 undefined for a single boundary vertex");
  }

  const auto necessary = check_necessary_conditions(bg, K, n);
  report.cond1 = necessary.cond1;
  report.cond2 = necessary.cond2;
  report.cond3 = necessary.cond3;
  report.cond4 = necessary.cond4;
  if (necessary.all()) {
    const auto interior = check_interior_inequality(bg, K, n);
    report.cond5.evaluated = true;
    report.cond5.holds = interior.holds;
    if (!interior.holds) {
      report.cond5.witness = interior.explanation;
      for (const auto& v : interior.vertices) {
        if (!v.holds) {
          report.cond5.witness += " at '" + g.id(v.vertex) + "' (min eigenvalue " + format_double(v.min_eigenvalue) + ")";
          break;
        }
      }
    }
  } else {
    report.cond5.witness = "not evaluated: conditions (1)-(4) fail";
  }

  const auto induced = induced_interior_graph(bg);
  const auto scan = disjoint_ball_scan(induced.graph);
  report.diagnostics["interior_connected"] = scan.connected ? 1.0 : 0.0;
  report.diagnostics["interior_diameter"] = scan.diameter ? static_cast<double>(*scan.diameter) : -1.0;
  report.diagnostics["interior_disjoint_ball_pair"] = scan.disjoint_pair ? 1.0 : 0.0;

  if (report.rigid()) {
    bool unit = (g.measures().array() == 1.0).all();
    for (const auto& e : g.edges()) unit = unit && e.weight == 1.0;
    ClassificationResult c;
    if (unit) c = classify_unit_weight(bg);
    if (c.label == Classification::NotRigid && interior_edgeless(bg)) c = classify_partial(bg, K, n);
    report.classification = c.label == Classification::NotRigid ? Classification::GeneralEquality : c.label;
  }
  if (!report.biconditional_ok()) {
    report.notes.push_back("equality and conditions (1)-(5) disagree although CD(K,n) holds");
  }
  return report;
}

RigidFamily construct_rigid_family(const WeightedGraph& interior, Dimension n, double K, double m,
                                   std::optional<double> lambda, double lambda_max) {
  require_positive_k(K);
  if (!n.is_infinite() && !(n.value() > 2.0)) {
    throw Error(ErrorCode::InvalidParams, "construction needs n > 2, got " + n.to_string());
  }
  for (Index x = 0; x < interior.size(); ++x) {
    for (Index y = x + 1; y < interior.size(); ++y) {
      if (!interior.adjacent(x, y)) {
        throw Error(ErrorCode::InteriorNotComplete, "'" + interior.id(x) + "' and '" + interior.id(y) + "' are not adjacent");
      }
    }
  }

  double interior_curvature = std::numeric_limits<double>::infinity();
  if (interior.size() >= 2) {
    const double inverse = n.is_infinite() ? 0.0 : 1.0 / (n.value() - 2.0);
    for (Index x = 0; x < interior.size(); ++x) {
      interior_curvature = std::min(interior_curvature, curvature_at_inverse_dimension(interior, x, inverse).kappa);
    }
    if (!(interior_curvature > 0.0)) {
      throw Error(ErrorCode::InteriorCurvatureNotPositive,
                  "interior curvature at dimension n-2 is " + format_double(interior_curvature));
    }
  }

  auto build = [&](double l) { return attach_two_point_boundary(interior, n, K, m, l); };
  if (lambda) {
    if (!std::isfinite(*lambda) || !(*lambda > 0.0)) throw Error(ErrorCode::InvalidParams, "lambda must be positive");
    return {build(*lambda), *lambda, *lambda, interior_curvature};
  }

  auto feasible = [&](double l) { return check_interior_inequality(build(l), K, n).holds; };
  double hi = 1.0;
  if (!feasible(hi)) {
    double lo = 1.0;
    hi = 2.0;
    while (!feasible(hi)) {
      lo = hi;
      hi *= 2.0;
      if (hi > lambda_max) {
        throw Error(ErrorCode::FeasibilitySearchFailed, "no lambda up to " + format_double(lambda_max) + " passes");
      }
    }
    while (hi / lo > 1.0 + 1e-6) {
      const double mid = std::sqrt(lo * hi);
      (feasible(mid) ? hi : lo) = mid;
    }
  }
  return {build(2.0 * hi), 2.0 * hi, hi, interior_curvature};
}

}  // namespace bestek
