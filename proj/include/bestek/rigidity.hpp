#pragma once

#include "bestek/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bestek {

/// σ₂ = nK/(n-1) is accepted within this relative tolerance.
inline constexpr double kBoundEqualityTolerance = 1e-8;
/// Relative tolerance of the structural conditions (1)-(4).
inline constexpr double kConditionTolerance = 1e-9;
/// Default ceiling of the λ search in construct_rigid_family.
inline constexpr double kDefaultLambdaMax = 1e8;

enum class Classification {
  UnitPath3,
  UnitSquare,
  UnitSquareDiag,
  WeightedPath3,
  WeightedSquare,
  GeneralEquality,
  NotRigid,
};

std::string_view to_string(Classification c);

struct ConditionVerdict {
  bool evaluated = false;
  bool holds = false;
  std::string witness;  // first offending element, empty when the condition holds
};

/// Conditions (1)-(4) of the equality characterization:
///   (1) |B| = 2 and every interior vertex is adjacent to both boundary vertices;
///   (2) m_1 = m_2 and w_1x = w_2x for every interior x;
///   (3) Deg(b) = nK/(n-1) at both boundary vertices;
///   (4) Deg_b(x) = (n+2)K/(n-1) at every interior vertex.
struct NecessaryConditions {
  ConditionVerdict cond1;
  ConditionVerdict cond2;
  ConditionVerdict cond3;
  ConditionVerdict cond4;

  bool all() const { return cond1.holds && cond2.holds && cond3.holds && cond4.holds; }
};

/// Throws InvalidParams unless K > 0.
NecessaryConditions check_necessary_conditions(const BoundaryGraph& bg, double K, Dimension n);

/// Quadratic form in f ∈ ℝ^Ω (interior order) whose value is the left-hand side
/// of the interior inequality at `vertex`, built from the Γ₂, Γ and Δ of the
/// induced interior graph. Row and column of `vertex` are zero (f(vertex) = 0).
struct InteriorFormAssembly {
  Index vertex = 0;           // parent-graph index
  Index local_vertex = 0;     // position in interior order
  std::vector<Index> interior;
  Matrix matrix;
  double K = 0.0;
  Dimension n = Dimension::infinite();
  double m = 0.0;             // common boundary measure

  double evaluate(const Vector& f_interior) const;
  /// Matrix with the pinned row/column removed.
  Matrix pinned() const;
};

/// Requires conditions (1)-(4) and n > 2 (or ∞); throws PreconditionViolated
/// otherwise, NotInteriorVertex when x ∈ B.
InteriorFormAssembly assemble_interior_form(const BoundaryGraph& bg, double K, Dimension n, Index x);

struct InteriorVertexVerdict {
  Index vertex = 0;
  bool holds = true;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
  Vector witness;  // on Ω, f(vertex) = 0
};

struct InteriorInequalityResult {
  bool holds = false;
  std::string branch;  // "n=2", "n<2", "n>2"
  std::string explanation;
  std::vector<InteriorVertexVerdict> vertices;
};

/// Condition (5). Throws PreconditionViolated unless (1)-(4) hold.
InteriorInequalityResult check_interior_inequality(const BoundaryGraph& bg, double K, Dimension n);

struct ClassificationResult {
  Classification label = Classification::NotRigid;
  std::optional<double> K;
  std::optional<Dimension> n;
  std::optional<double> m;
  std::string detail;
};

/// Unit weight only (throws WrongWeightClass otherwise). Matches P₃ with its
/// ends on the boundary, the square and the square with one diagonal, both
/// with a diagonal pair on the boundary.
ClassificationResult classify_unit_weight(const BoundaryGraph& bg);

/// Requires E(Ω,Ω) = ∅ (throws WrongHypothesis). Matches weighted_path3(n,K,m)
/// or weighted_square(K,m) with m read from the boundary measures.
ClassificationResult classify_partial(const BoundaryGraph& bg, double K, Dimension n);

/// Requires Deg ≡ 1 (throws WrongWeightClass); the only admissible parameters
/// are n = ∞, K = 1.
ClassificationResult classify_normalized(const BoundaryGraph& bg);

struct BallScanResult {
  std::optional<std::pair<Index, Index>> disjoint_pair;  // vertices of the scanned graph
  bool connected = false;
  std::optional<Index> diameter;  // empty when disconnected
};

/// Looks for x, y whose radius-2 balls are disjoint (hop distance > 4 or
/// unreachable), preferring unreachable pairs, then the farthest pair.
BallScanResult disjoint_ball_scan(const WeightedGraph& interior);

struct TwoBallResidual {
  Index x = 0;
  Index z = 0;
  double residual = 0.0;
};

/// For every pair at hop distance 2:
///   (u(z)+u(x))/2 - Σ_y u(y) w_xy w_yz/m_y / Σ_y w_xy w_yz/m_y.
std::vector<TwoBallResidual> two_ball_identity_check(const BoundaryGraph& bg, const Vector& u);

struct RigidityReport {
  double K = 0.0;
  Dimension n = Dimension::infinite();
  bool cd_holds = false;
  std::optional<double> sigma2;
  double bound = 0.0;
  double slack = 0.0;
  bool bound_equality = false;
  ConditionVerdict cond1;
  ConditionVerdict cond2;
  ConditionVerdict cond3;
  ConditionVerdict cond4;
  ConditionVerdict cond5;
  Classification classification = Classification::NotRigid;
  std::map<std::string, double> diagnostics;
  std::vector<std::string> notes;

  bool conditions_hold() const;
  /// Under CD(K,n): bound_equality ⇔ conditions (1)-(5).
  bool biconditional_ok() const;
  bool rigid() const { return cd_holds && bound_equality; }
};

/// Full equality analysis. Throws InvalidParams unless K > 0.
RigidityReport check_rigidity(const BoundaryGraph& bg, double K, Dimension n);

struct RigidFamily {
  BoundaryGraph graph;
  double lambda;            // interior weight factor used in `graph`
  double threshold;         // least passing λ found by the search (== lambda when given)
  double interior_curvature;  // K_Ω at dimension n - 2 before scaling
};

/// Attaches B = {b1, b2} to a complete interior and scales its weights by λ.
/// Without λ, searches the least λ ≥ 1 (to a factor 1 + 1e-6) passing the
/// interior inequality and returns the graph at twice that value.
/// Errors: InteriorNotComplete, InteriorCurvatureNotPositive, FeasibilitySearchFailed.
RigidFamily construct_rigid_family(const WeightedGraph& interior, Dimension n, double K, double m,
                                   std::optional<double> lambda = std::nullopt,
                                   double lambda_max = kDefaultLambdaMax);

}  // namespace bestek
