#pragma once

#include "bestek/graph.hpp"
#include "bestek/operators.hpp"

#include <optional>
#include <span>
#include <vector>

namespace bestek {

/// PSD verdicts accept λ_min ≥ -kPsdTolerance·(1 + ‖A‖).
inline constexpr double kPsdTolerance = 1e-9;
/// Eigenvalues below this fraction of the largest magnitude are dropped by the
/// pseudo-inverse of the distance-2 block.
inline constexpr double kPseudoInverseCutoff = 1e-12;

/// Form A_x = Q(Γ₂) - (1/n)Q(Δ²) - K·Q(Γ) over B₂(x), with the vertex order of
/// gamma2_form. `inverse_dimension` is 1/n (0 for n = ∞).
QuadraticForm cd_form(const WeightedGraph& g, Index x, double K, double inverse_dimension);

struct CdVertexVerdict {
  Index vertex = 0;
  bool holds = true;
  double min_eigenvalue = 0.0;  // raw λ_min of A_x with f(x) = 0 pinned
  double tolerance = 0.0;
  Vector witness;               // on V; fᵀA_xf < 0 when !holds
};

struct CdCheckResult {
  bool holds = true;
  std::vector<CdVertexVerdict> vertices;

  /// First failing vertex, if any.
  const CdVertexVerdict* violation() const;
};

/// CD(K,n) at x, or at every vertex when x is omitted.
/// Throws UnknownVertex.
CdCheckResult cd_check(const WeightedGraph& g, double K, Dimension n, std::optional<Index> x = std::nullopt);

struct CurvatureResult {
  Index vertex = 0;
  Dimension n = Dimension::infinite();
  double kappa = 0.0;
  /// On V, f(x) = 0, supported in B₂(x), Γ(f,f)(x) = 1, quotient = kappa.
  Vector witness;
  bool kernel_ok = true;
  double kernel_min_eigenvalue = 0.0;
};

/// Largest K with CD(K,n) at x, via the Schur complement of A over the
/// distance-2 block. Throws UnknownVertex, IsolatedVertex.
CurvatureResult curvature_at(const WeightedGraph& g, Index x, Dimension n);

/// Same computation for any 1/n ≥ 0, including dimensions n ≤ 1 that the
/// public CD API rejects. Used for interior checks at dimension n - 2.
CurvatureResult curvature_at_inverse_dimension(const WeightedGraph& g, Index x, double inverse_dimension);

struct CurvatureProfile {
  std::vector<Dimension> dimensions;
  Matrix kappa;                    // vertex × dimension
  std::vector<double> global_min;  // best K with CD(K,n) on all of G, per dimension
};

CurvatureProfile curvature_profile(const WeightedGraph& g, std::span<const Dimension> dimensions);

enum class SpectralSubject { ClosedGraph, BoundaryGraph };

struct LichnerowiczReport {
  SpectralSubject subject;
  double K = 0.0;
  Dimension n = Dimension::infinite();
  bool cd_holds = false;
  double bound = 0.0;           // nK/(n-1), K for n = ∞
  double spectral_value = 0.0;  // μ₂ or σ₂
  double slack = 0.0;           // spectral_value - bound
  bool bound_holds = false;     // slack ≥ -1e-8·bound
  bool equality = false;        // |slack| ≤ 1e-8·bound
};

/// μ₂ ≥ nK/(n-1) under CD(K,n). Throws InvalidParams unless K > 0.
LichnerowiczReport verify_lichnerowicz(const WeightedGraph& g, double K, Dimension n);
/// σ₂ ≥ nK/(n-1) under CD(K,n). Throws InvalidParams unless K > 0 and |B| ≥ 2.
LichnerowiczReport verify_lichnerowicz(const BoundaryGraph& bg, double K, Dimension n);

}  // namespace bestek
