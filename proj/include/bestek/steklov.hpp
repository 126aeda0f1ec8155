#pragma once

#include "bestek/graph.hpp"

#include <utility>
#include <vector>

namespace bestek {

enum class SpectrumKind { Laplacian, Steklov };

/// Ascending eigenvalues with matching eigenfunctions stored as columns.
/// Laplacian eigenfunctions live on V and are orthonormal in ⟨·,·⟩; Steklov
/// eigenfunctions live on B (boundary order) and are orthonormal in ⟨·,·⟩_B.
/// Each column's first clearly non-zero entry is positive.
struct Spectrum {
  SpectrumKind kind;
  Vector values;
  Matrix functions;

  /// Distinct values with multiplicities, grouping within 1e-8·(1+|value|).
  std::vector<std::pair<double, int>> multiplicities() const;
};

/// L = D - W: L_xx = Σ_y w_xy, L_xy = -w_xy. Δ = -M⁻¹L.
Matrix symmetric_laplacian(const WeightedGraph& g);

/// Harmonic extension of f (indexed by boundary position) into Ω.
/// Throws DomainMismatch, SingularInteriorSystem.
Vector harmonic_extension(const BoundaryGraph& bg, const Vector& f);

/// ∂u/∂n = -Δu on B, indexed by boundary position.
Vector normal_derivative(const BoundaryGraph& bg, const Vector& u);

/// Dirichlet-to-Neumann map as the symmetric pair (S, M_B): Λ = M_B⁻¹ S with
/// S = L_BB - L_BΩ L_ΩΩ⁻¹ L_ΩB.
struct DtNOperator {
  std::vector<Index> boundary_order;
  Matrix schur_matrix;
  Vector measures;

  Vector apply(const Vector& f) const;
  /// The matrix of Λ itself, M_B⁻¹ S.
  Matrix matrix() const;
};

DtNOperator dtn_operator(const BoundaryGraph& bg);

/// Steklov eigenvalues σ₁ = 0 ≤ σ₂ ≤ ... from S f = σ M_B f.
Spectrum steklov_spectrum(const BoundaryGraph& bg);
Spectrum steklov_spectrum(const DtNOperator& dtn);

/// Laplacian eigenvalues μ₁ = 0 ≤ μ₂ ≤ ... from L u = μ M u.
Spectrum laplacian_spectrum(const WeightedGraph& g);

/// Second Steklov eigenvalue; throws InvalidParams when |B| < 2.
double sigma2(const Spectrum& steklov);

/// Checks on the harmonic extension u of the σ₂ eigenfunction: how far it is
/// from vanishing on Ω and from being a μ₂ eigenfunction of -Δ.
struct SteklovDiagnostics {
  Vector extension;
  double interior_norm = 0.0;      // sqrt(⟨u,u⟩_Ω)
  double rayleigh_quotient = 0.0;  // ⟨du,du⟩ / ⟨u,u⟩
  double mu2 = 0.0;
  double mu2_residual = 0.0;       // ‖Lu - μ₂ M u‖
};

SteklovDiagnostics steklov_eigenfunction_diagnostics(const BoundaryGraph& bg, const Spectrum& steklov);

}  // namespace bestek
