#pragma once

#include "bestek/graph.hpp"

#include <optional>
#include <string_view>

namespace bestek {

enum class Family {
  UnitPath3,
  UnitSquare,
  UnitSquareDiag,
  WeightedPath3,
  WeightedSquare,
  CompleteInterior,
};

std::string_view to_string(Family family);
/// Accepts the snake_case names (unit_path3, weighted_square, ...).
Family parse_family(std::string_view name);

struct FamilyParams {
  std::optional<Dimension> n;
  double K = 1.0;
  double m = 1.0;
  int interior_size = 1;
  double lambda = 1.0;
};

/// Builds the named example family. The unit families ignore params;
/// weighted_path3 needs n, weighted_square takes n = ∞ (or none),
/// complete_interior needs n and uses interior_size and lambda.
/// Throws InvalidFamilyParams.
BoundaryGraph make_example(Family family, const FamilyParams& params = {});

/// Joins two new boundary vertices "b1", "b2" (measure m) to every vertex of
/// `interior`, rescaling the interior measures so that V_Ω = 2mn/(n+2) and
/// choosing boundary weights w_x = m_x (n+2)K / (2(n-1)) (m_x K/2 for n = ∞).
/// Interior edge weights are multiplied by lambda. The result satisfies
/// |B| = 2, m_1 = m_2, w_1x = w_2x, Deg(b) = nK/(n-1), Deg_b(x) = (n+2)K/(n-1).
BoundaryGraph attach_two_point_boundary(const WeightedGraph& interior, Dimension n, double K, double m,
                                        double lambda = 1.0);

}  // namespace bestek
