#include "bestek/examples.hpp"

#include "bestek/error.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace bestek {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidFamilyParams, message);
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

BoundaryGraph unit_graph(int vertices, std::vector<EdgeSpec> edges, std::vector<std::string> boundary) {
  std::vector<VertexSpec> vs;
  for (int i = 1; i <= vertices; ++i) vs.push_back({std::to_string(i), 1.0});
  return attach_boundary(build_graph(vs, edges), boundary);
}

// m_x for an interior of k equal-measure vertices: V_Ω/k with V_Ω = 2mn/(n+2).
double interior_volume(Dimension n, double m) {
  return n.is_infinite() ? 2.0 * m : 2.0 * m * n.value() / (n.value() + 2.0);
}

// w_x / m_x = Deg_b / 2.
double half_boundary_degree(Dimension n, double K) {
  return n.is_infinite() ? K / 2.0 : (n.value() + 2.0) * K / (2.0 * (n.value() - 1.0));
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::UnitPath3: return "unit_path3";
    case Family::UnitSquare: return "unit_square";
    case Family::UnitSquareDiag: return "unit_square_diag";
    case Family::WeightedPath3: return "weighted_path3";
    case Family::WeightedSquare: return "weighted_square";
    case Family::CompleteInterior: return "complete_interior";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::UnitPath3, Family::UnitSquare, Family::UnitSquareDiag, Family::WeightedPath3,
                   Family::WeightedSquare, Family::CompleteInterior}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::InvalidFamilyParams, "unknown family '" + std::string(name) + "'");
}

BoundaryGraph make_example(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::UnitPath3:
      return unit_graph(3, {{"1", "2", 1.0}, {"2", "3", 1.0}}, {"1", "3"});
    case Family::UnitSquare:
      return unit_graph(4, {{"1", "2", 1.0}, {"2", "3", 1.0}, {"3", "4", 1.0}, {"4", "1", 1.0}}, {"1", "3"});
    case Family::UnitSquareDiag:
      return unit_graph(4, {{"1", "2", 1.0}, {"2", "3", 1.0}, {"3", "4", 1.0}, {"4", "1", 1.0}, {"2", "4", 1.0}},
                        {"1", "3"});
    case Family::WeightedPath3: {
      require(params.n.has_value(), "weighted_path3 needs a dimension n");
      require(positive_finite(params.K), "weighted_path3 needs K > 0");
      require(positive_finite(params.m), "weighted_path3 needs m > 0");
      const Dimension n = *params.n;
      const double mx = interior_volume(n, params.m);
      const double w = mx * half_boundary_degree(n, params.K);
      std::vector<VertexSpec> vs{{"1", params.m}, {"2", mx}, {"3", params.m}};
      std::vector<EdgeSpec> es{{"1", "2", w}, {"2", "3", w}};
      return attach_boundary(build_graph(vs, es), std::vector<std::string>{"1", "3"});
    }
    case Family::WeightedSquare: {
      require(!params.n || params.n->is_infinite(), "weighted_square exists only for n = inf");
      require(positive_finite(params.K), "weighted_square needs K > 0");
      require(positive_finite(params.m), "weighted_square needs m > 0");
      const double m = params.m;
      const double w = m * params.K / 2.0;
      std::vector<VertexSpec> vs{{"1", m}, {"2", m}, {"3", m}, {"4", m}};
      std::vector<EdgeSpec> es{{"1", "2", w}, {"2", "3", w}, {"3", "4", w}, {"4", "1", w}};
      return attach_boundary(build_graph(vs, es), std::vector<std::string>{"1", "3"});
    }
    case Family::CompleteInterior: {
      require(params.n.has_value(), "complete_interior needs a dimension n");
      require(params.interior_size >= 1, "complete_interior needs interior_size >= 1");
      require(positive_finite(params.lambda), "complete_interior needs lambda > 0");
      std::vector<VertexSpec> vs;
      std::vector<EdgeSpec> es;
      for (int i = 0; i < params.interior_size; ++i) {
        vs.push_back({"x" + std::to_string(i + 1), 1.0});
        for (int j = 0; j < i; ++j) es.push_back({"x" + std::to_string(j + 1), "x" + std::to_string(i + 1), 1.0});
      }
      return attach_two_point_boundary(build_graph(vs, es), *params.n, params.K, params.m, params.lambda);
    }
  }
  throw Error(ErrorCode::InvalidFamilyParams, "unknown family");
}

BoundaryGraph attach_two_point_boundary(const WeightedGraph& interior, Dimension n, double K, double m,
                                        double lambda) {
  require(positive_finite(K), "K must be positive");
  require(positive_finite(m), "m must be positive");
  require(positive_finite(lambda), "lambda must be positive");
  require(interior.size() >= 1, "interior must be non-empty");

  const double scale = interior_volume(n, m) / interior.measures().sum();
  const double ratio = half_boundary_degree(n, K);

  std::vector<VertexSpec> vs{{"b1", m}, {"b2", m}};
  std::vector<EdgeSpec> es;
  for (Index x = 0; x < interior.size(); ++x) {
    require(interior.id(x) != "b1" && interior.id(x) != "b2", "interior ids must not collide with b1/b2");
    const double mx = interior.measure(x) * scale;
    vs.push_back({interior.id(x), mx});
    es.push_back({"b1", interior.id(x), mx * ratio});
    es.push_back({"b2", interior.id(x), mx * ratio});
  }
  for (const auto& e : interior.edges()) es.push_back({interior.id(e.u), interior.id(e.v), lambda * e.weight});
  return attach_boundary(build_graph(vs, es), std::vector<std::string>{"b1", "b2"});
}

}  // namespace bestek
