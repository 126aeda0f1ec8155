#pragma once

#include "bestek/graph.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace bestek::testing {

inline std::string vid(int i) { return std::to_string(i); }

/// Unit-weight graph on vertices "1".."count" from 1-based edge pairs.
inline WeightedGraph unit_graph(int count, const std::vector<std::pair<int, int>>& edges) {
  std::vector<VertexSpec> vs;
  for (int i = 1; i <= count; ++i) vs.push_back({vid(i), 1.0});
  std::vector<EdgeSpec> es;
  for (auto [a, b] : edges) es.push_back({vid(a), vid(b), 1.0});
  return build_graph(vs, es);
}

inline BoundaryGraph unit_boundary_graph(int count, const std::vector<std::pair<int, int>>& edges,
                                         const std::vector<int>& boundary) {
  std::vector<std::string> ids;
  for (int b : boundary) ids.push_back(vid(b));
  return attach_boundary(unit_graph(count, edges), ids);
}

inline WeightedGraph complete_graph(int count, double measure = 1.0, double weight = 1.0) {
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  for (int i = 1; i <= count; ++i) vs.push_back({"x" + vid(i), measure});
  for (int i = 1; i <= count; ++i) {
    for (int j = i + 1; j <= count; ++j) es.push_back({"x" + vid(i), "x" + vid(j), weight});
  }
  return build_graph(vs, es);
}

/// Connected graph: random spanning tree plus extra edges with probability p;
/// measures and weights uniform in [lo, hi].
inline WeightedGraph random_graph(std::mt19937_64& rng, int count, double p, double lo = 0.5, double hi = 2.0) {
  std::uniform_real_distribution<double> value(lo, hi);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<VertexSpec> vs;
  for (int i = 0; i < count; ++i) vs.push_back({vid(i + 1), value(rng)});
  std::vector<std::vector<bool>> used(static_cast<std::size_t>(count), std::vector<bool>(static_cast<std::size_t>(count)));
  std::vector<EdgeSpec> es;
  auto add = [&](int a, int b) {
    if (a == b || used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) return;
    used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = used[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
    es.push_back({vid(a + 1), vid(b + 1), value(rng)});
  };
  for (int i = 1; i < count; ++i) add(i, std::uniform_int_distribution<int>(0, i - 1)(rng));
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if (coin(rng) < p) add(i, j);
    }
  }
  return build_graph(vs, es);
}

/// Random admissible boundary: a random independent set in which every
/// vertex has a neighbor outside the set, interior non-empty.
inline BoundaryGraph random_boundary_graph(std::mt19937_64& rng, const WeightedGraph& g, int max_boundary) {
  for (;;) {
    std::vector<Index> order(static_cast<std::size_t>(g.size()));
    for (Index i = 0; i < g.size(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const int target = std::uniform_int_distribution<int>(1, max_boundary)(rng);
    std::vector<Index> boundary;
    for (Index x : order) {
      if (static_cast<int>(boundary.size()) >= target) break;
      bool independent = true;
      for (Index b : boundary) independent = independent && !g.adjacent(x, b);
      if (independent) boundary.push_back(x);
    }
    try {
      return attach_boundary(g, boundary);
    } catch (const std::exception&) {
    }
  }
}

inline Eigen::VectorXd random_vector(std::mt19937_64& rng, Index size) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Eigen::VectorXd v(size);
  for (Index i = 0; i < size; ++i) v(i) = unif(rng);
  return v;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) / scale;
}

}  // namespace bestek::testing
