// Acceptance run. Usage: acceptance [criterion...]; with no argument every
// criterion runs. Prints one PASS/FAIL line per criterion and exits non-zero
// when any of them fails.

#include "bestek/curvature.hpp"
#include "bestek/error.hpp"
#include "bestek/examples.hpp"
#include "bestek/operators.hpp"
#include "bestek/rigidity.hpp"
#include "bestek/steklov.hpp"

#include "oracles.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace bestek;
using namespace bestek::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 8) failures.push_back(what);
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const std::vector<Dimension>& profile_grid() {
  static const std::vector<Dimension> grid{Dimension(2), Dimension(3), Dimension(5), Dimension(10),
                                           Dimension::infinite()};
  return grid;
}

BoundaryGraph weighted_path3(Dimension n, double K, double m) {
  FamilyParams p;
  p.n = n;
  p.K = K;
  p.m = m;
  return make_example(Family::WeightedPath3, p);
}

BoundaryGraph weighted_square(double K, double m) {
  FamilyParams p;
  p.K = K;
  p.m = m;
  return make_example(Family::WeightedSquare, p);
}

double max_abs_diff(const Vector& a, const std::vector<double>& b) {
  if (a.size() != static_cast<Index>(b.size())) return INFINITY;
  double worst = 0.0;
  for (Index i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a(i) - b[static_cast<std::size_t>(i)]));
  return worst;
}

// An equality graph together with the parameters at which equality holds.
struct EqualityGraph {
  std::string name;
  BoundaryGraph graph;
  double K;
  Dimension n;
  bool square_family;
};

// ---------------------------------------------------------------- criterion 1

Verdict criterion1() {
  Verdict v;
  auto p3 = make_example(Family::UnitPath3);
  const double ds = max_abs_diff(steklov_spectrum(p3).values, {0, 1});
  const double dl = max_abs_diff(laplacian_spectrum(p3.graph()).values, {0, 1, 3});
  v.require(ds <= 1e-10, "steklov spectrum off by " + fmt(ds));
  v.require(dl <= 1e-10, "laplacian spectrum off by " + fmt(dl));
  auto lich = verify_lichnerowicz(p3, 0.5, Dimension(2));
  v.require(lich.cd_holds, "CD(1/2,2) fails");
  v.require(lich.equality, "no equality");
  v.require(std::abs(lich.bound - 1.0) <= 1e-15, "bound " + fmt(lich.bound));
  v.detail = "sigma err " + fmt(ds) + ", mu err " + fmt(dl) + ", bound " + fmt(lich.bound);
  return v;
}

// ---------------------------------------------------------------- criterion 2

Verdict criterion2() {
  Verdict v;
  double worst_sigma = 0.0;
  double worst_kappa = 0.0;
  for (Family f : {Family::UnitSquare, Family::UnitSquareDiag}) {
    auto bg = make_example(f);
    const std::string name(to_string(f));
    const double ds = max_abs_diff(steklov_spectrum(bg).values, {0, 2});
    worst_sigma = std::max(worst_sigma, ds);
    v.require(ds <= 1e-10, name + " steklov spectrum off by " + fmt(ds));
    for (Index x = 0; x < bg.graph().size(); ++x) {
      const double k = curvature_at(bg.graph(), x, Dimension::infinite()).kappa;
      worst_kappa = std::max(worst_kappa, std::abs(k - 2.0));
      v.require(std::abs(k - 2.0) <= 1e-8, name + " kappa(" + bg.graph().id(x) + ") = " + fmt(k));
    }
    auto lich = verify_lichnerowicz(bg, 2.0, Dimension::infinite());
    v.require(lich.cd_holds && lich.equality, name + " no equality at K=2, n=inf");
  }
  v.detail = "sigma err " + fmt(worst_sigma) + ", kappa err " + fmt(worst_kappa);
  return v;
}

// ---------------------------------------------------------------- criterion 3

using EdgeMask = unsigned;

std::vector<std::pair<int, int>> pair_list(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) pairs.push_back({i, j});
  }
  return pairs;
}

bool mask_connected(int k, EdgeMask mask, const std::vector<std::pair<int, int>>& pairs) {
  unsigned reached = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (!(mask >> e & 1u)) continue;
      const unsigned a = 1u << pairs[e].first;
      const unsigned b = 1u << pairs[e].second;
      if (((reached & a) != 0) != ((reached & b) != 0)) {
        reached |= a | b;
        grew = true;
      }
    }
  }
  return reached == (1u << k) - 1;
}

// Connected simple graphs on k vertices, one per isomorphism class.
std::vector<EdgeMask> connected_graphs(int k) {
  const auto pairs = pair_list(k);
  std::vector<int> index(static_cast<std::size_t>(k * k), -1);
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    index[static_cast<std::size_t>(pairs[e].first * k + pairs[e].second)] = static_cast<int>(e);
    index[static_cast<std::size_t>(pairs[e].second * k + pairs[e].first)] = static_cast<int>(e);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<EdgeMask> seen;
  for (EdgeMask mask = 0; mask < (1u << pairs.size()); ++mask) {
    if (!mask_connected(k, mask, pairs)) continue;
    EdgeMask best = mask;
    for (const auto& perm : perms) {
      EdgeMask image = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mask >> e & 1u) {
          const auto a = perm[static_cast<std::size_t>(pairs[e].first)];
          const auto b = perm[static_cast<std::size_t>(pairs[e].second)];
          image |= 1u << index[static_cast<std::size_t>(a * k + b)];
        }
      }
      best = std::min(best, image);
    }
    seen.insert(best);
  }
  return {seen.begin(), seen.end()};
}

WeightedGraph unit_from_mask(int k, EdgeMask mask) {
  const auto pairs = pair_list(k);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if (mask >> e & 1u) edges.push_back({pairs[e].first + 1, pairs[e].second + 1});
  }
  return unit_graph(k, edges);
}

struct UnitSweep {
  int graphs = 0;
  int placements = 0;
  int evaluations = 0;
  std::vector<EqualityGraph> equality;
  std::vector<std::string> failures;
};

const UnitSweep& unit_sweep() {
  static const UnitSweep sweep = [] {
    UnitSweep s;
    for (int k = 1; k <= 6; ++k) {
      for (EdgeMask mask : connected_graphs(k)) {
        ++s.graphs;
        if (k == 1) continue;  // no admissible boundary
        const auto g = unit_from_mask(k, mask);
        const auto profile = curvature_profile(g, profile_grid());
        for (unsigned bmask = 1; bmask + 1 < (1u << k); ++bmask) {
          std::vector<Index> boundary;
          for (int i = 0; i < k; ++i) {
            if (bmask >> i & 1u) boundary.push_back(i);
          }
          std::optional<BoundaryGraph> bg;
          try {
            bg.emplace(attach_boundary(g, boundary));
          } catch (const Error&) {
            continue;
          }
          ++s.placements;
          std::ostringstream name;
          name << "k=" << k << " edges=" << mask << " B=" << bmask;
          const auto cls = classify_unit_weight(*bg);
          bool equality = false;
          for (std::size_t j = 0; j < profile_grid().size(); ++j) {
            const double K = profile.global_min[j];
            const Dimension n = profile_grid()[j];
            if (!(K > 0) || bg->boundary().size() < 2) continue;
            ++s.evaluations;
            const auto r = check_rigidity(*bg, K, n);
            if (r.cd_holds && !r.biconditional_ok()) s.failures.push_back(name.str() + ": biconditional broken");
            if (!r.bound_equality) continue;
            equality = true;
            s.equality.push_back({name.str(), *bg, K, n, cls.label == Classification::UnitSquare});
            if (cls.label == Classification::NotRigid) {
              s.failures.push_back(name.str() + ": equality at n=" + n.to_string() + " on an unlisted graph");
            } else if (std::abs(K - *cls.K) > 1e-8 * *cls.K || !(n == *cls.n)) {
              s.failures.push_back(name.str() + ": equality at unexpected (K,n)");
            }
          }
          if (cls.label != Classification::NotRigid && !equality) {
            s.failures.push_back(name.str() + ": listed graph without equality");
          }
        }
      }
    }
    return s;
  }();
  return sweep;
}

Verdict criterion3() {
  Verdict v;
  const auto& s = unit_sweep();
  for (const auto& f : s.failures) v.require(false, f);
  std::set<Classification> labels;
  for (const auto& e : s.equality) labels.insert(classify_unit_weight(e.graph).label);
  v.require(labels == std::set<Classification>{Classification::UnitPath3, Classification::UnitSquare,
                                               Classification::UnitSquareDiag},
            "equality families seen: " + std::to_string(labels.size()));
  v.require(s.graphs == 143, "expected 143 connected graphs, enumerated " + std::to_string(s.graphs));
  v.detail = std::to_string(s.graphs) + " graphs, " + std::to_string(s.placements) + " placements, " +
             std::to_string(s.evaluations) + " (K,n) checks, " + std::to_string(s.equality.size()) +
             " equality cases in " + std::to_string(labels.size()) + " families";
  return v;
}

// ---------------------------------------------------------------- criterion 4

bool passes(const BoundaryGraph& bg, double K, Dimension n, Classification expected) {
  const auto r = check_rigidity(bg, K, n);
  return r.rigid() && r.conditions_hold() && r.classification == expected;
}

bool rigid_at(const BoundaryGraph& bg, double K, Dimension n) {
  const auto r = check_rigidity(bg, K, n);
  return r.rigid();
}

BoundaryGraph rebuilt(const BoundaryGraph& bg, std::optional<std::size_t> vertex, std::optional<std::size_t> edge,
                      double factor) {
  auto vs = vertex_specs(bg.graph());
  auto es = edge_specs(bg.graph());
  if (vertex) vs[*vertex].measure *= factor;
  if (edge) es[*edge].weight *= factor;
  return attach_boundary(build_graph(vs, es), bg.boundary());
}

// Every vertex measure, every edge weight, K, and a finite n moved by ±1%.
int perturbation_survivors(const BoundaryGraph& bg, double K, Dimension n, std::vector<std::string>& log,
                           const std::string& name) {
  int survivors = 0;
  auto note = [&](bool still_rigid, const std::string& what) {
    if (!still_rigid) return;
    ++survivors;
    log.push_back(name + " still rigid after " + what);
  };
  for (double factor : {1.01, 0.99}) {
    const std::string tag = factor > 1 ? "+1%" : "-1%";
    for (std::size_t x = 0; x < static_cast<std::size_t>(bg.graph().size()); ++x) {
      note(rigid_at(rebuilt(bg, x, std::nullopt, factor), K, n), "m(" + bg.graph().ids()[x] + ") " + tag);
    }
    for (std::size_t e = 0; e < bg.graph().edges().size(); ++e) {
      note(rigid_at(rebuilt(bg, std::nullopt, e, factor), K, n), "w[" + std::to_string(e) + "] " + tag);
    }
    note(rigid_at(bg, K * factor, n), "K " + tag);
    if (!n.is_infinite()) note(rigid_at(bg, K, Dimension(n.value() * factor)), "n " + tag);
  }
  return survivors;
}

std::vector<EqualityGraph> weighted_family_graphs() {
  std::vector<EqualityGraph> out;
  for (Dimension n : {Dimension(2.5), Dimension(3), Dimension(10), Dimension::infinite()}) {
    for (double K : {0.5, 1.0}) {
      for (double m : {1.0, 2.0}) {
        out.push_back({"weighted_path3(n=" + n.to_string() + ",K=" + fmt(K) + ",m=" + fmt(m) + ")",
                       weighted_path3(n, K, m), K, n, false});
      }
    }
  }
  for (double K : {1.0, 3.0}) {
    for (double m : {1.0, 2.0}) {
      out.push_back({"weighted_square(K=" + fmt(K) + ",m=" + fmt(m) + ")", weighted_square(K, m), K,
                     Dimension::infinite(), true});
    }
  }
  return out;
}

Verdict criterion4() {
  Verdict v;
  int variants = 0;
  int survivors = 0;
  std::vector<std::string> log;
  for (const auto& e : weighted_family_graphs()) {
    const auto expected = e.square_family ? Classification::WeightedSquare : Classification::WeightedPath3;
    v.require(passes(e.graph, e.K, e.n, expected), e.name + " fails check_rigidity");
    variants += 2 * static_cast<int>(e.graph.graph().size() + e.graph.graph().edges().size()) + 2 +
                (e.n.is_infinite() ? 0 : 2);
    survivors += perturbation_survivors(e.graph, e.K, e.n, log, e.name);
  }
  for (const auto& l : log) v.require(false, l);
  v.detail = "20 family graphs, " + std::to_string(variants) + " perturbations, " + std::to_string(survivors) +
             " still rigid";
  return v;
}

// ---------------------------------------------------------------- criterion 5

Verdict criterion5() {
  Verdict v;
  std::mt19937_64 rng(20240501);
  const std::vector<Dimension> dims{Dimension(2), Dimension(2.5), Dimension(3), Dimension(5), Dimension(10),
                                    Dimension::infinite()};
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  int qualified = 0;
  int attempts = 0;
  int equality = 0;
  int cd_graphs = 0;
  int per_source[3] = {0, 0, 0};
  const int quota[3] = {100, 80, 40};
  double worst_sigma = INFINITY;
  double worst_mu = INFINITY;
  double worst_pair = INFINITY;
  while (qualified < quota[0] + quota[1] + quota[2] && attempts < 100000) {
    ++attempts;
    const Dimension n = dims[std::uniform_int_distribution<std::size_t>(0, dims.size() - 1)(rng)];
    std::optional<BoundaryGraph> bg;
    const int source = attempts % 3;
    if (per_source[source] >= quota[source]) continue;
    switch (source) {
      case 0: {
        // near-uniform data keeps a fair share of these at positive curvature
        const int k = std::uniform_int_distribution<int>(3, 8)(rng);
        const double spread = 1.0 + unif(rng);
        const auto g = random_graph(rng, k, 0.3 + 0.7 * unif(rng), 1.0 / spread, spread);
        bg.emplace(random_boundary_graph(rng, g, 3));
        break;
      }
      case 1: {
        const int k = std::uniform_int_distribution<int>(1, 6)(rng);
        const Dimension dn = n == Dimension(2) ? Dimension(3) : n;
        bg.emplace(attach_two_point_boundary(random_interior(rng, k, unif(rng)), dn, 0.5 + unif(rng), 0.5 + unif(rng),
                                             std::exp(std::log(0.1) + unif(rng) * std::log(500.0))));
        break;
      }
      default: {
        if (n.is_infinite() && unif(rng) < 0.5) {
          bg.emplace(weighted_square(0.5 + 2 * unif(rng), 0.5 + 2 * unif(rng)));
        } else {
          bg.emplace(weighted_path3(n, 0.5 + 2 * unif(rng), 0.5 + 2 * unif(rng)));
        }
      }
    }
    if (bg->boundary().size() < 2) continue;
    const std::vector<Dimension> one{n};
    const double K = curvature_profile(bg->graph(), one).global_min[0];
    if (!(K > 0)) continue;
    ++qualified;
    ++per_source[source];
    const auto r = check_rigidity(*bg, K, n);
    const auto sigma = steklov_spectrum(*bg).values;
    const auto mu = laplacian_spectrum(bg->graph()).values;
    const double bound = lichnerowicz_bound(K, n);
    worst_sigma = std::min(worst_sigma, sigma(1) - bound);
    worst_mu = std::min(worst_mu, mu(1) - bound);
    v.require(sigma(1) >= bound - 1e-8, "sigma2 below the bound by " + fmt(bound - sigma(1)));
    v.require(mu(1) >= bound - 1e-8, "mu2 below the bound by " + fmt(bound - mu(1)));
    for (Index i = 0; i < sigma.size(); ++i) {
      worst_pair = std::min(worst_pair, sigma(i) - mu(i));
      v.require(sigma(i) >= mu(i) - 1e-8, "sigma_" + std::to_string(i + 1) + " < mu_" + std::to_string(i + 1));
    }
    if (r.cd_holds) {
      ++cd_graphs;
      v.require(r.biconditional_ok(), "biconditional broken (n=" + n.to_string() + ", K=" + fmt(K) + ")");
    }
    equality += r.bound_equality;
  }
  v.require(qualified >= 200, "only " + std::to_string(qualified) + " graphs with K > 0");
  v.require(equality > 0 && equality < qualified, "no variety in the equality verdicts");
  v.detail = std::to_string(qualified) + " graphs (" + std::to_string(per_source[0]) + " random, " +
             std::to_string(per_source[1]) + " two-point, " + std::to_string(per_source[2]) + " family; " +
             std::to_string(cd_graphs) + " with CD, " +
             std::to_string(equality) + " equality), min sigma2-bound " + fmt(worst_sigma) + ", min mu2-bound " +
             fmt(worst_mu) + ", min sigma_i-mu_i " + fmt(worst_pair);
  return v;
}

// ---------------------------------------------------------------- criterion 6

Verdict criterion6() {
  Verdict v;
  std::mt19937_64 rng(606);
  double worst_gamma = 0.0;
  double worst_g2 = 0.0;
  double worst_dtn = 0.0;
  double worst_special = 0.0;
  auto track = [&](double& worst, double a, double b) { worst = std::max(worst, rel_diff(a, b)); };

  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(rng, 7, 0.4);
    const Vector u = random_vector(rng, g.size());
    const Vector w = random_vector(rng, g.size());
    const Vector explicit_sum = gamma(g, u, w);
    const Vector product_rule = gamma_product_rule(g, u, w);
    for (Index x = 0; x < g.size(); ++x) track(worst_gamma, explicit_sum(x), product_rule(x));
    const Vector g2 = gamma2(g, u, u);
    for (Index x = 0; x < g.size(); ++x) track(worst_g2, gamma2_form(g, x).evaluate(u), g2(x));

    auto bg = random_boundary_graph(rng, g, 3);
    const auto dtn = dtn_operator(bg);
    const Vector f = random_vector(rng, static_cast<Index>(bg.boundary().size()));
    const Vector lhs = dtn.apply(f);
    const Vector rhs = normal_derivative(bg, harmonic_extension(bg, f));
    for (Index i = 0; i < lhs.size(); ++i) track(worst_dtn, lhs(i), rhs(i));
    const Matrix composed = composed_dtn(bg);
    const Matrix schur = dtn.matrix();
    for (Index i = 0; i < schur.size(); ++i) track(worst_dtn, schur(i), composed(i));

    const std::vector<Dimension> dims{Dimension(2.5), Dimension(3), Dimension(6), Dimension::infinite()};
    const Dimension n = dims[static_cast<std::size_t>(trial) % dims.size()];
    const double K = 0.3 + (trial % 7) * 0.25;
    const double m = 0.5 + (trial % 5) * 0.4;
    auto tp = attach_two_point_boundary(random_interior(rng, 1 + trial % 5, 0.5), n, K, m, 0.2 + trial % 9);
    const TwoPointView view(tp, K, n);
    const auto& tg = tp.graph();
    const Vector a = random_vector(rng, tg.size());
    const Vector b = random_vector(rng, tg.size());
    const Vector gam = gamma(tg, a, b);
    const Vector lap = laplacian(tg, a);
    for (Index x : tp.interior()) {
      track(worst_special, gam(x), view.gamma_interior(a, b, x));
      track(worst_special, lap(x), view.laplacian_interior(a, x));
      Vector p = a;
      p(x) = 0.0;
      track(worst_special, gamma2(tg, p, p)(x), view.gamma2_interior(p, x));
    }
    for (Index y : tp.boundary()) {
      track(worst_special, gam(y), view.gamma_boundary(a, b, y));
      track(worst_special, lap(y), view.laplacian_boundary(a, y));
      Vector p = a;
      p(y) = 0.0;
      track(worst_special, gamma2(tg, p, p)(y), view.gamma2_boundary(p, y));
    }
  }
  v.require(worst_gamma <= 1e-10, "gamma vs product rule " + fmt(worst_gamma));
  v.require(worst_g2 <= 1e-10, "gamma2_form vs gamma2 " + fmt(worst_g2));
  v.require(worst_dtn <= 1e-10, "Schur vs composition " + fmt(worst_dtn));
  v.require(worst_special <= 1e-10, "specialized formulas " + fmt(worst_special));
  v.detail = "max rel: gamma " + fmt(worst_gamma) + ", gamma2 " + fmt(worst_g2) + ", dtn " + fmt(worst_dtn) +
             ", specialized " + fmt(worst_special);
  return v;
}

// ---------------------------------------------------------------- criterion 7

std::vector<EqualityGraph> constructed_graphs(Verdict* v) {
  std::vector<EqualityGraph> out;
  std::ostringstream detail;
  for (int k = 1; k <= 3; ++k) {
    for (double nv : {3.0, 4.0, 5.0}) {
      const std::string name = "K" + std::to_string(k) + ", n=" + fmt(nv);
      try {
        auto fam = construct_rigid_family(complete_graph(k), Dimension(nv), 1.0, 1.0);
        const bool ok = std::isfinite(fam.lambda) && passes(fam.graph, 1.0, Dimension(nv),
                                                            k == 1 ? Classification::WeightedPath3
                                                                   : Classification::GeneralEquality);
        if (v) v->require(ok, name + ": lambda " + fmt(fam.lambda) + " fails check_rigidity");
        detail << name << ": lambda " << fmt(fam.lambda) << "; ";
        if (ok) out.push_back({"construct(" + name + ")", fam.graph, 1.0, Dimension(nv), false});
      } catch (const Error& e) {
        if (v) v->require(false, name + ": " + std::string(to_string(e.code())) + " (" + e.what() + ")");
        detail << name << ": " << to_string(e.code()) << "; ";
      }
    }
  }
  if (v) v->detail = detail.str();
  return out;
}

Verdict criterion7() {
  Verdict v;
  constructed_graphs(&v);
  return v;
}

// ---------------------------------------------------------------- criterion 8

Verdict criterion8(double& scan_seconds) {
  Verdict v;
  std::vector<EqualityGraph> graphs = unit_sweep().equality;
  for (auto& e : weighted_family_graphs()) graphs.push_back(std::move(e));
  for (auto& e : constructed_graphs(nullptr)) graphs.push_back(std::move(e));

  const auto start = std::chrono::steady_clock::now();
  int finite = 0;
  int infinite = 0;
  int hits = 0;
  for (const auto& e : graphs) {
    const auto scan = disjoint_ball_scan(induced_interior_graph(e.graph).graph);
    if (!e.n.is_infinite() && e.n.value() > 2) {
      ++finite;
      v.require(!scan.disjoint_pair, e.name + ": disjoint balls found");
      v.require(scan.connected && scan.diameter && *scan.diameter <= 4, e.name + ": interior disconnected or too wide");
    } else if (e.n.is_infinite()) {
      ++infinite;
      hits += scan.disjoint_pair.has_value();
      v.require(scan.disjoint_pair.has_value() == e.square_family,
                e.name + (e.square_family ? ": square without a scan hit" : ": scan hit outside the square family"));
    }
  }
  scan_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.detail = std::to_string(graphs.size()) + " equality graphs, " + std::to_string(finite) + " with 2<n<inf, " +
             std::to_string(infinite) + " with n=inf (" + std::to_string(hits) + " square hits)";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, double> limits{{1, 1}, {2, 1}, {3, 300}, {4, 10}, {5, 120}, {6, 30}, {7, 60}, {8, 10}};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  if (selected.empty()) {
    for (const auto& [c, limit] : limits) selected.push_back(c);
  }

  bool all = true;
  for (int c : selected) {
    if (!limits.count(c)) {
      std::fprintf(stderr, "unknown criterion %d\n", c);
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    double timed = -1.0;
    try {
      switch (c) {
        case 1: v = criterion1(); break;
        case 2: v = criterion2(); break;
        case 3: v = criterion3(); break;
        case 4: v = criterion4(); break;
        case 5: v = criterion5(); break;
        case 6: v = criterion6(); break;
        case 7: v = criterion7(); break;
        case 8: v = criterion8(timed); break;
      }
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // criterion 8 times the scans; rebuilding its inputs is criteria 3, 4 and 7's work
    const double seconds = timed >= 0 ? timed : total;
    v.require(seconds < limits.at(c), "runtime " + fmt(seconds) + " s over the limit");
    std::printf("criterion %d: %s (%s) [%.3f s, limit %g s]\n", c, v.pass ? "PASS" : "FAIL", v.detail.c_str(),
                seconds, limits.at(c));
    for (const auto& f : v.failures) std::printf("  - %s\n", f.c_str());
    std::fflush(stdout);
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
