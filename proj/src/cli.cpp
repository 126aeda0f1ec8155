#include "bestek/cli.hpp"

#include "bestek/curvature.hpp"
#include "bestek/error.hpp"
#include "bestek/examples.hpp"
#include "bestek/graph_io.hpp"
#include "bestek/operators.hpp"
#include "bestek/report.hpp"
#include "bestek/rigidity.hpp"
#include "bestek/steklov.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace bestek {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string graph;
  std::string n;
  std::string n_list = "2,3,5,10,inf";
  double K = 0.0;
  std::string vertex;
  std::string cls;
  int trials = 100;
  std::uint64_t seed = 0;
  std::string family;
  double m = 1.0;
  int interior_size = 1;
  double lambda = 1.0;
  std::string out_path;
};

std::vector<Dimension> parse_dimension_list(const std::string& text) {
  std::vector<Dimension> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(Dimension::parse(item));
  }
  if (out.empty()) throw Error(ErrorCode::InvalidDimensionParam, "empty dimension list");
  return out;
}

void summarize(std::ostream& err, const std::string& line) { err << line << "\n"; }

int cmd_spectrum(const Options& o, Report& report, std::ostream& err) {
  const auto bg = read_graph_file(o.graph);
  const auto spec = laplacian_spectrum(bg.graph());
  report.results["vertices"] = bg.graph().ids();
  report.results["spectrum"] = to_json(spec);
  summarize(err, "laplacian spectrum: " + std::to_string(spec.values.size()) + " eigenvalues, mu_2 = " +
                     (spec.values.size() > 1 ? format_double(spec.values(1)) : std::string("n/a")));
  return kExitOk;
}

int cmd_steklov(const Options& o, bool with_bound, Report& report, std::ostream& err) {
  const auto bg = read_graph_file(o.graph);
  const auto dtn = dtn_operator(bg);
  const auto spec = steklov_spectrum(dtn);
  report.results["boundary"] = vertex_ids(bg.graph(), bg.boundary());
  report.results["spectrum"] = to_json(spec);
  report.results["dtn_matrix"] = to_json(dtn.matrix());
  int code = kExitOk;
  if (with_bound) {
    report.inputs["K"] = number(o.K);
    report.inputs["n"] = o.n;
    const auto lich = verify_lichnerowicz(bg, o.K, Dimension::parse(o.n));
    report.results["lichnerowicz"] = to_json(lich);
    if (!lich.cd_holds) report.warnings.push_back("CD(K,n) does not hold; the bound is not guaranteed");
    if (lich.cd_holds && !lich.bound_holds) code = kExitVerification;
  }
  if (spec.values.size() < 2) report.warnings.push_back("single boundary vertex: sigma_2 undefined");
  summarize(err, "steklov spectrum: " + std::to_string(spec.values.size()) + " eigenvalues");
  return code;
}

int cmd_curvature(const Options& o, Report& report, std::ostream& err) {
  const auto bg = read_graph_file(o.graph);
  const auto dims = parse_dimension_list(o.n_list);
  report.inputs["n"] = o.n_list;
  const auto profile = curvature_profile(bg.graph(), dims);
  report.results["profile"] = to_json(profile, bg.graph());
  for (std::size_t j = 0; j < dims.size(); ++j) {
    summarize(err, "n = " + dims[j].to_string() + ": min curvature " + format_double(profile.global_min[j]));
  }
  return kExitOk;
}

int cmd_cd_check(const Options& o, Report& report, std::ostream& err) {
  const auto bg = read_graph_file(o.graph);
  const auto& g = bg.graph();
  report.inputs["K"] = number(o.K);
  report.inputs["n"] = o.n;
  std::optional<Index> x;
  if (!o.vertex.empty()) {
    report.inputs["vertex"] = o.vertex;
    x = g.index_of(o.vertex);
  }
  const auto result = cd_check(g, o.K, Dimension::parse(o.n), x);
  report.results["cd"] = to_json(result, g);
  if (const auto* bad = result.violation()) {
    summarize(err, "CD(K,n) fails at vertex '" + g.id(bad->vertex) + "' (min eigenvalue " +
                       format_double(bad->min_eigenvalue) + ")");
    return kExitVerification;
  }
  summarize(err, "CD(K,n) holds");
  return kExitOk;
}

int cmd_rigidity(const Options& o, Report& report, std::ostream& err) {
  const auto bg = read_graph_file(o.graph);
  report.inputs["K"] = number(o.K);
  report.inputs["n"] = o.n;
  const auto result = check_rigidity(bg, o.K, Dimension::parse(o.n));
  report.results["rigidity"] = to_json(result);
  if (!result.cd_holds) report.warnings.push_back("CD(K,n) does not hold; the equality characterization does not apply");
  summarize(err, std::string("bound_equality = ") + (result.bound_equality ? "true" : "false") +
                     ", conditions (1)-(5) " + (result.conditions_hold() ? "hold" : "fail") + ", classification " +
                     std::string(to_string(result.classification)));
  return result.biconditional_ok() ? kExitOk : kExitVerification;
}

int cmd_classify(const Options& o, bool has_params, Report& report, std::ostream& err) {
  const auto bg = read_graph_file(o.graph);
  report.inputs["class"] = o.cls;
  ClassificationResult result;
  if (o.cls == "unit") {
    result = classify_unit_weight(bg);
  } else if (o.cls == "normalized") {
    result = classify_normalized(bg);
  } else {
    if (!has_params) throw Error(ErrorCode::InvalidParams, "--class partial needs --K and --n");
    report.inputs["K"] = number(o.K);
    report.inputs["n"] = o.n;
    result = classify_partial(bg, o.K, Dimension::parse(o.n));
  }
  report.results["classification"] = to_json(result);
  summarize(err, "classification: " + std::string(to_string(result.label)));
  return kExitOk;
}

int cmd_green_check(const Options& o, Report& report, std::ostream& err) {
  if (o.trials < 1) throw Error(ErrorCode::InvalidParams, "--trials must be positive");
  const auto bg = read_graph_file(o.graph);
  const auto& g = bg.graph();
  report.inputs["trials"] = o.trials;
  report.inputs["seed"] = o.seed;
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  double total_weight = 0.0;
  for (const auto& e : g.edges()) total_weight += e.weight;
  double worst = 0.0;
  for (int t = 0; t < o.trials; ++t) {
    Vector u(g.size());
    Vector v(g.size());
    for (Index i = 0; i < g.size(); ++i) u(i) = unif(rng);
    for (Index i = 0; i < g.size(); ++i) v(i) = unif(rng);
    worst = std::max(worst, check_green_identity(bg, u, v));
  }
  // With |u|,|v| ≤ 1 every term of the identity is bounded by 4Σw.
  const double tolerance = 1e-10 * (1.0 + 4.0 * total_weight);
  report.results["max_residual"] = number(worst);
  report.results["tolerance"] = number(tolerance);
  report.results["passed"] = worst <= tolerance;
  summarize(err, "green identity: max residual " + format_double(worst));
  return worst <= tolerance ? kExitOk : kExitVerification;
}

int cmd_generate(const Options& o, const CLI::App& sub, Report& report, std::ostream& out, std::ostream& err,
                 bool& report_written) {
  FamilyParams params;
  if (sub.count("--n")) params.n = Dimension::parse(o.n);
  if (sub.count("--K")) params.K = o.K;
  params.m = o.m;
  params.interior_size = o.interior_size;
  params.lambda = o.lambda;
  const auto bg = make_example(parse_family(o.family), params);
  if (o.out_path.empty()) {
    out << serialize_graph_file(bg);
    report_written = true;
    summarize(err, "generated " + o.family);
    return kExitOk;
  }
  write_graph_file(o.out_path, bg);
  report.inputs["family"] = o.family;
  report.inputs["K"] = number(params.K);
  report.inputs["m"] = number(params.m);
  report.inputs["n"] = params.n ? to_json(*params.n) : Json(nullptr);
  report.inputs["interior_size"] = params.interior_size;
  report.inputs["lambda"] = number(params.lambda);
  report.results["path"] = o.out_path;
  report.results["vertices"] = bg.graph().ids();
  report.results["boundary"] = vertex_ids(bg.graph(), bg.boundary());
  summarize(err, "wrote " + o.out_path);
  return kExitOk;
}

int cmd_ball_scan(const Options& o, Report& report, std::ostream& err) {
  const auto bg = read_graph_file(o.graph);
  const auto induced = induced_interior_graph(bg);
  const auto scan = disjoint_ball_scan(induced.graph);
  report.results["interior"] = induced.graph.ids();
  report.results["scan"] = to_json(scan, induced.graph);
  summarize(err, scan.disjoint_pair ? "disjoint radius-2 balls found" : "no disjoint radius-2 balls");
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steklov spectra, curvature-dimension checks and rigidity analysis on weighted graphs", "bestek"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, "graph file")->required(); };
  auto add_kn = [&](CLI::App* sub, bool required) {
    auto* k = sub->add_option("--K", o.K, "curvature lower bound");
    auto* n = sub->add_option("--n", o.n, "dimension parameter (number or inf)");
    if (required) {
      k->required();
      n->required();
    }
  };

  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum");
  add_graph(spectrum);
  auto* steklov = app.add_subcommand("steklov", "Steklov spectrum and Dirichlet-to-Neumann matrix");
  add_graph(steklov);
  add_kn(steklov, false);
  auto* curvature = app.add_subcommand("curvature", "curvature profile over a list of dimensions");
  add_graph(curvature);
  curvature->add_option("--n", o.n_list, "comma separated dimensions");
  auto* cdcheck = app.add_subcommand("cd-check", "verify CD(K,n)");
  add_graph(cdcheck);
  add_kn(cdcheck, true);
  cdcheck->add_option("--vertex", o.vertex, "single vertex id");
  auto* rigidity = app.add_subcommand("rigidity", "equality analysis for the Steklov bound");
  add_graph(rigidity);
  add_kn(rigidity, true);
  auto* classify = app.add_subcommand("classify", "match against the equality graph families");
  add_graph(classify);
  classify->add_option("--class", o.cls, "unit, normalized or partial")
      ->required()
      ->check(CLI::IsMember({"unit", "normalized", "partial"}));
  add_kn(classify, false);
  auto* green = app.add_subcommand("green-check", "Green formula audit on random functions");
  add_graph(green);
  green->add_option("--trials", o.trials, "number of random pairs");
  green->add_option("--seed", o.seed, "random seed");
  auto* generate = app.add_subcommand("generate", "write an example graph file");
  generate->add_option("--family", o.family, "family name")->required();
  add_kn(generate, false);
  generate->add_option("--m", o.m, "boundary measure");
  generate->add_option("--interior-size", o.interior_size, "complete interior size");
  generate->add_option("--lambda", o.lambda, "interior weight factor");
  generate->add_option("--out", o.out_path, "output file (default: standard output)");
  auto* ballscan = app.add_subcommand("ball-scan", "disjoint radius-2 balls in the interior");
  add_graph(ballscan);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  Report report;
  report.command = sub->get_name();
  if (!o.graph.empty()) report.inputs["graph"] = o.graph;
  bool report_written = false;
  int code = kExitOk;
  try {
    const std::string& name = report.command;
    if (name == "spectrum") {
      code = cmd_spectrum(o, report, err);
    } else if (name == "steklov") {
      const bool k = sub->count("--K") > 0;
      const bool n = sub->count("--n") > 0;
      if (k != n) throw Error(ErrorCode::InvalidParams, "--K and --n must be given together");
      code = cmd_steklov(o, k, report, err);
    } else if (name == "curvature") {
      code = cmd_curvature(o, report, err);
    } else if (name == "cd-check") {
      code = cmd_cd_check(o, report, err);
    } else if (name == "rigidity") {
      code = cmd_rigidity(o, report, err);
    } else if (name == "classify") {
      code = cmd_classify(o, sub->count("--K") > 0 && sub->count("--n") > 0, report, err);
    } else if (name == "green-check") {
      code = cmd_green_check(o, report, err);
    } else if (name == "generate") {
      code = cmd_generate(o, *sub, report, out, err, report_written);
    } else {
      code = cmd_ball_scan(o, report, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (!report_written) out << report.serialize();
  return code;
}

}  // namespace bestek
