#include "bestek/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bestek {

namespace {

void write(std::ostringstream& out, const Json& value, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, item] : value.items()) {  // std::map storage: keys already sorted
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(key).dump() << ": ";
        write(out, item, depth + 1);
      }
      out << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out << "[]";
        return;
      }
      const bool flat = std::all_of(value.begin(), value.end(), [](const Json& v) { return v.is_primitive(); });
      if (flat) {
        out << "[";
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (i) out << ", ";
          write(out, value[i], depth + 1);
        }
        out << "]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) out << ",\n";
        out << pad;
        write(out, value[i], depth + 1);
      }
      out << "\n" << close << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = value.get<double>();
      if (std::isfinite(d)) {
        out << format_double(d);
      } else {
        out << Json(format_double(d)).dump();
      }
      return;
    }
    default:
      out << value.dump();
  }
}

}  // namespace

std::string serialize_json(const Json& value) {
  std::ostringstream out;
  write(out, value, 0);
  out << "\n";
  return out.str();
}

std::string Report::serialize() const {
  Json doc = Json::object();
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["results"] = results;
  doc["warnings"] = warnings;
  return serialize_json(doc);
}

Json number(double value) {
  if (std::isfinite(value)) return value;
  return format_double(value);
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(number(v(i)));
  return out;
}

Json to_json(const Matrix& a) {
  Json out = Json::array();
  for (Index i = 0; i < a.rows(); ++i) out.push_back(to_json(Vector(a.row(i).transpose())));
  return out;
}

Json to_json(Dimension n) { return number(n.is_infinite() ? INFINITY : n.value()); }

Json vertex_ids(const WeightedGraph& g, const std::vector<Index>& vertices) {
  Json out = Json::array();
  for (Index x : vertices) out.push_back(g.id(x));
  return out;
}

Json to_json(const Spectrum& spectrum) {
  Json out = Json::object();
  out["kind"] = spectrum.kind == SpectrumKind::Laplacian ? "laplacian" : "steklov";
  out["values"] = to_json(spectrum.values);
  Json mult = Json::array();
  for (const auto& [value, count] : spectrum.multiplicities()) mult.push_back(Json::array({number(value), count}));
  out["multiplicities"] = mult;
  Json functions = Json::array();
  for (Index j = 0; j < spectrum.functions.cols(); ++j) functions.push_back(to_json(Vector(spectrum.functions.col(j))));
  out["eigenfunctions"] = functions;
  return out;
}

Json to_json(const CurvatureProfile& profile, const WeightedGraph& g) {
  Json out = Json::object();
  Json dims = Json::array();
  for (const auto& n : profile.dimensions) dims.push_back(to_json(n));
  out["dimensions"] = dims;
  out["vertices"] = g.ids();
  out["kappa"] = to_json(profile.kappa);
  Json mins = Json::array();
  for (double v : profile.global_min) mins.push_back(number(v));
  out["global_min"] = mins;
  return out;
}

Json to_json(const CdCheckResult& result, const WeightedGraph& g) {
  Json out = Json::object();
  out["holds"] = result.holds;
  Json vertices = Json::array();
  for (const auto& v : result.vertices) {
    Json item = Json::object();
    item["vertex"] = g.id(v.vertex);
    item["holds"] = v.holds;
    item["min_eigenvalue"] = number(v.min_eigenvalue);
    item["tolerance"] = number(v.tolerance);
    vertices.push_back(item);
  }
  out["vertices"] = vertices;
  if (const auto* bad = result.violation()) {
    Json witness = Json::object();
    witness["vertex"] = g.id(bad->vertex);
    witness["function"] = to_json(bad->witness);
    witness["vertex_order"] = g.ids();
    out["witness"] = witness;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const LichnerowiczReport& report) {
  Json out = Json::object();
  out["subject"] = report.subject == SpectralSubject::ClosedGraph ? "mu2" : "sigma2";
  out["K"] = number(report.K);
  out["n"] = to_json(report.n);
  out["cd_holds"] = report.cd_holds;
  out["bound"] = number(report.bound);
  out["spectral_value"] = number(report.spectral_value);
  out["slack"] = number(report.slack);
  out["bound_holds"] = report.bound_holds;
  out["equality"] = report.equality;
  return out;
}

Json to_json(const ConditionVerdict& verdict) {
  Json out = Json::object();
  out["evaluated"] = verdict.evaluated;
  out["holds"] = verdict.holds;
  out["witness"] = verdict.witness;
  return out;
}

Json to_json(const RigidityReport& report) {
  Json out = Json::object();
  out["K"] = number(report.K);
  out["n"] = to_json(report.n);
  out["cd_holds"] = report.cd_holds;
  out["sigma2"] = report.sigma2 ? number(*report.sigma2) : Json(nullptr);
  out["bound"] = number(report.bound);
  out["slack"] = number(report.slack);
  out["bound_equality"] = report.bound_equality;
  out["cond1"] = to_json(report.cond1);
  out["cond2"] = to_json(report.cond2);
  out["cond3"] = to_json(report.cond3);
  out["cond4"] = to_json(report.cond4);
  out["cond5"] = to_json(report.cond5);
  out["conditions_hold"] = report.conditions_hold();
  out["biconditional_ok"] = report.biconditional_ok();
  out["rigid"] = report.rigid();
  out["classification"] = std::string(to_string(report.classification));
  Json diag = Json::object();
  for (const auto& [key, value] : report.diagnostics) diag[key] = number(value);
  out["diagnostics"] = diag;
  out["notes"] = report.notes;
  return out;
}

Json to_json(const ClassificationResult& result) {
  Json out = Json::object();
  out["label"] = std::string(to_string(result.label));
  out["K"] = result.K ? number(*result.K) : Json(nullptr);
  out["n"] = result.n ? to_json(*result.n) : Json(nullptr);
  out["m"] = result.m ? number(*result.m) : Json(nullptr);
  out["detail"] = result.detail;
  return out;
}

Json to_json(const BallScanResult& scan, const WeightedGraph& interior) {
  Json out = Json::object();
  out["connected"] = scan.connected;
  out["diameter"] = scan.diameter ? Json(*scan.diameter) : Json(nullptr);
  if (scan.disjoint_pair) {
    out["disjoint_pair"] = Json::array({interior.id(scan.disjoint_pair->first), interior.id(scan.disjoint_pair->second)});
  } else {
    out["disjoint_pair"] = nullptr;
  }
  return out;
}

}  // namespace bestek
