#pragma once

#include "bestek/curvature.hpp"
#include "bestek/rigidity.hpp"
#include "bestek/steklov.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bestek {

using Json = nlohmann::json;

/// Machine-readable output of one command. Objects keep sorted keys and
/// floating point values are written with 17 significant digits, so the
/// same command on the same input always produces the same bytes.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::string> warnings;

  std::string serialize() const;
};

/// Deterministic JSON text of any value (2-space indent, trailing newline).
std::string serialize_json(const Json& value);

/// Finite doubles as numbers; ±inf and nan as the strings "inf", "-inf", "nan".
Json number(double value);
Json to_json(const Vector& v);
Json to_json(const Matrix& a);  // list of rows
Json to_json(Dimension n);

Json vertex_ids(const WeightedGraph& g, const std::vector<Index>& vertices);
Json to_json(const Spectrum& spectrum);
Json to_json(const CurvatureProfile& profile, const WeightedGraph& g);
Json to_json(const CdCheckResult& result, const WeightedGraph& g);
Json to_json(const LichnerowiczReport& report);
Json to_json(const ConditionVerdict& verdict);
Json to_json(const RigidityReport& report);
Json to_json(const ClassificationResult& result);
Json to_json(const BallScanResult& scan, const WeightedGraph& interior);

}  // namespace bestek
