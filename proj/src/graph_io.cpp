#include "bestek/graph_io.hpp"

#include "bestek/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace bestek {

namespace {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

void require_keys(const json& object, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!object.is_object()) throw ParseError(0, where + ": expected an object");
  for (const auto& [key, value] : object.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; })) {
      throw ParseError(0, where + ": unknown key '" + key + "'");
    }
  }
  for (const char* key : allowed) {
    if (!object.contains(key)) throw ParseError(0, where + ": missing key '" + key + "'");
  }
}

std::string get_string(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(0, where + ": expected a string");
  return value.get<std::string>();
}

double get_number(const json& value, const std::string& where) {
  if (!value.is_number()) throw ParseError(0, where + ": expected a number");
  return value.get<double>();
}

const json& get_array(const json& object, const char* key) {
  const json& value = object.at(key);
  if (!value.is_array()) throw ParseError(0, std::string("/") + key + ": expected an array");
  return value;
}

}  // namespace

BoundaryGraph parse_graph_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte), e.what());
  }
  require_keys(doc, "/", {"vertices", "edges", "boundary"});

  std::vector<VertexSpec> vertices;
  const json& vlist = get_array(doc, "vertices");
  for (std::size_t i = 0; i < vlist.size(); ++i) {
    const std::string where = "/vertices/" + std::to_string(i);
    require_keys(vlist[i], where, {"id", "m"});
    vertices.push_back({get_string(vlist[i]["id"], where + "/id"), get_number(vlist[i]["m"], where + "/m")});
  }

  std::vector<EdgeSpec> edges;
  const json& elist = get_array(doc, "edges");
  for (std::size_t i = 0; i < elist.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    require_keys(elist[i], where, {"u", "v", "w"});
    edges.push_back({get_string(elist[i]["u"], where + "/u"), get_string(elist[i]["v"], where + "/v"),
                     get_number(elist[i]["w"], where + "/w")});
  }

  std::vector<std::string> boundary;
  const json& blist = get_array(doc, "boundary");
  for (std::size_t i = 0; i < blist.size(); ++i) {
    boundary.push_back(get_string(blist[i], "/boundary/" + std::to_string(i)));
  }

  return attach_boundary(build_graph(vertices, edges), boundary);
}

std::string serialize_graph_file(const BoundaryGraph& bg) {
  const auto& g = bg.graph();
  std::ostringstream out;
  out << "{\"vertices\":[";
  for (Index x = 0; x < g.size(); ++x) {
    if (x) out << ',';
    out << "\n  {\"id\":" << json(g.id(x)).dump() << ",\"m\":" << format_double(g.measure(x)) << '}';
  }
  out << "],\n \"edges\":[";
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& edge = g.edges()[e];
    if (e) out << ',';
    out << "\n  {\"u\":" << json(g.id(edge.u)).dump() << ",\"v\":" << json(g.id(edge.v)).dump()
        << ",\"w\":" << format_double(edge.weight) << '}';
  }
  out << "],\n \"boundary\":[";
  for (std::size_t i = 0; i < bg.boundary().size(); ++i) {
    if (i) out << ',';
    out << json(g.id(bg.boundary()[i])).dump();
  }
  out << "]}\n";
  return out.str();
}

BoundaryGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_file(buffer.str());
}

void write_graph_file(const std::string& path, const BoundaryGraph& bg) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidParams, "cannot write '" + path + "'");
  out << serialize_graph_file(bg);
}

bool same_graph(const BoundaryGraph& a, const BoundaryGraph& b) {
  const auto& ga = a.graph();
  const auto& gb = b.graph();
  if (ga.ids() != gb.ids()) return false;
  if (ga.measures() != gb.measures()) return false;
  if (ga.weights() != gb.weights()) return false;
  return a.boundary() == b.boundary();
}

}  // namespace bestek
