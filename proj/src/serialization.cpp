#include "qts/serialization.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qts::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error("schema", what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_of(const json& j, const char* what) {
  if (!j.is_string()) schema(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_of(const json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(string_of(e, what));
  return out;
}

std::size_t index_of_json(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    schema(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

PortRef port_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) schema("port must be [node, index]");
  return {string_of(j[0], "port node"), index_of_json(j[1], "port index")};
}

json port_to_json(const PortRef& p) { return json::array({p.node, p.port}); }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json set_to_json(const FiniteSpace& space, const PointSet& s) {
  auto names = space.names_of(s);
  std::sort(names.begin(), names.end());
  return names;
}

PointSet set_from_json(const FiniteSpace& space, const json& j) {
  return space.set_of(strings_of(j, "point set"));
}

json space_to_json(const FiniteSpace& space) {
  json subbasis = json::array();
  std::set<PointSet> emitted;
  for (const auto& m : space.min_opens()) {
    if (emitted.insert(m).second) subbasis.push_back(set_to_json(space, m));
  }
  json mins = json::object();
  for (std::size_t i = 0; i < space.size(); ++i) mins[space.name(i)] = set_to_json(space, space.min_open(i));
  return {{"points", space.points()}, {"subbasis", std::move(subbasis)}, {"min_open", std::move(mins)}};
}

FiniteSpace space_from_json(const json& j) {
  auto points = strings_of(field(j, "points"), "points");
  std::vector<std::vector<std::string>> subbasis;
  if (j.contains("subbasis")) {
    if (!j["subbasis"].is_array()) schema("subbasis must be an array of point lists");
    for (const auto& s : j["subbasis"]) subbasis.push_back(strings_of(s, "subbasis set"));
  }
  FiniteSpace space = FiniteSpace::from_subbasis(std::move(points), subbasis);
  if (j.contains("min_open")) {
    const auto& mins = j["min_open"];
    if (!mins.is_object()) schema("min_open must be an object");
    for (const auto& [p, members] : mins.items()) {
      if (set_from_json(space, members) != space.min_open(p)) {
        schema("min_open of '" + p + "' disagrees with the subbasis");
      }
    }
  }
  return space;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"id", e.id}, {"ends", {e.source, e.target}}});
  return {{"vertices", g.vertices}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  Graph g;
  g.vertices = strings_of(field(j, "vertices"), "vertices");
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) schema("edges must be an array");
    for (const auto& e : j["edges"]) {
      auto ends = strings_of(field(e, "ends"), "edge ends");
      if (ends.size() != 2) schema("edge ends must list exactly two vertices");
      g.edges.push_back({string_of(field(e, "id"), "edge id"), ends[0], ends[1]});
    }
  }
  g.validate();
  return g;
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  schema("complex number must be [re, im] or a real number");
}

json matrix_to_json(const TwoQubitMatrix& m) {
  return json::array({json::array({complex_to_json(m(0, 0)), complex_to_json(m(0, 1))}),
                      json::array({complex_to_json(m(1, 0)), complex_to_json(m(1, 1))})});
}

TwoQubitMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2) {
    schema("matrix must be a 2x2 array of complex numbers");
  }
  TwoQubitMatrix m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

json state_to_json(const PureState& s) {
  json amps = json::array();
  for (const auto& a : s.amplitudes()) amps.push_back(complex_to_json(a));
  return {{"n", s.num_qubits()}, {"amps", std::move(amps)}};
}

PureState state_from_json(const json& j) {
  const std::size_t n = index_of_json(field(j, "n"), "n");
  const auto& amps = field(j, "amps");
  if (!amps.is_array()) schema("amps must be an array");
  if (n == 0 || n > 24 || amps.size() != (std::size_t{1} << n)) schema("amps must have 2^n entries");
  std::vector<Complex> v;
  for (const auto& a : amps) v.push_back(complex_from_json(a));
  return PureState(std::move(v));
}

json link_to_json(const EntanglementLink& l) {
  json j = {{"label", l.label}, {"left", l.left}, {"right", l.right}};
  if (l.state) j["state"] = matrix_to_json(*l.state);
  return j;
}

EntanglementLink link_from_json(const json& j) {
  EntanglementLink l{string_of(field(j, "label"), "label"), string_of(field(j, "left"), "left"),
                     string_of(field(j, "right"), "right"), std::nullopt};
  if (j.contains("state") && !j["state"].is_null()) l.state = matrix_from_json(j["state"]);
  return l;
}

std::vector<EntanglementLink> links_from_json(const json& j) {
  const json& arr = j.is_object() ? field(j, "links") : j;
  if (!arr.is_array()) schema("links must be an array");
  std::vector<EntanglementLink> out;
  for (const auto& l : arr) out.push_back(link_from_json(l));
  return out;
}

json augmented_to_json(const AugmentedSpace& a) {
  json links = json::array();
  for (const auto& l : a.links()) links.push_back(link_to_json(l));
  return {{"base", space_to_json(a.base())}, {"links", std::move(links)}, {"space", space_to_json(a.space())}};
}

json tensor_to_json(const Tensor& t) {
  json data = json::array();
  for (const auto& z : t.data()) data.push_back(complex_to_json(z));
  return {{"shape", t.shape()}, {"data", std::move(data)}};
}

Tensor tensor_from_json(const json& j) {
  const auto& shape_j = field(j, "shape");
  if (!shape_j.is_array()) schema("shape must be an array");
  std::vector<std::size_t> shape;
  for (const auto& s : shape_j) shape.push_back(index_of_json(s, "axis size"));
  const auto& data_j = field(j, "data");
  if (!data_j.is_array()) schema("data must be an array");
  std::vector<Complex> data;
  for (const auto& z : data_j) data.push_back(complex_from_json(z));
  return Tensor(std::move(shape), std::move(data));
}

json network_to_json(const TensorNetwork& net) {
  json nodes = json::object();
  for (const auto& [id, t] : net.nodes) nodes[id] = tensor_to_json(t);
  json internal = json::array();
  for (const auto& e : net.internal) internal.push_back({{"a", port_to_json(e.a)}, {"b", port_to_json(e.b)}});
  json external = json::array();
  for (const auto& p : net.external) external.push_back(port_to_json(p));
  return {{"nodes", std::move(nodes)}, {"internal", std::move(internal)}, {"external", std::move(external)}};
}

TensorNetwork network_from_json(const json& j) {
  TensorNetwork net;
  const auto& nodes = field(j, "nodes");
  if (!nodes.is_object()) schema("nodes must be an object");
  for (const auto& [id, t] : nodes.items()) net.nodes.emplace(id, tensor_from_json(t));
  if (j.contains("internal")) {
    if (!j["internal"].is_array()) schema("internal must be an array");
    for (const auto& e : j["internal"]) net.internal.push_back({port_from_json(field(e, "a")), port_from_json(field(e, "b"))});
  }
  if (j.contains("external")) {
    if (!j["external"].is_array()) schema("external must be an array");
    for (const auto& p : j["external"]) net.external.push_back(port_from_json(p));
  }
  net.validate();
  return net;
}

json point_map_to_json(const PointMap& f) { return f.assignment; }

PointMap point_map_from_json(const json& j) {
  if (!j.is_object()) schema("point map must be an object of id -> id");
  PointMap f;
  for (const auto& [from, to] : j.items()) f.assignment.emplace(from, string_of(to, "map target"));
  return f;
}

std::string space_to_dot(const FiniteSpace& space, const std::vector<std::string>& highlight) {
  std::ostringstream out;
  out << "digraph space {\n";
  for (const auto& p : space.points()) {
    out << "  " << quoted(p);
    if (std::find(highlight.begin(), highlight.end(), p) != highlight.end()) {
      out << " [shape=doublecircle, style=filled, fillcolor=gold]";
    }
    out << ";\n";
  }
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (auto y : space.min_open(x).indices()) {
      if (y != x) out << "  " << quoted(space.name(x)) << " -> " << quoted(space.name(y)) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& v : g.vertices) out << "  " << quoted(v) << ";\n";
  for (const auto& e : g.edges) {
    out << "  " << quoted(e.source) << " -- " << quoted(e.target) << " [label=" << quoted(e.id) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qts::io
