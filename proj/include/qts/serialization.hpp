#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qts/augmentation.hpp"
#include "qts/finite_topology.hpp"
#include "qts/graph_spaces.hpp"
#include "qts/quantum.hpp"
#include "qts/tensor_network.hpp"

namespace qts::io {

using nlohmann::json;

// JSON schemas. Complex numbers are [re, im] pairs (a bare number is read as
// a real). Point sets are emitted as lists sorted by id.
//
//   space   {"points":[..], "subbasis":[[..],..], "min_open":{"p":[..]}}
//   graph   {"vertices":[..], "edges":[{"id":"e1","ends":["a","b"]}]}
//   link    {"label":"E1","left":"a","right":"c","state":<matrix>}
//   matrix  [[z00, z01], [z10, z11]]
//   state   {"n":2, "amps":[z, ..]}
//   network {"nodes":{"A":{"shape":[..],"data":[z, ..]}},
//            "internal":[{"a":["A",1],"b":["B",0]}], "external":[["A",0]]}
//
// Malformed documents raise Error("schema", ...).

json set_to_json(const FiniteSpace& space, const PointSet& s);
PointSet set_from_json(const FiniteSpace& space, const json& j);

json space_to_json(const FiniteSpace& space);
FiniteSpace space_from_json(const json& j);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);

json matrix_to_json(const TwoQubitMatrix& m);
TwoQubitMatrix matrix_from_json(const json& j);

json state_to_json(const PureState& s);
PureState state_from_json(const json& j);

json link_to_json(const EntanglementLink& l);
EntanglementLink link_from_json(const json& j);
/// Accepts a bare array of links or {"links": [...]}.
std::vector<EntanglementLink> links_from_json(const json& j);

json augmented_to_json(const AugmentedSpace& a);

json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const json& j);

json network_to_json(const TensorNetwork& net);
TensorNetwork network_from_json(const json& j);

json point_map_to_json(const PointMap& f);
PointMap point_map_from_json(const json& j);

/// Graphviz rendering of a space: one node per point and an arc x -> y for
/// every y != x in min_open(x). Points in `highlight` are filled.
std::string space_to_dot(const FiniteSpace& space, const std::vector<std::string>& highlight = {});
std::string graph_to_dot(const Graph& g);

}  // namespace qts::io
