#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qts/finite_topology.hpp"

namespace qts {

struct GraphEdge {
  std::string id;
  std::string source;
  std::string target;
};

/// Undirected multigraph; self-loops and parallel edges are allowed. Edge ids
/// share one namespace with vertex ids because both become points.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<GraphEdge> edges;

  /// Throws `malformed_graph` on duplicate ids or dangling edge ends.
  void validate() const;
  bool is_connected() const;
};

/// Top(G): points V(G) ∪ E(G), generated by N(e) = {e} ∪ ends(e). A vertex
/// with no incident edge is an open point.
FiniteSpace graph_topology(const Graph& g);

/// Face-poset model of the geometric realisation: every edge point is open and
/// a vertex's minimal open is the vertex plus its incident edges.
FiniteSpace face_model(const Graph& g);

/// A map between the point sets of two spaces, keyed by point id.
struct PointMap {
  std::map<std::string, std::string> assignment;

  static PointMap identity(const FiniteSpace& space);
  static PointMap constant(const FiniteSpace& domain, const std::string& target);
};

struct ContinuityResult {
  bool continuous = true;
  /// Codomain open whose preimage is not open (the smallest such minimal open).
  std::optional<PointSet> witness;
  std::optional<PointSet> preimage;
};

ContinuityResult is_continuous(const PointMap& f, const FiniteSpace& dom, const FiniteSpace& cod);

}  // namespace qts
