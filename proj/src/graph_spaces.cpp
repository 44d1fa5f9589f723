#include "qts/graph_spaces.hpp"

#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace qts {

void Graph::validate() const {
  std::unordered_set<std::string> ids;
  for (const auto& v : vertices) {
    if (!ids.insert(v).second) throw Error("malformed_graph", "duplicate id '" + v + "'");
  }
  std::unordered_set<std::string> vertex_ids(vertices.begin(), vertices.end());
  for (const auto& e : edges) {
    if (!ids.insert(e.id).second) throw Error("malformed_graph", "duplicate id '" + e.id + "'");
    if (!vertex_ids.contains(e.source) || !vertex_ids.contains(e.target)) {
      throw Error("malformed_graph", "edge '" + e.id + "' references an undeclared vertex");
    }
  }
}

bool Graph::is_connected() const {
  validate();
  if (vertices.empty()) return true;
  std::unordered_map<std::string, std::vector<std::string>> adj;
  for (const auto& e : edges) {
    adj[e.source].push_back(e.target);
    adj[e.target].push_back(e.source);
  }
  std::unordered_set<std::string> seen{vertices.front()};
  std::vector<std::string> stack{vertices.front()};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& w : adj[v]) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == vertices.size();
}

namespace {

std::vector<std::string> graph_points(const Graph& g) {
  std::vector<std::string> pts = g.vertices;
  for (const auto& e : g.edges) pts.push_back(e.id);
  return pts;
}

}  // namespace

FiniteSpace graph_topology(const Graph& g) {
  g.validate();
  std::vector<std::vector<std::string>> subbasis;
  std::unordered_set<std::string> covered;
  for (const auto& e : g.edges) {
    subbasis.push_back({e.id, e.source, e.target});
    covered.insert(e.source);
    covered.insert(e.target);
  }
  for (const auto& v : g.vertices) {
    if (!covered.contains(v)) subbasis.push_back({v});
  }
  return FiniteSpace::from_subbasis(graph_points(g), subbasis);
}

FiniteSpace face_model(const Graph& g) {
  g.validate();
  const std::size_t nv = g.vertices.size();
  const std::size_t n = nv + g.edges.size();
  std::unordered_map<std::string, std::size_t> vidx;
  for (std::size_t i = 0; i < nv; ++i) vidx[g.vertices[i]] = i;
  std::vector<PointSet> mins(n, PointSet(n));
  for (std::size_t i = 0; i < n; ++i) mins[i].insert(i);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    mins[vidx[g.edges[k].source]].insert(nv + k);
    mins[vidx[g.edges[k].target]].insert(nv + k);
  }
  return FiniteSpace::from_min_opens(graph_points(g), std::move(mins));
}

PointMap PointMap::identity(const FiniteSpace& space) {
  PointMap f;
  for (const auto& p : space.points()) f.assignment.emplace(p, p);
  return f;
}

PointMap PointMap::constant(const FiniteSpace& domain, const std::string& target) {
  PointMap f;
  for (const auto& p : domain.points()) f.assignment.emplace(p, target);
  return f;
}

ContinuityResult is_continuous(const PointMap& f, const FiniteSpace& dom, const FiniteSpace& cod) {
  if (f.assignment.size() != dom.size()) {
    throw Error("invalid_map", "map must be total on the domain and mention only domain points");
  }
  std::vector<std::size_t> image(dom.size());
  for (const auto& [from, to] : f.assignment) {
    if (!dom.has_point(from)) throw Error("invalid_map", "map source '" + from + "' is not a domain point");
    if (!cod.has_point(to)) throw Error("invalid_map", "map target '" + to + "' is not a codomain point");
    image[dom.index_of(from)] = cod.index_of(to);
  }

  // Preimages of the minimal opens suffice: every open is a union of them.
  ContinuityResult result;
  for (std::size_t y = 0; y < cod.size(); ++y) {
    const PointSet& target = cod.min_open(y);
    PointSet pre(dom.size());
    for (std::size_t x = 0; x < dom.size(); ++x) {
      if (target.contains(image[x])) pre.insert(x);
    }
    if (is_open(dom, pre)) continue;
    if (result.continuous || target.count() < result.witness->count()) {
      result.continuous = false;
      result.witness = target;
      result.preimage = std::move(pre);
    }
  }
  return result;
}

}  // namespace qts
