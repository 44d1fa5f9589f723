#pragma once

// Generators and brute-force oracles shared by the unit and acceptance suites.
// Oracles work on raw bitmasks and never call the library's topology code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qts/finite_topology.hpp"
#include "qts/graph_spaces.hpp"
#include "qts/quantum.hpp"
#include "qts/tensor_network.hpp"

namespace qts::testing {

using Mask = std::uint32_t;

inline std::vector<std::string> point_names(std::size_t n, const std::string& prefix = "p") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline Mask to_mask(const PointSet& s) {
  Mask m = 0;
  for (auto i : s.indices()) m |= Mask{1} << i;
  return m;
}

inline PointSet from_mask(std::size_t n, Mask m) {
  PointSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m >> i & 1u) s.insert(i);
  }
  return s;
}

inline std::vector<std::vector<std::string>> masks_to_subbasis(std::size_t n, const std::vector<Mask>& masks,
                                                              const std::vector<std::string>& names) {
  std::vector<std::vector<std::string>> out;
  for (Mask m : masks) {
    std::vector<std::string> set;
    for (std::size_t i = 0; i < n; ++i) {
      if (m >> i & 1u) set.push_back(names[i]);
    }
    out.push_back(std::move(set));
  }
  return out;
}

/// Topology generated by a subbasis the textbook way: X and every finite
/// intersection form a basis, then close under unions.
inline std::set<Mask> generated_topology(std::size_t n, const std::vector<Mask>& subbasis) {
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::set<Mask> basis{full};
  bool grew = true;
  for (Mask b : subbasis) basis.insert(b);
  while (grew) {
    grew = false;
    std::vector<Mask> cur(basis.begin(), basis.end());
    for (Mask a : cur) {
      for (Mask b : cur) grew |= basis.insert(a & b).second;
    }
  }
  std::set<Mask> opens{0};
  grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(opens.begin(), opens.end());
    for (Mask a : cur) {
      for (Mask b : basis) grew |= opens.insert(a | b).second;
    }
  }
  return opens;
}

/// Every family of subsets of an n-point set that contains the empty set and
/// the whole set and is closed under union and intersection (n <= 3).
inline std::vector<std::vector<Mask>> all_topologies(std::size_t n) {
  const Mask full = (Mask{1} << n) - 1;
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::vector<Mask>> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    if (!(fam & 1u) || !(fam >> full & 1u)) continue;
    bool closed = true;
    for (Mask a = 0; a < subsets && closed; ++a) {
      if (!(fam >> a & 1u)) continue;
      for (Mask b = 0; b < subsets && closed; ++b) {
        if (!(fam >> b & 1u)) continue;
        closed = (fam >> (a | b) & 1u) && (fam >> (a & b) & 1u);
      }
    }
    if (!closed) continue;
    std::vector<Mask> t;
    for (Mask a = 0; a < subsets; ++a) {
      if (fam >> a & 1u) t.push_back(a);
    }
    out.push_back(std::move(t));
  }
  return out;
}

/// Clopen-definition connectivity: no proper non-empty subset is both open
/// and closed in the given open family.
inline bool connected_by_clopens(std::size_t n, const std::set<Mask>& opens) {
  const Mask full = (Mask{1} << n) - 1;
  for (Mask u : opens) {
    if (u != 0 && u != full && opens.contains(full & ~u)) return false;
  }
  return true;
}

inline FiniteSpace random_space(std::mt19937_64& rng, std::size_t n, std::size_t subbasis_sets,
                                const std::string& prefix = "p") {
  std::uniform_int_distribution<Mask> pick(0, (Mask{1} << n) - 1);
  std::vector<Mask> sb;
  for (std::size_t k = 0; k < subbasis_sets; ++k) sb.push_back(pick(rng));
  auto names = point_names(n, prefix);
  return FiniteSpace::from_subbasis(names, masks_to_subbasis(n, sb, names));
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t vertices, std::size_t edges) {
  Graph g;
  for (std::size_t v = 0; v < vertices; ++v) g.vertices.push_back("v" + std::to_string(v));
  if (vertices == 0) return g;
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  for (std::size_t e = 0; e < edges; ++e) {
    g.edges.push_back({"e" + std::to_string(e), g.vertices[pick(rng)], g.vertices[pick(rng)]});
  }
  return g;
}

inline Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  return {d(rng), d(rng)};
}

inline TwoQubitMatrix random_matrix(std::mt19937_64& rng) {
  TwoQubitMatrix m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) m(r, c) = random_complex(rng);
  }
  return m;
}

inline TwoQubitMatrix random_unitary(std::mt19937_64& rng) {
  Eigen::HouseholderQR<TwoQubitMatrix> qr(random_matrix(rng));
  return qr.householderQ();
}

inline PureState random_state(std::mt19937_64& rng, std::size_t n) {
  std::vector<Complex> amps(std::size_t{1} << n);
  for (auto& a : amps) a = random_complex(rng);
  return PureState(std::move(amps));
}

/// Four-qubit oracle for swapping: build e (x) e2 on qubits (0,1),(2,3),
/// apply <m| to qubits 1 and 2 and read off the (0,3) matrix.
inline TwoQubitMatrix swap_by_four_qubit_contraction(const TwoQubitMatrix& e, const TwoQubitMatrix& m,
                                                     const TwoQubitMatrix& e2) {
  std::vector<Complex> psi(16);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) psi[i * 8 + j * 4 + k * 2 + l] = e(i, j) * e2(k, l);
  TwoQubitMatrix out = TwoQubitMatrix::Zero();
  for (int idx = 0; idx < 16; ++idx) {
    const int i = idx >> 3 & 1, j = idx >> 2 & 1, k = idx >> 1 & 1, l = idx & 1;
    out(i, l) += m(j, k) * psi[idx];
  }
  return out;
}

inline Tensor to_tensor(const TwoQubitMatrix& m) {
  return Tensor({2, 2}, {m(0, 0), m(0, 1), m(1, 0), m(1, 1)});
}

/// Random network with up to `max_nodes` nodes and axis sizes up to
/// `max_dim`; ports are paired at random into internal edges (self-loops
/// included), leftovers become external. Total summation work is bounded.
inline TensorNetwork random_network(std::mt19937_64& rng, std::size_t max_nodes, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> node_count(1, max_nodes);
  std::uniform_int_distribution<std::size_t> rank(0, 4);
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::bernoulli_distribution make_external(0.25);
  for (;;) {
    TensorNetwork net;
    std::vector<PortRef> ports;
    const std::size_t n = node_count(rng);
    for (std::size_t k = 0; k < n; ++k) {
      const std::string id = "n" + std::to_string(k);
      const std::size_t r = rank(rng);
      std::vector<std::size_t> shape(r, 1);
      net.nodes.emplace(id, Tensor::scalar(1.0));
      for (std::size_t p = 0; p < r; ++p) ports.push_back({id, p});
      net.nodes.at(id) = Tensor(shape, {Complex{1.0}});
    }
    std::shuffle(ports.begin(), ports.end(), rng);
    std::map<PortRef, std::size_t> port_dim;
    while (!ports.empty()) {
      PortRef a = ports.back();
      ports.pop_back();
      if (ports.empty() || make_external(rng)) {
        net.external.push_back(a);
        port_dim[a] = dim(rng);
        continue;
      }
      PortRef b = ports.back();
      ports.pop_back();
      net.internal.push_back({a, b});
      port_dim[a] = port_dim[b] = dim(rng);
    }
    double work = 1.0;
    for (const auto& [p, d] : port_dim) work *= static_cast<double>(d);
    if (work > 1e5) continue;
    for (auto& [id, t] : net.nodes) {
      std::vector<std::size_t> shape;
      for (std::size_t p = 0; p < t.rank(); ++p) shape.push_back(port_dim.at({id, p}));
      std::size_t size = 1;
      for (auto d : shape) size *= d;
      std::vector<Complex> data(size);
      std::uniform_real_distribution<double> unit(-1.0, 1.0);
      for (auto& z : data) z = {unit(rng), unit(rng)};
      t = Tensor(shape, std::move(data));
    }
    return net;
  }
}

}  // namespace qts::testing

namespace qts::testing {

/// Disjoint union: points of `a` then points of `b` (ids must not clash).
inline FiniteSpace disjoint_union(const FiniteSpace& a, const FiniteSpace& b) {
  const std::size_t n = a.size() + b.size();
  std::vector<std::string> names = a.points();
  names.insert(names.end(), b.points().begin(), b.points().end());
  std::vector<PointSet> mins;
  for (const auto& m : a.min_opens()) mins.push_back(m.extended(n));
  for (const auto& m : b.min_opens()) {
    PointSet shifted(n);
    for (auto i : m.indices()) shifted.insert(a.size() + i);
    mins.push_back(std::move(shifted));
  }
  return FiniteSpace::from_min_opens(std::move(names), std::move(mins));
}

inline FiniteSpace random_connected_space(std::mt19937_64& rng, std::size_t n, const std::string& prefix) {
  for (;;) {
    auto s = random_space(rng, n, 1 + rng() % 4, prefix);
    if (is_connected(s)) return s;
  }
}

}  // namespace qts::testing
