#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qts/error.hpp"

namespace qts {

/// Dense complex tensor in row-major order. A rank-0 tensor holds one scalar.
class Tensor {
 public:
  using Scalar = std::complex<double>;

  Tensor() : data_{Scalar{1.0}} {}
  Tensor(std::vector<std::size_t> shape, std::vector<Scalar> data);

  static Tensor scalar(Scalar v) { return Tensor({}, {v}); }
  static Tensor matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data) {
    return Tensor({rows, cols}, std::move(data));
  }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  const std::vector<Scalar>& data() const { return data_; }

  std::size_t offset(std::span<const std::size_t> index) const;
  const Scalar& at(std::span<const std::size_t> index) const { return data_[offset(index)]; }
  const Scalar& at(std::initializer_list<std::size_t> index) const {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::vector<std::size_t> shape_;
  std::vector<Scalar> data_;
};

/// Largest entrywise |a - b|; throws `shape_mismatch` when shapes differ.
double max_abs_diff(const Tensor& a, const Tensor& b);

struct PortRef {
  std::string node;
  std::size_t port = 0;

  friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

struct InternalEdge {
  PortRef a;
  PortRef b;
};

/// Nodes carry tensors whose axes are the node's ports. Each port is either
/// joined to exactly one other port by an internal edge or listed as external.
struct TensorNetwork {
  std::map<std::string, Tensor> nodes;
  std::vector<InternalEdge> internal;
  std::vector<PortRef> external;

  /// Throws `invalid_network` on dangling or doubly used ports and
  /// `dimension_mismatch` when an internal edge joins axes of different size.
  void validate() const;
  std::size_t port_dim(const PortRef& p) const;
};

/// Sum over every internal index assignment of the product of node entries,
/// with external ports fixed by `assignment` (aligned with net.external).
/// Cost is exponential in the number of internal edges.
Tensor::Scalar contract_brute(const TensorNetwork& net, std::span<const std::size_t> assignment);
Tensor::Scalar contract_brute(const TensorNetwork& net, const std::map<PortRef, std::size_t>& assignment);

/// The tensor over external ports (in declared order) whose entries are
/// contract_brute at each assignment. The empty network gives scalar 1.
Tensor contract_full(const TensorNetwork& net);

/// One pairwise merge: `absorb` is contracted into `keep`, which keeps its id.
struct ContractionStep {
  std::string keep;
  std::string absorb;

  friend bool operator==(const ContractionStep&, const ContractionStep&) = default;
};
using ContractionPlan = std::vector<ContractionStep>;

/// Greedy plan: at each step merge the pair of nodes sharing an edge whose
/// result has the fewest entries, ties broken by the lexicographic id pair.
/// When no remaining pair shares an edge, disconnected pairs are merged as
/// outer products under the same rule.
ContractionPlan greedy_order(const TensorNetwork& net);

/// Executes `plan` pairwise. Throws `invalid_plan` if a step names a missing
/// node or more than one node is left at the end.
Tensor contract_ordered(const TensorNetwork& net, const ContractionPlan& plan);

/// Splits the square-matrix node `node` holding a projector P (PP = P within
/// `tolerance`) into P followed by a fresh copy of P joined by a new edge.
/// The copy is named node + "'" (primes added until unused).
TensorNetwork projector_refine(const TensorNetwork& net, const std::string& node, double tolerance = 1e-9);

/// psi -- M -- E with E's second port external: contraction gives
/// sum_ij psi_i M_ij E_jk. Node ids are "psi", "M" and "E".
TensorNetwork teleport_network(const Tensor& psi, const Tensor& m, const Tensor& e);

/// Named fixtures: the cup/cap (Bell) tensor and the axis-exchange crossing.
Tensor cup_tensor();
Tensor crossing_tensor();

}  // namespace qts
