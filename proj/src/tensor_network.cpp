#include "qts/tensor_network.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <set>

namespace qts {

using Scalar = Tensor::Scalar;

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// Advances a mixed-radix counter; returns false after the last combination.
bool advance(std::vector<std::size_t>& counter, const std::vector<std::size_t>& dims) {
  for (std::size_t k = counter.size(); k-- > 0;) {
    if (++counter[k] < dims[k]) return true;
    counter[k] = 0;
  }
  return false;
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<Scalar> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (std::find(shape_.begin(), shape_.end(), 0) != shape_.end()) {
    throw Error("invalid_tensor", "axis sizes must be at least 1");
  }
  if (data_.size() != product(shape_)) {
    throw Error("invalid_tensor", "data length " + std::to_string(data_.size()) + " does not match shape product " +
                                      std::to_string(product(shape_)));
  }
}

std::size_t Tensor::offset(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size()) throw Error("index_out_of_range", "index rank does not match tensor rank");
  std::size_t off = 0;
  for (std::size_t k = 0; k < shape_.size(); ++k) {
    if (index[k] >= shape_[k]) throw Error("index_out_of_range", "index exceeds axis size");
    off = off * shape_[k] + index[k];
  }
  return off;
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape()) throw Error("shape_mismatch", "tensors differ in shape");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

std::size_t TensorNetwork::port_dim(const PortRef& p) const {
  auto it = nodes.find(p.node);
  if (it == nodes.end()) throw Error("invalid_network", "unknown node '" + p.node + "'");
  if (p.port >= it->second.rank()) {
    throw Error("invalid_network", "node '" + p.node + "' has no port " + std::to_string(p.port));
  }
  return it->second.shape()[p.port];
}

void TensorNetwork::validate() const {
  std::set<PortRef> used;
  auto claim = [&](const PortRef& p) {
    port_dim(p);
    if (!used.insert(p).second) {
      throw Error("invalid_network", "port " + p.node + ":" + std::to_string(p.port) + " is used twice");
    }
  };
  for (const auto& e : internal) {
    claim(e.a);
    claim(e.b);
    if (port_dim(e.a) != port_dim(e.b)) {
      throw Error("dimension_mismatch", "edge " + e.a.node + ":" + std::to_string(e.a.port) + " -- " + e.b.node +
                                            ":" + std::to_string(e.b.port) + " joins axes of different size");
    }
  }
  for (const auto& p : external) claim(p);
  std::size_t total = 0;
  for (const auto& [id, t] : nodes) total += t.rank();
  if (used.size() != total) throw Error("invalid_network", "some ports are neither internal nor external");
}

namespace {

// Where each node axis takes its index from during brute-force summation.
struct AxisSource {
  bool external;
  std::size_t slot;
};

struct BrutePlan {
  std::vector<const Tensor*> tensors;
  std::vector<std::vector<AxisSource>> sources;
  std::vector<std::size_t> internal_dims;
  std::vector<std::size_t> external_dims;
};

BrutePlan make_brute_plan(const TensorNetwork& net) {
  net.validate();
  BrutePlan plan;
  std::map<PortRef, AxisSource> where;
  for (std::size_t k = 0; k < net.internal.size(); ++k) {
    where[net.internal[k].a] = {false, k};
    where[net.internal[k].b] = {false, k};
    plan.internal_dims.push_back(net.port_dim(net.internal[k].a));
  }
  for (std::size_t k = 0; k < net.external.size(); ++k) {
    where[net.external[k]] = {true, k};
    plan.external_dims.push_back(net.port_dim(net.external[k]));
  }
  for (const auto& [id, t] : net.nodes) {
    plan.tensors.push_back(&t);
    std::vector<AxisSource> src;
    for (std::size_t p = 0; p < t.rank(); ++p) src.push_back(where.at({id, p}));
    plan.sources.push_back(std::move(src));
  }
  return plan;
}

Scalar brute_sum(const BrutePlan& plan, std::span<const std::size_t> ext) {
  std::vector<std::size_t> internal(plan.internal_dims.size(), 0);
  std::vector<std::size_t> idx;
  Scalar total{0.0};
  do {
    Scalar term{1.0};
    for (std::size_t n = 0; n < plan.tensors.size() && term != Scalar{0.0}; ++n) {
      idx.clear();
      for (const auto& s : plan.sources[n]) idx.push_back(s.external ? ext[s.slot] : internal[s.slot]);
      term *= plan.tensors[n]->at(idx);
    }
    total += term;
  } while (advance(internal, plan.internal_dims));
  return total;
}

}  // namespace

Scalar contract_brute(const TensorNetwork& net, std::span<const std::size_t> assignment) {
  const BrutePlan plan = make_brute_plan(net);
  if (assignment.size() != plan.external_dims.size()) {
    throw Error("missing_index", "assignment must give one index per external port");
  }
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    if (assignment[k] >= plan.external_dims[k]) throw Error("index_out_of_range", "external index out of range");
  }
  return brute_sum(plan, assignment);
}

Scalar contract_brute(const TensorNetwork& net, const std::map<PortRef, std::size_t>& assignment) {
  std::vector<std::size_t> ordered;
  for (const auto& p : net.external) {
    auto it = assignment.find(p);
    if (it == assignment.end()) {
      throw Error("missing_index", "no index for external port " + p.node + ":" + std::to_string(p.port));
    }
    ordered.push_back(it->second);
  }
  if (assignment.size() != ordered.size()) throw Error("missing_index", "assignment names a non-external port");
  return contract_brute(net, ordered);
}

Tensor contract_full(const TensorNetwork& net) {
  const BrutePlan plan = make_brute_plan(net);
  std::vector<Scalar> out;
  out.reserve(product(plan.external_dims));
  std::vector<std::size_t> ext(plan.external_dims.size(), 0);
  do {
    out.push_back(brute_sum(plan, ext));
  } while (advance(ext, plan.external_dims));
  return Tensor(plan.external_dims, std::move(out));
}

namespace {

// Tensor whose axes carry integer labels. Internal edge k is labelled k on
// both ends; external port k is labelled -(k + 1).
struct Labeled {
  std::vector<int> labels;
  std::vector<std::size_t> dims;
  std::vector<Scalar> data;
};

// Contracts every label that appears twice across `inputs`; labels seen once
// survive in order of first appearance.
Labeled einsum(const std::vector<const Labeled*>& inputs) {
  std::vector<int> all;
  std::vector<std::size_t> all_dims;
  std::map<int, int> seen;
  for (const auto* t : inputs) {
    for (std::size_t k = 0; k < t->labels.size(); ++k) {
      if (seen[t->labels[k]]++ == 0) {
        all.push_back(t->labels[k]);
        all_dims.push_back(t->dims[k]);
      }
    }
  }
  Labeled out;
  std::vector<std::size_t> out_pos;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (seen[all[k]] == 1) {
      out.labels.push_back(all[k]);
      out.dims.push_back(all_dims[k]);
      out_pos.push_back(k);
    }
  }
  out.data.assign(product(out.dims), Scalar{0.0});

  std::map<int, std::size_t> slot;
  for (std::size_t k = 0; k < all.size(); ++k) slot[all[k]] = k;
  std::vector<std::vector<std::size_t>> in_slots;
  for (const auto* t : inputs) {
    std::vector<std::size_t> s;
    for (int l : t->labels) s.push_back(slot[l]);
    in_slots.push_back(std::move(s));
  }

  std::vector<std::size_t> counter(all.size(), 0);
  do {
    Scalar term{1.0};
    for (std::size_t n = 0; n < inputs.size(); ++n) {
      std::size_t off = 0;
      for (std::size_t k = 0; k < in_slots[n].size(); ++k) off = off * inputs[n]->dims[k] + counter[in_slots[n][k]];
      term *= inputs[n]->data[off];
    }
    std::size_t off = 0;
    for (std::size_t k = 0; k < out_pos.size(); ++k) off = off * out.dims[k] + counter[out_pos[k]];
    out.data[off] += term;
  } while (advance(counter, all_dims));
  return out;
}

std::map<std::string, Labeled> label_nodes(const TensorNetwork& net) {
  net.validate();
  std::map<PortRef, int> label;
  for (std::size_t k = 0; k < net.internal.size(); ++k) {
    label[net.internal[k].a] = static_cast<int>(k);
    label[net.internal[k].b] = static_cast<int>(k);
  }
  for (std::size_t k = 0; k < net.external.size(); ++k) label[net.external[k]] = -static_cast<int>(k) - 1;

  std::map<std::string, Labeled> out;
  for (const auto& [id, t] : net.nodes) {
    Labeled l;
    l.dims = t.shape();
    l.data = t.data();
    for (std::size_t p = 0; p < t.rank(); ++p) l.labels.push_back(label.at({id, p}));
    out.emplace(id, std::move(l));
  }
  return out;
}

// Entry count of the merge of a and b, and whether they share an edge.
std::pair<std::size_t, bool> merge_cost(const Labeled& a, const Labeled& b) {
  std::map<int, std::pair<int, std::size_t>> count;
  for (const auto* t : {&a, &b}) {
    for (std::size_t k = 0; k < t->labels.size(); ++k) {
      auto& c = count[t->labels[k]];
      c = {c.first + 1, t->dims[k]};
    }
  }
  bool shared = false;
  for (int l : b.labels) shared = shared || std::find(a.labels.begin(), a.labels.end(), l) != a.labels.end();
  std::size_t size = 1;
  for (const auto& [l, c] : count) {
    if (c.first == 1) size *= c.second;
  }
  return {size, shared};
}

}  // namespace

ContractionPlan greedy_order(const TensorNetwork& net) {
  auto work = label_nodes(net);
  ContractionPlan plan;
  while (work.size() > 1) {
    std::optional<std::tuple<bool, std::size_t, std::string, std::string>> best;
    for (auto i = work.begin(); i != work.end(); ++i) {
      for (auto j = std::next(i); j != work.end(); ++j) {
        auto [size, shared] = merge_cost(i->second, j->second);
        // Connected pairs always beat outer products.
        std::tuple<bool, std::size_t, std::string, std::string> cand{!shared, size, i->first, j->first};
        if (!best || cand < *best) best = cand;
      }
    }
    const auto& [outer, size, keep, absorb] = *best;
    plan.push_back({keep, absorb});
    Labeled merged = einsum({&work.at(keep), &work.at(absorb)});
    work.erase(absorb);
    work.at(keep) = std::move(merged);
  }
  return plan;
}

Tensor contract_ordered(const TensorNetwork& net, const ContractionPlan& plan) {
  auto work = label_nodes(net);
  for (const auto& step : plan) {
    auto a = work.find(step.keep);
    auto b = work.find(step.absorb);
    if (a == work.end() || b == work.end() || a == b) {
      throw Error("invalid_plan", "step " + step.keep + " <- " + step.absorb + " does not name two live nodes");
    }
    a->second = einsum({&a->second, &b->second});
    work.erase(b);
  }
  if (work.size() > 1) throw Error("invalid_plan", "plan leaves more than one node uncontracted");
  if (work.empty()) return Tensor::scalar(1.0);

  // Trace leftover self-loops, then order axes as the declared externals.
  Labeled last = einsum({&work.begin()->second});
  const std::size_t n_ext = net.external.size();
  std::vector<std::size_t> dims(n_ext);
  for (std::size_t k = 0; k < last.labels.size(); ++k) {
    const auto e = static_cast<std::size_t>(-last.labels[k] - 1);
    dims[e] = last.dims[k];
  }
  std::vector<Scalar> out(product(dims));
  std::vector<std::size_t> counter(n_ext, 0);
  std::size_t flat = 0;
  do {
    std::size_t off = 0;
    for (std::size_t k = 0; k < last.labels.size(); ++k) {
      off = off * last.dims[k] + counter[static_cast<std::size_t>(-last.labels[k] - 1)];
    }
    out[flat++] = last.data[off];
  } while (advance(counter, dims));
  return Tensor(std::move(dims), std::move(out));
}

TensorNetwork projector_refine(const TensorNetwork& net, const std::string& node, double tolerance) {
  net.validate();
  auto it = net.nodes.find(node);
  if (it == net.nodes.end()) throw Error("invalid_network", "unknown node '" + node + "'");
  const Tensor& p = it->second;
  if (p.rank() != 2 || p.shape()[0] != p.shape()[1]) {
    throw Error("not_square", "node '" + node + "' does not carry a square matrix");
  }
  const std::size_t d = p.shape()[0];
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Scalar pp{0.0};
      for (std::size_t k = 0; k < d; ++k) pp += p.at({i, k}) * p.at({k, j});
      if (std::abs(pp - p.at({i, j})) > tolerance) {
        throw Error("not_projector", "node '" + node + "' is not idempotent");
      }
    }
  }

  std::string copy = node + "'";
  while (net.nodes.contains(copy)) copy += "'";

  TensorNetwork out = net;
  out.nodes.emplace(copy, p);
  // The original port 1 wiring moves to the copy's port 1.
  const PortRef old_out{node, 1};
  const PortRef new_out{copy, 1};
  for (auto& e : out.internal) {
    if (e.a == old_out) e.a = new_out;
    if (e.b == old_out) e.b = new_out;
  }
  for (auto& x : out.external) {
    if (x == old_out) x = new_out;
  }
  out.internal.push_back({old_out, {copy, 0}});
  return out;
}

TensorNetwork teleport_network(const Tensor& psi, const Tensor& m, const Tensor& e) {
  if (psi.shape() != std::vector<std::size_t>{2} || m.shape() != std::vector<std::size_t>{2, 2} ||
      e.shape() != std::vector<std::size_t>{2, 2}) {
    throw Error("shape_mismatch", "teleport network needs psi of shape [2] and 2x2 matrices");
  }
  TensorNetwork net;
  net.nodes.emplace("psi", psi);
  net.nodes.emplace("M", m);
  net.nodes.emplace("E", e);
  net.internal.push_back({{"psi", 0}, {"M", 0}});
  net.internal.push_back({{"M", 1}, {"E", 0}});
  net.external.push_back({"E", 1});
  return net;
}

Tensor cup_tensor() { return Tensor({2, 2}, {1.0, 0.0, 0.0, 1.0}); }

Tensor crossing_tensor() {
  std::vector<Scalar> data(16, Scalar{0.0});
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) data[((a * 2 + b) * 2 + b) * 2 + a] = 1.0;
  }
  return Tensor({2, 2, 2, 2}, std::move(data));
}

}  // namespace qts
