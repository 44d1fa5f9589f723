#include "qts/augmentation.hpp"

#include <algorithm>
#include <unordered_set>

namespace qts {

const EntanglementLink& AugmentedSpace::link(const std::string& label) const {
  auto it = std::find_if(links_.begin(), links_.end(), [&](const auto& l) { return l.label == label; });
  if (it == links_.end()) throw Error("unknown_link", "no link labelled '" + label + "'");
  return *it;
}

AugmentedSpace augment(const FiniteSpace& base, std::vector<EntanglementLink> links) {
  const std::size_t nb = base.size();
  const std::size_t n = nb + links.size();

  std::vector<std::string> points = base.points();
  std::unordered_set<std::string> labels;
  for (const auto& l : links) {
    if (base.has_point(l.label) || !labels.insert(l.label).second) {
      throw Error("label_collision", "link label '" + l.label + "' is already a point");
    }
    if (!base.has_point(l.left) || !base.has_point(l.right)) {
      throw Error("unknown_point", "link '" + l.label + "' has an endpoint outside the base space");
    }
    points.push_back(l.label);
  }

  std::vector<PointSet> mins;
  mins.reserve(n);
  for (std::size_t x = 0; x < nb; ++x) mins.push_back(base.min_open(x).extended(n));
  for (std::size_t k = 0; k < links.size(); ++k) {
    PointSet m = (base.min_open(links[k].left) | base.min_open(links[k].right)).extended(n);
    m.insert(nb + k);
    mins.push_back(std::move(m));
  }

  AugmentedSpace a;
  a.base_ = base;
  a.links_ = std::move(links);
  a.space_ = FiniteSpace::from_min_opens(std::move(points), std::move(mins));
  return a;
}

AugmentedSpace collapse_link(const AugmentedSpace& a, const std::string& label) {
  a.link(label);
  std::vector<EntanglementLink> rest;
  for (const auto& l : a.links()) {
    if (l.label != label) rest.push_back(l);
  }
  return augment(a.base(), std::move(rest));
}

AugmentedSpace swap_links(const AugmentedSpace& a, const std::string& ab, const std::string& bc,
                          const std::string& new_label, const std::optional<TwoQubitMatrix>& measurement) {
  if (ab == bc) throw Error("invalid_swap", "swap needs two distinct links");
  EntanglementLink first = a.link(ab);
  EntanglementLink second = a.link(bc);

  // Orient first as (A, B) and second as (B, C). Reversing a link transposes
  // its state matrix.
  auto flip = [](EntanglementLink& l) {
    std::swap(l.left, l.right);
    if (l.state) l.state = l.state->transpose().eval();
  };
  if (first.right == second.left) {
  } else if (first.right == second.right) {
    flip(second);
  } else if (first.left == second.left) {
    flip(first);
  } else if (first.left == second.right) {
    flip(first);
    flip(second);
  } else {
    throw Error("no_shared_site", "links '" + ab + "' and '" + bc + "' share no site");
  }

  EntanglementLink joined{new_label, first.left, second.right, std::nullopt};
  if (first.state && second.state) {
    joined.state = entanglement_swap(*first.state, measurement.value_or(TwoQubitMatrix::Identity()),
                                     *second.state);
  }

  std::vector<EntanglementLink> links;
  for (const auto& l : a.links()) {
    if (l.label != ab && l.label != bc) links.push_back(l);
  }
  links.push_back(std::move(joined));
  return augment(a.base(), std::move(links));
}

}  // namespace qts
