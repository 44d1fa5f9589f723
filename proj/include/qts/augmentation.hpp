#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qts/finite_topology.hpp"
#include "qts/quantum.hpp"

namespace qts {

/// An entangled pair observed at base points `left` and `right`, welded into
/// the space as the new point `label`.
struct EntanglementLink {
  std::string label;
  std::string left;
  std::string right;
  std::optional<TwoQubitMatrix> state;
};

/// A base space with entanglement links welded in. The new point E of each
/// link gets min_open(E) = min_open(L) ∪ {E} ∪ min_open(R); base points keep
/// their base neighbourhoods. Link points follow the base points in link order.
class AugmentedSpace {
 public:
  const FiniteSpace& base() const { return base_; }
  const std::vector<EntanglementLink>& links() const { return links_; }
  const FiniteSpace& space() const { return space_; }
  const EntanglementLink& link(const std::string& label) const;

  friend AugmentedSpace augment(const FiniteSpace& base, std::vector<EntanglementLink> links);

 private:
  FiniteSpace base_;
  std::vector<EntanglementLink> links_;
  FiniteSpace space_;
};

AugmentedSpace augment(const FiniteSpace& base, std::vector<EntanglementLink> links);

/// Measurement removes the link: the base re-augmented by the other links.
AugmentedSpace collapse_link(const AugmentedSpace& a, const std::string& label);

/// Entanglement swapping: links A-B and B-C are replaced by one link A-C named
/// `new_label`. When both input links carry states the new state is
/// entanglement_swap(E, M, E') with the links oriented so B is the inner
/// index; `measurement` defaults to the identity.
AugmentedSpace swap_links(const AugmentedSpace& a, const std::string& ab, const std::string& bc,
                          const std::string& new_label,
                          const std::optional<TwoQubitMatrix>& measurement = std::nullopt);

}  // namespace qts
