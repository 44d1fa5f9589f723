#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qts/finite_topology.hpp"

namespace qts {

/// The Heyting algebra of open sets of a finite space. Meet and join are
/// plain intersection and union; arguments must be open.
class HeytingAlgebra {
 public:
  explicit HeytingAlgebra(FiniteSpace space) : space_(std::move(space)) {}

  const FiniteSpace& space() const { return space_; }

  /// Pseudo-complement: the interior of the set complement.
  PointSet negation(const PointSet& u) const;
  /// Relative pseudo-complement Int(U^c ∪ V), the largest open W with W ∩ U ⊆ V.
  PointSet implication(const PointSet& u, const PointSet& v) const;
  /// True iff every open set is closed. Checked on minimal opens only.
  bool is_boolean() const;

 private:
  void require_open(const PointSet& s) const;

  FiniteSpace space_;
};

struct HeytingReport {
  bool exhaustive = true;      // false when the open family overflowed and was sampled
  bool adjunction_exhaustive = true;  // false when (U, V, W) triples were sampled
  std::size_t opens_checked = 0;
  std::size_t triples_checked = 0;
  bool boolean = false;
  std::vector<std::string> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

inline constexpr std::size_t kDefaultOpenLimit = 4096;

/// Checks triple negation, the implication adjunction, U ∩ ~U = ∅ and (for
/// Boolean algebras) ~U = U^c over every open, or over `samples` random unions
/// of minimal opens when the family has more than `limit` members. Adjunction
/// triples are enumerated while there are at most 2^18 of them, else sampled.
HeytingReport verify_heyting_laws(const HeytingAlgebra& h, std::size_t limit = kDefaultOpenLimit,
                                  std::uint64_t seed = 0, std::size_t samples = 64);

}  // namespace qts
