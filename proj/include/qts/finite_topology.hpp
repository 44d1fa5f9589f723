#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "qts/error.hpp"

namespace qts {

/// A subset of the points of some FiniteSpace, stored as a bitset indexed by
/// the space's point order. Set algebra is only meaningful between sets of the
/// same ambient space; mismatched sizes are rejected at operation boundaries.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : bits_(universe) {}
  explicit PointSet(boost::dynamic_bitset<> bits) : bits_(std::move(bits)) {}

  static PointSet full(std::size_t universe) {
    PointSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::size_t i) const { return bits_.test(i); }
  void insert(std::size_t i) { bits_.set(i); }
  void erase(std::size_t i) { bits_.reset(i); }

  bool is_subset_of(const PointSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const PointSet& other) const { return bits_.intersects(other.bits_); }

  PointSet complement() const { return PointSet(~bits_); }

  PointSet& operator|=(const PointSet& o) { bits_ |= o.bits_; return *this; }
  PointSet& operator&=(const PointSet& o) { bits_ &= o.bits_; return *this; }
  PointSet& operator-=(const PointSet& o) { bits_ -= o.bits_; return *this; }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }
  friend bool operator==(const PointSet& a, const PointSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const PointSet& a, const PointSet& b) { return a.bits_ < b.bits_; }

  /// Member indices in increasing order.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) {
      out.push_back(i);
    }
    return out;
  }

  /// Grow the ambient universe, keeping members (used when points are appended).
  PointSet extended(std::size_t universe) const {
    auto b = bits_;
    b.resize(universe);
    return PointSet(std::move(b));
  }
  /// Restrict to the first `universe` points.
  PointSet truncated(std::size_t universe) const {
    auto b = bits_;
    b.resize(universe);
    return PointSet(std::move(b));
  }

  const boost::dynamic_bitset<>& bits() const { return bits_; }

 private:
  boost::dynamic_bitset<> bits_;
};

/// A finite topological space held as its minimal open neighbourhoods.
///
/// Every finite space is Alexandrov, so the family {min_open(x)} determines
/// the topology: U is open iff min_open(x) is contained in U for every x in U.
/// Instances are immutable once built.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// Builds the topology generated by `subbasis` (finite intersections then
  /// arbitrary unions). A point covered by no subbasis set has the whole
  /// space as its minimal open.
  static FiniteSpace from_subbasis(std::vector<std::string> points,
                                   const std::vector<std::vector<std::string>>& subbasis);

  /// Builds a space directly from minimal opens. Throws unless the family is
  /// reflexive and satisfies the Alexandrov condition.
  static FiniteSpace from_min_opens(std::vector<std::string> points, std::vector<PointSet> min_opens);

  static FiniteSpace discrete(std::vector<std::string> points);
  static FiniteSpace indiscrete(std::vector<std::string> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& name(std::size_t i) const { return points_.at(i); }
  bool has_point(const std::string& id) const { return index_.contains(id); }
  std::size_t index_of(const std::string& id) const;

  const PointSet& min_open(std::size_t i) const { return min_open_.at(i); }
  const PointSet& min_open(const std::string& id) const { return min_open_.at(index_of(id)); }
  const std::vector<PointSet>& min_opens() const { return min_open_; }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return PointSet::full(size()); }
  PointSet set_of(const std::vector<std::string>& ids) const;
  PointSet set_of(std::initializer_list<std::string> ids) const {
    return set_of(std::vector<std::string>(ids));
  }
  std::vector<std::string> names_of(const PointSet& s) const;

  /// Throws `unknown_point` when `s` does not live in this space.
  void check_member(const PointSet& s) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.points_ == b.points_ && a.min_open_ == b.min_open_;
  }

 private:
  FiniteSpace(std::vector<std::string> points, std::vector<PointSet> min_opens);

  std::vector<std::string> points_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<PointSet> min_open_;
};

bool is_open(const FiniteSpace& space, const PointSet& s);
bool is_closed(const FiniteSpace& space, const PointSet& s);
PointSet interior(const FiniteSpace& space, const PointSet& s);
PointSet closure(const FiniteSpace& space, const PointSet& s);

/// The empty space counts as connected.
bool is_connected(const FiniteSpace& space);
std::vector<PointSet> connected_components(const FiniteSpace& space);

/// Unordered pairs (i < j) with no disjoint open neighbourhoods, i.e. whose
/// minimal opens meet.
std::vector<std::pair<std::size_t, std::size_t>> non_hausdorff_pairs(const FiniteSpace& space);

/// Every open set, deduplicated and sorted by (size, bit pattern). Throws
/// `limit_exceeded` once more than `limit` opens have been produced.
std::vector<PointSet> enumerate_opens(const FiniteSpace& space, std::size_t limit);

/// Subspace topology on `subset` (points keep their relative order).
FiniteSpace subspace(const FiniteSpace& space, const PointSet& subset);

}  // namespace qts
