#include "qts/finite_topology.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace qts {

FiniteSpace::FiniteSpace(std::vector<std::string> points, std::vector<PointSet> min_opens)
    : points_(std::move(points)), min_open_(std::move(min_opens)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!index_.emplace(points_[i], i).second) {
      throw Error("duplicate_point", "duplicate point id '" + points_[i] + "'");
    }
  }
}

std::size_t FiniteSpace::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error("unknown_point", "unknown point '" + id + "'");
  return it->second;
}

PointSet FiniteSpace::set_of(const std::vector<std::string>& ids) const {
  PointSet s(size());
  for (const auto& id : ids) s.insert(index_of(id));
  return s;
}

std::vector<std::string> FiniteSpace::names_of(const PointSet& s) const {
  check_member(s);
  std::vector<std::string> out;
  for (auto i : s.indices()) out.push_back(points_[i]);
  return out;
}

void FiniteSpace::check_member(const PointSet& s) const {
  if (s.universe() != size()) {
    throw Error("unknown_point", "point set over " + std::to_string(s.universe()) +
                                     " points used in a space of " + std::to_string(size()));
  }
}

FiniteSpace FiniteSpace::from_subbasis(std::vector<std::string> points,
                                       const std::vector<std::vector<std::string>>& subbasis) {
  const std::size_t n = points.size();
  FiniteSpace shell(std::move(points), std::vector<PointSet>(n, PointSet::full(n)));
  for (const auto& members : subbasis) {
    PointSet b = shell.set_of(members);
    for (auto x : b.indices()) shell.min_open_[x] &= b;
  }
  return shell;
}

FiniteSpace FiniteSpace::from_min_opens(std::vector<std::string> points, std::vector<PointSet> min_opens) {
  const std::size_t n = points.size();
  if (min_opens.size() != n) {
    throw Error("invalid_space", "expected one minimal open per point");
  }
  FiniteSpace space(std::move(points), std::move(min_opens));
  for (std::size_t x = 0; x < n; ++x) {
    const PointSet& ux = space.min_open_[x];
    space.check_member(ux);
    if (!ux.contains(x)) {
      throw Error("invalid_space", "minimal open of '" + space.points_[x] + "' does not contain it");
    }
    for (auto y : ux.indices()) {
      if (!space.min_open_[y].is_subset_of(ux)) {
        throw Error("invalid_space", "Alexandrov condition fails at '" + space.points_[x] + "' via '" +
                                         space.points_[y] + "'");
      }
    }
  }
  return space;
}

FiniteSpace FiniteSpace::discrete(std::vector<std::string> points) {
  const std::size_t n = points.size();
  std::vector<PointSet> mins(n, PointSet(n));
  for (std::size_t i = 0; i < n; ++i) mins[i].insert(i);
  return FiniteSpace(std::move(points), std::move(mins));
}

FiniteSpace FiniteSpace::indiscrete(std::vector<std::string> points) {
  const std::size_t n = points.size();
  return FiniteSpace(std::move(points), std::vector<PointSet>(n, PointSet::full(n)));
}

bool is_open(const FiniteSpace& space, const PointSet& s) {
  space.check_member(s);
  for (auto x : s.indices()) {
    if (!space.min_open(x).is_subset_of(s)) return false;
  }
  return true;
}

bool is_closed(const FiniteSpace& space, const PointSet& s) {
  space.check_member(s);
  return is_open(space, s.complement());
}

PointSet interior(const FiniteSpace& space, const PointSet& s) {
  space.check_member(s);
  PointSet out(space.size());
  for (auto x : s.indices()) {
    if (space.min_open(x).is_subset_of(s)) out.insert(x);
  }
  return out;
}

PointSet closure(const FiniteSpace& space, const PointSet& s) {
  space.check_member(s);
  PointSet out(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (space.min_open(x).intersects(s)) out.insert(x);
  }
  return out;
}

std::vector<PointSet> connected_components(const FiniteSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y : space.min_open(x).indices()) {
      auto rx = find(x), ry = find(y);
      if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    }
  }
  // Components come out ordered by their first point.
  std::vector<PointSet> comps;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    auto r = find(x);
    if (slot[r] == n) {
      slot[r] = comps.size();
      comps.emplace_back(n);
    }
    comps[slot[r]].insert(x);
  }
  return comps;
}

bool is_connected(const FiniteSpace& space) { return connected_components(space).size() <= 1; }

std::vector<std::pair<std::size_t, std::size_t>> non_hausdorff_pairs(const FiniteSpace& space) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      if (space.min_open(i).intersects(space.min_open(j))) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<PointSet> enumerate_opens(const FiniteSpace& space, std::size_t limit) {
  std::set<PointSet> seen;
  std::deque<PointSet> frontier;
  auto admit = [&](PointSet s) {
    if (seen.insert(s).second) {
      if (seen.size() > limit) {
        throw Error("limit_exceeded", "open family exceeds limit of " + std::to_string(limit));
      }
      frontier.push_back(std::move(s));
    }
  };
  admit(space.empty_set());
  while (!frontier.empty()) {
    PointSet cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t x = 0; x < space.size(); ++x) {
      if (!cur.contains(x)) admit(cur | space.min_open(x));
    }
  }
  std::vector<PointSet> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const PointSet& a, const PointSet& b) { return a.count() < b.count(); });
  return out;
}

FiniteSpace subspace(const FiniteSpace& space, const PointSet& subset) {
  space.check_member(subset);
  const auto keep = subset.indices();
  std::vector<std::size_t> remap(space.size(), space.size());
  std::vector<std::string> names;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    remap[keep[k]] = k;
    names.push_back(space.name(keep[k]));
  }
  std::vector<PointSet> mins;
  for (auto x : keep) {
    PointSet m(keep.size());
    for (auto y : (space.min_open(x) & subset).indices()) m.insert(remap[y]);
    mins.push_back(std::move(m));
  }
  return FiniteSpace::from_min_opens(std::move(names), std::move(mins));
}

}  // namespace qts
