#include <doctest.h>

#include "support.hpp"

using namespace qts;
using namespace qts::testing;

namespace {

FiniteSpace sierpinski() { return FiniteSpace::from_subbasis({"x", "y"}, {{"x"}}); }

// Finite model of [0,1] split at 1/2: u = [0,1/2), m = {1/2}, v = (1/2,1].
FiniteSpace interval_model() { return FiniteSpace::from_subbasis({"u", "m", "v"}, {{"u"}, {"v"}}); }

std::set<Mask> opens_as_masks(const FiniteSpace& s) {
  std::set<Mask> out;
  for (const auto& u : enumerate_opens(s, 1u << 16)) out.insert(to_mask(u));
  return out;
}

}  // namespace

TEST_CASE("from_subbasis computes minimal opens") {
  SUBCASE("single point with empty subbasis") {
    auto s = FiniteSpace::from_subbasis({"a"}, {});
    CHECK(s.min_open("a") == s.set_of({"a"}));
  }
  SUBCASE("sierpinski") {
    auto s = sierpinski();
    CHECK(s.min_open("x") == s.set_of({"x"}));
    CHECK(s.min_open("y") == s.set_of({"x", "y"}));
    CHECK(opens_as_masks(s) == generated_topology(2, {0b01}));
  }
  SUBCASE("shared vertex of two edge neighbourhoods is open") {
    auto s = FiniteSpace::from_subbasis({"a", "e1", "b", "e2", "c"}, {{"a", "e1", "b"}, {"b", "e2", "c"}});
    CHECK(s.min_open("b") == s.set_of({"b"}));
    CHECK(s.min_open("e1") == s.set_of({"a", "e1", "b"}));
  }
  SUBCASE("unknown point") {
    CHECK_THROWS_AS(FiniteSpace::from_subbasis({"a"}, {{"b"}}), Error);
  }
  SUBCASE("duplicates are harmless") {
    auto s = FiniteSpace::from_subbasis({"a", "b"}, {{"a"}, {"a"}, {"a", "b"}});
    CHECK(s.min_open("a") == s.set_of({"a"}));
  }
}

TEST_CASE("from_subbasis agrees with the generated topology on random subbases") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::uniform_int_distribution<Mask> pick(0, (Mask{1} << n) - 1);
    std::vector<Mask> sb(rng() % 5);
    for (auto& m : sb) m = pick(rng);
    auto names = point_names(n);
    auto s = FiniteSpace::from_min_opens(names, FiniteSpace::from_subbasis(names, masks_to_subbasis(n, sb, names)).min_opens());
    const auto oracle = generated_topology(n, sb);
    REQUIRE(opens_as_masks(s) == oracle);
    for (Mask b : sb) CHECK(is_open(s, from_mask(n, b)));
    for (const auto& m : s.min_opens()) CHECK(is_open(s, m));
  }
}

TEST_CASE("from_min_opens validates the minimal-open family") {
  const std::size_t n = 3;
  CHECK_NOTHROW(FiniteSpace::from_min_opens({"a", "b", "c"}, {from_mask(n, 0b011), from_mask(n, 0b010), from_mask(n, 0b100)}));
  // Not reflexive: a is missing from its own minimal open.
  CHECK_THROWS_AS(FiniteSpace::from_min_opens({"a", "b", "c"}, {from_mask(n, 0b010), from_mask(n, 0b010), from_mask(n, 0b100)}), Error);
  // b lies in U_a but U_b = {b, c} is not inside U_a.
  CHECK_THROWS_AS(FiniteSpace::from_min_opens({"a", "b", "c"}, {from_mask(n, 0b011), from_mask(n, 0b110), from_mask(n, 0b100)}), Error);
  CHECK_THROWS_AS(FiniteSpace::from_min_opens({"a", "b"}, {from_mask(2, 0b01)}), Error);
  CHECK_THROWS_AS(FiniteSpace::from_min_opens({"a", "a"}, {from_mask(2, 0b01), from_mask(2, 0b10)}), Error);
}

TEST_CASE("is_open, interior and closure") {
  auto s = sierpinski();
  CHECK(is_open(s, s.set_of({"x"})));
  CHECK_FALSE(is_open(s, s.set_of({"y"})));
  CHECK(is_open(s, s.full_set()));
  CHECK(interior(s, s.set_of({"y"})).empty());
  CHECK(interior(s, s.full_set()) == s.full_set());
  CHECK(closure(s, s.set_of({"x"})) == s.full_set());
  CHECK(closure(s, s.empty_set()).empty());

  auto iv = interval_model();
  CHECK(interior(iv, iv.set_of({"m"})).empty());
  CHECK(closure(iv, iv.set_of({"u"})) == iv.set_of({"u", "m"}));

  CHECK_THROWS_AS(is_open(s, PointSet(3)), Error);
  CHECK_THROWS_AS(interior(s, PointSet(1)), Error);
}

TEST_CASE("interior is idempotent and dual to closure on every subset") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    auto s = random_space(rng, n, rng() % 4);
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      const PointSet p = from_mask(n, m);
      const PointSet in = interior(s, p);
      CHECK(interior(s, in) == in);
      CHECK(is_open(s, in));
      CHECK(closure(s, p) == interior(s, p.complement()).complement());
    }
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(sierpinski()));
  CHECK_FALSE(is_connected(FiniteSpace::discrete({"x", "y"})));
  CHECK(is_connected(FiniteSpace{}));
  CHECK(is_connected(FiniteSpace::from_subbasis({"a", "b", "e"}, {{"a", "b", "e"}})));

  auto comps = connected_components(FiniteSpace::discrete({"x", "y"}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].count() == 1);
  CHECK(connected_components(sierpinski()).size() == 1);
  CHECK(connected_components(FiniteSpace{}).empty());
}

TEST_CASE("reachability connectivity matches the clopen definition") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    auto s = random_space(rng, n, rng() % 6);
    const auto opens = opens_as_masks(s);
    CHECK(is_connected(s) == connected_by_clopens(n, opens));
    // Components partition the points and are each connected.
    PointSet seen(n);
    for (const auto& c : connected_components(s)) {
      CHECK_FALSE(seen.intersects(c));
      seen |= c;
      CHECK(is_open(s, c));
      CHECK(is_closed(s, c));
      CHECK(is_connected(subspace(s, c)));
    }
    CHECK(seen == s.full_set());
  }
}

TEST_CASE("non_hausdorff_pairs") {
  CHECK(non_hausdorff_pairs(FiniteSpace::discrete({"a", "b", "c"})).empty());
  auto s = sierpinski();
  auto pairs = non_hausdorff_pairs(s);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair<std::size_t, std::size_t>{0, 1});

  // Empty exactly when discrete; pairs are exactly those without disjoint opens.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    auto sp = random_space(rng, n, rng() % 6);
    const auto opens = opens_as_masks(sp);
    std::set<std::pair<std::size_t, std::size_t>> expected;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        bool separated = false;
        for (Mask u : opens) {
          for (Mask v : opens) {
            separated |= (u >> i & 1u) && (v >> j & 1u) && (u & v) == 0;
          }
        }
        if (!separated) expected.emplace(i, j);
      }
    }
    auto got = non_hausdorff_pairs(sp);
    CHECK(std::set<std::pair<std::size_t, std::size_t>>(got.begin(), got.end()) == expected);
    CHECK(got.empty() == (opens.size() == (std::size_t{1} << n)));
  }
}

TEST_CASE("enumerate_opens") {
  CHECK(enumerate_opens(sierpinski(), 10).size() == 3);
  CHECK(enumerate_opens(FiniteSpace::indiscrete({"a", "b"}), 10).size() == 2);
  auto iv = interval_model();
  auto opens = enumerate_opens(iv, 10);
  REQUIRE(opens.size() == 5);
  std::set<Mask> got;
  for (const auto& u : opens) got.insert(to_mask(u));
  CHECK(got == std::set<Mask>{0b000, 0b001, 0b100, 0b101, 0b111});
  CHECK_THROWS_AS(enumerate_opens(FiniteSpace::discrete(point_names(5)), 31), Error);
  CHECK(enumerate_opens(FiniteSpace::discrete(point_names(5)), 32).size() == 32);
}
