#include "qts/heyting.hpp"

#include <random>
#include <set>
#include <sstream>

namespace qts {

void HeytingAlgebra::require_open(const PointSet& s) const {
  space_.check_member(s);
  if (!is_open(space_, s)) throw Error("not_open", "argument is not an open set");
}

PointSet HeytingAlgebra::negation(const PointSet& u) const {
  require_open(u);
  return interior(space_, u.complement());
}

PointSet HeytingAlgebra::implication(const PointSet& u, const PointSet& v) const {
  require_open(u);
  require_open(v);
  return interior(space_, u.complement() | v);
}

bool HeytingAlgebra::is_boolean() const {
  for (const auto& m : space_.min_opens()) {
    if (!is_closed(space_, m)) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kMaxTriples = 1u << 18;

std::string describe(const FiniteSpace& s, const PointSet& p) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& n : s.names_of(p)) {
    out << (first ? "" : ",") << n;
    first = false;
  }
  out << '}';
  return out.str();
}

std::vector<PointSet> sample_opens(const FiniteSpace& space, std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::set<PointSet> picked{space.empty_set(), space.full_set()};
  for (const auto& m : space.min_opens()) picked.insert(m);
  for (std::size_t k = 0; k < samples; ++k) {
    PointSet u = space.empty_set();
    for (const auto& m : space.min_opens()) {
      if (coin(rng)) u |= m;
    }
    picked.insert(std::move(u));
  }
  return {picked.begin(), picked.end()};
}

}  // namespace

HeytingReport verify_heyting_laws(const HeytingAlgebra& h, std::size_t limit, std::uint64_t seed,
                                  std::size_t samples) {
  const FiniteSpace& space = h.space();
  HeytingReport report;
  std::vector<PointSet> opens;
  try {
    opens = enumerate_opens(space, limit);
  } catch (const Error& e) {
    if (e.code() != "limit_exceeded") throw;
    report.exhaustive = false;
    opens = sample_opens(space, seed, samples);
  }
  report.opens_checked = opens.size();
  report.boolean = h.is_boolean();

  auto fail = [&](const std::string& what) { report.counterexamples.push_back(what); };

  for (const auto& u : opens) {
    const PointSet nu = h.negation(u);
    if (h.negation(h.negation(nu)) != nu) fail("~~~U != ~U at U=" + describe(space, u));
    if (u.intersects(nu)) fail("U and ~U meet at U=" + describe(space, u));
    if (report.boolean && nu != u.complement()) fail("Boolean algebra but ~U != U^c at U=" + describe(space, u));
  }

  auto check_triple = [&](const PointSet& u, const PointSet& v, const PointSet& w, const PointSet& imp) {
    ++report.triples_checked;
    const bool lhs = (w & u).is_subset_of(v);
    const bool rhs = w.is_subset_of(imp);
    if (lhs != rhs) {
      fail("adjunction fails at U=" + describe(space, u) + " V=" + describe(space, v) + " W=" + describe(space, w));
    }
  };

  const std::size_t n = opens.size();
  if (n * n * n <= kMaxTriples) {
    for (const auto& u : opens) {
      for (const auto& v : opens) {
        const PointSet imp = h.implication(u, v);
        for (const auto& w : opens) check_triple(u, v, w, imp);
      }
    }
  } else {
    report.adjunction_exhaustive = false;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < kMaxTriples; ++k) {
      const auto& u = opens[pick(rng)];
      const auto& v = opens[pick(rng)];
      check_triple(u, v, opens[pick(rng)], h.implication(u, v));
    }
  }
  return report;
}

}  // namespace qts
