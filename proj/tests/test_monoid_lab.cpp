#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "synclab/analysis.hpp"
#include "synclab/errors.hpp"
#include "synclab/families.hpp"
#include "synclab/monoid.hpp"
#include "synclab/permutation_group.hpp"

using namespace synclab;

namespace {

std::vector<oracle::Map> element_maps(const MonoidTable& m) {
  std::vector<oracle::Map> out;
  for (const auto& e : m.elements()) out.push_back(oracle::to_map(e));
  return out;
}

// Closure of a subset of elements (as bit positions) under composition.
std::uint64_t closure_mask(const std::vector<oracle::Map>& elements, std::uint64_t subset, std::size_t n) {
  std::vector<oracle::Map> gens;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (subset >> i & 1) gens.push_back(elements[i]);
  std::uint64_t out = 0;
  for (const auto& e : oracle::monoid(gens, n))
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == e.map) out |= 1ULL << i;
  return out;
}

struct BruteGeneratingSets {
  std::vector<std::uint64_t> minimal;
  std::size_t max_rt = 0;
  bool every_set_has_top_one_point = true;
};

// Every subset of M \ {1}; small monoids only.
BruteGeneratingSets brute_generating_sets(const MonoidTable& m, std::size_t top_rank) {
  const auto n = m.degree();
  const auto elements = element_maps(m);
  const std::uint64_t all = (1ULL << elements.size()) - 1;
  BruteGeneratingSets out;
  std::vector<std::uint64_t> generating;
  for (std::uint64_t subset = 0; subset < (1ULL << elements.size()); subset += 2) {
    if (closure_mask(elements, subset, n) != all) continue;
    generating.push_back(subset);
    std::vector<oracle::Map> gens;
    bool has_top = false;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!(subset >> i & 1)) continue;
      gens.push_back(elements[i]);
      const auto p = map_profile(m.elements()[i]);
      if (p.one_point && p.rank == top_rank) has_top = true;
    }
    if (!has_top) out.every_set_has_top_one_point = false;
    if (const auto rt = oracle::reset_threshold(gens, n)) out.max_rt = std::max(out.max_rt, *rt);
  }
  for (auto s : generating) {
    bool minimal = true;
    for (auto t : generating)
      if (t != s && (t & s) == t) minimal = false;
    if (minimal) out.minimal.push_back(s);
  }
  return out;
}

}  // namespace

TEST_SUITE("monoid-lab") {

TEST_CASE("monoid enumeration examples") {
  CHECK(generate_monoid(Automaton(3, {{"e", Transformation::identity(3)}}), 100).size() == 1);
  CHECK(generate_monoid(Automaton(3, {{"a", Transformation{2, 3, 1}}}), 100).size() == 3);
  const auto constants = generate_monoid(Automaton(3, {{"c1", Transformation::constant(3, 1)},
                                                       {"c2", Transformation::constant(3, 2)},
                                                       {"c3", Transformation::constant(3, 3)}}),
                                         100);
  CHECK(constants.size() == 4);
  CHECK(constants.elements().front() == Transformation::identity(3));
  CHECK(constants.length(0) == 0);

  try {
    (void)generate_monoid(full_monoid_generators(4), 50);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.partial_count() > 0);
    CHECK(e.partial_count() <= 51);
  }
  CHECK_THROWS_AS(generate_monoid(full_monoid_generators(3), 0), DomainError);
}

TEST_CASE("monoid contents and lengths match element enumeration") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const std::vector<oracle::Map> gens{oracle::random_map(n, rng), oracle::random_map(n, rng)};
    const auto m = generate_monoid(oracle::automaton(gens), 100000);
    const auto expected = oracle::monoid(gens, n);
    REQUIRE(m.size() == expected.size());
    for (const auto& e : expected) {
      const auto index = m.index_of(oracle::to_transformation(e.map));
      REQUIRE(index);
      CHECK(m.length(*index) == e.length);
    }
  }
}

TEST_CASE("word lengths are the same when words grow on the left") {
  const auto maps = oracle::all_maps(3);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      const std::vector<oracle::Map> gens{maps[i], maps[j]};
      const auto m = generate_monoid(oracle::automaton(gens), 1000);
      for (const auto& e : oracle::monoid(gens, 3, true)) CHECK(m.length(*m.index_of(oracle::to_transformation(e.map))) == e.length);
    }
  }
}

TEST_CASE("monoid statistics") {
  const auto end3 = generate_monoid(full_monoid_generators(3), 1000);
  const auto s = monoid_stats(end3);
  CHECK(s.size == 27);
  CHECK(s.sr == 2u);
  CHECK(s.has_one_point_of_rank_sr);
  CHECK(s.synchronizing);

  const auto z3 = monoid_stats(generate_monoid(Automaton(3, {{"a", Transformation{2, 3, 1}}}), 100));
  CHECK_FALSE(z3.sr);
  CHECK_FALSE(z3.synchronizing);

  const auto c = monoid_stats(generate_monoid(Automaton(3, {{"c", Transformation::constant(3, 2)}}), 100));
  CHECK(c.sr == 1u);
  CHECK(c.synchronizing);
}

TEST_CASE("irredundant generating sets match subset enumeration") {
  for (const auto& a : {build_family(FamilyKind::rn, 3), build_family(FamilyKind::cerny, 2),
                        Automaton(3, {{"c1", Transformation::constant(3, 1)}, {"c2", Transformation::constant(3, 2)},
                                      {"c3", Transformation::constant(3, 3)}}),
                        Automaton(3, {{"a", Transformation{2, 1, 3}}, {"b", Transformation{1, 1, 3}}})}) {
    const auto m = generate_monoid(a, 1000);
    REQUIRE(m.size() <= 20);
    const auto top = monoid_stats(m).sr.value_or(0);
    const auto brute = brute_generating_sets(m, top);
    std::set<std::uint64_t> got;
    for (const auto& set : irredundant_generating_sets(m)) {
      std::uint64_t mask = 0;
      for (auto i : set) mask |= 1ULL << i;
      got.insert(mask);
    }
    CHECK(got == std::set<std::uint64_t>(brute.minimal.begin(), brute.minimal.end()));
    if (monoid_stats(m).synchronizing) CHECK(monoid_reset_threshold(m).value == brute.max_rt);
  }
}

TEST_CASE("monoid reset thresholds") {
  const auto constants = generate_monoid(Automaton(3, {{"c1", Transformation::constant(3, 1)},
                                                       {"c2", Transformation::constant(3, 2)},
                                                       {"c3", Transformation::constant(3, 3)}}),
                                         100);
  CHECK(monoid_reset_threshold(constants).value == 1);

  const auto r3 = generate_monoid(build_family(FamilyKind::rn, 3), 100);
  CHECK(r3.size() == 7);
  const auto rt = monoid_reset_threshold(r3);
  CHECK(rt.value == 3);
  CHECK(rt.generating_sets > 0);
  CHECK(exact_reset_threshold(automaton_on(r3, rt.witness))->length == 3);

  const auto end3 = generate_monoid(full_monoid_generators(3), 1000);
  const auto v = monoid_reset_threshold(end3).value;
  CHECK(v >= 3);
  CHECK(v <= 5);

  CHECK_THROWS_AS(monoid_reset_threshold(generate_monoid(Automaton(3, {{"a", Transformation{2, 3, 1}}}), 100)), DomainError);
  Gates tiny;
  tiny.generating_set_max_monoid = 10;
  CHECK_THROWS_AS(monoid_reset_threshold(end3, tiny), CapacityError);
}

TEST_CASE("top-rank one-point maps in every generating set") {
  const auto end3 = generate_monoid(full_monoid_generators(3), 1000);
  CHECK(lemma15_check(end3) == Lemma15Outcome::holds);
  const auto r3 = generate_monoid(build_family(FamilyKind::rn, 3), 100);
  CHECK(lemma15_check(r3) == Lemma15Outcome::holds);
  CHECK(brute_generating_sets(r3, *monoid_stats(r3).sr).every_set_has_top_one_point);
  CHECK(lemma15_check(generate_monoid(Automaton(3, {{"a", Transformation{2, 3, 1}}}), 100)) ==
        Lemma15Outcome::not_applicable);
}

TEST_CASE("quadratic bound applicability") {
  CHECK(quadratic_monoid_bound_applies(generate_monoid(full_monoid_generators(3), 1000)));
  CHECK_FALSE(quadratic_monoid_bound_applies(generate_monoid(build_family(FamilyKind::rn, 3), 100)));
  CHECK_FALSE(quadratic_monoid_bound_applies(generate_monoid(build_family(FamilyKind::cerny, 2), 100)));
}

TEST_CASE("families") {
  const auto r4 = build_family(FamilyKind::rn, 4);
  REQUIRE(r4.alphabet_size() == 3);
  CHECK(r4.generators()[0].map == Transformation{1, 1, 3, 4});
  CHECK(r4.generators()[1].map == Transformation::transposition(4, 2, 3));
  CHECK(r4.generators()[2].map == Transformation::transposition(4, 3, 4));

  const auto c3 = build_family(FamilyKind::cerny, 3);
  CHECK(c3.generators()[0].map == Transformation{2, 3, 1});
  CHECK(c3.generators()[1].map == Transformation{2, 2, 3});

  const auto r2 = build_family(FamilyKind::rn, 2);
  REQUIRE(r2.alphabet_size() == 1);
  CHECK(r2.generators()[0].map == Transformation{1, 1});
  CHECK(exact_reset_threshold(r2)->length == 1);

  CHECK_THROWS_AS(build_family(FamilyKind::cerny, 1), DomainError);
  CHECK_THROWS_AS(build_family(FamilyKind::rn, 1), DomainError);
  CHECK(family_from_string("rn") == FamilyKind::rn);
  CHECK_THROWS_AS(family_from_string("other"), DomainError);
  CHECK(generate_monoid(full_monoid_generators(4), 1000).size() == 256);
}

TEST_CASE("partial bijections") {
  for (std::size_t m = 0; m <= 5; ++m) CHECK(all_partial_bijections(m).size() == oracle::partial_bijection_count(m));
  const PartialBijection a(3, {2, 0, 1});
  const PartialBijection b(3, {0, 3, 0});
  CHECK(compose(a, b) == PartialBijection(3, {3, 0, 0}));
  CHECK(a.rank() == 2);
  CHECK_FALSE(a.is_idempotent());
  CHECK(PartialBijection(3, {1, 0, 3}).is_idempotent());
  CHECK_THROWS_AS(PartialBijection(3, {1, 1, 0}), DomainError);
  CHECK_THROWS_AS(PartialBijection(3, {4, 0, 0}), DomainError);

  CHECK(restrict_away_from_sink(Transformation{1, 1, 3, 4}) == PartialBijection(3, {0, 2, 3}));
  CHECK(restrict_away_from_sink(Transformation{1, 2, 4, 3}) == PartialBijection(3, {1, 3, 2}));
  CHECK_THROWS_AS(restrict_away_from_sink(Transformation{2, 1, 3}), DomainError);
}

TEST_CASE("restriction away from the sink is an isomorphism for small n") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = verify_theorem17(n);
    CHECK(r.monoid_size == oracle::partial_bijection_count(n - 1));
    CHECK(r.inverse_monoid_size == oracle::partial_bijection_count(n - 1));
    CHECK(r.phi_injective);
    CHECK(r.phi_morphism);
    CHECK(r.phi_surjective);
    CHECK(r.phi_is_isomorphism);
    CHECK(r.idempotents_commute);
    CHECK(r.rt == r.rt_expected);
    CHECK(r.rt_expected == n * (n - 1) / 2);
    CHECK(r.rt == *oracle::reset_threshold(oracle::maps_of(build_family(FamilyKind::rn, n)), n));
  }
  CHECK_THROWS_AS(verify_theorem17(1), DomainError);
}

}  // TEST_SUITE
