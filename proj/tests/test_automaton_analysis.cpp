#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "synclab/analysis.hpp"
#include "synclab/errors.hpp"
#include "synclab/families.hpp"

using namespace synclab;

namespace {

Automaton cerny3() { return build_family(FamilyKind::cerny, 3); }

std::vector<std::size_t> indices_of(const Automaton& a, const Word& w) {
  std::vector<std::size_t> out;
  for (const auto& letter : w.letters)
    for (std::size_t i = 0; i < a.alphabet_size(); ++i)
      if (a.generators()[i].name == letter) out.push_back(i);
  return out;
}

std::uint32_t image_of_word(const Automaton& a, const Word& w) {
  return static_cast<std::uint32_t>(image_of(a.evaluate(w), StateSet::full(a.states())).mask());
}

// Full comparison of one automaton against the brute-force oracles.
void check_against_oracles(const std::vector<oracle::Map>& gens) {
  const auto n = gens.front().size();
  const auto a = oracle::automaton(gens);
  const auto c = classify(a);
  const auto expected_rt = oracle::reset_threshold(gens, n);
  const auto expected_at = oracle::augment_threshold(gens, n);
  const bool strongly = oracle::state_graph_strongly_connected(gens, n);

  CHECK(c.synchronizing == expected_rt.has_value());
  CHECK(c.transitive == strongly);
  CHECK(c.directable == (c.synchronizing && c.transitive));

  const auto rt = exact_reset_threshold(a);
  REQUIRE(rt.has_value() == expected_rt.has_value());
  if (rt) {
    CHECK(rt->length == *expected_rt);
    CHECK(rt->word.length() == rt->length);
    CHECK(a.evaluate(rt->word).is_constant());
  }

  const auto at = augment_threshold(a);
  CHECK(at == expected_at);

  const auto greedy = greedy_reset_word(a);
  CHECK(greedy.has_value() == expected_at.has_value());
  if (greedy && rt && at) {
    CHECK(a.evaluate(*greedy).is_constant());
    CHECK(greedy->length() >= rt->length);
    CHECK(static_cast<std::int64_t>(greedy->length()) <= static_cast<std::int64_t>(*at) * (static_cast<std::int64_t>(n) - 2) + 1);
  }

  const auto images = oracle::reachable_images(gens, n);
  const auto r = reachability(a);
  std::set<std::uint32_t> got;
  for (const auto& s : r.reachable_images) got.insert(static_cast<std::uint32_t>(s.mask()));
  CHECK(got == images);
  CHECK(r.reachable_images.size() == images.size());
  CHECK(r.completely_reachable == (images.size() == (1U << n) - 1));

  for (std::uint32_t t = 1; t < (1U << n); ++t) {
    const auto target = StateSet::from_mask(n, t);
    const auto w = subset_witness_word(a, target);
    REQUIRE(w.has_value() == (images.count(t) > 0));
    if (w) CHECK(image_of_word(a, *w) == t);
  }
}

}  // namespace

TEST_SUITE("automaton-analysis") {

TEST_CASE("classification examples") {
  const auto c = classify(cerny3());
  CHECK(c.synchronizing);
  CHECK(c.transitive);
  CHECK(c.directable);
  CHECK(c.one_point);
  CHECK(c.weakly_singular);

  const auto id = classify(Automaton(3, {{"e", Transformation::identity(3)}}));
  CHECK_FALSE(id.synchronizing);
  CHECK_FALSE(id.transitive);

  const auto cyc = classify(Automaton(3, {{"a", Transformation{2, 3, 1}}}));
  CHECK(cyc.transitive);
  CHECK_FALSE(cyc.synchronizing);
  CHECK_FALSE(cyc.one_point);
}

TEST_CASE("reset threshold examples") {
  const auto rt = exact_reset_threshold(cerny3());
  REQUIRE(rt);
  CHECK(rt->length == 4);
  CHECK(rt->word.to_string() == "b a a b");
  CHECK(exact_reset_threshold(build_family(FamilyKind::rn, 4))->length == 6);
  CHECK_FALSE(exact_reset_threshold(Automaton(3, {{"a", Transformation{2, 3, 1}}})));
  CHECK(exact_reset_threshold(Automaton(1, {{"a", Transformation{1}}}))->length == 0);
}

TEST_CASE("reported reset words are the lexicographically least shortest ones") {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 150) {
    const std::size_t n = 3 + checked % 3;
    const std::vector<oracle::Map> gens{oracle::random_map(n, rng), oracle::random_map(n, rng), oracle::random_map(n, rng)};
    const auto a = oracle::automaton(gens);
    const auto rt = exact_reset_threshold(a);
    if (!rt || rt->length > 9) continue;
    ++checked;
    CHECK(indices_of(a, rt->word) == *oracle::least_reset_word(gens, n, rt->length));
  }
}

TEST_CASE("augment threshold examples") {
  CHECK(augment_threshold(cerny3()) == 3u);
  std::vector<Generator> constants;
  for (State s = 1; s <= 4; ++s) constants.push_back({"c" + std::to_string(s), Transformation::constant(4, s)});
  const Automaton all_constants(4, constants);
  CHECK(augment_threshold(all_constants) == 1u);
  CHECK_FALSE(augment_threshold(Automaton(3, {{"a", Transformation{2, 3, 1}}})));
  CHECK(augment_threshold(Automaton(1, {{"a", Transformation{1}}})) == 0u);

  const auto greedy = greedy_reset_word(all_constants);
  REQUIRE(greedy);
  CHECK(greedy->length() == 1);
  CHECK_FALSE(greedy_reset_word(Automaton(3, {{"a", Transformation{2, 3, 1}}})));
  const auto g3 = greedy_reset_word(cerny3());
  REQUIRE(g3);
  CHECK(g3->length() <= 4);
  CHECK(cerny3().evaluate(*g3).is_constant());
}

TEST_CASE("shortest augmenting words") {
  const auto a = cerny3();
  const auto elements = oracle::monoid(oracle::maps_of(a), 3);
  for (std::uint32_t t = 1; t < 7; ++t) {
    const auto target = StateSet::from_mask(3, t);
    const auto w = shortest_augmenting_word(a, target);
    const auto expected = oracle::augment_length(elements, t);
    REQUIRE(w.has_value() == expected.has_value());
    if (!w) continue;
    CHECK(w->length() == *expected);
    CHECK(augments(a.evaluate(*w), target));
  }
  CHECK_THROWS_AS(shortest_augmenting_word(a, StateSet::full(3)), DomainError);
  CHECK_THROWS_AS(shortest_augmenting_word(a, StateSet(3)), DomainError);
}

TEST_CASE("reachability and witnesses") {
  const auto r = reachability(cerny3());
  CHECK(r.reachable_images.size() == 7);
  CHECK(r.completely_reachable);
  CHECK(r.reachable_images.front().is_full());

  const auto perm = reachability(Automaton(3, {{"a", Transformation{2, 3, 1}}}));
  CHECK(perm.reachable_images.size() == 1);
  CHECK_FALSE(perm.completely_reachable);

  const auto corank2 = reachability(Automaton(4, {{"a", Transformation{2, 3, 4, 1}}, {"f", Transformation{1, 1, 1, 4}}}));
  CHECK_FALSE(corank2.completely_reachable);
  for (const auto& s : corank2.reachable_images) CHECK(s.size() != 3);

  CHECK(subset_witness_word(cerny3(), StateSet::full(3))->empty());
  CHECK(subset_witness_word(cerny3(), StateSet(3, {2, 3}))->to_string() == "b");
  CHECK_FALSE(subset_witness_word(Automaton(3, {{"a", Transformation{2, 3, 1}}}), StateSet(3, {1})));
  CHECK_THROWS_AS(subset_witness_word(cerny3(), StateSet(3)), DomainError);
}

TEST_CASE("inductive witnesses on weakly singular automata with primitive groups") {
  // Cerny automata are weakly singular with a cyclic group of prime degree.
  for (std::size_t n : {3, 5, 7}) {
    const auto a = build_family(FamilyKind::cerny, n);
    for (std::uint64_t t = 1; t < (1ULL << n); ++t) {
      const auto target = StateSet::from_mask(n, t);
      const auto w = subset_witness_word(a, target);
      REQUIRE(w);
      CHECK(image_of(a.evaluate(*w), StateSet::full(n)) == target);
    }
  }
}

TEST_CASE("every automaton with one or two generators on three states matches the oracles") {
  const auto maps = oracle::all_maps(3);
  for (const auto& f : maps) check_against_oracles({f});
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j) check_against_oracles({maps[i], maps[j]});
}

TEST_CASE("random automata on four and five states match the oracles") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 4 + trial % 2;
    std::vector<oracle::Map> gens{oracle::random_map(n, rng), oracle::random_map(n, rng)};
    if (trial % 3 == 0) gens[0] = oracle::random_permutation(n, rng);
    check_against_oracles(gens);
  }
}

TEST_CASE("bound reports") {
  const auto c3 = verify_bounds(cerny3());
  CHECK(c3.all_ok);
  CHECK(c3.msc == 2u);
  CHECK(c3.msc_bound == 3);
  CHECK(c3.at == 3u);
  CHECK(c3.rt_exact == 4u);
  CHECK(c3.rt_bound == 5);
  CHECK(c3.greedy_bound == 4);
  CHECK(c3.violations.empty());

  const auto z4 = verify_bounds(Automaton(4, {{"f", Transformation{1, 1, 3, 4}}, {"y", Transformation{2, 3, 4, 1}}}));
  CHECK(z4.msc == 3u);
  CHECK(z4.msc_bound == 5);
  CHECK(z4.all_ok);
  REQUIRE(z4.at);
  CHECK(*z4.at <= *z4.msc + 1);
  CHECK(static_cast<std::int64_t>(*z4.rt_exact) <= quadratic_rt_bound(4));

  const auto perm = verify_bounds(Automaton(3, {{"a", Transformation{2, 3, 1}}}));
  CHECK(perm.all_ok);
  CHECK_FALSE(perm.rt_exact);
  CHECK(std::find(perm.flags.begin(), perm.flags.end(), "not synchronizing") != perm.flags.end());
}

TEST_CASE("gates") {
  const auto big = build_family(FamilyKind::cerny, 25);
  CHECK_THROWS_AS(exact_reset_threshold(big), CapacityError);
  CHECK_THROWS_AS(reachability(big), CapacityError);
  CHECK_THROWS_AS(augment_threshold(build_family(FamilyKind::cerny, 15)), CapacityError);
  Gates wide;
  wide.subset_bfs_max_n = 40;
  CHECK_THROWS_AS(exact_reset_threshold(build_family(FamilyKind::cerny, 31), wide), CapacityError);
  Gates narrow;
  narrow.subset_bfs_max_n = 3;
  CHECK_THROWS_AS(exact_reset_threshold(build_family(FamilyKind::cerny, 4), narrow), CapacityError);
}

}  // TEST_SUITE
