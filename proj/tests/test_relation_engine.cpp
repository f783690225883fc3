#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "synclab/errors.hpp"
#include "synclab/families.hpp"
#include "synclab/pi_chain.hpp"

using namespace synclab;

namespace {

std::vector<std::vector<bool>> as_matrix(const BinaryRelation& r) {
  const auto n = r.universe();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (const auto& [s, t] : r.pairs()) m[s - 1][t - 1] = true;
  return m;
}

void check_against_oracle(const oracle::Map& f, const std::vector<oracle::Map>& perms) {
  const auto n = f.size();
  std::vector<Transformation> maps;
  for (const auto& p : perms) maps.push_back(oracle::to_transformation(p));
  const auto chain = pi_chain(oracle::to_transformation(f), PermutationSet::from_maps(n, maps));
  const auto expected = oracle::pi_chain(f, perms);
  CHECK(chain.msc == expected.msc);
  // The library stops once the chain reaches its closure; the oracle runs to
  // the longest group word, where it is constant.
  REQUIRE(chain.relations.size() <= expected.relations.size());
  for (std::size_t m = 0; m < chain.relations.size(); ++m) CHECK(as_matrix(chain.relations[m]) == expected.relations[m]);
  CHECK(as_matrix(chain.closure) == expected.relations.back());
  CHECK(chain.relations.back() == chain.closure);
  for (std::size_t m = 1; m < chain.relations.size(); ++m) {
    CHECK(chain.relations[m - 1].subset_of(chain.relations[m]));
    CHECK_FALSE(chain.relations[m] == chain.relations[m - 1]);
  }
}

}  // namespace

TEST_SUITE("relation-engine") {

TEST_CASE("chain of the three-state Cerny automaton") {
  const auto z3 = PermutationSet::from_maps(3, {Transformation{2, 3, 1}});
  const auto chain = pi_chain(Transformation{2, 2, 3}, z3);
  REQUIRE(chain.relations.size() == 3);
  CHECK(chain.relations[0] == BinaryRelation(3, {{1, 2}}));
  CHECK(chain.relations[1] == BinaryRelation(3, {{1, 2}, {2, 3}}));
  CHECK(chain.relations[2] == BinaryRelation(3, {{1, 2}, {2, 3}, {3, 1}}));
  CHECK(chain.msc == 2u);
  CHECK(msc(build_family(FamilyKind::cerny, 3)) == 2u);
}

TEST_CASE("chain under a four-cycle") {
  const auto z4 = PermutationSet::from_maps(4, {Transformation{2, 3, 4, 1}});
  const auto chain = pi_chain(Transformation{1, 1, 3, 4}, z4);
  CHECK(chain.relations[0] == BinaryRelation(4, {{2, 1}}));
  for (std::size_t m = 1; m < chain.relations.size(); ++m) CHECK(chain.relations[m].size() == m + 1);
  CHECK(chain.msc == 3u);
  CHECK(*chain.msc <= 2 * 4 - 3);
}

TEST_CASE("without permutations the chain never connects") {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<State> images(n);
    for (State s = 1; s <= n; ++s) images[s - 1] = s;
    images[1] = 1;
    const auto chain = pi_chain(Transformation(images), PermutationSet(n));
    CHECK(chain.relations.size() == 1);
    CHECK(chain.closure == chain.relations.front());
    CHECK_FALSE(chain.msc);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(pi_chain(Transformation{2, 3, 1}, PermutationSet(3)), NotOnePointError);
  CHECK_THROWS_AS(pi_chain(Transformation{1, 1, 3}, PermutationSet(4)), DimensionError);
  CHECK_THROWS_AS(msc(Automaton(3, {{"a", Transformation{2, 3, 1}}})), NotOnePointError);
}

TEST_CASE("chains match group-element enumeration: every one-point map with each single permutation, n = 4") {
  const auto perms = oracle::all_permutations(4);
  for (const auto& f : oracle::all_maps(4)) {
    if (!map_profile(oracle::to_transformation(f)).one_point) continue;
    for (const auto& p : perms) check_against_oracle(f, {p});
  }
}

TEST_CASE("chains match group-element enumeration on random instances, n = 5..7") {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 300) {
    const std::size_t n = 5 + checked % 3;
    auto f = oracle::random_map(n, rng);
    if (!map_profile(oracle::to_transformation(f)).one_point) continue;
    ++checked;
    check_against_oracle(f, {oracle::random_permutation(n, rng), oracle::random_permutation(n, rng)});
  }
}

}  // TEST_SUITE
