#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "synclab/automaton.hpp"
#include "synclab/gates.hpp"

namespace synclab {

/// One property checked over a family of instances.
struct SweepCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  /// Up to a few offending instances, rendered.
  std::vector<std::string> examples;
};

struct SweepReport {
  std::string suite;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  /// Instances enumerated or drawn.
  std::size_t instances = 0;
  /// Instances meeting the suite's hypotheses.
  std::size_t qualifying = 0;
  std::vector<SweepCheck> checks;

  bool ok() const;
  SweepCheck& check(const std::string& name);
  void record(const std::string& name, bool holds, const Automaton& instance);
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// One-point automata {f} ∪ Y with <Y> transitive and a strongly connected
/// singular relation: msc <= 2n-3, at <= msc+1, rt <= 2(n-1)(n-2)+1, the
/// greedy word within at(n-2)+1 and at least rt, and the cyclic witness of
/// each excluded state inside pi_{n-1}. Exhaustive over all one-point f and
/// all Y of at most two generators when samples == 0; otherwise draws
/// random f and Y until `samples` qualifying instances are found.
SweepReport sweep_one_point_bounds(std::size_t n, std::size_t samples = 0,
                                   std::uint64_t seed = kDefaultSeed, const Gates& gates = {});

/// Every Y of at most two generators: both primitivity tests agree and
/// primitive implies transitive. For primitive <Y> and every one-point f,
/// the singular relation is strongly connected, for simple f the automaton
/// is completely reachable, and the greedy word is bracketed as in the
/// bound suite. Requires 3 <= n <= 6.
SweepReport sweep_primitive_groups(std::size_t n, const Gates& gates = {});

/// Automata with one or two generators on n states: directable iff
/// synchronizing and transitive (against the augment threshold), pair-merge
/// iff a reset word exists, and the greedy word brackets on directable ones.
/// Exhaustive when samples == 0, else `samples` random generator pairs.
SweepReport sweep_equivalences(std::size_t n, std::size_t samples = 0,
                               std::uint64_t seed = kDefaultSeed, const Gates& gates = {});

/// Adding a generator to a synchronizing automaton never raises its reset
/// threshold. Random automata on 3..n states.
SweepReport sweep_monotonicity(std::size_t n, std::size_t samples, std::uint64_t seed = kDefaultSeed,
                               const Gates& gates = {});

/// Transition monoids of all automata with one or two generators on n
/// states, plus the full monoid End_n: word length is subadditive,
/// l(f·g) <= l(f) + l(g).
SweepReport sweep_subadditivity(std::size_t n, const Gates& gates = {});

/// Monoids generated by at most two maps on n states, plus targeted
/// monoids with a primitive group: whenever the quadratic bound applies,
/// rt(M) <= 2(n-1)(n-2)+1, and every generating set keeps a one-point map of rank sr(M).
/// Monoids beyond the generating-set gate are skipped and counted.
SweepReport sweep_monoid_bounds(std::size_t n, const Gates& gates = {});

/// Names accepted by run_sweep.
std::vector<std::string> sweep_suites();

SweepReport run_sweep(const std::string& suite, std::size_t n, std::size_t samples,
                      std::uint64_t seed, const Gates& gates = {});

}  // namespace synclab
