#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synclab/automaton.hpp"
#include "synclab/gates.hpp"
#include "synclab/permutation_group.hpp"

namespace synclab {

struct Classification {
  /// Every pair of states can be merged by some word.
  bool synchronizing = false;
  /// Every state reaches every state.
  bool transitive = false;
  /// synchronizing and transitive.
  bool directable = false;
  /// Exactly one distinct singular generator, and it is one-point.
  bool one_point = false;
  /// one_point with a simple singular.
  bool weakly_singular = false;
  PermutationSet permutation_part{1};
  std::vector<Transformation> singular_part;
};

Classification classify(const Automaton& automaton);

/// The pieces of a one-point automaton: its singular generator and the
/// permutation generators.
struct OnePointParts {
  std::string singular_name;
  Transformation singular;
  PermutationSet group;
};

std::optional<OnePointParts> one_point_decomposition(const Automaton& automaton);

struct ResetWord {
  std::size_t length = 0;
  Word word;
};

/// Shortest word inducing a constant map; the lexicographically least one
/// under generator order. nullopt iff not synchronizing.
std::optional<ResetWord> exact_reset_threshold(const Automaton& automaton, const Gates& gates = {});

/// A shortest word w with |(T)w^{-1}| > |T|, nullopt if none exists. Ties
/// are broken on the last letter first (words grow by prepending).
std::optional<Word> shortest_augmenting_word(const Automaton& automaton, const StateSet& targets,
                                             const Gates& gates = {});

/// Maximum over proper nonempty T of the shortest augmenting word length.
/// nullopt iff some T has none (the automaton is not directable). 0 when
/// n == 1.
std::optional<std::size_t> augment_threshold(const Automaton& automaton, const Gates& gates = {});

/// A reset word built by repeated augmentation from a merged pair; nullopt
/// iff not directable. Length is at most at*(n-2)+1.
std::optional<Word> greedy_reset_word(const Automaton& automaton, const Gates& gates = {});

struct Reachability {
  /// Every image (S)w, in breadth-first discovery order starting from S.
  std::vector<StateSet> reachable_images;
  bool completely_reachable = false;
};

Reachability reachability(const Automaton& automaton, const Gates& gates = {});

/// A word w with (S)w = T, nullopt if T is not reachable. Weakly singular
/// automata with a strongly connected singular relation use the inductive
/// augmenting construction; everything else uses a shortest-word BFS.
std::optional<Word> subset_witness_word(const Automaton& automaton, const StateSet& target,
                                        const Gates& gates = {});

struct BoundsReport {
  std::size_t n = 0;
  bool synchronizing = false;
  bool directable = false;
  bool is_one_point = false;
  std::optional<bool> group_transitive;
  std::optional<bool> group_primitive;
  std::optional<bool> pi_strongly_connected;
  std::optional<std::size_t> msc;
  std::int64_t msc_bound = 0;
  std::optional<std::size_t> at;
  std::optional<std::size_t> at_bound;
  std::optional<std::size_t> rt_exact;
  std::int64_t rt_bound = 0;
  std::optional<std::size_t> greedy_word_length;
  std::optional<std::int64_t> greedy_bound;
  bool all_ok = true;
  /// Notes such as "not synchronizing".
  std::vector<std::string> flags;
  /// One entry per violated bound; nonempty iff !all_ok.
  std::vector<std::string> violations;
};

BoundsReport verify_bounds(const Automaton& automaton, const Gates& gates = {});

inline std::int64_t msc_upper_bound(std::size_t n) { return 2 * static_cast<std::int64_t>(n) - 3; }

inline std::int64_t quadratic_rt_bound(std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return 2 * (m - 1) * (m - 2) + 1;
}

}  // namespace synclab
