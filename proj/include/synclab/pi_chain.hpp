#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "synclab/automaton.hpp"
#include "synclab/permutation_group.hpp"
#include "synclab/relation.hpp"

namespace synclab {

/// The increasing chain pi_0 ⊆ pi_1 ⊆ ... of a one-point singular under a
/// permutation set, where pi_m collects the pairs (e, d)g over excluded
/// states e, the duplicate d, and group words g of length at most m.
struct PiChain {
  /// pi_0, pi_1, ..., ending at the first index equal to `closure`.
  std::vector<BinaryRelation> relations;
  /// The group closure of pi_0 (the singular relation).
  BinaryRelation closure;
  /// First index whose relation is strongly connected; nullopt if the
  /// closure itself is not.
  std::optional<std::size_t> msc;
};

/// Throws NotOnePointError if `f` is not one-point, DimensionError on
/// degree mismatch.
PiChain pi_chain(const Transformation& f, const PermutationSet& group);

/// msc of a one-point automaton. Throws NotOnePointError otherwise.
std::optional<std::size_t> msc(const Automaton& automaton);

}  // namespace synclab
