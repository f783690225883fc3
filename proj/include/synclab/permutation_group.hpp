#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "synclab/relation.hpp"
#include "synclab/transformation.hpp"

namespace synclab {

struct NamedPermutation {
  std::string name;
  Transformation map;
};

/// Generators of a permutation group, in declaration order, with their
/// inverses materialized.
class PermutationSet {
 public:
  /// The trivial group on n states.
  explicit PermutationSet(std::size_t n);
  /// Throws DomainError if a member is not a bijection, DimensionError on
  /// degree mismatch.
  PermutationSet(std::size_t n, std::vector<NamedPermutation> perms);
  /// Generators named g1, g2, ...
  static PermutationSet from_maps(std::size_t n, const std::vector<Transformation>& maps);

  std::size_t degree() const noexcept { return n_; }
  std::size_t size() const noexcept { return perms_.size(); }
  bool empty() const noexcept { return perms_.empty(); }
  const std::vector<NamedPermutation>& generators() const noexcept { return perms_; }
  const std::vector<Transformation>& inverses() const noexcept { return inverses_; }

 private:
  std::size_t n_;
  std::vector<NamedPermutation> perms_;
  std::vector<Transformation> inverses_;
};

/// Orbits of <Y>, each sorted, ordered by smallest member.
std::vector<std::vector<State>> orbits(const PermutationSet& group);

bool is_transitive(const PermutationSet& group);

/// Smallest superset of rho closed under the componentwise action of <Y>:
/// the union of the orbitals through rho's pairs.
BinaryRelation group_closure(const PermutationSet& group, const BinaryRelation& rho);

/// The orbital (s,t)G.
BinaryRelation orbital(const PermutationSet& group, State s, State t);

/// All orbitals, disjoint, ordered by their smallest pair.
std::vector<BinaryRelation> orbitals(const PermutationSet& group);

/// Classes of the smallest <Y>-congruence identifying s and t, each sorted,
/// ordered by smallest member.
std::vector<std::vector<State>> minimal_congruence(const PermutationSet& group, State s, State t);

enum class PrimitivityMethod {
  /// Transitive and every orbital digraph strongly connected.
  higman_sims,
  /// Every pair generates the universal congruence.
  block_oracle,
};

/// Requires n > 2 (DomainError otherwise).
bool is_primitive(const PermutationSet& group, PrimitivityMethod method);

struct PrimitivityReport {
  bool transitive = false;
  bool primitive = false;
  /// A nontrivial invariant partition when not primitive (from the first
  /// pair whose congruence is proper).
  std::optional<std::vector<std::vector<State>>> blocks;
  /// Why the answer is false, empty when primitive.
  std::string reason;
};

/// Runs both methods; throws Error if they disagree.
PrimitivityReport primitivity_report(const PermutationSet& group);

}  // namespace synclab
