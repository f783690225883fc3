#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "synclab/automaton.hpp"
#include "synclab/gates.hpp"

namespace synclab {

/// The transition monoid of an automaton, enumerated breadth-first with the
/// identity adjoined at index 0.
class MonoidTable {
 public:
  const std::vector<Transformation>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return origin_.states(); }
  /// Shortest length of a generator word for element `index` (0 for the
  /// identity).
  std::size_t length(std::size_t index) const { return lengths_.at(index); }
  std::optional<std::size_t> index_of(const Transformation& f) const;
  const Automaton& origin() const noexcept { return origin_; }

 private:
  explicit MonoidTable(Automaton origin) : origin_(std::move(origin)) {}
  friend MonoidTable generate_monoid(const Automaton&, std::size_t);

  Automaton origin_;
  std::vector<Transformation> elements_;
  std::vector<std::size_t> lengths_;
  std::unordered_map<Transformation, std::size_t> index_;
};

/// Throws CapacityError (carrying the partial count) past `cap` elements.
MonoidTable generate_monoid(const Automaton& automaton, std::size_t cap);

struct MonoidStats {
  std::size_t size = 0;
  /// Largest rank of a non-permutation; nullopt for a group.
  std::optional<std::size_t> sr;
  bool has_one_point_of_rank_sr = false;
  bool synchronizing = false;
};

MonoidStats monoid_stats(const MonoidTable& monoid);

/// Inclusion-minimal subsets X of M \ {1} with <X> = M, as sorted element
/// indices, in depth-first discovery order. Throws CapacityError if
/// |M| exceeds gates.generating_set_max_monoid (itself at most 64).
std::vector<std::vector<std::size_t>> irredundant_generating_sets(const MonoidTable& monoid,
                                                                  const Gates& gates = {});

/// The automaton (S, X) whose generators are the given elements, named
/// m<index>.
Automaton automaton_on(const MonoidTable& monoid, const std::vector<std::size_t>& indices);

struct MonoidResetThreshold {
  std::size_t value = 0;
  /// First generating set attaining the maximum.
  std::vector<std::size_t> witness;
  std::size_t generating_sets = 0;
};

/// Maximum reset threshold over the irredundant generating sets. Throws
/// DomainError if M has no constant.
MonoidResetThreshold monoid_reset_threshold(const MonoidTable& monoid, const Gates& gates = {});

enum class Lemma15Outcome {
  holds,
  /// Some generating set lacks a one-point map of rank sr(M).
  violated,
  /// M has no one-point map of rank sr(M).
  not_applicable,
};

Lemma15Outcome lemma15_check(const MonoidTable& monoid, const Gates& gates = {});

/// The permutations of M generate a primitive group and M has a one-point
/// map of rank sr(M); then rt(M) <= 2(n-1)(n-2)+1 must hold. False for
/// n <= 2.
bool quadratic_monoid_bound_applies(const MonoidTable& monoid);

}  // namespace synclab
