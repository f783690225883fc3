#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "synclab/state_set.hpp"

namespace synclab {

using StatePair = std::pair<State, State>;

/// A relation on {1..n} avoiding the diagonal, i.e. a loopless digraph.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(std::size_t n);
  BinaryRelation(std::size_t n, std::initializer_list<StatePair> pairs);
  BinaryRelation(std::size_t n, const std::vector<StatePair>& pairs);

  std::size_t universe() const noexcept { return n_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(State s, State t) const noexcept;
  /// Returns true if the pair was new. Throws DiagonalPairError for (s, s).
  bool insert(State s, State t);

  /// Pairs in lexicographic order.
  std::vector<StatePair> pairs() const;
  /// Out-neighbours of `s`, increasing.
  std::vector<State> successors(State s) const;

  bool subset_of(const BinaryRelation& other) const;
  BinaryRelation united(const BinaryRelation& other) const;

  /// "{(1,2),(2,3)}".
  std::string to_string() const;

  bool operator==(const BinaryRelation& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  std::size_t index(State s, State t) const noexcept { return (s - 1) * n_ + (t - 1); }
  void check_pair(State s, State t) const;

  std::size_t n_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Strongly connected components of the digraph ({1..n}, rho), each sorted,
/// ordered by smallest member.
std::vector<std::vector<State>> strong_components(const BinaryRelation& rho);

/// Transitive closure of rho is all of S x S. Every state must lie in the one
/// component; for n >= 2 that forces arcs through every state.
bool is_strongly_connected(const BinaryRelation& rho);

/// The arcs of rho that lie on some cycle (both ends in one component).
BinaryRelation cyclic_part(const BinaryRelation& rho);

}  // namespace synclab
