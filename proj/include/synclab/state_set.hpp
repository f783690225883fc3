#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace synclab {

/// States are numbered 1..n.
using State = std::uint32_t;

/// A subset of {1..n}, stored as a fixed-width bit vector.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t n);
  StateSet(std::size_t n, std::initializer_list<State> members);
  StateSet(std::size_t n, const std::vector<State>& members);

  static StateSet full(std::size_t n);
  /// Bit i of `mask` is state i+1. Requires n <= 64.
  static StateSet from_mask(std::size_t n, std::uint64_t mask);

  std::size_t universe() const noexcept { return n_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return size() == n_; }
  /// Nonempty and not the whole universe.
  bool is_proper() const noexcept { return !empty() && !is_full(); }

  bool contains(State s) const noexcept;
  void insert(State s);
  void erase(State s);

  /// Members in increasing order.
  std::vector<State> members() const;
  /// Requires universe() <= 64.
  std::uint64_t mask() const;

  bool subset_of(const StateSet& other) const;
  StateSet united(const StateSet& other) const;
  StateSet intersected(const StateSet& other) const;
  StateSet complement() const;

  /// "{1,3}" style rendering.
  std::string to_string() const;

  bool operator==(const StateSet&) const = default;
  std::strong_ordering operator<=>(const StateSet&) const = default;

 private:
  void check_state(State s) const;
  void check_same_universe(const StateSet& other) const;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace synclab
