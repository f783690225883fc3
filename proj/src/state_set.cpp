#include "synclab/state_set.hpp"

#include <bit>
#include <sstream>

#include "synclab/errors.hpp"

namespace synclab {

namespace {

constexpr std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

}  // namespace

StateSet::StateSet(std::size_t n) : n_(n), words_(word_count(n), 0) {}

StateSet::StateSet(std::size_t n, std::initializer_list<State> members) : StateSet(n) {
  for (State s : members) insert(s);
}

StateSet::StateSet(std::size_t n, const std::vector<State>& members) : StateSet(n) {
  for (State s : members) insert(s);
}

StateSet StateSet::full(std::size_t n) {
  StateSet set(n);
  for (std::size_t w = 0; w < set.words_.size(); ++w) set.words_[w] = ~std::uint64_t{0};
  if (n % 64 != 0) set.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return set;
}

StateSet StateSet::from_mask(std::size_t n, std::uint64_t mask) {
  if (n > 64) throw DomainError("from_mask requires a universe of at most 64 states");
  if (n < 64 && (mask >> n) != 0) throw DomainError("mask has bits beyond the universe");
  StateSet set(n);
  if (n > 0) set.words_[0] = mask;
  return set;
}

std::size_t StateSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool StateSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

void StateSet::check_state(State s) const {
  if (s < 1 || s > n_) {
    throw DomainError("state " + std::to_string(s) + " outside 1.." + std::to_string(n_));
  }
}

void StateSet::check_same_universe(const StateSet& other) const {
  if (other.n_ != n_) throw DimensionError("state sets over different universes");
}

bool StateSet::contains(State s) const noexcept {
  if (s < 1 || s > n_) return false;
  const std::size_t i = s - 1;
  return (words_[i / 64] >> (i % 64)) & 1U;
}

void StateSet::insert(State s) {
  check_state(s);
  const std::size_t i = s - 1;
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void StateSet::erase(State s) {
  check_state(s);
  const std::size_t i = s - 1;
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<State>(w * 64 + static_cast<std::size_t>(b) + 1));
      bits &= bits - 1;
    }
  }
  return out;
}

std::uint64_t StateSet::mask() const {
  if (n_ > 64) throw DomainError("mask() requires a universe of at most 64 states");
  return words_.empty() ? 0 : words_[0];
}

bool StateSet::subset_of(const StateSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

StateSet StateSet::united(const StateSet& other) const {
  check_same_universe(other);
  StateSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
  return out;
}

StateSet StateSet::intersected(const StateSet& other) const {
  check_same_universe(other);
  StateSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
  return out;
}

StateSet StateSet::complement() const {
  StateSet out = full(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
  return out;
}

std::string StateSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (State s : members()) {
    if (!first) os << ',';
    os << s;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace synclab
