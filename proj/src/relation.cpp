#include "synclab/relation.hpp"

#include <algorithm>
#include <sstream>

#include "synclab/errors.hpp"

namespace synclab {

BinaryRelation::BinaryRelation(std::size_t n) : n_(n), bits_((n * n + 63) / 64, 0) {}

BinaryRelation::BinaryRelation(std::size_t n, std::initializer_list<StatePair> pairs)
    : BinaryRelation(n) {
  for (auto [s, t] : pairs) insert(s, t);
}

BinaryRelation::BinaryRelation(std::size_t n, const std::vector<StatePair>& pairs)
    : BinaryRelation(n) {
  for (auto [s, t] : pairs) insert(s, t);
}

void BinaryRelation::check_pair(State s, State t) const {
  if (s < 1 || s > n_ || t < 1 || t > n_) throw DomainError("pair component out of range");
  if (s == t) {
    throw DiagonalPairError("pair (" + std::to_string(s) + "," + std::to_string(t) +
                            ") lies on the diagonal");
  }
}

bool BinaryRelation::contains(State s, State t) const noexcept {
  if (s < 1 || s > n_ || t < 1 || t > n_ || s == t) return false;
  const auto i = index(s, t);
  return (bits_[i / 64] >> (i % 64)) & 1U;
}

bool BinaryRelation::insert(State s, State t) {
  check_pair(s, t);
  const auto i = index(s, t);
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (bits_[i / 64] & bit) return false;
  bits_[i / 64] |= bit;
  ++count_;
  return true;
}

std::vector<StatePair> BinaryRelation::pairs() const {
  std::vector<StatePair> out;
  out.reserve(count_);
  for (State s = 1; s <= n_; ++s)
    for (State t = 1; t <= n_; ++t)
      if (contains(s, t)) out.emplace_back(s, t);
  return out;
}

std::vector<State> BinaryRelation::successors(State s) const {
  std::vector<State> out;
  for (State t = 1; t <= n_; ++t)
    if (contains(s, t)) out.push_back(t);
  return out;
}

bool BinaryRelation::subset_of(const BinaryRelation& other) const {
  if (other.n_ != n_) throw DimensionError("relations over different universes");
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if ((bits_[w] & ~other.bits_[w]) != 0) return false;
  return true;
}

BinaryRelation BinaryRelation::united(const BinaryRelation& other) const {
  if (other.n_ != n_) throw DimensionError("relations over different universes");
  BinaryRelation out(n_);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    out.bits_[w] = bits_[w] | other.bits_[w];
    out.count_ += static_cast<std::size_t>(__builtin_popcountll(out.bits_[w]));
  }
  return out;
}

std::string BinaryRelation::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [s, t] : pairs()) {
    if (!first) os << ',';
    os << '(' << s << ',' << t << ')';
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

/// Kosaraju with explicit stacks; returns a component id per vertex
/// (0-based vertices).
std::vector<std::size_t> component_ids(const BinaryRelation& rho, std::size_t& count) {
  const auto n = rho.universe();
  std::vector<std::vector<std::uint32_t>> fwd(n), bwd(n);
  for (auto [s, t] : rho.pairs()) {
    fwd[s - 1].push_back(t - 1);
    bwd[t - 1].push_back(s - 1);
  }

  std::vector<std::uint32_t> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < fwd[v].size()) {
        const auto w = fwd[v][next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unset);
  count = 0;
  std::vector<std::uint32_t> work;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != unset) continue;
    comp[*it] = count;
    work.push_back(*it);
    while (!work.empty()) {
      const auto v = work.back();
      work.pop_back();
      for (auto w : bwd[v]) {
        if (comp[w] == unset) {
          comp[w] = count;
          work.push_back(w);
        }
      }
    }
    ++count;
  }
  return comp;
}

}  // namespace

std::vector<std::vector<State>> strong_components(const BinaryRelation& rho) {
  std::size_t count = 0;
  const auto comp = component_ids(rho, count);
  std::vector<std::vector<State>> groups(count);
  for (std::size_t v = 0; v < comp.size(); ++v) groups[comp[v]].push_back(static_cast<State>(v + 1));
  std::sort(groups.begin(), groups.end());
  return groups;
}

bool is_strongly_connected(const BinaryRelation& rho) {
  const auto n = rho.universe();
  if (n == 0) return false;
  if (n == 1) return true;
  // Forward and backward reachability from state 1 must both cover S.
  for (int direction = 0; direction < 2; ++direction) {
    std::vector<char> seen(n + 1, 0);
    std::vector<State> work{1};
    seen[1] = 1;
    std::size_t reached = 1;
    while (!work.empty()) {
      const State v = work.back();
      work.pop_back();
      for (State w = 1; w <= n; ++w) {
        const bool arc = direction == 0 ? rho.contains(v, w) : rho.contains(w, v);
        if (arc && !seen[w]) {
          seen[w] = 1;
          ++reached;
          work.push_back(w);
        }
      }
    }
    if (reached != n) return false;
  }
  return true;
}

BinaryRelation cyclic_part(const BinaryRelation& rho) {
  std::size_t count = 0;
  const auto comp = component_ids(rho, count);
  BinaryRelation out(rho.universe());
  for (auto [s, t] : rho.pairs())
    if (comp[s - 1] == comp[t - 1]) out.insert(s, t);
  return out;
}

}  // namespace synclab
