#include "synclab/analysis.hpp"

#include <algorithm>
#include <limits>

#include "synclab/detail/mask_action.hpp"
#include "synclab/errors.hpp"
#include "synclab/pi_chain.hpp"

namespace synclab {

using detail::MaskAction;
using detail::full_mask;
using detail::popcount;

namespace {

void require_subset_gate(std::size_t n, std::size_t gate, const char* what) {
  const auto limit = std::min(gate, kSubsetSearchCeiling);
  if (n > limit) {
    throw CapacityError(std::string(what) + ": scope capped at n <= " + std::to_string(limit) +
                        " (automaton has " + std::to_string(n) + " states)");
  }
}

std::vector<MaskAction> mask_actions(const Automaton& a) {
  std::vector<MaskAction> out;
  out.reserve(a.alphabet_size());
  for (const auto& g : a.generators()) out.emplace_back(g.map);
  return out;
}

std::uint64_t to_mask(const StateSet& set, std::size_t n) {
  if (set.universe() != n) throw DimensionError("subset and automaton differ in state count");
  return set.mask();
}

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

/// Forward BFS over images (S)w. Records the parent image and the letter
/// that reached each image, so words can be rebuilt.
class ImageSearch {
 public:
  ImageSearch(const Automaton& a, const Gates& gates, const char* what)
      : n_(a.states()) {
    require_subset_gate(n_, gates.subset_bfs_max_n, what);
    actions_ = mask_actions(a);
    parent_.assign(std::size_t{1} << n_, kUnvisited);
    letter_.assign(std::size_t{1} << n_, 0);
  }

  /// Explores until `stop` accepts a mask (returned) or everything is seen.
  template <typename Stop>
  std::optional<std::uint64_t> run(Stop stop) {
    const auto start = full_mask(n_);
    parent_[start] = static_cast<std::uint32_t>(start);
    order_.push_back(start);
    if (stop(start)) return start;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const auto cur = order_[head];
      for (std::size_t x = 0; x < actions_.size(); ++x) {
        const auto next = actions_[x].image(cur);
        if (parent_[next] != kUnvisited) continue;
        parent_[next] = static_cast<std::uint32_t>(cur);
        letter_[next] = static_cast<std::uint16_t>(x);
        order_.push_back(next);
        if (stop(next)) return next;
      }
    }
    return std::nullopt;
  }

  std::vector<std::size_t> letters_to(std::uint64_t mask) const {
    std::vector<std::size_t> rev;
    const auto start = full_mask(n_);
    while (mask != start) {
      rev.push_back(letter_[mask]);
      mask = parent_[mask];
    }
    return {rev.rbegin(), rev.rend()};
  }

  const std::vector<std::uint64_t>& discovered() const { return order_; }

 private:
  std::size_t n_;
  std::vector<MaskAction> actions_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint16_t> letter_;
  std::vector<std::uint64_t> order_;
};

/// Breadth-first search over preimages (T)w^{-1}, growing words on the left.
/// Reusable across targets: visited marks are epoch-stamped.
class PreimageSearch {
 public:
  PreimageSearch(std::size_t n, std::vector<MaskAction> actions)
      : n_(n), actions_(std::move(actions)), stamp_(std::size_t{1} << n, 0),
        parent_(std::size_t{1} << n, 0), letter_(std::size_t{1} << n, 0) {}

  /// Shortest prefix-extension reaching a mask accepted by `goal`. Returns
  /// the accepted mask; `letters_to` rebuilds its word.
  template <typename Goal>
  std::optional<std::uint64_t> run(std::uint64_t start, Goal goal) {
    ++epoch_;
    start_ = start;
    queue_.clear();
    stamp_[start] = epoch_;
    queue_.push_back(start);
    if (goal(start)) return start;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const auto cur = queue_[head];
      for (std::size_t x = 0; x < actions_.size(); ++x) {
        const auto next = actions_[x].preimage(cur);
        if (stamp_[next] == epoch_) continue;
        stamp_[next] = epoch_;
        parent_[next] = static_cast<std::uint32_t>(cur);
        letter_[next] = static_cast<std::uint16_t>(x);
        if (goal(next)) return next;
        queue_.push_back(next);
      }
    }
    return std::nullopt;
  }

  /// The word w with mask = (start)w^{-1}, first letter first.
  std::vector<std::size_t> letters_to(std::uint64_t mask) const {
    std::vector<std::size_t> word;
    while (mask != start_) {
      word.push_back(letter_[mask]);
      mask = parent_[mask];
    }
    return word;  // the last-applied extension is the leftmost letter
  }

  std::size_t depth_of(std::uint64_t mask) const { return letters_to(mask).size(); }

  std::size_t states() const { return n_; }

 private:
  std::size_t n_;
  std::vector<MaskAction> actions_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint16_t> letter_;
  std::vector<std::uint64_t> queue_;
  std::uint64_t start_ = 0;
  std::uint32_t epoch_ = 0;
};

bool pair_merge_synchronizing(const Automaton& a) {
  const auto n = a.states();
  if (n == 1) return true;
  auto id = [n](std::uint32_t s, std::uint32_t t) { return s * n + t; };
  // Reverse arcs of the pair graph on unordered pairs {s<t}.
  std::vector<std::vector<std::uint32_t>> into(n * n);
  std::vector<char> good(n * n, 0);
  std::vector<std::uint32_t> work;
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t t = s + 1; t < n; ++t) {
      for (const auto& g : a.generators()) {
        auto x = g.map.raw()[s];
        auto y = g.map.raw()[t];
        if (x == y) {
          if (!good[id(s, t)]) {
            good[id(s, t)] = 1;
            work.push_back(id(s, t));
          }
          continue;
        }
        if (x > y) std::swap(x, y);
        into[id(x, y)].push_back(id(s, t));
      }
    }
  }
  while (!work.empty()) {
    const auto p = work.back();
    work.pop_back();
    for (auto q : into[p]) {
      if (!good[q]) {
        good[q] = 1;
        work.push_back(q);
      }
    }
  }
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t t = s + 1; t < n; ++t)
      if (!good[id(s, t)]) return false;
  return true;
}

bool state_graph_transitive(const Automaton& a) {
  BinaryRelation arcs(a.states());
  for (const auto& g : a.generators())
    for (State s = 1; s <= a.states(); ++s)
      if (g.map(s) != s) arcs.insert(s, g.map(s));
  return is_strongly_connected(arcs);
}

}  // namespace

Classification classify(const Automaton& automaton) {
  Classification c;
  c.synchronizing = pair_merge_synchronizing(automaton);
  c.transitive = state_graph_transitive(automaton);
  c.directable = c.synchronizing && c.transitive;

  std::vector<NamedPermutation> perms;
  for (const auto& g : automaton.generators()) {
    if (g.map.is_permutation()) {
      perms.push_back({g.name, g.map});
    } else if (std::find(c.singular_part.begin(), c.singular_part.end(), g.map) ==
               c.singular_part.end()) {
      c.singular_part.push_back(g.map);
    }
  }
  c.permutation_part = PermutationSet(automaton.states(), std::move(perms));
  if (c.singular_part.size() == 1) {
    const auto profile = map_profile(c.singular_part.front());
    c.one_point = profile.one_point;
    c.weakly_singular = profile.one_point && profile.simple;
  }
  return c;
}

std::optional<OnePointParts> one_point_decomposition(const Automaton& automaton) {
  auto c = classify(automaton);
  if (!c.one_point) return std::nullopt;
  const auto& f = c.singular_part.front();
  for (const auto& g : automaton.generators()) {
    if (g.map == f) return OnePointParts{g.name, f, std::move(c.permutation_part)};
  }
  return std::nullopt;  // unreachable
}

std::optional<ResetWord> exact_reset_threshold(const Automaton& automaton, const Gates& gates) {
  ImageSearch search(automaton, gates, "exact_reset_threshold");
  const auto hit = search.run([](std::uint64_t m) { return popcount(m) == 1; });
  if (!hit) return std::nullopt;
  ResetWord rw;
  rw.word = automaton.word_from_indices(search.letters_to(*hit));
  rw.length = rw.word.length();
  return rw;
}

std::optional<Word> shortest_augmenting_word(const Automaton& automaton, const StateSet& targets,
                                             const Gates& gates) {
  const auto n = automaton.states();
  require_subset_gate(n, gates.subset_bfs_max_n, "shortest_augmenting_word");
  if (!targets.is_proper()) {
    throw DomainError("augmentation is defined only for proper nonempty subsets");
  }
  const auto start = to_mask(targets, n);
  const auto size = targets.size();
  PreimageSearch search(n, mask_actions(automaton));
  const auto hit = search.run(start, [size](std::uint64_t m) { return popcount(m) > size; });
  if (!hit) return std::nullopt;
  return automaton.word_from_indices(search.letters_to(*hit));
}

std::optional<std::size_t> augment_threshold(const Automaton& automaton, const Gates& gates) {
  const auto n = automaton.states();
  {
    const auto limit = std::min(gates.at_exact_max_n, kSubsetSearchCeiling);
    if (n > limit) {
      throw CapacityError("augment_threshold: scope capped at n <= " + std::to_string(limit) +
                          " (automaton has " + std::to_string(n) + " states)");
    }
  }
  if (n == 1) return 0;
  PreimageSearch search(n, mask_actions(automaton));
  const auto full = full_mask(n);
  std::size_t worst = 0;
  for (std::uint64_t t = 1; t < full; ++t) {
    const auto size = popcount(t);
    const auto hit = search.run(t, [size](std::uint64_t m) { return popcount(m) > size; });
    if (!hit) return std::nullopt;
    worst = std::max(worst, search.depth_of(*hit));
  }
  return worst;
}

std::optional<Word> greedy_reset_word(const Automaton& automaton, const Gates& gates) {
  const auto n = automaton.states();
  require_subset_gate(n, gates.subset_bfs_max_n, "greedy_reset_word");
  if (n == 1) return Word{};
  const auto c = classify(automaton);
  if (!c.directable) return std::nullopt;

  // First singular generator; merge into the state with most preimages.
  const auto& gens = automaton.generators();
  std::size_t first = gens.size();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].map.is_permutation()) {
      first = i;
      break;
    }
  }
  if (first == gens.size()) return std::nullopt;  // unreachable for directable n >= 2
  const auto& f1 = gens[first].map;
  std::vector<std::size_t> counts(n, 0);
  for (auto v : f1.raw()) ++counts[v];
  const auto s1 = static_cast<std::size_t>(
      std::max_element(counts.begin(), counts.end()) - counts.begin());

  const auto actions = mask_actions(automaton);
  std::uint64_t current = actions[first].preimage(std::uint64_t{1} << s1);
  std::vector<std::size_t> letters{first};
  PreimageSearch search(n, actions);
  const auto full = full_mask(n);
  while (current != full) {
    const auto size = popcount(current);
    const auto hit = search.run(current, [size](std::uint64_t m) { return popcount(m) > size; });
    if (!hit) throw Error("greedy_reset_word: directable automaton without augmenting word");
    auto prefix = search.letters_to(*hit);
    letters.insert(letters.begin(), prefix.begin(), prefix.end());
    current = *hit;
  }
  return automaton.word_from_indices(letters);
}

Reachability reachability(const Automaton& automaton, const Gates& gates) {
  const auto n = automaton.states();
  ImageSearch search(automaton, gates, "reachability");
  search.run([](std::uint64_t) { return false; });
  Reachability r;
  for (auto m : search.discovered()) r.reachable_images.push_back(StateSet::from_mask(n, m));
  r.completely_reachable = r.reachable_images.size() == (std::size_t{1} << n) - 1;
  return r;
}

namespace {

/// Induction on n - |T| for weakly singular automata whose singular
/// relation is strongly connected: T = (U)f·g with U one larger.
std::vector<std::size_t> inductive_witness(const Automaton& automaton, const OnePointParts& parts,
                                           std::uint64_t target) {
  const auto n = automaton.states();
  const auto full = full_mask(n);
  const auto profile = one_point_profile(parts.singular);
  const std::uint64_t dup = std::uint64_t{1} << (profile.duplicate - 1);
  const std::uint64_t excluded = profile.excluded.mask();

  std::size_t singular_index = 0;
  std::vector<std::size_t> group_letters;  // automaton indices of Y
  std::vector<MaskAction> group_actions;
  const auto& gens = automaton.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].name == parts.singular_name) singular_index = i;
    if (gens[i].map.is_permutation()) {
      group_letters.push_back(i);
      group_actions.emplace_back(gens[i].map);
    }
  }
  const MaskAction f(parts.singular);
  PreimageSearch search(n, group_actions);

  std::vector<std::vector<std::size_t>> tails;  // f·g suffixes, innermost last
  std::uint64_t current = target;
  while (current != full) {
    // A group word g whose preimage of T holds the duplicate but misses the
    // excluded state, so f augments it.
    const auto hit = search.run(current, [dup, excluded](std::uint64_t m) {
      return (m & dup) != 0 && (m & excluded) != excluded;
    });
    if (!hit) throw Error("subset_witness_word: no augmenting map of the form f·g");
    std::vector<std::size_t> tail{singular_index};
    for (auto y : search.letters_to(*hit)) tail.push_back(group_letters[y]);
    tails.push_back(std::move(tail));
    current = f.preimage(*hit);
  }
  std::vector<std::size_t> word;
  for (auto it = tails.rbegin(); it != tails.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  return word;
}

}  // namespace

std::optional<Word> subset_witness_word(const Automaton& automaton, const StateSet& target,
                                        const Gates& gates) {
  const auto n = automaton.states();
  if (target.empty()) throw DomainError("the witness target must be nonempty");
  require_subset_gate(n, gates.subset_bfs_max_n, "subset_witness_word");
  const auto goal = to_mask(target, n);

  const auto c = classify(automaton);
  if (c.weakly_singular) {
    const auto parts = one_point_decomposition(automaton);
    if (parts && is_strongly_connected(pi_chain(parts->singular, parts->group).closure)) {
      return automaton.word_from_indices(inductive_witness(automaton, *parts, goal));
    }
  }
  ImageSearch search(automaton, gates, "subset_witness_word");
  const auto hit = search.run([goal](std::uint64_t m) { return m == goal; });
  if (!hit) return std::nullopt;
  return automaton.word_from_indices(search.letters_to(*hit));
}

BoundsReport verify_bounds(const Automaton& automaton, const Gates& gates) {
  BoundsReport r;
  const auto n = automaton.states();
  r.n = n;
  r.msc_bound = msc_upper_bound(n);
  r.rt_bound = quadratic_rt_bound(n);

  const auto c = classify(automaton);
  r.synchronizing = c.synchronizing;
  r.directable = c.directable;
  r.is_one_point = c.one_point;
  r.group_transitive = is_transitive(c.permutation_part);
  if (n > 2) r.group_primitive = is_primitive(c.permutation_part, PrimitivityMethod::higman_sims);

  auto fail = [&r](std::string what) {
    r.all_ok = false;
    r.violations.push_back(std::move(what));
  };

  if (c.one_point) {
    const auto parts = one_point_decomposition(automaton);
    const auto chain = pi_chain(parts->singular, parts->group);
    r.pi_strongly_connected = is_strongly_connected(chain.closure);
    r.msc = chain.msc;
    if (r.msc) r.at_bound = *r.msc + 1;
  }

  if (const auto rt = exact_reset_threshold(automaton, gates)) r.rt_exact = rt->length;
  r.at = augment_threshold(automaton, gates);
  if (r.at) r.greedy_bound = static_cast<std::int64_t>(*r.at) * (static_cast<std::int64_t>(n) - 2) + 1;
  if (const auto greedy = greedy_reset_word(automaton, gates)) r.greedy_word_length = greedy->length();

  if (!r.synchronizing) r.flags.emplace_back("not synchronizing");
  if (!c.transitive) r.flags.emplace_back("not transitive");
  if (!c.one_point) r.flags.emplace_back("not one-point");

  // Consistency of the independent routes.
  if (r.synchronizing != r.rt_exact.has_value()) fail("pair-merge test disagrees with reset search");
  if (r.directable != r.at.has_value()) fail("directable disagrees with augment threshold");

  if (r.pi_strongly_connected.value_or(false)) {
    if (!r.at || *r.at > *r.at_bound) fail("at <= msc + 1");
    if (*r.group_transitive) {
      if (static_cast<std::int64_t>(*r.msc) > r.msc_bound) fail("msc <= 2n - 3");
      if (!r.rt_exact || static_cast<std::int64_t>(*r.rt_exact) > r.rt_bound) {
        fail("rt <= 2(n-1)(n-2) + 1");
      }
    }
  }
  if (c.one_point && r.group_primitive.value_or(false) && !r.pi_strongly_connected.value_or(false)) {
    fail("primitive group forces a strongly connected singular relation");
  }
  if (r.directable && r.at && r.rt_exact && r.greedy_word_length) {
    const auto rt = static_cast<std::int64_t>(*r.rt_exact);
    const auto greedy = static_cast<std::int64_t>(*r.greedy_word_length);
    if (rt > *r.greedy_bound) fail("rt <= at(n-2) + 1");
    if (greedy > *r.greedy_bound) fail("greedy length <= at(n-2) + 1");
    if (greedy < rt) fail("greedy length >= rt");
  }
  return r;
}

}  // namespace synclab
