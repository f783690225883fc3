#include "synclab/monoid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "synclab/analysis.hpp"
#include "synclab/errors.hpp"
#include "synclab/permutation_group.hpp"

namespace synclab {

std::optional<std::size_t> MonoidTable::index_of(const Transformation& f) const {
  const auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MonoidTable generate_monoid(const Automaton& automaton, std::size_t cap) {
  if (cap == 0) throw DomainError("monoid cap must be positive");
  MonoidTable m(automaton);
  auto add = [&m, cap](Transformation f, std::size_t length) {
    if (m.index_.contains(f)) return;
    if (m.elements_.size() == cap) {
      throw CapacityError("monoid exceeds the cap of " + std::to_string(cap) + " elements",
                          m.elements_.size());
    }
    m.index_.emplace(f, m.elements_.size());
    m.elements_.push_back(std::move(f));
    m.lengths_.push_back(length);
  };
  add(Transformation::identity(automaton.states()), 0);
  for (std::size_t head = 0; head < m.elements_.size(); ++head) {
    for (const auto& g : automaton.generators()) {
      // Copy: `add` may reallocate elements_.
      const auto current = m.elements_[head];
      add(compose(current, g.map), m.lengths_[head] + 1);
    }
  }
  return m;
}

MonoidStats monoid_stats(const MonoidTable& monoid) {
  MonoidStats s;
  s.size = monoid.size();
  for (const auto& f : monoid.elements()) {
    const auto r = f.rank();
    if (r == 1) s.synchronizing = true;
    if (r < f.degree()) s.sr = std::max(s.sr.value_or(0), r);
  }
  if (s.sr) {
    for (const auto& f : monoid.elements()) {
      if (f.rank() == *s.sr && map_profile(f).one_point) {
        s.has_one_point_of_rank_sr = true;
        break;
      }
    }
  }
  return s;
}

namespace {

/// Multiplication table over element indices, for monoids of at most 64
/// elements, with subsets as bit masks.
class SmallMonoid {
 public:
  explicit SmallMonoid(const MonoidTable& monoid) : size_(monoid.size()), table_(size_ * size_) {
    const auto& el = monoid.elements();
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j)
        table_[i * size_ + j] = static_cast<std::uint8_t>(*monoid.index_of(compose(el[i], el[j])));
  }

  std::uint64_t all() const { return size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1; }

  /// <X> as a mask, identity included.
  std::uint64_t closure(std::uint64_t gens) const {
    std::uint64_t seen = 1;  // identity is index 0
    std::uint8_t queue[64];
    std::size_t head = 0, tail = 0;
    queue[tail++] = 0;
    while (head < tail) {
      const auto cur = queue[head++];
      for (auto g = gens; g != 0; g &= g - 1) {
        const auto x = static_cast<std::size_t>(std::countr_zero(g));
        const auto next = table_[cur * size_ + x];
        if ((seen >> next) & 1U) continue;
        seen |= std::uint64_t{1} << next;
        queue[tail++] = next;
      }
    }
    return seen;
  }

 private:
  std::size_t size_;
  std::vector<std::uint8_t> table_;
};

}  // namespace

std::vector<std::vector<std::size_t>> irredundant_generating_sets(const MonoidTable& monoid,
                                                                  const Gates& gates) {
  const auto limit = std::min<std::size_t>(gates.generating_set_max_monoid, 64);
  if (monoid.size() > limit) {
    throw CapacityError("generating-set enumeration capped at monoids of " + std::to_string(limit) +
                            " elements (this one has " + std::to_string(monoid.size()) + ")",
                        monoid.size());
  }
  const SmallMonoid small(monoid);
  const auto everything = small.all();

  // Candidates by rank, descending; index breaks ties.
  std::vector<std::size_t> order;
  for (std::size_t i = 1; i < monoid.size(); ++i) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return monoid.elements()[a].rank() > monoid.elements()[b].rank();
  });

  std::vector<std::vector<std::size_t>> found;
  if (monoid.size() == 1) {
    found.emplace_back();  // the trivial monoid is generated by nothing
    return found;
  }

  // Each new element must lie outside the closure of those before it; every
  // irredundant set has an ordering with this property.
  auto dfs = [&](auto&& self, std::size_t pos, std::uint64_t chosen, std::uint64_t closed) -> void {
    for (std::size_t i = pos; i < order.size(); ++i) {
      const auto e = order[i];
      if ((closed >> e) & 1U) continue;
      const auto next = chosen | (std::uint64_t{1} << e);
      const auto next_closed = small.closure(next);
      if (next_closed != everything) {
        self(self, i + 1, next, next_closed);
        continue;
      }
      bool minimal = true;
      for (auto rest = next; rest != 0 && minimal; rest &= rest - 1) {
        const auto x = std::countr_zero(rest);
        const auto without = next & ~(std::uint64_t{1} << x);
        if ((small.closure(without) >> x) & 1U) minimal = false;
      }
      if (minimal) {
        std::vector<std::size_t> set;
        for (auto rest = next; rest != 0; rest &= rest - 1)
          set.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
        found.push_back(std::move(set));
      }
    }
  };
  dfs(dfs, 0, 0, 1);
  return found;
}

Automaton automaton_on(const MonoidTable& monoid, const std::vector<std::size_t>& indices) {
  std::vector<Generator> gens;
  for (auto i : indices) gens.push_back({"m" + std::to_string(i), monoid.elements().at(i)});
  return Automaton(monoid.degree(), std::move(gens));
}

MonoidResetThreshold monoid_reset_threshold(const MonoidTable& monoid, const Gates& gates) {
  if (!monoid_stats(monoid).synchronizing) throw DomainError("monoid contains no constant map");
  MonoidResetThreshold result;
  bool first = true;
  for (const auto& set : irredundant_generating_sets(monoid, gates)) {
    ++result.generating_sets;
    const auto rt = exact_reset_threshold(automaton_on(monoid, set), gates);
    if (!rt) throw Error("generating set of a synchronizing monoid without reset word");
    if (first || rt->length > result.value) {
      result.value = rt->length;
      result.witness = set;
      first = false;
    }
  }
  return result;
}

Lemma15Outcome lemma15_check(const MonoidTable& monoid, const Gates& gates) {
  const auto stats = monoid_stats(monoid);
  if (!stats.has_one_point_of_rank_sr) return Lemma15Outcome::not_applicable;
  const auto sr = *stats.sr;
  std::vector<char> good(monoid.size(), 0);
  for (std::size_t i = 0; i < monoid.size(); ++i) {
    const auto& f = monoid.elements()[i];
    good[i] = f.rank() == sr && map_profile(f).one_point;
  }
  for (const auto& set : irredundant_generating_sets(monoid, gates)) {
    if (std::none_of(set.begin(), set.end(), [&](std::size_t i) { return good[i] != 0; })) {
      return Lemma15Outcome::violated;
    }
  }
  return Lemma15Outcome::holds;
}

bool quadratic_monoid_bound_applies(const MonoidTable& monoid) {
  const auto n = monoid.degree();
  if (n <= 2) return false;
  if (!monoid_stats(monoid).has_one_point_of_rank_sr) return false;
  std::vector<Transformation> units;
  for (const auto& f : monoid.elements())
    if (f.is_permutation()) units.push_back(f);
  return is_primitive(PermutationSet::from_maps(n, units), PrimitivityMethod::higman_sims);
}

}  // namespace synclab
