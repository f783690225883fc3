#include "synclab/pi_chain.hpp"

#include "synclab/analysis.hpp"
#include "synclab/errors.hpp"

namespace synclab {

PiChain pi_chain(const Transformation& f, const PermutationSet& group) {
  if (f.degree() != group.degree()) throw DimensionError("map and group differ in degree");
  const auto profile = one_point_profile(f);
  const auto n = f.degree();

  BinaryRelation current(n);
  std::vector<StatePair> frontier;
  for (State e : profile.excluded.members()) {
    current.insert(e, profile.duplicate);
    frontier.emplace_back(e, profile.duplicate);
  }

  PiChain chain;
  chain.closure = group_closure(group, current);
  chain.relations.push_back(current);

  // pi_m = pi_{m-1} ∪ (pi_{m-1})Y; only pairs first reached at step m-1 can
  // contribute new ones.
  while (!(current == chain.closure)) {
    std::vector<StatePair> next;
    for (auto [s, t] : frontier) {
      for (const auto& g : group.generators()) {
        const State x = g.map(s);
        const State y = g.map(t);
        if (current.insert(x, y)) next.emplace_back(x, y);
      }
    }
    if (next.empty()) throw Error("pi chain stalled below its closure");  // unreachable
    frontier = std::move(next);
    chain.relations.push_back(current);
  }

  if (is_strongly_connected(chain.closure)) {
    for (std::size_t m = 0; m < chain.relations.size(); ++m) {
      if (is_strongly_connected(chain.relations[m])) {
        chain.msc = m;
        break;
      }
    }
  }
  return chain;
}

std::optional<std::size_t> msc(const Automaton& automaton) {
  const auto parts = one_point_decomposition(automaton);
  if (!parts) throw NotOnePointError("automaton is not one-point");
  return pi_chain(parts->singular, parts->group).msc;
}

}  // namespace synclab
