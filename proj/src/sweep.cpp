#include "synclab/sweep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "synclab/analysis.hpp"
#include "synclab/errors.hpp"
#include "synclab/families.hpp"
#include "synclab/monoid.hpp"
#include "synclab/permutation_group.hpp"
#include "synclab/pi_chain.hpp"
#include "synclab/text_format.hpp"

namespace synclab {

namespace {

constexpr std::size_t kExamplesKept = 3;

std::string one_line(const Automaton& a) {
  auto text = render_automaton(a);
  std::replace(text.begin(), text.end(), '\n', ';');
  return text;
}

/// All n^n maps in lexicographic order of image tables.
std::vector<Transformation> all_maps(std::size_t n) {
  std::vector<Transformation> out;
  std::vector<State> images(n, 1);
  while (true) {
    out.emplace_back(images);
    std::size_t i = n;
    while (i > 0 && images[i - 1] == n) images[--i] = 1;
    if (i == 0) break;
    ++images[i - 1];
  }
  return out;
}

std::vector<Transformation> all_permutations(std::size_t n) {
  std::vector<State> images(n);
  std::iota(images.begin(), images.end(), State{1});
  std::vector<Transformation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// Sets of at most two distinct permutations: {}, {p}, {p, q} with p < q.
std::vector<std::vector<Transformation>> small_generator_sets(const std::vector<Transformation>& perms) {
  std::vector<std::vector<Transformation>> out{{}};
  for (std::size_t i = 0; i < perms.size(); ++i) out.push_back({perms[i]});
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = i + 1; j < perms.size(); ++j) out.push_back({perms[i], perms[j]});
  return out;
}

Automaton one_point_automaton(const Transformation& f, const std::vector<Transformation>& perms) {
  std::vector<Generator> gens{{"f", f}};
  for (std::size_t i = 0; i < perms.size(); ++i) gens.push_back({"y" + std::to_string(i + 1), perms[i]});
  return Automaton(f.degree(), std::move(gens));
}

Transformation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<State> images(n);
  std::iota(images.begin(), images.end(), State{1});
  std::shuffle(images.begin(), images.end(), rng);
  return Transformation(images);
}

Transformation random_map(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<State> pick(1, static_cast<State>(n));
  std::vector<State> images(n);
  for (auto& v : images) v = pick(rng);
  return Transformation(images);
}

/// Kernel type (k,1,...,1) with k uniform in 2..n.
Transformation random_one_point(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick_k(2, n);
  const auto k = pick_k(rng);
  std::vector<State> states(n);
  std::iota(states.begin(), states.end(), State{1});
  std::shuffle(states.begin(), states.end(), rng);
  std::vector<State> targets(n);
  std::iota(targets.begin(), targets.end(), State{1});
  std::shuffle(targets.begin(), targets.end(), rng);
  // states[0..k) collapse onto targets[0]; the rest map injectively.
  std::vector<State> images(n);
  for (std::size_t i = 0; i < n; ++i) images[states[i] - 1] = i < k ? targets[0] : targets[i - k + 1];
  return Transformation(images);
}

/// The chain facts that depend only on (excluded, duplicate) and Y.
struct ChainFacts {
  bool strongly_connected = false;
  std::optional<std::size_t> msc;
  bool cyclic_witnesses = false;
};

/// Each excluded e has a pair (e,d)g with |g| <= n-1 inside the cyclic part
/// of pi_{n-1}.
bool cyclic_witnesses_hold(const Transformation& f, const PermutationSet& group, const PiChain& chain) {
  const auto n = f.degree();
  const auto profile = one_point_profile(f);
  const auto& pi = chain.relations[std::min(n - 1, chain.relations.size() - 1)];
  const auto cyclic = cyclic_part(pi);
  for (State e : profile.excluded.members()) {
    BinaryRelation reach(n);
    reach.insert(e, profile.duplicate);
    std::vector<StatePair> frontier{{e, profile.duplicate}};
    for (std::size_t step = 0; step + 1 < n; ++step) {
      std::vector<StatePair> next;
      for (auto [s, t] : frontier)
        for (const auto& g : group.generators())
          if (reach.insert(g.map(s), g.map(t))) next.emplace_back(g.map(s), g.map(t));
      frontier = std::move(next);
    }
    const auto pairs = reach.pairs();
    if (std::none_of(pairs.begin(), pairs.end(), [&](const StatePair& p) { return cyclic.contains(p.first, p.second); })) {
      return false;
    }
  }
  return true;
}

/// For a directable automaton: rt <= |greedy word| <= at(n-2)+1.
void record_greedy_brackets(SweepReport& report, const Automaton& a, std::size_t at, std::size_t rt,
                            const Gates& gates) {
  const auto greedy = greedy_reset_word(a, gates);
  const auto bound = static_cast<std::int64_t>(at) * (static_cast<std::int64_t>(a.states()) - 2) + 1;
  report.record("greedy <= at(n-2)+1", greedy && static_cast<std::int64_t>(greedy->length()) <= bound, a);
  report.record("greedy >= rt", greedy && greedy->length() >= rt, a);
}

void check_one_point_instance(SweepReport& report, const Automaton& a, const ChainFacts& facts,
                              const Gates& gates) {
  const auto n = a.states();
  ++report.qualifying;
  const auto msc = *facts.msc;
  report.record("msc <= 2n-3", static_cast<std::int64_t>(msc) <= msc_upper_bound(n), a);
  report.record("cyclic witness in pi_{n-1}", facts.cyclic_witnesses, a);

  const auto at = augment_threshold(a, gates);
  report.record("at <= msc+1", at.has_value() && *at <= msc + 1, a);
  const auto rt = exact_reset_threshold(a, gates);
  report.record("rt <= 2(n-1)(n-2)+1", rt.has_value() && static_cast<std::int64_t>(rt->length) <= quadratic_rt_bound(n), a);

  if (at && rt) {
    record_greedy_brackets(report, a, *at, rt->length, gates);
  } else {
    report.record("greedy <= at(n-2)+1", false, a);
  }
}

}  // namespace

bool SweepReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const SweepCheck& c) { return c.violations == 0; });
}

SweepCheck& SweepReport::check(const std::string& name) {
  for (auto& c : checks)
    if (c.name == name) return c;
  checks.push_back({name, 0, 0, {}});
  return checks.back();
}

void SweepReport::record(const std::string& name, bool holds, const Automaton& instance) {
  auto& c = check(name);
  ++c.checked;
  if (holds) return;
  ++c.violations;
  if (c.examples.size() < kExamplesKept) c.examples.push_back(one_line(instance));
}

SweepReport sweep_one_point_bounds(std::size_t n, std::size_t samples, std::uint64_t seed,
                                   const Gates& gates) {
  if (n < 2) throw DomainError("one-point automata need at least two states");
  SweepReport report;
  report.suite = "bounds";
  report.n = n;
  report.seed = seed;
  for (const char* name : {"msc <= 2n-3", "cyclic witness in pi_{n-1}", "at <= msc+1",
                           "rt <= 2(n-1)(n-2)+1", "greedy <= at(n-2)+1", "greedy >= rt"}) {
    report.check(name);
  }

  auto facts_for = [](const Transformation& f, const PermutationSet& group) {
    ChainFacts facts;
    const auto chain = pi_chain(f, group);
    facts.msc = chain.msc;
    facts.strongly_connected = chain.msc.has_value();
    if (facts.strongly_connected) facts.cyclic_witnesses = cyclic_witnesses_hold(f, group, chain);
    return facts;
  };

  if (samples == 0) {
    std::vector<Transformation> one_points;
    for (auto& f : all_maps(n))
      if (map_profile(f).one_point) one_points.push_back(std::move(f));
    for (const auto& perms : small_generator_sets(all_permutations(n))) {
      const auto group = PermutationSet::from_maps(n, perms);
      report.instances += one_points.size();
      if (!is_transitive(group)) continue;
      // The chain depends on f only through its duplicate and excluded set.
      std::map<std::pair<State, std::vector<State>>, ChainFacts> cache;
      for (const auto& f : one_points) {
        const auto profile = one_point_profile(f);
        const auto key = std::make_pair(profile.duplicate, profile.excluded.members());
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, facts_for(f, group)).first;
        if (!it->second.strongly_connected) continue;
        check_one_point_instance(report, one_point_automaton(f, perms), it->second, gates);
      }
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(1, 2);
  const std::size_t max_draws = samples * 50;
  while (report.qualifying < samples && report.instances < max_draws) {
    ++report.instances;
    const auto f = random_one_point(n, rng);
    std::vector<Transformation> perms;
    const int count = coin(rng);
    for (int i = 0; i < count; ++i) perms.push_back(random_permutation(n, rng));
    const auto group = PermutationSet::from_maps(n, perms);
    if (!is_transitive(group)) continue;
    const auto facts = facts_for(f, group);
    if (!facts.strongly_connected) continue;
    check_one_point_instance(report, one_point_automaton(f, perms), facts, gates);
  }
  return report;
}

namespace {

/// Elements of <Y> for n <= 6 via a dense multiplication table over
/// permutation ranks; used only to group Y by the group they generate.
class SmallSymmetricGroup {
 public:
  explicit SmallSymmetricGroup(std::size_t n) : n_(n), perms_(all_permutations(n)) {
    for (std::size_t i = 0; i < perms_.size(); ++i) rank_.emplace(perms_[i], i);
    const auto size = perms_.size();
    product_.resize(size * size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        product_[i * size + j] = static_cast<std::uint16_t>(rank_.at(compose(perms_[i], perms_[j])));
  }

  std::vector<bool> elements(const std::vector<Transformation>& gens) const {
    const auto size = perms_.size();
    std::vector<std::size_t> g;
    for (const auto& p : gens) g.push_back(rank_.at(p));
    std::vector<bool> seen(size, false);
    std::vector<std::size_t> queue{rank_.at(Transformation::identity(n_))};
    seen[queue.front()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto x : g) {
        const auto next = product_[queue[head] * size + x];
        if (!seen[next]) {
          seen[next] = true;
          queue.push_back(next);
        }
      }
    }
    return seen;
  }

 private:
  std::size_t n_;
  std::vector<Transformation> perms_;
  std::map<Transformation, std::size_t> rank_;
  std::vector<std::uint16_t> product_;
};

}  // namespace

SweepReport sweep_primitive_groups(std::size_t n, const Gates& gates) {
  if (n < 3) throw DomainError("primitivity sweeps need at least three states");
  if (n > 6) throw CapacityError("primitive-group sweep is capped at n <= 6");
  SweepReport report;
  report.suite = "primitive";
  report.n = n;
  for (const char* name : {"methods agree", "primitive => transitive", "pi_A strongly connected",
                           "simple => completely reachable", "greedy <= at(n-2)+1", "greedy >= rt"}) {
    report.check(name);
  }

  const SmallSymmetricGroup symmetric(n);
  std::vector<Transformation> one_points;
  for (auto& f : all_maps(n))
    if (map_profile(f).one_point) one_points.push_back(std::move(f));

  // Primitive groups, each with the first generating set that produced it.
  // The singular relation depends only on the group and the reachable
  // images only on the monoid <f, G>, so one representative suffices.
  std::map<std::vector<bool>, std::vector<Transformation>> primitive_groups;
  for (const auto& perms : small_generator_sets(all_permutations(n))) {
    ++report.instances;
    const auto group = PermutationSet::from_maps(n, perms);
    const bool hs = is_primitive(group, PrimitivityMethod::higman_sims);
    const bool blocks = is_primitive(group, PrimitivityMethod::block_oracle);
    const auto witness = Automaton(n, [&] {
      std::vector<Generator> gens;
      for (std::size_t i = 0; i < perms.size(); ++i) gens.push_back({"y" + std::to_string(i + 1), perms[i]});
      return gens;
    }());
    report.record("methods agree", hs == blocks, witness);
    if (!hs) continue;
    report.record("primitive => transitive", orbits(group).size() == 1, witness);
    primitive_groups.emplace(symmetric.elements(perms), perms);
  }

  for (const auto& [elements, perms] : primitive_groups) {
    (void)elements;
    const auto group = PermutationSet::from_maps(n, perms);
    for (const auto& f : one_points) {
      ++report.qualifying;
      const auto a = one_point_automaton(f, perms);
      const auto chain = pi_chain(f, group);
      report.record("pi_A strongly connected", is_strongly_connected(chain.closure), a);
      if (map_profile(f).simple) {
        report.record("simple => completely reachable", reachability(a, gates).completely_reachable, a);
      }
      const auto at = augment_threshold(a, gates);
      const auto rt = exact_reset_threshold(a, gates);
      if (at && rt) record_greedy_brackets(report, a, *at, rt->length, gates);
    }
  }
  return report;
}

SweepReport sweep_equivalences(std::size_t n, std::size_t samples, std::uint64_t seed,
                               const Gates& gates) {
  if (n < 1) throw DomainError("n must be positive");
  SweepReport report;
  report.suite = "equivalences";
  report.n = n;
  report.seed = seed;
  for (const char* name : {"directable <=> synchronizing and transitive", "pair-merge <=> reset word exists",
                           "greedy <= at(n-2)+1", "greedy >= rt"}) {
    report.check(name);
  }

  auto examine = [&](const Automaton& a) {
    ++report.instances;
    const auto c = classify(a);
    const auto at = augment_threshold(a, gates);
    const auto rt = exact_reset_threshold(a, gates);
    report.record("directable <=> synchronizing and transitive", at.has_value() == (c.synchronizing && c.transitive), a);
    report.record("pair-merge <=> reset word exists", c.synchronizing == rt.has_value(), a);
    if (!at || !rt) return;
    ++report.qualifying;
    record_greedy_brackets(report, a, *at, rt->length, gates);
  };

  const auto maps = all_maps(n);
  for (const auto& f : maps) examine(Automaton(n, {{"a", f}}));
  if (samples == 0) {
    for (const auto& f : maps)
      for (const auto& g : maps) examine(Automaton(n, {{"a", f}, {"b", g}}));
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      auto f = random_map(n, rng);
      auto g = random_map(n, rng);
      examine(Automaton(n, {{"a", std::move(f)}, {"b", std::move(g)}}));
    }
  }
  return report;
}

SweepReport sweep_monotonicity(std::size_t n, std::size_t samples, std::uint64_t seed, const Gates& gates) {
  if (n < 3) throw DomainError("monotonicity sweep needs n >= 3");
  SweepReport report;
  report.suite = "monotonicity";
  report.n = n;
  report.seed = seed;
  report.check("rt(A + g) <= rt(A)");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_n(3, n);
  std::uniform_int_distribution<int> pick_count(1, 2);
  while (report.qualifying < samples && report.instances < samples * 50) {
    ++report.instances;
    const auto states = pick_n(rng);
    std::vector<Generator> gens;
    const int count = pick_count(rng);
    for (int i = 0; i < count; ++i) gens.push_back({"a" + std::to_string(i + 1), random_map(states, rng)});
    const Automaton a(states, std::move(gens));
    const auto before = exact_reset_threshold(a, gates);
    if (!before) continue;
    ++report.qualifying;
    const auto b = a.with_generator({"extra", random_map(states, rng)});
    const auto after = exact_reset_threshold(b, gates);
    report.record("rt(A + g) <= rt(A)", after && after->length <= before->length, b);
  }
  return report;
}

SweepReport sweep_subadditivity(std::size_t n, const Gates& gates) {
  SweepReport report;
  report.suite = "subadditivity";
  report.n = n;
  report.check("l(f.g) <= l(f) + l(g)");
  const auto maps = all_maps(n);
  auto examine = [&](const Automaton& a) {
    ++report.instances;
    ++report.qualifying;
    const auto monoid = generate_monoid(a, gates.monoid_cap);
    bool holds = true;
    const auto& el = monoid.elements();
    for (std::size_t i = 0; i < el.size() && holds; ++i) {
      for (std::size_t j = 0; j < el.size(); ++j) {
        const auto k = *monoid.index_of(compose(el[i], el[j]));
        if (monoid.length(k) > monoid.length(i) + monoid.length(j)) {
          holds = false;
          break;
        }
      }
    }
    report.record("l(f.g) <= l(f) + l(g)", holds, a);
  };
  for (const auto& f : maps) examine(Automaton(n, {{"a", f}}));
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j) examine(Automaton(n, {{"a", maps[i]}, {"b", maps[j]}}));
  if (n >= 2) examine(full_monoid_generators(n));
  return report;
}

namespace {

/// A generating set for the alternating group A_n (3-cycles (1 2 k)).
std::vector<Transformation> alternating_generators(std::size_t n) {
  std::vector<Transformation> out;
  for (State k = 3; k <= n; ++k) {
    std::vector<State> images(n);
    std::iota(images.begin(), images.end(), State{1});
    images[0] = 2;
    images[1] = k;
    images[k - 1] = 1;
    out.emplace_back(images);
  }
  return out;
}

}  // namespace

SweepReport sweep_monoid_bounds(std::size_t n, const Gates& gates) {
  if (n < 3) throw DomainError("monoid bound sweep needs n >= 3");
  SweepReport report;
  report.suite = "monoid";
  report.n = n;
  report.check("rt(M) <= 2(n-1)(n-2)+1");
  report.check("generating sets keep a top-rank one-point map");
  report.check("skipped: beyond generating-set gate");

  std::set<std::vector<Transformation>> seen;
  auto examine = [&](const Automaton& a) {
    ++report.instances;
    std::optional<MonoidTable> monoid;
    try {
      monoid.emplace(generate_monoid(a, gates.generating_set_max_monoid));
    } catch (const CapacityError&) {
      report.record("skipped: beyond generating-set gate", true, a);
      return;
    }
    auto key = monoid->elements();
    std::sort(key.begin(), key.end());
    if (!seen.insert(std::move(key)).second) return;
    const auto stats = monoid_stats(*monoid);
    if (stats.has_one_point_of_rank_sr) {
      report.record("generating sets keep a top-rank one-point map", lemma15_check(*monoid, gates) == Lemma15Outcome::holds, a);
    }
    if (!stats.synchronizing || !quadratic_monoid_bound_applies(*monoid)) return;
    ++report.qualifying;
    const auto rt = monoid_reset_threshold(*monoid, gates);
    report.record("rt(M) <= 2(n-1)(n-2)+1", static_cast<std::int64_t>(rt.value) <= quadratic_rt_bound(n), a);
  };

  if (n == 3) {
    const auto maps = all_maps(n);
    for (const auto& f : maps) examine(Automaton(n, {{"a", f}}));
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t j = i + 1; j < maps.size(); ++j) examine(Automaton(n, {{"a", maps[i]}, {"b", maps[j]}}));
  }

  // Targeted monoids: a primitive group (alternating or symmetric) plus a
  // constant, whose rank-1 one-point maps are the only singulars.
  auto with_constant = [n](std::vector<Transformation> perms) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < perms.size(); ++i) gens.push_back({"y" + std::to_string(i + 1), perms[i]});
    gens.push_back({"c", Transformation::constant(n, 1)});
    return Automaton(n, std::move(gens));
  };
  examine(with_constant(alternating_generators(n)));
  examine(with_constant({Transformation::cycle(n), Transformation::transposition(n, 1, 2)}));
  return report;
}

std::vector<std::string> sweep_suites() {
  return {"bounds", "primitive", "equivalences", "monotonicity", "subadditivity", "monoid"};
}

SweepReport run_sweep(const std::string& suite, std::size_t n, std::size_t samples, std::uint64_t seed,
                      const Gates& gates) {
  if (suite == "bounds") return sweep_one_point_bounds(n, samples, seed, gates);
  if (suite == "primitive") return sweep_primitive_groups(n, gates);
  if (suite == "equivalences") return sweep_equivalences(n, samples, seed, gates);
  if (suite == "monotonicity") return sweep_monotonicity(n, samples == 0 ? 1000 : samples, seed, gates);
  if (suite == "subadditivity") return sweep_subadditivity(n, gates);
  if (suite == "monoid") return sweep_monoid_bounds(n, gates);
  throw DomainError("unknown sweep suite '" + suite + "'");
}

}  // namespace synclab
