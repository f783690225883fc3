#include "synclab/permutation_group.hpp"

#include <algorithm>
#include <numeric>

#include "synclab/errors.hpp"

namespace synclab {

PermutationSet::PermutationSet(std::size_t n) : n_(n) {}

PermutationSet::PermutationSet(std::size_t n, std::vector<NamedPermutation> perms)
    : n_(n), perms_(std::move(perms)) {
  inverses_.reserve(perms_.size());
  for (const auto& p : perms_) {
    if (p.map.degree() != n_) throw DimensionError("generator " + p.name + " has wrong degree");
    if (!p.map.is_permutation()) throw DomainError("generator " + p.name + " is not a permutation");
    inverses_.push_back(p.map.inverse());
  }
}

PermutationSet PermutationSet::from_maps(std::size_t n, const std::vector<Transformation>& maps) {
  std::vector<NamedPermutation> perms;
  for (std::size_t i = 0; i < maps.size(); ++i) perms.push_back({"g" + std::to_string(i + 1), maps[i]});
  return PermutationSet(n, std::move(perms));
}

namespace {

/// Generators and inverses as zero-based image tables.
std::vector<const std::vector<std::uint32_t>*> all_moves(const PermutationSet& group) {
  std::vector<const std::vector<std::uint32_t>*> moves;
  for (const auto& p : group.generators()) moves.push_back(&p.map.raw());
  for (const auto& inv : group.inverses()) moves.push_back(&inv.raw());
  return moves;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }

  std::vector<std::uint32_t> parent;
};

std::vector<std::vector<State>> classes_of(UnionFind& uf, std::size_t n) {
  std::vector<std::vector<State>> groups(n);
  for (std::uint32_t v = 0; v < n; ++v) groups[uf.find(v)].push_back(v + 1);
  std::vector<std::vector<State>> out;
  for (auto& g : groups)
    if (!g.empty()) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

/// Congruence closure from (s,t) with zero-based states; returns the number
/// of classes left.
std::size_t congruence_closure(const PermutationSet& group, UnionFind& uf, std::uint32_t s,
                               std::uint32_t t) {
  const auto n = group.degree();
  std::size_t classes = n;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> work;
  if (uf.unite(s, t)) {
    --classes;
    work.emplace_back(s, t);
  }
  while (!work.empty() && classes > 1) {
    const auto [a, b] = work.back();
    work.pop_back();
    for (const auto& p : group.generators()) {
      const auto& img = p.map.raw();
      if (uf.unite(img[a], img[b])) {
        --classes;
        work.emplace_back(img[a], img[b]);
      }
    }
  }
  return classes;
}

/// Assigns every off-diagonal pair (index s*n+t, zero-based) an orbital id.
std::vector<std::size_t> orbital_ids(const PermutationSet& group, std::size_t& count) {
  const auto n = group.degree();
  const auto moves = all_moves(group);
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id(n * n, unset);
  count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> work;
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t t = 0; t < n; ++t) {
      if (s == t || id[s * n + t] != unset) continue;
      id[s * n + t] = count;
      work.emplace_back(s, t);
      while (!work.empty()) {
        const auto [a, b] = work.back();
        work.pop_back();
        for (const auto* img : moves) {
          const auto x = (*img)[a];
          const auto y = (*img)[b];
          if (id[x * n + y] == unset) {
            id[x * n + y] = count;
            work.emplace_back(x, y);
          }
        }
      }
      ++count;
    }
  }
  return id;
}

bool higman_sims(const PermutationSet& group) {
  if (!is_transitive(group)) return false;
  const auto n = group.degree();
  std::size_t count = 0;
  const auto id = orbital_ids(group, count);
  std::vector<BinaryRelation> digraphs(count, BinaryRelation(n));
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t t = 0; t < n; ++t)
      if (s != t) digraphs[id[s * n + t]].insert(s + 1, t + 1);
  return std::all_of(digraphs.begin(), digraphs.end(),
                     [](const BinaryRelation& r) { return is_strongly_connected(r); });
}

/// First pair whose congruence is proper, or nullopt.
std::optional<std::vector<std::vector<State>>> find_block_system(const PermutationSet& group) {
  const auto n = group.degree();
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t t = s + 1; t < n; ++t) {
      UnionFind uf(n);
      if (congruence_closure(group, uf, s, t) > 1) return classes_of(uf, n);
    }
  }
  return std::nullopt;
}

void require_primitivity_domain(const PermutationSet& group) {
  if (group.degree() <= 2) {
    throw DomainError("primitivity is only defined here for more than two states");
  }
}

}  // namespace

std::vector<std::vector<State>> orbits(const PermutationSet& group) {
  const auto n = group.degree();
  UnionFind uf(n);
  for (const auto& p : group.generators()) {
    const auto& img = p.map.raw();
    for (std::uint32_t s = 0; s < n; ++s) uf.unite(s, img[s]);
  }
  return classes_of(uf, n);
}

bool is_transitive(const PermutationSet& group) { return orbits(group).size() == 1; }

BinaryRelation group_closure(const PermutationSet& group, const BinaryRelation& rho) {
  if (rho.universe() != group.degree()) throw DimensionError("relation and group differ in degree");
  const auto moves = all_moves(group);
  BinaryRelation out = rho;
  auto work = rho.pairs();
  while (!work.empty()) {
    const auto [s, t] = work.back();
    work.pop_back();
    for (const auto* img : moves) {
      const State x = (*img)[s - 1] + 1;
      const State y = (*img)[t - 1] + 1;
      if (out.insert(x, y)) work.emplace_back(x, y);
    }
  }
  return out;
}

BinaryRelation orbital(const PermutationSet& group, State s, State t) {
  BinaryRelation seed(group.degree());
  seed.insert(s, t);
  return group_closure(group, seed);
}

std::vector<BinaryRelation> orbitals(const PermutationSet& group) {
  const auto n = group.degree();
  std::size_t count = 0;
  const auto id = orbital_ids(group, count);
  std::vector<BinaryRelation> out(count, BinaryRelation(n));
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t t = 0; t < n; ++t)
      if (s != t) out[id[s * n + t]].insert(s + 1, t + 1);
  return out;
}

std::vector<std::vector<State>> minimal_congruence(const PermutationSet& group, State s, State t) {
  const auto n = group.degree();
  if (s < 1 || s > n || t < 1 || t > n) throw DomainError("state out of range");
  UnionFind uf(n);
  congruence_closure(group, uf, s - 1, t - 1);
  return classes_of(uf, n);
}

bool is_primitive(const PermutationSet& group, PrimitivityMethod method) {
  require_primitivity_domain(group);
  switch (method) {
    case PrimitivityMethod::higman_sims: return higman_sims(group);
    case PrimitivityMethod::block_oracle: return !find_block_system(group).has_value();
  }
  return false;
}

PrimitivityReport primitivity_report(const PermutationSet& group) {
  require_primitivity_domain(group);
  PrimitivityReport report;
  report.transitive = is_transitive(group);
  const bool by_orbitals = higman_sims(group);
  report.blocks = find_block_system(group);
  report.primitive = !report.blocks.has_value();
  if (by_orbitals != report.primitive) {
    throw Error("primitivity methods disagree");
  }
  if (!report.transitive) {
    report.reason = "group is not transitive";
  } else if (!report.primitive) {
    report.reason = "an orbital digraph is not strongly connected";
  }
  return report;
}

}  // namespace synclab
