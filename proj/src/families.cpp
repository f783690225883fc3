#include "synclab/families.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "synclab/analysis.hpp"
#include "synclab/errors.hpp"
#include "synclab/monoid.hpp"

namespace synclab {

Automaton build_family(FamilyKind kind, std::size_t n) {
  if (n < 2) throw DomainError("families need at least two states");
  std::vector<Generator> gens;
  switch (kind) {
    case FamilyKind::cerny: {
      std::vector<State> merge(n);
      for (State s = 1; s <= n; ++s) merge[s - 1] = s;
      merge[0] = 2;
      gens.push_back({"a", Transformation::cycle(n)});
      gens.push_back({"b", Transformation(merge)});
      break;
    }
    case FamilyKind::rn: {
      std::vector<State> x1(n);
      for (State s = 1; s <= n; ++s) x1[s - 1] = s;
      x1[1] = 1;
      gens.push_back({"x1", Transformation(x1)});
      for (State i = 2; i + 1 <= n; ++i) {
        gens.push_back({"x" + std::to_string(i), Transformation::transposition(n, i, i + 1)});
      }
      break;
    }
  }
  return Automaton(n, std::move(gens));
}

FamilyKind family_from_string(const std::string& name) {
  if (name == "cerny") return FamilyKind::cerny;
  if (name == "rn") return FamilyKind::rn;
  throw DomainError("unknown family '" + name + "' (expected cerny or rn)");
}

Automaton full_monoid_generators(std::size_t n) {
  if (n < 2) throw DomainError("full_monoid_generators needs at least two states");
  std::vector<State> idem(n);
  for (State s = 1; s <= n; ++s) idem[s - 1] = s;
  idem[1] = 1;
  std::vector<Generator> gens{{"c", Transformation::cycle(n)}};
  if (n > 2) gens.push_back({"t", Transformation::transposition(n, 1, 2)});
  gens.push_back({"e", Transformation(idem)});
  return Automaton(n, std::move(gens));
}

PartialBijection::PartialBijection(std::size_t m, std::vector<State> images)
    : m_(m), images_(std::move(images)) {
  if (images_.size() != m_) throw DimensionError("partial bijection table has the wrong size");
  std::vector<char> used(m_ + 1, 0);
  for (State v : images_) {
    if (v > m_) throw DomainError("partial bijection image out of range");
    if (v == 0) continue;
    if (used[v]) throw DomainError("partial map is not injective");
    used[v] = 1;
  }
}

PartialBijection PartialBijection::identity(std::size_t m) {
  std::vector<State> images(m);
  for (State s = 1; s <= m; ++s) images[s - 1] = s;
  return PartialBijection(m, std::move(images));
}

std::size_t PartialBijection::rank() const {
  return static_cast<std::size_t>(std::count_if(images_.begin(), images_.end(), [](State v) { return v != 0; }));
}

bool PartialBijection::is_idempotent() const { return compose(*this, *this) == *this; }

std::string PartialBijection::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (State s = 1; s <= m_; ++s) {
    if (images_[s - 1] == 0) continue;
    if (!first) os << ", ";
    os << s << "->" << images_[s - 1];
    first = false;
  }
  os << ']';
  return os.str();
}

PartialBijection compose(const PartialBijection& a, const PartialBijection& b) {
  if (a.universe() != b.universe()) throw DimensionError("partial bijections on different sets");
  std::vector<State> out(a.universe(), 0);
  for (State s = 1; s <= a.universe(); ++s) {
    const State mid = a.at(s);
    out[s - 1] = mid == 0 ? 0 : b.at(mid);
  }
  return PartialBijection(a.universe(), std::move(out));
}

std::vector<PartialBijection> all_partial_bijections(std::size_t m) {
  // Assign each state an unused image or nothing, depth first.
  std::vector<PartialBijection> out;
  std::vector<State> images(m, 0);
  std::vector<char> used(m + 1, 0);
  auto place = [&](auto&& self, std::size_t s) -> void {
    if (s == m) {
      out.emplace_back(m, images);
      return;
    }
    images[s] = 0;
    self(self, s + 1);
    for (State v = 1; v <= m; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      images[s] = v;
      self(self, s + 1);
      used[v] = 0;
    }
    images[s] = 0;
  };
  place(place, 0);
  std::sort(out.begin(), out.end());
  return out;
}

PartialBijection restrict_away_from_sink(const Transformation& f) {
  const auto n = f.degree();
  if (n < 2) throw DomainError("restriction needs at least two states");
  if (f(1) != 1) throw DomainError("map does not fix the sink state");
  std::vector<State> images(n - 1, 0);
  for (State s = 2; s <= n; ++s) {
    const State t = f(s);
    images[s - 2] = t == 1 ? 0 : t - 1;
  }
  return PartialBijection(n - 1, std::move(images));
}

Theorem17Report verify_theorem17(std::size_t n, const Gates& gates) {
  if (n < 2) throw DomainError("verify_theorem17 needs n >= 2");
  Theorem17Report r;
  r.n = n;
  r.rt_expected = n * (n - 1) / 2;

  const auto automaton = build_family(FamilyKind::rn, n);
  const auto rt = exact_reset_threshold(automaton, gates);
  if (!rt) throw Error("rn automaton is not synchronizing");
  r.rt = rt->length;

  const auto monoid = generate_monoid(automaton, gates.monoid_cap);
  r.monoid_size = monoid.size();
  const auto size = monoid.size();
  const auto m = n - 1;

  // Dense copies of the elements and their restrictions; 0xFF marks an
  // undefined restriction value.
  constexpr std::uint8_t undefined = 0xFF;
  std::vector<std::uint8_t> maps(size * n);
  std::vector<std::uint8_t> restricted(size * m);
  std::set<PartialBijection> images;
  for (std::size_t i = 0; i < size; ++i) {
    const auto& f = monoid.elements()[i];
    for (std::size_t s = 0; s < n; ++s) maps[i * n + s] = static_cast<std::uint8_t>(f.raw()[s]);
    const auto phi = restrict_away_from_sink(f);
    for (std::size_t s = 0; s < m; ++s) {
      const State v = phi.images()[s];
      restricted[i * m + s] = v == 0 ? undefined : static_cast<std::uint8_t>(v - 1);
    }
    images.insert(phi);
  }
  r.phi_injective = images.size() == size;

  const auto everything = all_partial_bijections(m);
  r.inverse_monoid_size = everything.size();
  r.phi_surjective = std::equal(images.begin(), images.end(), everything.begin(), everything.end());

  // phi(f·g) against phi(f)·phi(g), straight from the tables: state s+1 of
  // the restricted set is state s+2 of S (zero-based s+1).
  r.phi_morphism = true;
  for (std::size_t i = 0; i < size && r.phi_morphism; ++i) {
    const auto* f = &maps[i * n];
    const auto* pf = &restricted[i * m];
    for (std::size_t j = 0; j < size; ++j) {
      const auto* g = &maps[j * n];
      const auto* pg = &restricted[j * m];
      for (std::size_t s = 0; s < m; ++s) {
        const auto composed = g[f[s + 1]];
        const std::uint8_t lhs = composed == 0 ? undefined : static_cast<std::uint8_t>(composed - 1);
        const std::uint8_t rhs = pf[s] == undefined ? undefined : pg[pf[s]];
        if (lhs != rhs) {
          r.phi_morphism = false;
          break;
        }
      }
      if (!r.phi_morphism) break;
    }
  }
  r.phi_is_isomorphism = r.phi_injective && r.phi_morphism && r.phi_surjective;

  std::vector<PartialBijection> idempotents;
  for (const auto& p : images)
    if (p.is_idempotent()) idempotents.push_back(p);
  r.idempotents_commute = true;
  for (const auto& a : idempotents)
    for (const auto& b : idempotents)
      if (compose(a, b) != compose(b, a)) r.idempotents_commute = false;
  return r;
}

}  // namespace synclab
