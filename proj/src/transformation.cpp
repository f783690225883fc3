#include "synclab/transformation.hpp"

#include <algorithm>
#include <sstream>

#include "synclab/errors.hpp"

namespace synclab {

Transformation::Transformation(const std::vector<State>& images) {
  if (images.empty()) throw DomainError("a transformation needs at least one state");
  const auto n = images.size();
  img_.reserve(n);
  for (State v : images) {
    if (v < 1 || v > n) {
      throw DomainError("image " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    img_.push_back(v - 1);
  }
}

Transformation::Transformation(std::initializer_list<State> images)
    : Transformation(std::vector<State>(images)) {}

Transformation Transformation::identity(std::size_t n) {
  if (n == 0) throw DomainError("a transformation needs at least one state");
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
  return Transformation(Raw{}, std::move(img));
}

Transformation Transformation::constant(std::size_t n, State target) {
  if (n == 0 || target < 1 || target > n) throw DomainError("constant target out of range");
  return Transformation(Raw{}, std::vector<std::uint32_t>(n, target - 1));
}

Transformation Transformation::transposition(std::size_t n, State a, State b) {
  if (a < 1 || a > n || b < 1 || b > n) throw DomainError("transposition state out of range");
  auto t = identity(n);
  std::swap(t.img_[a - 1], t.img_[b - 1]);
  return t;
}

Transformation Transformation::cycle(std::size_t n) {
  if (n == 0) throw DomainError("a transformation needs at least one state");
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Transformation(Raw{}, std::move(img));
}

State Transformation::operator()(State s) const {
  if (s < 1 || s > img_.size()) throw DomainError("state out of range");
  return img_[s - 1] + 1;
}

std::vector<State> Transformation::images() const {
  std::vector<State> out(img_.size());
  std::transform(img_.begin(), img_.end(), out.begin(), [](std::uint32_t v) { return v + 1; });
  return out;
}

std::size_t Transformation::rank() const {
  std::vector<char> seen(img_.size(), 0);
  std::size_t r = 0;
  for (auto v : img_) {
    if (!seen[v]) {
      seen[v] = 1;
      ++r;
    }
  }
  return r;
}

StateSet Transformation::image() const {
  StateSet out(img_.size());
  for (auto v : img_) out.insert(v + 1);
  return out;
}

Transformation Transformation::inverse() const {
  if (!is_permutation()) throw DomainError("only permutations are invertible");
  std::vector<std::uint32_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<std::uint32_t>(i);
  return Transformation(Raw{}, std::move(inv));
}

std::string Transformation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i > 0) os << ',';
    os << img_[i] + 1;
  }
  os << ')';
  return os.str();
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree()) {
    throw DimensionError("cannot compose maps on " + std::to_string(f.degree()) + " and " +
                         std::to_string(g.degree()) + " states");
  }
  std::vector<std::uint32_t> img(f.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = g.img_[f.img_[i]];
  return Transformation(Transformation::Raw{}, std::move(img));
}

std::string KernelType::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

KernelType kernel_type(const Transformation& f) {
  std::vector<std::size_t> counts(f.degree(), 0);
  for (auto v : f.raw()) ++counts[v];
  KernelType kt;
  for (auto c : counts)
    if (c > 0) kt.parts.push_back(c);
  std::sort(kt.parts.begin(), kt.parts.end(), std::greater<>());
  return kt;
}

std::string to_string(MapClass c) {
  switch (c) {
    case MapClass::permutation: return "permutation";
    case MapClass::constant: return "constant";
    case MapClass::simple_singular: return "simple-singular";
    case MapClass::one_point_singular: return "one-point-singular";
    case MapClass::other_singular: return "other-singular";
  }
  return "unknown";
}

MapProfile map_profile(const Transformation& f) {
  MapProfile p;
  p.image = f.image();
  p.coimage = p.image.complement();
  p.rank = p.image.size();
  p.corank = f.degree() - p.rank;
  p.kernel = kernel_type(f);
  const auto& parts = p.kernel.parts;
  p.one_point = parts.front() >= 2 && (parts.size() == 1 || parts[1] == 1);
  p.simple = p.one_point && parts.front() == 2;
  if (p.corank == 0) {
    p.cls = MapClass::permutation;
  } else if (p.rank == 1) {
    p.cls = MapClass::constant;
  } else if (p.simple) {
    p.cls = MapClass::simple_singular;
  } else if (p.one_point) {
    p.cls = MapClass::one_point_singular;
  } else {
    p.cls = MapClass::other_singular;
  }
  return p;
}

OnePointProfile one_point_profile(const Transformation& f) {
  const auto n = f.degree();
  const auto& img = f.raw();
  std::vector<std::size_t> counts(n, 0);
  for (auto v : img) ++counts[v];

  std::size_t big_classes = 0;
  std::uint32_t dup = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (counts[s] >= 2) {
      ++big_classes;
      dup = s;
    }
  }
  if (big_classes != 1) {
    throw NotOnePointError("map " + f.to_string() + " is not a one-point singular");
  }

  OnePointProfile p;
  p.k = counts[dup];
  p.duplicate = dup + 1;
  p.excluded = StateSet(n);
  p.rest = StateSet(n);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (counts[s] == 0) p.excluded.insert(s + 1);
    if (counts[s] == 1) p.rest.insert(s + 1);
  }
  // The duplicate always lies on a cycle: every other state has at most one
  // preimage, so the tree through the excluded states can only join a cycle
  // at the duplicate. Walk that cycle and keep the last state before it.
  std::uint32_t prev = dup;
  std::uint32_t cur = img[dup];
  for (std::size_t steps = 0; cur != dup; ++steps) {
    if (steps > n) throw Error("duplicate state not on a cycle");  // unreachable
    prev = cur;
    cur = img[cur];
  }
  p.cyclepoint = prev + 1;
  return p;
}

StateSet preimage(const Transformation& f, const StateSet& targets) {
  if (targets.universe() != f.degree()) throw DimensionError("preimage: universe mismatch");
  StateSet out(f.degree());
  const auto& img = f.raw();
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (targets.contains(img[i] + 1)) out.insert(static_cast<State>(i + 1));
  }
  return out;
}

StateSet image_of(const Transformation& f, const StateSet& sources) {
  if (sources.universe() != f.degree()) throw DimensionError("image_of: universe mismatch");
  StateSet out(f.degree());
  for (State s : sources.members()) out.insert(f(s));
  return out;
}

bool augments(const Transformation& f, const StateSet& targets) {
  if (!targets.is_proper()) {
    throw DomainError("augmentation is defined only for proper nonempty subsets");
  }
  return preimage(f, targets).size() > targets.size();
}

}  // namespace synclab
