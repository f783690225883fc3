#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "synclab/state_set.hpp"

namespace synclab {

/// A total self-map of {1..n}, acting on the right: (s)f.
class Transformation {
 public:
  /// `images[i]` is the image of state i+1, itself in 1..n.
  explicit Transformation(const std::vector<State>& images);
  Transformation(std::initializer_list<State> images);

  static Transformation identity(std::size_t n);
  static Transformation constant(std::size_t n, State target);
  /// Swaps `a` and `b`, fixes everything else.
  static Transformation transposition(std::size_t n, State a, State b);
  /// i -> i+1, n -> 1.
  static Transformation cycle(std::size_t n);

  std::size_t degree() const noexcept { return img_.size(); }
  State operator()(State s) const;
  /// 1-indexed image table.
  std::vector<State> images() const;

  std::size_t rank() const;
  std::size_t corank() const { return degree() - rank(); }
  StateSet image() const;
  StateSet coimage() const { return image().complement(); }
  bool is_permutation() const { return rank() == degree(); }
  bool is_constant() const { return rank() == 1; }

  /// Requires a permutation.
  Transformation inverse() const;

  /// "(2,3,1)".
  std::string to_string() const;

  bool operator==(const Transformation&) const = default;
  std::strong_ordering operator<=>(const Transformation&) const = default;

  /// Zero-based image table; index i holds (i+1)f - 1.
  const std::vector<std::uint32_t>& raw() const noexcept { return img_; }

 private:
  struct Raw {};
  Transformation(Raw, std::vector<std::uint32_t> img) : img_(std::move(img)) {}
  friend Transformation compose(const Transformation&, const Transformation&);

  std::vector<std::uint32_t> img_;
};

/// Apply `f`, then `g`: (s)(f·g) = ((s)f)g.
Transformation compose(const Transformation& f, const Transformation& g);

/// Kernel class sizes, sorted descending.
struct KernelType {
  std::vector<std::size_t> parts;

  bool operator==(const KernelType&) const = default;
  std::string to_string() const;
};

KernelType kernel_type(const Transformation& f);

enum class MapClass {
  permutation,
  constant,
  simple_singular,
  one_point_singular,
  other_singular,
};

std::string to_string(MapClass c);

struct MapProfile {
  StateSet image;
  StateSet coimage;
  std::size_t rank = 0;
  std::size_t corank = 0;
  KernelType kernel;
  /// Most specific label: permutation, then constant, then simple, then
  /// one-point, then other.
  MapClass cls = MapClass::other_singular;
  /// Kernel type (k,1,...,1) with k >= 2. Simple singulars and constants
  /// (for n >= 2) are one-point as well.
  bool one_point = false;
  bool simple = false;
};

MapProfile map_profile(const Transformation& f);

/// Anatomy of a one-point singular of kernel type (k,1,...,1).
struct OnePointProfile {
  std::size_t k = 0;
  State duplicate = 0;   ///< the state with k preimages
  State cyclepoint = 0;  ///< preimage of `duplicate` on its f-cycle
  StateSet excluded;     ///< coimage, k-1 states
  StateSet rest;         ///< image minus `duplicate`
};

/// Throws NotOnePointError unless `f` has kernel type (k,1,...,1), k >= 2.
OnePointProfile one_point_profile(const Transformation& f);

/// { s : (s)f in T }.
StateSet preimage(const Transformation& f, const StateSet& targets);
/// { (s)f : s in T }.
StateSet image_of(const Transformation& f, const StateSet& sources);

/// |preimage(f, T)| > |T|. T must be a proper nonempty subset.
bool augments(const Transformation& f, const StateSet& targets);

}  // namespace synclab

template <>
struct std::hash<synclab::Transformation> {
  std::size_t operator()(const synclab::Transformation& f) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : f.raw()) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
