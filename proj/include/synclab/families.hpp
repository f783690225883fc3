#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "synclab/automaton.hpp"
#include "synclab/gates.hpp"

namespace synclab {

enum class FamilyKind {
  /// a: i -> i+1 (mod n); b: 1 -> 2, identity elsewhere.
  cerny,
  /// x1: 2 -> 1, identity elsewhere; x_i = (i i+1) for 2 <= i <= n-1.
  /// State 1 is the sink.
  rn,
};

/// Throws DomainError for n < 2.
Automaton build_family(FamilyKind kind, std::size_t n);

/// Parses "cerny" or "rn".
FamilyKind family_from_string(const std::string& name);

/// {n-cycle, transposition (1 2), simple idempotent 2 -> 1}, which generate
/// the full transformation monoid. Requires n >= 2.
Automaton full_monoid_generators(std::size_t n);

/// A partial injective map on {1..m}.
class PartialBijection {
 public:
  /// `images[i]` is the image of i+1, or 0 where undefined. Throws
  /// DomainError unless injective on its domain and in range.
  PartialBijection(std::size_t m, std::vector<State> images);

  static PartialBijection identity(std::size_t m);

  std::size_t universe() const noexcept { return m_; }
  /// 0 when undefined.
  State at(State s) const { return images_.at(s - 1); }
  std::size_t rank() const;
  bool is_idempotent() const;
  const std::vector<State>& images() const noexcept { return images_; }
  /// "[1->2, 3->1]".
  std::string to_string() const;

  bool operator==(const PartialBijection&) const = default;
  auto operator<=>(const PartialBijection&) const = default;

 private:
  std::size_t m_;
  std::vector<State> images_;
};

/// Relational composition: first `a`, then `b`.
PartialBijection compose(const PartialBijection& a, const PartialBijection& b);

/// Every partial bijection of {1..m}, sorted.
std::vector<PartialBijection> all_partial_bijections(std::size_t m);

/// f restricted away from the sink state 1 of rn(n): states 2..n become
/// 1..n-1 and whatever f sends to the sink becomes undefined. Throws
/// DomainError if f moves the sink or is not injective off its preimage.
PartialBijection restrict_away_from_sink(const Transformation& f);

struct Theorem17Report {
  std::size_t n = 0;
  std::size_t monoid_size = 0;
  std::size_t inverse_monoid_size = 0;
  bool phi_injective = false;
  bool phi_morphism = false;
  bool phi_surjective = false;
  bool phi_is_isomorphism = false;
  bool idempotents_commute = false;
  std::size_t rt = 0;
  std::size_t rt_expected = 0;
};

/// Enumerates <rn(n)>, checks the restriction map onto the partial
/// bijections of an (n-1)-set, and the exact reset threshold of rn(n).
Theorem17Report verify_theorem17(std::size_t n, const Gates& gates = {});

}  // namespace synclab
