#pragma once

#include <cstddef>

namespace synclab {

/// Limits on the exhaustive searches. Exceeding one raises CapacityError.
struct Gates {
  /// Forward image-subset BFS (reset thresholds, reachability, witnesses).
  std::size_t subset_bfs_max_n = 24;
  /// Per-subset preimage BFS behind the augment threshold.
  std::size_t at_exact_max_n = 14;
  /// Largest transition monoid generate_monoid may build.
  std::size_t monoid_cap = 2'000'000;
  /// Largest monoid whose irredundant generating sets may be enumerated.
  std::size_t generating_set_max_monoid = 32;

  /// Overrides from SYNCLAB_SUBSET_BFS_MAX_N, SYNCLAB_AT_MAX_N,
  /// SYNCLAB_MONOID_CAP and SYNCLAB_GENSET_MAX_MONOID when set.
  static Gates from_environment();
  static Gates from_environment(Gates base);
};

/// Hard ceiling on subset searches regardless of gates (dense 2^n tables).
inline constexpr std::size_t kSubsetSearchCeiling = 30;

}  // namespace synclab
