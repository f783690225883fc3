#include "synclab/gates.hpp"

#include <cstdlib>
#include <string>

#include "synclab/errors.hpp"

namespace synclab {

namespace {

void override_from(const char* var, std::size_t& slot) {
  const char* raw = std::getenv(var);
  if (raw == nullptr || *raw == '\0') return;
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || raw[used] != '\0' || value == 0) {
    throw DomainError(std::string(var) + " must be a positive integer");
  }
  slot = static_cast<std::size_t>(value);
}

}  // namespace

Gates Gates::from_environment() { return from_environment(Gates{}); }

Gates Gates::from_environment(Gates base) {
  override_from("SYNCLAB_SUBSET_BFS_MAX_N", base.subset_bfs_max_n);
  override_from("SYNCLAB_AT_MAX_N", base.at_exact_max_n);
  override_from("SYNCLAB_MONOID_CAP", base.monoid_cap);
  override_from("SYNCLAB_GENSET_MAX_MONOID", base.generating_set_max_monoid);
  return base;
}

}  // namespace synclab
