#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "synclab/transformation.hpp"

namespace synclab::detail {

/// A map acting on subsets of at most 64 states encoded as bit masks, via
/// per-byte lookup tables in both directions.
class MaskAction {
 public:
  explicit MaskAction(const Transformation& f) : chunks_((f.degree() + 7) / 8) {
    const auto& img = f.raw();
    const auto n = img.size();
    fwd_.resize(chunks_);
    bwd_.resize(chunks_);
    // Bit i of a source chunk c is state 8c+i.
    for (std::size_t c = 0; c < chunks_; ++c) {
      auto& table = fwd_[c];
      table[0] = 0;
      for (unsigned b = 1; b < 256; ++b) {
        const auto low = static_cast<std::size_t>(std::countr_zero(b));
        const auto s = 8 * c + low;
        const std::uint64_t bit = s < n ? std::uint64_t{1} << img[s] : 0;
        table[b] = table[b & (b - 1)] | bit;
      }
    }
    // Preimages of the states in target chunk c.
    std::vector<std::uint64_t> pre(n, 0);
    for (std::size_t s = 0; s < n; ++s) pre[img[s]] |= std::uint64_t{1} << s;
    for (std::size_t c = 0; c < chunks_; ++c) {
      auto& table = bwd_[c];
      table[0] = 0;
      for (unsigned b = 1; b < 256; ++b) {
        const auto low = static_cast<std::size_t>(std::countr_zero(b));
        const auto t = 8 * c + low;
        table[b] = table[b & (b - 1)] | (t < n ? pre[t] : 0);
      }
    }
  }

  std::uint64_t image(std::uint64_t mask) const noexcept {
    std::uint64_t out = 0;
    for (std::size_t c = 0; c < chunks_; ++c) out |= fwd_[c][(mask >> (8 * c)) & 0xFF];
    return out;
  }

  std::uint64_t preimage(std::uint64_t mask) const noexcept {
    std::uint64_t out = 0;
    for (std::size_t c = 0; c < chunks_; ++c) out |= bwd_[c][(mask >> (8 * c)) & 0xFF];
    return out;
  }

 private:
  std::size_t chunks_;
  std::vector<std::array<std::uint64_t, 256>> fwd_;
  std::vector<std::array<std::uint64_t, 256>> bwd_;
};

inline std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline std::size_t popcount(std::uint64_t m) { return static_cast<std::size_t>(std::popcount(m)); }

}  // namespace synclab::detail
