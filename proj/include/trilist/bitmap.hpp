#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace trilist {

/// Fixed-size bit array used as the per-worker probe structure. Callers keep
/// it clean between pivots by re-clearing exactly the bits they set.
class Bitmap {
 public:
  Bitmap() = default;
  explicit Bitmap(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t size() const { return bits_; }

  /// Full-scan hygiene check: no bit set.
  bool all_clear() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace trilist
