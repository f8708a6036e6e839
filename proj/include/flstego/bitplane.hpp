#pragma once

#include <array>
#include <cstddef>

#include "flstego/image.hpp"

namespace flstego {

inline constexpr int kPlaneCount = 8;

/// The eight bit planes of a GrayImage. Planes are numbered 1 (LSB) to 8 (MSB).
class BitPlaneStack {
 public:
  /// All planes must share one side; throws DimensionError otherwise.
  explicit BitPlaneStack(std::array<BinaryImage, kPlaneCount> planes);

  std::size_t side() const noexcept { return planes_[0].side(); }

  /// Throws DomainError unless 1 <= k <= 8.
  const BinaryImage& plane(int k) const;

  friend bool operator==(const BitPlaneStack&, const BitPlaneStack&) = default;

 private:
  std::array<BinaryImage, kPlaneCount> planes_;
};

/// plane k holds bit (k - 1) of every pixel.
BitPlaneStack slice(const GrayImage& img);

/// Copy of `stack` with plane k swapped for `plane`.
BitPlaneStack replace_plane(const BitPlaneStack& stack, int k, const BinaryImage& plane);

/// Inverse of slice().
GrayImage reconstruct(const BitPlaneStack& stack);

void check_plane_index(int k);

}  // namespace flstego
