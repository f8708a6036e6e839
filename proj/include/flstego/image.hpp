#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flstego/error.hpp"

namespace flstego {

/// Square raster of small unsigned samples, stored row-major.
///
/// Pixel (x, y) is row x, column y. `MaxValue` fixes the sample range, so a
/// GrayImage and a BinaryImage are distinct types that cannot be mixed up.
template <std::uint8_t MaxValue>
class SquareImage {
 public:
  static constexpr std::uint8_t kMaxValue = MaxValue;

  SquareImage() = default;

  /// All-zero (or all-`fill`) image of the given side.
  explicit SquareImage(std::size_t side, std::uint8_t fill = 0)
      : side_(side), pixels_(side * side, fill) {
    if (side == 0) throw DomainError("image side must be at least 1");
    if (fill > MaxValue) throw DomainError("fill value exceeds sample range");
  }

  SquareImage(std::size_t side, std::vector<std::uint8_t> pixels)
      : side_(side), pixels_(std::move(pixels)) {
    if (side == 0) throw DomainError("image side must be at least 1");
    if (pixels_.size() != side * side) {
      throw DimensionError("pixel count " + std::to_string(pixels_.size()) +
                           " does not match side " + std::to_string(side));
    }
    if (std::any_of(pixels_.begin(), pixels_.end(),
                    [](std::uint8_t v) { return v > MaxValue; })) {
      throw DomainError("pixel value exceeds sample range");
    }
  }

  std::size_t side() const noexcept { return side_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(std::size_t x, std::size_t y) const {
    check(x, y);
    return pixels_[x * side_ + y];
  }

  void set(std::size_t x, std::size_t y, std::uint8_t value) {
    check(x, y);
    if (value > MaxValue) throw DomainError("pixel value exceeds sample range");
    pixels_[x * side_ + y] = value;
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

  friend bool operator==(const SquareImage&, const SquareImage&) = default;

 private:
  void check(std::size_t x, std::size_t y) const {
    if (x >= side_ || y >= side_) throw DomainError("pixel coordinate out of range");
  }

  std::size_t side_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// 8-bit grayscale cover or stego image.
using GrayImage = SquareImage<255>;
/// One bit plane or binary secret; samples are 0 or 1.
using BinaryImage = SquareImage<1>;

}  // namespace flstego
