#include "flstego/bitplane.hpp"

#include <string>
#include <vector>

namespace flstego {

void check_plane_index(int k) {
  if (k < 1 || k > kPlaneCount) {
    throw DomainError("bit plane " + std::to_string(k) + " outside [1, 8]");
  }
}

BitPlaneStack::BitPlaneStack(std::array<BinaryImage, kPlaneCount> planes)
    : planes_(std::move(planes)) {
  for (const auto& p : planes_) {
    if (p.side() != planes_[0].side()) {
      throw DimensionError("bit planes of a stack must share one side");
    }
  }
}

const BinaryImage& BitPlaneStack::plane(int k) const {
  check_plane_index(k);
  return planes_[k - 1];
}

BitPlaneStack slice(const GrayImage& img) {
  const auto src = img.pixels();
  std::array<BinaryImage, kPlaneCount> planes;
  for (int bit = 0; bit < kPlaneCount; ++bit) {
    std::vector<std::uint8_t> bits(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) bits[i] = (src[i] >> bit) & 1u;
    planes[bit] = BinaryImage(img.side(), std::move(bits));
  }
  return BitPlaneStack(std::move(planes));
}

BitPlaneStack replace_plane(const BitPlaneStack& stack, int k, const BinaryImage& plane) {
  check_plane_index(k);
  if (plane.side() != stack.side()) {
    throw DimensionError("plane side " + std::to_string(plane.side()) +
                         " does not match stack side " + std::to_string(stack.side()));
  }
  std::array<BinaryImage, kPlaneCount> planes;
  for (int j = 1; j <= kPlaneCount; ++j) planes[j - 1] = j == k ? plane : stack.plane(j);
  return BitPlaneStack(std::move(planes));
}

GrayImage reconstruct(const BitPlaneStack& stack) {
  std::vector<std::uint8_t> pixels(stack.side() * stack.side(), 0);
  for (int bit = 0; bit < kPlaneCount; ++bit) {
    const auto bits = stack.plane(bit + 1).pixels();
    for (std::size_t i = 0; i < pixels.size(); ++i) {
      pixels[i] = static_cast<std::uint8_t>(pixels[i] | (bits[i] << bit));
    }
  }
  return GrayImage(stack.side(), std::move(pixels));
}

}  // namespace flstego
