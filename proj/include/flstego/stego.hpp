#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flstego/fltransform.hpp"
#include "flstego/image.hpp"

namespace flstego {

/// Key material shared between sender and receiver.
///
/// receiver_keys[j] is K_r for plane j + 1: the number of forward map
/// iterations that decrypt that plane. The sender scrambles P - K_r times.
struct KeyBundle {
  MapId map = MapId::fibonacci_lucas(6);
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> receiver_keys;

  friend bool operator==(const KeyBundle&, const KeyBundle&) = default;
};

struct StegoResult {
  GrayImage stego;
  int planes_used = 0;
  double mse = 0.0;
  /// +infinity when mse == 0.
  double psnr_db = 0.0;
};

/// P - K_r; throws KeyError unless 1 <= K_r <= P - 1.
std::uint64_t sender_iterations(std::uint64_t period, std::uint64_t receiver_key);

/// scramble(secret, map, P - K_r).
BinaryImage encrypt_secret(const BinaryImage& secret, const FLMap& map,
                           std::uint64_t receiver_key);

/// scramble(scrambled, map, K_r): the remaining K_r forward steps complete
/// the period and restore the secret.
BinaryImage decrypt_secret(const BinaryImage& scrambled, const FLMap& map,
                           std::uint64_t receiver_key);

/// Replaces planes 1..k of the cover with `planes` (k = planes.size()).
GrayImage embed(const GrayImage& cover, std::span<const BinaryImage> planes);

/// Planes 1..k of the stego image. No payload detection: any image yields k planes.
std::vector<BinaryImage> extract(const GrayImage& stego, int k);

/// Checks the bundle against a cover side and returns the map's period.
/// Throws DimensionError on side/modulus mismatch and KeyError on bad keys
/// (including maps of period 1, which admit no key at all).
std::uint64_t validate_keys(const KeyBundle& keys, std::size_t side);

/// Encrypts secret j with receiver_keys[j] and embeds it into plane j + 1.
StegoResult hide(const GrayImage& cover, std::span<const BinaryImage> secrets,
                 const KeyBundle& keys);

/// Extracts and decrypts one plane per receiver key.
std::vector<BinaryImage> reveal(const GrayImage& stego, const KeyBundle& keys);

}  // namespace flstego
