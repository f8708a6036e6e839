#include "flstego/stego.hpp"

#include <string>

#include "flstego/bitplane.hpp"
#include "flstego/metrics.hpp"

namespace flstego {

namespace {

void check_key_count(std::size_t k) {
  if (k < 1 || k > static_cast<std::size_t>(kPlaneCount)) {
    throw DomainError("number of planes " + std::to_string(k) + " outside [1, 8]");
  }
}

}  // namespace

std::uint64_t sender_iterations(std::uint64_t period, std::uint64_t receiver_key) {
  if (receiver_key < 1 || receiver_key >= period) {
    throw KeyError("receiver key " + std::to_string(receiver_key) + " outside [1, " +
                   std::to_string(period > 0 ? period - 1 : 0) + "] for period " +
                   std::to_string(period));
  }
  return period - receiver_key;
}

BinaryImage encrypt_secret(const BinaryImage& secret, const FLMap& map,
                           std::uint64_t receiver_key) {
  detail::check_side(secret.side(), map);
  return scramble(secret, map, sender_iterations(period(map), receiver_key));
}

BinaryImage decrypt_secret(const BinaryImage& scrambled, const FLMap& map,
                           std::uint64_t receiver_key) {
  detail::check_side(scrambled.side(), map);
  sender_iterations(period(map), receiver_key);
  return scramble(scrambled, map, receiver_key);
}

GrayImage embed(const GrayImage& cover, std::span<const BinaryImage> planes) {
  check_key_count(planes.size());
  auto stack = slice(cover);
  for (std::size_t j = 0; j < planes.size(); ++j) {
    stack = replace_plane(stack, static_cast<int>(j) + 1, planes[j]);
  }
  return reconstruct(stack);
}

std::vector<BinaryImage> extract(const GrayImage& stego, int k) {
  check_key_count(static_cast<std::size_t>(k < 0 ? 0 : k));
  const auto stack = slice(stego);
  std::vector<BinaryImage> planes;
  planes.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) planes.push_back(stack.plane(j));
  return planes;
}

std::uint64_t validate_keys(const KeyBundle& keys, std::size_t side) {
  check_key_count(keys.receiver_keys.size());
  if (keys.modulus != side) {
    throw DimensionError("key modulus " + std::to_string(keys.modulus) +
                         " does not match image side " + std::to_string(side));
  }
  const FLMap map(keys.map, keys.modulus);
  const std::uint64_t p = period(map);
  if (p == 1) {
    throw KeyError(keys.map.to_string() + " mod " + std::to_string(keys.modulus) +
                   " has period 1; no receiver key is possible");
  }
  for (const auto k : keys.receiver_keys) sender_iterations(p, k);
  return p;
}

StegoResult hide(const GrayImage& cover, std::span<const BinaryImage> secrets,
                 const KeyBundle& keys) {
  const std::uint64_t p = validate_keys(keys, cover.side());
  if (secrets.size() != keys.receiver_keys.size()) {
    throw KeyError(std::to_string(secrets.size()) + " secrets but " +
                   std::to_string(keys.receiver_keys.size()) + " receiver keys");
  }
  const FLMap map(keys.map, keys.modulus);
  std::vector<BinaryImage> scrambled;
  scrambled.reserve(secrets.size());
  for (std::size_t j = 0; j < secrets.size(); ++j) {
    if (secrets[j].side() != cover.side()) {
      throw DimensionError("secret " + std::to_string(j + 1) + " has side " +
                           std::to_string(secrets[j].side()) + ", cover has side " +
                           std::to_string(cover.side()));
    }
    scrambled.push_back(scramble(secrets[j], map, sender_iterations(p, keys.receiver_keys[j])));
  }
  StegoResult result{embed(cover, scrambled), static_cast<int>(secrets.size()), 0.0, 0.0};
  result.mse = mse(cover, result.stego);
  result.psnr_db = psnr_from_mse(result.mse);
  return result;
}

std::vector<BinaryImage> reveal(const GrayImage& stego, const KeyBundle& keys) {
  validate_keys(keys, stego.side());
  const FLMap map(keys.map, keys.modulus);
  auto planes = extract(stego, static_cast<int>(keys.receiver_keys.size()));
  for (std::size_t j = 0; j < planes.size(); ++j) {
    planes[j] = scramble(planes[j], map, keys.receiver_keys[j]);
  }
  return planes;
}

}  // namespace flstego
