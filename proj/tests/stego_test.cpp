#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <numeric>
#include <random>

#include "flstego/bitplane.hpp"
#include "flstego/metrics.hpp"
#include "flstego/stego.hpp"
#include "test_support.hpp"

namespace flstego {
namespace {

using testing::random_binary;
using testing::random_gray;

FLMap fl(int i, std::uint64_t n) { return build_map(MapId::fibonacci_lucas(i), n); }

KeyBundle paper_keys(std::uint64_t side) {
  return {MapId::fibonacci_lucas(6), side, {131, 163, 34}};
}

std::size_t popcount(const BinaryImage& img) {
  return static_cast<std::size_t>(std::count(img.pixels().begin(), img.pixels().end(), 1));
}

TEST(SenderIterations, KeyRange) {
  EXPECT_EQ(sender_iterations(256, 255), 1u);
  EXPECT_EQ(sender_iterations(256, 1), 255u);
  EXPECT_THROW(sender_iterations(256, 0), KeyError);
  EXPECT_THROW(sender_iterations(256, 256), KeyError);
  EXPECT_THROW(sender_iterations(1, 1), KeyError);
}

TEST(SenderIterations, PaperCounts) {
  // Sender counts 125, 93, 222 under period 256.
  EXPECT_EQ(sender_iterations(256, 131), 125u);
  EXPECT_EQ(sender_iterations(256, 163), 93u);
  EXPECT_EQ(sender_iterations(256, 34), 222u);
}

TEST(EncryptSecret, LastKeyScramblesOnce) {
  std::mt19937_64 rng(31);
  const auto m = fl(6, 32);
  const auto s = random_binary(32, rng);
  EXPECT_EQ(encrypt_secret(s, m, period(m) - 1), testing::step_once(s, m));
}

TEST(EncryptSecret, DecryptInverts) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = fl(1 + trial % 9, 24);
    const auto p = period(m);
    const auto s = random_binary(24, rng);
    const std::uint64_t key = 1 + rng() % (p - 1);
    const auto hidden = encrypt_secret(s, m, key);
    EXPECT_EQ(popcount(hidden), popcount(s));
    EXPECT_EQ(decrypt_secret(hidden, m, key), s);
  }
}

TEST(EncryptSecret, Errors) {
  const auto m = fl(6, 16);
  EXPECT_THROW(encrypt_secret(BinaryImage(16), m, 0), KeyError);
  EXPECT_THROW(encrypt_secret(BinaryImage(16), m, period(m)), KeyError);
  EXPECT_THROW(encrypt_secret(BinaryImage(8), m, 1), DimensionError);
  EXPECT_THROW(decrypt_secret(BinaryImage(16), m, period(m)), KeyError);
  EXPECT_THROW(decrypt_secret(BinaryImage(8), m, 1), DimensionError);
}

TEST(DecryptSecret, WrongKeyFails) {
  std::mt19937_64 rng(33);
  const auto m = fl(6, 16);
  const auto p = period(m);
  const auto s = random_binary(16, rng);
  const std::uint64_t key = 5;
  const auto hidden = encrypt_secret(s, m, key);
  for (std::uint64_t other = 1; other < p; ++other) {
    if (other == key) continue;
    EXPECT_NE(decrypt_secret(hidden, m, other), s) << other;
  }
}

TEST(DecryptSecret, ConstantImagesAreFixed) {
  const auto m = fl(6, 16);
  for (std::uint64_t key = 1; key < period(m); ++key) {
    EXPECT_EQ(decrypt_secret(BinaryImage(16, 0), m, key), BinaryImage(16, 0));
  }
}

TEST(EncryptSecret, ExhaustiveKeysFl1Mod8) {
  std::mt19937_64 rng(34);
  const auto m = fl(1, 8);
  const auto p = period(m);
  ASSERT_GT(p, 1u);
  for (std::uint64_t key = 1; key < p; ++key) {
    const auto s = random_binary(8, rng);
    EXPECT_EQ(decrypt_secret(encrypt_secret(s, m, key), m, key), s) << key;
  }
}

TEST(Embed, Examples) {
  std::mt19937_64 rng(35);
  const auto cover = random_gray(32, rng);
  const std::vector<BinaryImage> own{slice(cover).plane(1)};
  EXPECT_EQ(embed(cover, own), cover);

  const std::vector<BinaryImage> zeros(3, BinaryImage(32, 0));
  EXPECT_EQ(embed(GrayImage(32, 255), zeros), GrayImage(32, 248));
}

TEST(Embed, ExhaustiveThreePlaneDistortion) {
  for (int v = 0; v < 256; ++v) {
    const GrayImage cover(1, static_cast<std::uint8_t>(v));
    for (int bits = 0; bits < 8; ++bits) {
      const std::vector<BinaryImage> planes{
          BinaryImage(1, bits & 1), BinaryImage(1, (bits >> 1) & 1),
          BinaryImage(1, (bits >> 2) & 1)};
      const int out = embed(cover, planes).at(0, 0);
      EXPECT_LE(std::abs(out - v), 7);
      EXPECT_EQ(out & ~7, v & ~7);
      EXPECT_EQ(out & 7, bits);
    }
  }
}

TEST(Embed, Errors) {
  const GrayImage cover(8);
  EXPECT_THROW(embed(cover, std::vector<BinaryImage>{}), DomainError);
  EXPECT_THROW(embed(cover, std::vector<BinaryImage>(9, BinaryImage(8))), DomainError);
  EXPECT_THROW(embed(cover, std::vector<BinaryImage>{BinaryImage(4)}), DimensionError);
}

TEST(Extract, Examples) {
  EXPECT_EQ(extract(GrayImage(4, 0), 3), std::vector<BinaryImage>(3, BinaryImage(4, 0)));
  const std::vector<BinaryImage> five{BinaryImage(4, 1), BinaryImage(4, 0), BinaryImage(4, 1)};
  EXPECT_EQ(extract(GrayImage(4, 5), 3), five);
  EXPECT_THROW(extract(GrayImage(4), 0), DomainError);
  EXPECT_THROW(extract(GrayImage(4), 9), DomainError);
  EXPECT_THROW(extract(GrayImage(4), -1), DomainError);
}

TEST(Extract, InvertsEmbed) {
  std::mt19937_64 rng(36);
  for (int k = 1; k <= 8; ++k) {
    const auto cover = random_gray(20, rng);
    std::vector<BinaryImage> planes;
    for (int j = 0; j < k; ++j) planes.push_back(random_binary(20, rng));
    EXPECT_EQ(extract(embed(cover, planes), k), planes);
  }
}

TEST(Hide, RoundTripPaperConfiguration) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 3; ++trial) {
    const auto cover = random_gray(256, rng);
    const std::vector<BinaryImage> secrets{random_binary(256, rng), random_binary(256, rng),
                                           random_binary(256, rng)};
    const auto result = hide(cover, secrets, paper_keys(256));
    EXPECT_EQ(result.planes_used, 3);
    EXPECT_EQ(reveal(result.stego, paper_keys(256)), secrets);
  }
}

TEST(Hide, UsesSenderCounts) {
  std::mt19937_64 rng(38);
  const auto cover = random_gray(256, rng);
  const std::vector<BinaryImage> secrets{random_binary(256, rng), random_binary(256, rng),
                                         random_binary(256, rng)};
  const auto stego = hide(cover, secrets, paper_keys(256)).stego;
  const auto m = fl(6, 256);
  const std::uint64_t counts[] = {125, 93, 222};
  const auto planes = extract(stego, 3);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(planes[j], scramble(secrets[j], m, counts[j])) << j;
}

TEST(Hide, ChangesOnlyLowBits) {
  std::mt19937_64 rng(39);
  for (int k = 1; k <= 8; ++k) {
    const auto cover = random_gray(16, rng);
    std::vector<BinaryImage> secrets;
    KeyBundle keys{MapId::fibonacci_lucas(6), 16, {}};
    for (int j = 0; j < k; ++j) {
      secrets.push_back(random_binary(16, rng));
      keys.receiver_keys.push_back(1 + static_cast<std::uint64_t>(j));
    }
    const auto result = hide(cover, secrets, keys);
    const int mask = ~((1 << k) - 1) & 0xFF;
    for (std::size_t i = 0; i < cover.size(); ++i) {
      EXPECT_EQ(result.stego.pixels()[i] & mask, cover.pixels()[i] & mask);
    }
    EXPECT_LE(result.mse, std::pow(2.0, k) * std::pow(2.0, k));
    EXPECT_EQ(reveal(result.stego, keys), secrets);
  }
}

TEST(Hide, ReportsMetrics) {
  std::mt19937_64 rng(40);
  const auto cover = random_gray(64, rng);
  const std::vector<BinaryImage> secrets{random_binary(64, rng)};
  const KeyBundle keys{MapId::fibonacci_lucas(6), 64, {7}};
  const auto result = hide(cover, secrets, keys);
  EXPECT_DOUBLE_EQ(result.mse, mse(cover, result.stego));
  EXPECT_DOUBLE_EQ(result.psnr_db, psnr(cover, result.stego));
  EXPECT_LE(result.mse, 1.0);

  // Embedding the cover's own (scrambled-back) LSB gives zero distortion.
  const auto own = decrypt_secret(slice(cover).plane(1), fl(6, 64), 7);
  const auto same = hide(cover, std::vector<BinaryImage>{own}, keys);
  EXPECT_EQ(same.stego, cover);
  EXPECT_EQ(same.mse, 0.0);
  EXPECT_TRUE(std::isinf(same.psnr_db));
}

TEST(Hide, Errors) {
  const GrayImage cover(16);
  const std::vector<BinaryImage> one{BinaryImage(16)};
  EXPECT_THROW(hide(cover, one, {MapId::fibonacci_lucas(6), 16, {1, 2}}), KeyError);
  EXPECT_THROW(hide(cover, one, {MapId::fibonacci_lucas(6), 32, {1}}), DimensionError);
  EXPECT_THROW(hide(cover, one, {MapId::fibonacci_lucas(6), 16, {0}}), KeyError);
  const auto p = period(fl(6, 16));
  EXPECT_THROW(hide(cover, one, {MapId::fibonacci_lucas(6), 16, {p}}), KeyError);
  EXPECT_THROW(hide(cover, one, {MapId::fibonacci_lucas(6), 16, {}}), DomainError);
  EXPECT_THROW(hide(cover, std::vector<BinaryImage>{BinaryImage(8)},
                    {MapId::fibonacci_lucas(6), 16, {1}}),
               DimensionError);
}

TEST(Reveal, PermutedKeysFail) {
  std::mt19937_64 rng(41);
  const auto cover = random_gray(16, rng);
  const std::vector<BinaryImage> secrets{random_binary(16, rng), random_binary(16, rng),
                                         random_binary(16, rng)};
  const KeyBundle keys{MapId::fibonacci_lucas(6), 16, {3, 5, 9}};
  const auto stego = hide(cover, secrets, keys).stego;
  auto order = keys.receiver_keys;
  std::sort(order.begin(), order.end());
  while (std::next_permutation(order.begin(), order.end())) {
    if (order == keys.receiver_keys) continue;
    const KeyBundle wrong{keys.map, keys.modulus, order};
    EXPECT_NE(reveal(stego, wrong), secrets);
  }
}

TEST(Reveal, UntouchedCoverIsWellDefined) {
  std::mt19937_64 rng(42);
  const auto cover = random_gray(16, rng);
  const KeyBundle keys{MapId::fibonacci_lucas(6), 16, {3, 5}};
  const auto planes = reveal(cover, keys);
  ASSERT_EQ(planes.size(), 2u);
  EXPECT_EQ(planes[0], decrypt_secret(slice(cover).plane(1), fl(6, 16), 3));
}

TEST(Hide, Deterministic) {
  std::mt19937_64 rng(43);
  const auto cover = random_gray(128, rng);
  const std::vector<BinaryImage> secrets{random_binary(128, rng), random_binary(128, rng)};
  const KeyBundle keys{MapId::fibonacci_lucas(6), 128, {11, 12}};
  EXPECT_EQ(hide(cover, secrets, keys).stego, hide(cover, secrets, keys).stego);
}

TEST(Hide, ConcurrentCallsAgree) {
  std::mt19937_64 rng(44);
  const auto cover = random_gray(64, rng);
  const std::vector<BinaryImage> secrets{random_binary(64, rng), random_binary(64, rng)};
  const KeyBundle keys{MapId::arnold(), 64, {5, 6}};
  const auto expected = hide(cover, secrets, keys).stego;
  std::vector<std::future<GrayImage>> runs;
  for (int t = 0; t < 4; ++t) {
    runs.push_back(std::async(std::launch::async, [&] { return hide(cover, secrets, keys).stego; }));
  }
  for (auto& r : runs) EXPECT_EQ(r.get(), expected);
}

}  // namespace
}  // namespace flstego
