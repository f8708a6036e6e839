#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "flstego/image.hpp"

namespace flstego {

/// Largest n accepted by fibonacci() and lucas().
inline constexpr int kMaxSequenceIndex = 91;
/// Largest i accepted for FL(i); FL(i) needs terms i and i + 1.
inline constexpr int kMaxMapIndex = kMaxSequenceIndex - 1;
/// Largest torus side; keeps N^2 pixel indices within 32 bits.
inline constexpr std::uint64_t kMaxModulus = 65535;

/// F_1 = 1, F_2 = 1, F_n = F_{n-1} + F_{n-2}.
std::uint64_t fibonacci(int n);

/// L_1 = 2, L_2 = 1, L_n = L_{n-1} + L_{n-2}.
///
/// Note the offset against the usual Lucas numbering (which starts 2, 1 at
/// index 0): with it FL(6) comes out as (8 13; 11 18).
std::uint64_t lucas(int n);

/// Identifies a torus map: FL(i) for i >= 1, or the Arnold cat map.
class MapId {
 public:
  enum class Kind { kFibonacciLucas, kArnold };

  static MapId fibonacci_lucas(int index);
  static MapId arnold() noexcept { return MapId(Kind::kArnold, 0); }

  /// Parses "FL<i>" or "ARNOLD" (case-sensitive).
  static MapId parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  /// FL index; 0 for Arnold.
  int index() const noexcept { return index_; }

  /// "FL6", "ARNOLD".
  std::string to_string() const;

  friend bool operator==(const MapId&, const MapId&) = default;

 private:
  MapId(Kind kind, int index) : kind_(kind), index_(index) {}

  Kind kind_;
  int index_;
};

/// Row-major 2x2 matrix (a b; c d) with entries reduced mod some N.
using Mat2 = std::array<std::uint64_t, 4>;

/// Coordinate on the N x N torus: x is the row, y the column.
struct Point {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A Fibonacci-Lucas (or Arnold) matrix reduced modulo N.
///
/// Every instance has determinant +-1 mod N, so it acts as a bijection on
/// the torus and is invertible.
class FLMap {
 public:
  /// FL(i) = (F_i F_{i+1}; L_i L_{i+1}) mod N, Arnold = (1 1; 1 2) mod N.
  /// Throws DomainError when N is outside [2, kMaxModulus] or the FL index
  /// is outside [1, kMaxMapIndex].
  FLMap(MapId id, std::uint64_t modulus);

  const MapId& id() const noexcept { return id_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  const Mat2& entries() const noexcept { return entries_; }

  /// a*d - b*c reduced into [0, N).
  std::uint64_t determinant() const noexcept;

  /// det^-1 * (d -b; -c a) mod N.
  Mat2 inverse_entries() const noexcept;

 private:
  MapId id_;
  std::uint64_t modulus_;
  Mat2 entries_{};
};

/// Same as FLMap(id, modulus).
FLMap build_map(MapId id, std::uint64_t modulus);

/// Product of two matrices mod N.
Mat2 multiply(const Mat2& lhs, const Mat2& rhs, std::uint64_t modulus) noexcept;

/// m^e mod N by square-and-multiply.
Mat2 power(const Mat2& m, std::uint64_t exponent, std::uint64_t modulus) noexcept;

/// ((a x + b y) mod N, (c x + d y) mod N). Throws DomainError if x or y >= N.
Point apply_point(const FLMap& map, Point p);

/// Smallest k >= 1 with m^k = I (mod N), found by successive multiplication.
/// Throws InternalError if N^4 steps pass without reaching the identity
/// (only possible for a non-invertible m).
std::uint64_t matrix_order(const Mat2& m, std::uint64_t modulus);

/// Period of the map: matrix_order(map.entries(), map.modulus()).
std::uint64_t period(const FLMap& map);

namespace detail {

/// dest[x * N + y] = flat index that pixel (x, y) is moved to by `m`.
std::vector<std::uint32_t> scatter_table(const Mat2& m, std::uint64_t modulus);

void check_side(std::size_t side, const FLMap& map);

template <std::uint8_t MaxValue>
SquareImage<MaxValue> scatter(const SquareImage<MaxValue>& img, const Mat2& m,
                              std::uint64_t modulus) {
  const auto table = scatter_table(m, modulus);
  const auto src = img.pixels();
  std::vector<std::uint8_t> out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) out[table[i]] = src[i];
  return SquareImage<MaxValue>(img.side(), std::move(out));
}

}  // namespace detail

/// Moves every pixel (x, y) to apply_point(map, (x, y)), `iterations` times.
///
/// The t-fold application is carried out as a single scatter by M^t, which
/// yields exactly the same image as applying M one step at a time.
/// Throws DimensionError when the image side differs from the map modulus.
template <std::uint8_t MaxValue>
SquareImage<MaxValue> scramble(const SquareImage<MaxValue>& img, const FLMap& map,
                               std::uint64_t iterations) {
  detail::check_side(img.side(), map);
  if (iterations == 0) return img;
  return detail::scatter(img, power(map.entries(), iterations, map.modulus()),
                         map.modulus());
}

/// Inverse of scramble(img, map, iterations).
template <std::uint8_t MaxValue>
SquareImage<MaxValue> unscramble(const SquareImage<MaxValue>& img, const FLMap& map,
                                 std::uint64_t iterations) {
  detail::check_side(img.side(), map);
  if (iterations == 0) return img;
  return detail::scatter(img, power(map.inverse_entries(), iterations, map.modulus()),
                         map.modulus());
}

}  // namespace flstego
