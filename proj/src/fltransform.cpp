#include "flstego/fltransform.hpp"

#include <charconv>

namespace flstego {

namespace {

std::uint64_t linear_recurrence(int n, std::uint64_t first, std::uint64_t second,
                                const char* name) {
  if (n < 1 || n > kMaxSequenceIndex) {
    throw DomainError(std::string(name) + " index " + std::to_string(n) +
                      " outside [1, " + std::to_string(kMaxSequenceIndex) + "]");
  }
  std::uint64_t prev = first;
  std::uint64_t cur = second;
  if (n == 1) return prev;
  for (int k = 3; k <= n; ++k) {
    const std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

constexpr Mat2 identity(std::uint64_t modulus) noexcept {
  return {1 % modulus, 0, 0, 1 % modulus};
}

}  // namespace

std::uint64_t fibonacci(int n) { return linear_recurrence(n, 1, 1, "fibonacci"); }

std::uint64_t lucas(int n) { return linear_recurrence(n, 2, 1, "lucas"); }

MapId MapId::fibonacci_lucas(int index) {
  if (index < 1 || index > kMaxMapIndex) {
    throw DomainError("FL map index " + std::to_string(index) + " outside [1, " +
                      std::to_string(kMaxMapIndex) + "]");
  }
  return MapId(Kind::kFibonacciLucas, index);
}

MapId MapId::parse(std::string_view text) {
  if (text == "ARNOLD") return arnold();
  if (text.size() > 2 && text.substr(0, 2) == "FL") {
    const auto digits = text.substr(2);
    int index = 0;
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec == std::errc() && end == digits.data() + digits.size()) {
      return fibonacci_lucas(index);
    }
  }
  throw DomainError("unknown map '" + std::string(text) + "' (expected FL<i> or ARNOLD)");
}

std::string MapId::to_string() const {
  return kind_ == Kind::kArnold ? "ARNOLD" : "FL" + std::to_string(index_);
}

FLMap::FLMap(MapId id, std::uint64_t modulus) : id_(id), modulus_(modulus) {
  if (modulus < 2 || modulus > kMaxModulus) {
    throw DomainError("modulus " + std::to_string(modulus) + " outside [2, " +
                      std::to_string(kMaxModulus) + "]");
  }
  if (id.kind() == MapId::Kind::kArnold) {
    entries_ = {1, 1, 1, 2};
  } else {
    const int i = id.index();
    entries_ = {fibonacci(i), fibonacci(i + 1), lucas(i), lucas(i + 1)};
  }
  for (auto& e : entries_) e %= modulus_;
}

std::uint64_t FLMap::determinant() const noexcept {
  const auto [a, b, c, d] = entries_;
  return (a * d % modulus_ + modulus_ - b * c % modulus_) % modulus_;
}

Mat2 FLMap::inverse_entries() const noexcept {
  const auto [a, b, c, d] = entries_;
  // det is +-1, which is its own inverse.
  const std::uint64_t det = determinant();
  const std::uint64_t n = modulus_;
  return {det * d % n, det * ((n - b) % n) % n, det * ((n - c) % n) % n, det * a % n};
}

FLMap build_map(MapId id, std::uint64_t modulus) { return FLMap(id, modulus); }

Mat2 multiply(const Mat2& lhs, const Mat2& rhs, std::uint64_t modulus) noexcept {
  const auto [a, b, c, d] = lhs;
  const auto [e, f, g, h] = rhs;
  return {(a * e + b * g) % modulus, (a * f + b * h) % modulus,
          (c * e + d * g) % modulus, (c * f + d * h) % modulus};
}

Mat2 power(const Mat2& m, std::uint64_t exponent, std::uint64_t modulus) noexcept {
  Mat2 result = identity(modulus);
  Mat2 base = m;
  while (exponent > 0) {
    if (exponent & 1) result = multiply(result, base, modulus);
    base = multiply(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

Point apply_point(const FLMap& map, Point p) {
  const std::uint64_t n = map.modulus();
  if (p.x >= n || p.y >= n) {
    throw DomainError("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                      ") outside torus of side " + std::to_string(n));
  }
  const auto [a, b, c, d] = map.entries();
  return {(a * p.x + b * p.y) % n, (c * p.x + d * p.y) % n};
}

std::uint64_t matrix_order(const Mat2& m, std::uint64_t modulus) {
  const std::uint64_t n = modulus;
  if (n < 2 || n > kMaxModulus) {
    throw DomainError("modulus " + std::to_string(n) + " outside [2, " +
                      std::to_string(kMaxModulus) + "]");
  }
  const Mat2 id = identity(n);
  const Mat2 reduced = {m[0] % n, m[1] % n, m[2] % n, m[3] % n};
  const std::uint64_t cap = n * n * n * n;
  Mat2 current = reduced;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (current == id) return k;
    current = multiply(current, reduced, n);
  }
  throw InternalError("matrix has no finite order mod " + std::to_string(n) +
                      " within N^4 steps");
}

std::uint64_t period(const FLMap& map) { return matrix_order(map.entries(), map.modulus()); }

namespace detail {

std::vector<std::uint32_t> scatter_table(const Mat2& m, std::uint64_t modulus) {
  const auto [a, b, c, d] = m;
  const std::uint64_t n = modulus;
  std::vector<std::uint32_t> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t tx = (a * x + b * y) % n;
      const std::uint64_t ty = (c * x + d * y) % n;
      table[x * n + y] = static_cast<std::uint32_t>(tx * n + ty);
    }
  }
  return table;
}

void check_side(std::size_t side, const FLMap& map) {
  if (side != map.modulus()) {
    throw DimensionError("image side " + std::to_string(side) +
                         " does not match map modulus " + std::to_string(map.modulus()));
  }
}

}  // namespace detail

}  // namespace flstego
