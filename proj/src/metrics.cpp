#include "flstego/metrics.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>

namespace flstego {

double mse(const GrayImage& a, const GrayImage& b) {
  if (a.side() != b.side()) {
    throw DimensionError("cannot compare images of side " + std::to_string(a.side()) +
                         " and " + std::to_string(b.side()));
  }
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const std::int64_t diff = static_cast<std::int64_t>(pa[i]) - pb[i];
    sum += static_cast<std::uint64_t>(diff * diff);
  }
  return static_cast<double>(sum) / static_cast<double>(pa.size());
}

double psnr_from_mse(double mse) {
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(kPeakValue * kPeakValue / mse);
}

double psnr(const GrayImage& a, const GrayImage& b) { return psnr_from_mse(mse(a, b)); }

QualityReport quality(const GrayImage& a, const GrayImage& b) {
  const double m = mse(a, b);
  return {m, psnr_from_mse(m), a.side(), a.side()};
}

std::string format_metric(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

}  // namespace flstego
