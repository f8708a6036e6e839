#pragma once

#include <cstddef>
#include <string>

#include "flstego/image.hpp"

namespace flstego {

/// Peak sample value used in PSNR.
inline constexpr double kPeakValue = 255.0;

struct QualityReport {
  double mse = 0.0;
  /// +infinity when mse == 0.
  double psnr_db = 0.0;
  std::size_t width = 0;
  std::size_t height = 0;
};

/// Mean squared error; the squared differences are summed exactly in integers.
double mse(const GrayImage& a, const GrayImage& b);

/// 10 log10(255^2 / mse), or +infinity for identical images.
double psnr(const GrayImage& a, const GrayImage& b);

/// PSNR for an already computed MSE.
double psnr_from_mse(double mse);

QualityReport quality(const GrayImage& a, const GrayImage& b);

/// Shortest round-trip decimal form of `value`; "inf" for +infinity.
std::string format_metric(double value);

}  // namespace flstego
