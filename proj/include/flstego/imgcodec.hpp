#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "flstego/image.hpp"

namespace flstego {

/// Netpbm variants understood by the codec. Color (P3/P6) is not supported.
enum class NetpbmFormat {
  kPbmAscii,   // P1
  kPgmAscii,   // P2
  kPbmBinary,  // P4
  kPgmBinary,  // P5
};

/// "P1", "P2", "P4", "P5".
std::string_view magic(NetpbmFormat format);

bool is_bitmap(NetpbmFormat format);

/// A decoded Netpbm file before any square check. Samples are row-major;
/// PGM samples are 0..255, PBM samples are 0/1 with 1 meaning black.
struct Raster {
  NetpbmFormat format = NetpbmFormat::kPgmBinary;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> samples;

  friend bool operator==(const Raster&, const Raster&) = default;
};

/// Decodes an in-memory Netpbm file. '#' comments and any whitespace are
/// accepted between header tokens. PGM maxval must be 255. Throws ParseError.
Raster decode_netpbm(std::string_view bytes);

/// Encodes `raster` as `format`; the format family must match the samples'
/// family (PBM for 0/1 rasters written as bitmaps, PGM otherwise).
std::string encode_netpbm(const Raster& raster, NetpbmFormat format);

/// Reads and decodes a file. Throws IoError (with the path) or ParseError.
Raster read_netpbm(const std::filesystem::path& path);

/// Writes `bytes` to a temporary sibling of `path`, then renames it into
/// place, so `path` is never left half-written.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

/// Square PGM from disk. Throws DimensionError for non-square rasters.
GrayImage read_gray(const std::filesystem::path& path);
void write_gray(const GrayImage& img, const std::filesystem::path& path,
                NetpbmFormat format = NetpbmFormat::kPgmBinary);

/// Square PBM from disk. Throws DimensionError for non-square rasters.
BinaryImage read_bin(const std::filesystem::path& path);
void write_bin(const BinaryImage& plane, const std::filesystem::path& path,
               NetpbmFormat format = NetpbmFormat::kPbmBinary);

GrayImage to_gray(const Raster& raster);
BinaryImage to_binary(const Raster& raster);
Raster to_raster(const GrayImage& img);
Raster to_raster(const BinaryImage& img);

}  // namespace flstego
