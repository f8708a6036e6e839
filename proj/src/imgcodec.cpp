#include "flstego/imgcodec.hpp"

#include <atomic>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace flstego {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char ch = bytes_[pos_];
      if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::size_t read_unsigned(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      throw ParseError(std::string("expected ") + what);
    }
    std::size_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (value > (std::size_t{1} << 32)) throw ParseError(std::string(what) + " too large");
      ++pos_;
    }
    return value;
  }

  /// One '0'/'1' digit of a P1 payload; digits need not be separated.
  std::uint8_t read_bit() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) throw ParseError("truncated PBM payload");
    const char ch = bytes_[pos_++];
    if (ch != '0' && ch != '1') throw ParseError("invalid PBM sample");
    return static_cast<std::uint8_t>(ch - '0');
  }

  /// The single whitespace byte separating a binary header from its payload.
  void expect_single_space() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw ParseError("missing whitespace after header");
    }
    ++pos_;
  }

  std::string_view rest() const { return bytes_.substr(pos_); }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

std::size_t pbm_row_bytes(std::size_t width) { return (width + 7) / 8; }

}  // namespace

std::string_view magic(NetpbmFormat format) {
  switch (format) {
    case NetpbmFormat::kPbmAscii: return "P1";
    case NetpbmFormat::kPgmAscii: return "P2";
    case NetpbmFormat::kPbmBinary: return "P4";
    case NetpbmFormat::kPgmBinary: return "P5";
  }
  return "";
}

bool is_bitmap(NetpbmFormat format) {
  return format == NetpbmFormat::kPbmAscii || format == NetpbmFormat::kPbmBinary;
}

Raster decode_netpbm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') throw ParseError("not a Netpbm file");
  Raster r;
  switch (bytes[1]) {
    case '1': r.format = NetpbmFormat::kPbmAscii; break;
    case '2': r.format = NetpbmFormat::kPgmAscii; break;
    case '4': r.format = NetpbmFormat::kPbmBinary; break;
    case '5': r.format = NetpbmFormat::kPgmBinary; break;
    default:
      throw ParseError("unsupported Netpbm variant P" + std::string(1, bytes[1]));
  }
  Cursor in(bytes.substr(2));
  r.width = in.read_unsigned("width");
  r.height = in.read_unsigned("height");
  if (r.width == 0 || r.height == 0) throw ParseError("zero image dimension");
  if (!is_bitmap(r.format)) {
    const std::size_t maxval = in.read_unsigned("maxval");
    if (maxval != 255) {
      throw ParseError("unsupported maxval " + std::to_string(maxval) + " (only 255)");
    }
  }
  const std::size_t count = r.width * r.height;

  switch (r.format) {
    case NetpbmFormat::kPbmAscii:
      if (count > bytes.size()) throw ParseError("truncated PBM payload");
      r.samples.resize(count);
      for (auto& s : r.samples) s = in.read_bit();
      break;
    case NetpbmFormat::kPgmAscii:
      if (count > bytes.size()) throw ParseError("truncated PGM payload");
      r.samples.resize(count);
      for (auto& s : r.samples) {
        const std::size_t v = in.read_unsigned("PGM sample");
        if (v > 255) throw ParseError("PGM sample " + std::to_string(v) + " exceeds maxval");
        s = static_cast<std::uint8_t>(v);
      }
      break;
    case NetpbmFormat::kPbmBinary: {
      in.expect_single_space();
      const std::size_t stride = pbm_row_bytes(r.width);
      const auto payload = in.rest();
      if (payload.size() < stride * r.height) throw ParseError("truncated PBM payload");
      r.samples.resize(count);
      for (std::size_t row = 0; row < r.height; ++row) {
        for (std::size_t col = 0; col < r.width; ++col) {
          const auto byte = static_cast<std::uint8_t>(payload[row * stride + col / 8]);
          r.samples[row * r.width + col] = (byte >> (7 - col % 8)) & 1u;
        }
      }
      break;
    }
    case NetpbmFormat::kPgmBinary: {
      in.expect_single_space();
      const auto payload = in.rest();
      if (payload.size() < count) throw ParseError("truncated PGM payload");
      r.samples.assign(payload.begin(), payload.begin() + static_cast<std::ptrdiff_t>(count));
      break;
    }
  }
  return r;
}

std::string encode_netpbm(const Raster& raster, NetpbmFormat format) {
  if (raster.samples.size() != raster.width * raster.height || raster.width == 0 ||
      raster.height == 0) {
    throw DimensionError("raster sample count does not match its dimensions");
  }
  const std::uint8_t limit = is_bitmap(format) ? 1 : 255;
  for (const auto s : raster.samples) {
    if (s > limit) throw DomainError("sample out of range for " + std::string(magic(format)));
  }

  std::ostringstream out;
  out << magic(format) << '\n' << raster.width << ' ' << raster.height << '\n';
  if (!is_bitmap(format)) out << "255\n";

  switch (format) {
    case NetpbmFormat::kPbmAscii:
    case NetpbmFormat::kPgmAscii:
      for (std::size_t row = 0; row < raster.height; ++row) {
        for (std::size_t col = 0; col < raster.width; ++col) {
          if (col > 0) out << ' ';
          out << static_cast<unsigned>(raster.samples[row * raster.width + col]);
        }
        out << '\n';
      }
      break;
    case NetpbmFormat::kPbmBinary: {
      const std::size_t stride = pbm_row_bytes(raster.width);
      std::string payload(stride * raster.height, '\0');
      for (std::size_t row = 0; row < raster.height; ++row) {
        for (std::size_t col = 0; col < raster.width; ++col) {
          if (raster.samples[row * raster.width + col]) {
            payload[row * stride + col / 8] =
                static_cast<char>(payload[row * stride + col / 8] | (0x80 >> (col % 8)));
          }
        }
      }
      out << payload;
      break;
    }
    case NetpbmFormat::kPgmBinary:
      out.write(reinterpret_cast<const char*>(raster.samples.data()),
                static_cast<std::streamsize>(raster.samples.size()));
      break;
  }
  return std::move(out).str();
}

Raster read_netpbm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading " + path.string());
  try {
    return decode_netpbm(bytes);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  static std::atomic<unsigned> counter{0};
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot rename into " + path.string() + ": " + ec.message());
  }
}

GrayImage to_gray(const Raster& raster) {
  if (is_bitmap(raster.format)) throw ParseError("expected a PGM (P2/P5) image");
  if (raster.width != raster.height) {
    throw DimensionError("image is " + std::to_string(raster.width) + "x" +
                         std::to_string(raster.height) + "; only square images are supported");
  }
  return GrayImage(raster.width, raster.samples);
}

BinaryImage to_binary(const Raster& raster) {
  if (!is_bitmap(raster.format)) throw ParseError("expected a PBM (P1/P4) image");
  if (raster.width != raster.height) {
    throw DimensionError("image is " + std::to_string(raster.width) + "x" +
                         std::to_string(raster.height) + "; only square images are supported");
  }
  return BinaryImage(raster.width, raster.samples);
}

Raster to_raster(const GrayImage& img) {
  return {NetpbmFormat::kPgmBinary, img.side(), img.side(),
          {img.pixels().begin(), img.pixels().end()}};
}

Raster to_raster(const BinaryImage& img) {
  return {NetpbmFormat::kPbmBinary, img.side(), img.side(),
          {img.pixels().begin(), img.pixels().end()}};
}

GrayImage read_gray(const std::filesystem::path& path) {
  const Raster raster = read_netpbm(path);
  try {
    return to_gray(raster);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const DimensionError& e) {
    throw DimensionError(path.string() + ": " + e.what());
  }
}

void write_gray(const GrayImage& img, const std::filesystem::path& path, NetpbmFormat format) {
  if (is_bitmap(format)) throw DomainError("grayscale images are written as PGM");
  write_file_atomic(path, encode_netpbm(to_raster(img), format));
}

BinaryImage read_bin(const std::filesystem::path& path) {
  const Raster raster = read_netpbm(path);
  try {
    return to_binary(raster);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const DimensionError& e) {
    throw DimensionError(path.string() + ": " + e.what());
  }
}

void write_bin(const BinaryImage& plane, const std::filesystem::path& path,
               NetpbmFormat format) {
  if (!is_bitmap(format)) throw DomainError("binary images are written as PBM");
  write_file_atomic(path, encode_netpbm(to_raster(plane), format));
}

}  // namespace flstego
