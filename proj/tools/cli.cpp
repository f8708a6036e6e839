#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "flstego/bitplane.hpp"
#include "flstego/error.hpp"
#include "flstego/fltransform.hpp"
#include "flstego/imgcodec.hpp"
#include "flstego/keyfile.hpp"
#include "flstego/metrics.hpp"
#include "flstego/stego.hpp"

namespace flstego::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kFooter =
    "Payloads carry no header, checksum or authentication: revealing with a\n"
    "wrong key file, or from an image that holds no payload, succeeds and\n"
    "writes scrambled noise.";

class UsageError : public Error {
 public:
  using Error::Error;
};

MapId parse_map_arg(const std::string& text) {
  try {
    return MapId::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

/// "auto" resolves to the image side; an explicit value must equal it.
std::uint64_t resolve_modulus(const std::string& text, std::size_t side) {
  if (text == "auto") return side;
  std::uint64_t value = 0;
  try {
    std::size_t used = 0;
    value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError("--modulus must be 'auto' or an integer, got '" + text + "'");
  }
  if (value < 2) throw UsageError("--modulus must be at least 2");
  if (value != side) {
    throw DimensionError("--modulus " + text + " does not match image side " +
                         std::to_string(side));
  }
  return value;
}

struct HideArgs {
  std::string cover;
  std::vector<std::string> secrets;
  std::string keyfile;
  std::string out;
  bool report = false;
};

int cmd_hide(const HideArgs& a, std::ostream& out) {
  if (a.secrets.empty() || a.secrets.size() > static_cast<std::size_t>(kPlaneCount)) {
    throw UsageError("hide needs between 1 and 8 --secret files, got " +
                     std::to_string(a.secrets.size()));
  }
  const GrayImage cover = read_gray(a.cover);
  std::vector<BinaryImage> secrets;
  for (const auto& path : a.secrets) secrets.push_back(read_bin(path));
  const KeyBundle keys = read_keyfile(a.keyfile);

  const StegoResult result = hide(cover, secrets, keys);
  write_gray(result.stego, a.out);
  if (a.report) {
    out << "mse=" << format_metric(result.mse) << " psnr=" << format_metric(result.psnr_db)
        << '\n';
  }
  return kOk;
}

struct RevealArgs {
  std::string stego;
  std::string keyfile;
  std::string out_dir;
};

int cmd_reveal(const RevealArgs& a) {
  const KeyBundle keys = read_keyfile(a.keyfile);
  const GrayImage stego = read_gray(a.stego);
  const auto secrets = reveal(stego, keys);
  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  if (ec) throw IoError("cannot create directory " + a.out_dir + ": " + ec.message());
  for (std::size_t j = 0; j < secrets.size(); ++j) {
    write_bin(secrets[j], fs::path(a.out_dir) / ("secret_" + std::to_string(j + 1) + ".pbm"));
  }
  return kOk;
}

struct PeriodArgs {
  std::string map;
  std::int64_t modulus = 0;
};

int cmd_period(const PeriodArgs& a, std::ostream& out) {
  const MapId id = parse_map_arg(a.map);
  if (a.modulus < 2 || static_cast<std::uint64_t>(a.modulus) > kMaxModulus) {
    throw UsageError("--modulus must be in [2, " + std::to_string(kMaxModulus) + "]");
  }
  out << "period=" << period(FLMap(id, static_cast<std::uint64_t>(a.modulus))) << '\n';
  return kOk;
}

struct ScrambleArgs {
  std::string in;
  std::string map = "FL6";
  std::string modulus = "auto";
  std::uint64_t iterations = 0;
  std::string out;
};

int cmd_scramble(const ScrambleArgs& a) {
  const MapId id = parse_map_arg(a.map);
  const Raster raster = read_netpbm(a.in);
  if (raster.width != raster.height) {
    throw DimensionError(a.in + ": only square images can be scrambled");
  }
  const FLMap map(id, resolve_modulus(a.modulus, raster.width));
  Raster result;
  if (is_bitmap(raster.format)) {
    result = to_raster(scramble(to_binary(raster), map, a.iterations));
  } else {
    result = to_raster(scramble(to_gray(raster), map, a.iterations));
  }
  write_file_atomic(a.out, encode_netpbm(result, raster.format));
  return kOk;
}

int cmd_metrics(const std::string& path_a, const std::string& path_b, std::ostream& out) {
  const QualityReport report = quality(read_gray(path_a), read_gray(path_b));
  out << "mse=" << format_metric(report.mse) << " psnr=" << format_metric(report.psnr_db)
      << '\n';
  return kOk;
}

int cmd_slice(const std::string& in, const std::string& out_dir) {
  const auto stack = slice(read_gray(in));
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create directory " + out_dir + ": " + ec.message());
  for (int k = 1; k <= kPlaneCount; ++k) {
    write_bin(stack.plane(k), fs::path(out_dir) / ("plane_" + std::to_string(k) + ".pbm"));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hide Fibonacci-Lucas scrambled binary images in the low bit planes of "
               "grayscale PGM covers.",
               "flstego"};
  app.footer(kFooter);
  app.require_subcommand(1);

  HideArgs hide_args;
  auto* hide_cmd = app.add_subcommand("hide", "Scramble secrets and embed them into a cover");
  hide_cmd->add_option("--cover", hide_args.cover, "Cover image (PGM)")->required();
  hide_cmd->add_option("--secret", hide_args.secrets,
                       "Secret bitmap (PBM); repeat for planes 1, 2, ...");
  hide_cmd->add_option("--keyfile", hide_args.keyfile, "Key file")->required();
  hide_cmd->add_option("--out", hide_args.out, "Stego image to write (PGM)")->required();
  hide_cmd->add_flag("--report", hide_args.report, "Print mse=<v> psnr=<v>");

  RevealArgs reveal_args;
  auto* reveal_cmd = app.add_subcommand("reveal", "Extract and unscramble secrets");
  reveal_cmd->add_option("--stego", reveal_args.stego, "Stego image (PGM)")->required();
  reveal_cmd->add_option("--keyfile", reveal_args.keyfile, "Key file")->required();
  reveal_cmd->add_option("--out-dir", reveal_args.out_dir,
                         "Directory receiving secret_<j>.pbm")
      ->required();

  PeriodArgs period_args;
  auto* period_cmd = app.add_subcommand("period", "Print the period of a map modulo N");
  period_cmd->add_option("--map", period_args.map, "FL<i> or ARNOLD")->required();
  period_cmd->add_option("--modulus", period_args.modulus, "Torus side N")->required();

  ScrambleArgs scramble_args;
  auto* scramble_cmd = app.add_subcommand("scramble", "Apply a map to an image t times");
  scramble_cmd->add_option("--in", scramble_args.in, "Input image (PBM or PGM)")->required();
  scramble_cmd->add_option("--map", scramble_args.map, "FL<i> or ARNOLD")->capture_default_str();
  scramble_cmd->add_option("--modulus", scramble_args.modulus, "'auto' or the image side")
      ->capture_default_str();
  scramble_cmd->add_option("--iterations", scramble_args.iterations, "Iteration count t")
      ->required();
  scramble_cmd->add_option("--out", scramble_args.out, "Output image")->required();

  std::string metrics_a;
  std::string metrics_b;
  auto* metrics_cmd = app.add_subcommand("metrics", "Print MSE and PSNR of two PGM images");
  metrics_cmd->add_option("--a", metrics_a, "First image")->required();
  metrics_cmd->add_option("--b", metrics_b, "Second image")->required();

  std::string slice_in;
  std::string slice_out_dir;
  auto* slice_cmd = app.add_subcommand("slice", "Write the 8 bit planes of a PGM image");
  slice_cmd->add_option("--in", slice_in, "Input image (PGM)")->required();
  slice_cmd->add_option("--out-dir", slice_out_dir, "Directory receiving plane_<k>.pbm")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*hide_cmd) return cmd_hide(hide_args, out);
    if (*reveal_cmd) return cmd_reveal(reveal_args);
    if (*period_cmd) return cmd_period(period_args, out);
    if (*scramble_cmd) return cmd_scramble(scramble_args);
    if (*metrics_cmd) return cmd_metrics(metrics_a, metrics_b, out);
    if (*slice_cmd) return cmd_slice(slice_in, slice_out_dir);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "file error: " << e.what() << '\n';
    return kFileError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kFileError;
  } catch (const DimensionError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const KeyError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const DomainError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace flstego::cli
