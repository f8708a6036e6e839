#include "flstego/keyfile.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <vector>

#include "flstego/bitplane.hpp"

namespace flstego {

namespace {

std::uint64_t parse_number(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::string_view value_of(std::string_view line, std::string_view key) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.size() <= key.size() || line.substr(0, key.size()) != key ||
      line[key.size()] != '=') {
    throw ParseError("expected line '" + std::string(key) + "=...', got '" +
                     std::string(line) + "'");
  }
  return line.substr(key.size() + 1);
}

}  // namespace

KeyBundle parse_keyfile(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && (lines.back().empty() || lines.back() == "\r")) lines.pop_back();
  if (lines.size() != 3) {
    throw ParseError("key file must have exactly 3 lines (map, modulus, keys), found " +
                     std::to_string(lines.size()));
  }

  KeyBundle bundle;
  try {
    bundle.map = MapId::parse(value_of(lines[0], "map"));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  bundle.modulus = parse_number(value_of(lines[1], "modulus"), "modulus");

  auto keys = value_of(lines[2], "keys");
  while (true) {
    const auto comma = keys.find(',');
    bundle.receiver_keys.push_back(parse_number(keys.substr(0, comma), "key"));
    if (comma == std::string_view::npos) break;
    keys.remove_prefix(comma + 1);
  }
  if (bundle.receiver_keys.size() > static_cast<std::size_t>(kPlaneCount)) {
    throw ParseError("at most 8 keys allowed, found " +
                     std::to_string(bundle.receiver_keys.size()));
  }
  return bundle;
}

std::string format_keyfile(const KeyBundle& keys) {
  std::string out = "map=" + keys.map.to_string() + "\nmodulus=" +
                    std::to_string(keys.modulus) + "\nkeys=";
  for (std::size_t j = 0; j < keys.receiver_keys.size(); ++j) {
    if (j > 0) out += ',';
    out += std::to_string(keys.receiver_keys[j]);
  }
  out += '\n';
  return out;
}

KeyBundle read_keyfile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open key file " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return parse_keyfile(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace flstego
