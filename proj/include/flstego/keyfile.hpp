#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "flstego/stego.hpp"

namespace flstego {

/// Key file text, three lines in fixed order:
///
///     map=FL6
///     modulus=256
///     keys=131,163,34
///
/// Syntax is checked here (ParseError). Key ranges depend on the map period
/// and are checked when the bundle is used (validate_keys).
KeyBundle parse_keyfile(std::string_view text);

std::string format_keyfile(const KeyBundle& keys);

/// Throws IoError when the file cannot be read, ParseError when malformed.
KeyBundle read_keyfile(const std::filesystem::path& path);

}  // namespace flstego
