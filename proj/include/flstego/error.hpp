#pragma once

#include <stdexcept>
#include <string>

namespace flstego {

// Root of every error raised by the library. The CLI maps the concrete
// subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside its mathematical domain (index 0, modulus < 2, plane 9, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Image sizes disagree with each other or with a map modulus.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Receiver key outside [1, P-1] or a key bundle inconsistent with its map.
class KeyError : public Error {
 public:
  using Error::Error;
};

/// Malformed file contents (Netpbm header/payload, key file).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure; the message carries the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A bug: something that cannot happen for valid constructions did.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace flstego
