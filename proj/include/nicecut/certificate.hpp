#pragma once

// Dissection certificates: a canonical JSON text with sorted keys and every
// number written as a 17-significant-digit decimal, so that
// serialize(parse(serialize(d))) reproduces the text byte for byte.

#include "nicecut/dissection.hpp"

#include <string>
#include <string_view>

namespace nicecut {

inline constexpr int kSchemaVersion = 1;

/// Malformed certificate. `line` and `column` are 1-based and 0 when the
/// problem is not tied to a position; `field` is a path such as "pieces[2]".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string field, int line = 0, int column = 0);
  const std::string& field() const { return field_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string field_;
  int line_;
  int column_;
};

class VersionError : public Error {
 public:
  explicit VersionError(int version);
  int version() const { return version_; }

 private:
  int version_;
};

std::string serialize(const Dissection& d);

/// Throws ParseError or VersionError. Cut polylines are not stored and come
/// back empty.
Dissection parse_certificate(std::string_view text);

/// parse_certificate(serialize(d)).
Dissection codec_roundtrip(const Dissection& d);

}  // namespace nicecut
