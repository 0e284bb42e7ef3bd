#include "nicecut/certificate.hpp"

#include <fmt/format.h>

#include <json.hpp>

#include <regex>

namespace nicecut {

using nlohmann::json;

ParseError::ParseError(const std::string& what, std::string field, int line, int column)
    : Error(line > 0 ? fmt::format("{}:{}: {}: {}", line, column, field.empty() ? "<document>" : field, what)
                     : fmt::format("{}: {}", field.empty() ? "<document>" : field, what)),
      field_(std::move(field)),
      line_(line),
      column_(column) {}

VersionError::VersionError(int version)
    : Error(fmt::format("unsupported schema_version {} (expected {})", version, kSchemaVersion)),
      version_(version) {}

namespace {

std::string num(double v) { return fmt::format("{:.16e}", v); }

std::string point(const Point& p) { return "[" + num(p.x()) + ", " + num(p.y()) + "]"; }

std::string points(const Polygon& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + point(p[i]);
  return s + "]";
}

std::string motion(const RigidMotion& m) {
  if (m.is_translation()) return "{\"kind\": \"translation\", \"vector\": " + point(m.translation_part()) + "}";
  return "{\"angle_deg\": " + num(m.phi()) + ", \"center\": " + point(m.center()) + ", \"kind\": \"rotation\"}";
}

template <class T, class Fn>
std::string block(const std::vector<T>& items, Fn&& fn) {
  if (items.empty()) return "[]";
  std::string s = "[\n";
  for (std::size_t i = 0; i < items.size(); ++i) s += "    " + fn(items[i]) + (i + 1 < items.size() ? ",\n" : "\n");
  return s + "  ]";
}

// ---------------------------------------------------------------------------
// Parsing

std::pair<int, int> line_col(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

/// Name of the last key opened before `offset`, for syntax errors.
std::string enclosing_key(std::string_view text, std::size_t offset) {
  const std::string head(text.substr(0, std::min(offset, text.size())));
  static const std::regex key(R"re("([A-Za-z_]+)"\s*:)re");
  std::string last;
  for (auto it = std::sregex_iterator(head.begin(), head.end(), key); it != std::sregex_iterator(); ++it)
    last = (*it)[1];
  return last;
}

const json& field(const json& obj, const char* name, const std::string& path) {
  const auto it = obj.find(name);
  if (it == obj.end()) throw ParseError("missing field", path.empty() ? name : path + "." + name);
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError("expected a number", path);
  return j.get<double>();
}

Point point_of(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected an [x, y] pair", path);
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

Polygon polygon_of(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError("expected an array of points", path);
  if (j.size() < 3) throw ParseError(fmt::format("polygon needs at least 3 vertices, got {}", j.size()), path);
  std::vector<Point> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(point_of(j[i], fmt::format("{}[{}]", path, i)));
  try {
    return Polygon(std::move(v));
  } catch (const Error& e) {
    throw ParseError(e.what(), path);
  }
}

RigidMotion motion_of(const json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError("expected a motion object", path);
  const json& kind = field(j, "kind", path);
  if (!kind.is_string()) throw ParseError("expected a string", path + ".kind");
  const std::string k = kind.get<std::string>();
  if (k == "rotation")
    return RigidMotion::rotation(number(field(j, "angle_deg", path), path + ".angle_deg"),
                                 point_of(field(j, "center", path), path + ".center"));
  if (k == "translation") return RigidMotion::translation(point_of(field(j, "vector", path), path + ".vector"));
  throw ParseError("motion kind must be \"rotation\" or \"translation\", got \"" + k + "\"", path + ".kind");
}

}  // namespace

std::string serialize(const Dissection& d) {
  std::string s = "{\n";
  s += "  \"box\": " + points(d.box) + ",\n";
  s += "  \"cake\": " + points(d.cake) + ",\n";
  s += "  \"family\": \"" + family_tag(d.family, d.n) + "\",\n";
  s += "  \"motions\": " + block(d.motions, motion) + ",\n";
  s += "  \"pieces\": " + block(d.pieces, points) + ",\n";
  s += fmt::format("  \"schema_version\": {},\n", kSchemaVersion);
  s += "  \"spec\": {\"alpha\": " + num(d.spec.alpha) + ", \"beta\": " + num(d.spec.beta) +
       ", \"side_c\": " + num(d.spec.side_c) + "}\n";
  return s + "}\n";
}

Dissection parse_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    if (const auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, enclosing_key(text, e.byte), line, col);
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object", "");

  const json& version = field(doc, "schema_version", "");
  if (!version.is_number_integer()) throw ParseError("expected an integer", "schema_version");
  if (version.get<int>() != kSchemaVersion) throw VersionError(version.get<int>());

  Dissection d;
  const json& spec = field(doc, "spec", "");
  if (!spec.is_object()) throw ParseError("expected an object", "spec");
  d.spec.alpha = number(field(spec, "alpha", "spec"), "spec.alpha");
  d.spec.beta = number(field(spec, "beta", "spec"), "spec.beta");
  d.spec.side_c = number(field(spec, "side_c", "spec"), "spec.side_c");

  const json& family = field(doc, "family", "");
  if (!family.is_string()) throw ParseError("expected a string", "family");
  try {
    std::tie(d.family, d.n) = parse_family_tag(family.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(e.what(), "family");
  }

  d.cake = polygon_of(field(doc, "cake", ""), "cake");
  d.box = polygon_of(field(doc, "box", ""), "box");

  const json& pieces = field(doc, "pieces", "");
  if (!pieces.is_array()) throw ParseError("expected an array", "pieces");
  for (std::size_t i = 0; i < pieces.size(); ++i) d.pieces.push_back(polygon_of(pieces[i], fmt::format("pieces[{}]", i)));

  const json& motions = field(doc, "motions", "");
  if (!motions.is_array()) throw ParseError("expected an array", "motions");
  for (std::size_t i = 0; i < motions.size(); ++i)
    d.motions.push_back(motion_of(motions[i], fmt::format("motions[{}]", i)));

  if (d.pieces.size() != d.motions.size())
    throw ParseError(fmt::format("{} pieces but {} motions", d.pieces.size(), d.motions.size()), "pieces");
  return d;
}

Dissection codec_roundtrip(const Dissection& d) { return parse_certificate(serialize(d)); }

}  // namespace nicecut
