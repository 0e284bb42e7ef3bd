#include "nicecut/dissection.hpp"

#include <regex>

namespace nicecut {

std::string family_tag(Family f, int n) {
  switch (f) {
    case Family::Incenter3: return "incenter3";
    case Family::Median: return "median";
    case Family::Alpha3Beta: return "alpha3beta";
    case Family::TwoBetaAcute: return "twobeta_acute";
    case Family::TwoBetaObtuse: return "twobeta_obtuse";
    case Family::Wheel: return "wheel(" + std::to_string(n) + ")";
    case Family::Gear: return "gear(" + std::to_string(n) + ")";
    case Family::Scissors: return "scissors";
    case Family::StraightCut: return "straight_cut";
  }
  return "unknown";
}

std::pair<Family, int> parse_family_tag(const std::string& tag) {
  static const std::regex indexed(R"((wheel|gear)\(([1-9][0-9]{0,5})\))");
  std::smatch m;
  if (std::regex_match(tag, m, indexed))
    return {m[1] == "wheel" ? Family::Wheel : Family::Gear, std::stoi(m[2])};
  for (Family f : {Family::Incenter3, Family::Median, Family::Alpha3Beta, Family::TwoBetaAcute,
                   Family::TwoBetaObtuse, Family::Scissors, Family::StraightCut})
    if (tag == family_tag(f)) return {f, 0};
  throw Error("unknown family tag '" + tag + "'");
}

}  // namespace nicecut
