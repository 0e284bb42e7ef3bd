#pragma once

#include "nicecut/geometry.hpp"

#include <string>
#include <vector>

namespace nicecut {

enum class Family {
  Incenter3,
  Median,
  Alpha3Beta,
  TwoBetaAcute,
  TwoBetaObtuse,
  Wheel,
  Gear,
  Scissors,
  StraightCut,  // found by cut_search
};

/// A cake cut into pieces together with the motions that place each piece
/// in the box. pieces[i] goes to motions[i](pieces[i]).
struct Dissection {
  TriangleSpec spec;
  Polygon cake;
  Polygon box;
  std::vector<Polygon> pieces;
  std::vector<RigidMotion> motions;
  /// Cut chains for drawing; not part of the certificate.
  std::vector<Polyline> cuts;
  Family family = Family::Incenter3;
  /// Wheel/gear order; 0 for other families.
  int n = 0;
};

/// "incenter3", "median", ..., "wheel(2)", "gear(3)", "straight_cut".
std::string family_tag(Family f, int n = 0);
/// Inverse of family_tag; throws Error on unknown tags.
std::pair<Family, int> parse_family_tag(const std::string& tag);

}  // namespace nicecut
