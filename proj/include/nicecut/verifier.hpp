#pragma once

// Certification of dissections and the angle checks that a verified two-piece
// dissection must pass.

#include "nicecut/angle_relations.hpp"
#include "nicecut/dissection.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nicecut {

class WrongArityError : public Error {
 public:
  using Error::Error;
};

struct PartitionResult {
  bool ok = false;
  double max_overlap = 0.0;
  /// Sum of piece areas minus target area.
  double area_defect = 0.0;
  /// Largest area(piece) - area(piece ∩ target).
  double max_outside = 0.0;
};

/// Pieces tile `target`: areas add up, pairwise overlaps vanish and each piece
/// lies inside the target, all within the absolute area tolerance.
PartitionResult verify_partition(std::span<const Polygon> pieces, const Polygon& target, double area_tol);

struct NiceReport {
  bool partition_cake = false;
  bool partition_box = false;
  bool motions_proper = false;
  double max_overlap_area = 0.0;
  double area_defect = 0.0;
  bool passed = false;
};

inline constexpr double kDefaultRelTol = 1e-9;

/// Tolerances scale with the cake: area tol = rel_tol * area, length tol =
/// rel_tol * diameter.
NiceReport verify_nice(const Dissection& d, double rel_tol = kDefaultRelTol);

/// Matches every cake piece with a distinct directly congruent box piece.
/// motions[i] carries cake_pieces[i] onto its partner.
std::optional<std::vector<RigidMotion>> recover_motions(std::span<const Polygon> cake_pieces,
                                                        std::span<const Polygon> box_pieces, double len_tol);

/// Integer relation among the cake's angles for a two-piece dissection.
/// Throws WrongArityError otherwise.
std::optional<IntegerRelation> theorem1_check(const Dissection& d, int k_max = kDefaultRelationKMax,
                                              double tol = kDefaultRelationTol);

struct MultipleCheck {
  std::string label;
  AngleDeg psi = 0.0;
  /// Whether the statement is guaranteed for this configuration.
  bool precondition = false;
  std::optional<MultipleWitness> witness;
};

struct ClaimReport {
  /// Relative motion of piece 1 once piece 0 is held fixed.
  bool normalized_is_translation = false;
  AngleDeg phi = 0.0;       // [0, 360)
  AngleDeg phi_line = 0.0;  // phi reduced into (-90, 90]; acts the same on lines
  Point center = Point::Zero();
  std::optional<RationalAngle> phi_rational;
  /// Center on the lines AB, BC, CA.
  std::array<bool, 3> center_on_side{};
  int sides_through_center = 0;
  bool center_claim_holds = false;
  /// angle(XY, X'Y') for XY = AB, BC, CA.
  std::vector<MultipleCheck> side_checks;
  /// 2*alpha, 2*beta, 2*gamma.
  std::vector<MultipleCheck> vertex_checks;
  std::vector<std::string> notes;
};

inline constexpr int kClaimKMax = 8;
inline constexpr int kClaimLMax = 2;
inline constexpr int kClaimRationalDenominator = 360;

/// Normalizes so piece 0 stays put and reports the rotation of piece 1 with
/// the multiple-of-phi checks. Mathematical violations are reported, not thrown.
ClaimReport claim_angle_checks(const Dissection& d, double tol = kDefaultRelationTol);

}  // namespace nicecut
