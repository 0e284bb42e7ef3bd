#pragma once

// Explicit nice cuttings of a cake. Every construction builds the cake pieces,
// places their mirror images in the box and recovers the motions, so the
// output is ready for verify_nice.

#include "nicecut/dissection.hpp"

namespace nicecut {

/// The cake does not belong to the requested family.
class WrongFamilyError : public Error {
 public:
  using Error::Error;
};

/// A broken-line cut failed to close up on the cake boundary.
class ClosureResidualError : public Error {
 public:
  using Error::Error;
};

class RootFindError : public Error {
 public:
  using Error::Error;
};

/// Tolerance on family angle identities such as alpha = 3 beta.
inline constexpr double kFamilyTol = 1e-9;

/// Three kites cut along the perpendiculars from the incenter.
Dissection cut_incenter3(const TriangleSpec& spec);

/// alpha = 90: the median from the right angle.
Dissection cut_median(const TriangleSpec& spec);

/// alpha = 3 beta: the ray from A that cuts off an angle beta next to AB.
Dissection cut_alpha_3beta(const TriangleSpec& spec);

/// alpha = 2 beta < 90: the ray from C that cuts off an angle beta next to CB.
Dissection cut_2beta_acute(const TriangleSpec& spec);

/// alpha = 2 beta > 90: the reflection of line AB in the bisector at C.
Dissection cut_2beta_obtuse(const TriangleSpec& spec);

/// alpha = (n+1) beta / n: 2n+1 equal chords from A to B on a circle below AB,
/// turning by alpha - beta at each joint.
Dissection cut_wheel(const TriangleSpec& spec, int n);

/// alpha = (n+1) beta / n: 2n+1 equal segments from A to B alternately
/// turning by +beta and -alpha.
Dissection cut_gear(const TriangleSpec& spec, int n);

/// (alpha, beta, gamma) = (30, 20, 130): broken line B C K L M B with
/// CK = KL = LM and 130 degree angles.
Dissection cut_scissors(const TriangleSpec& spec);

/// Dispatch by family; `n` is used by wheel and gear.
Dissection construct(Family family, const TriangleSpec& spec, int n = 0);

}  // namespace nicecut
