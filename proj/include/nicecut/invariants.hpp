#pragma once

// Additive invariants of polygons indexed by directed lines.

#include "nicecut/geometry.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace nicecut {

class IllDefinedFunctionalError : public Error {
 public:
  using Error::Error;
};

/// Real-valued function on directed lines, expected to satisfy
/// f(XY) = -f(YX).
class DirectedLineFunctional {
 public:
  using Fn = std::function<double(const DirectedLine&)>;

  DirectedLineFunctional() : fn_([](const DirectedLine&) { return 0.0; }) {}
  explicit DirectedLineFunctional(Fn fn) : fn_(std::move(fn)) {}

  double operator()(const DirectedLine& l) const { return fn_(l); }

 private:
  Fn fn_;
};

/// Functional supported on finitely many lines: `value` on each listed line,
/// `-value` on its reversal, 0 elsewhere. Antisymmetric whenever no listed
/// line coincides with the reversal of another.
DirectedLineFunctional line_table_functional(std::vector<std::pair<DirectedLine, double>> table,
                                             double len_tol);

/// +1 on lines with direction `dir`, -1 on the opposite direction, 0 otherwise.
DirectedLineFunctional direction_class_functional(const Vec2& dir, double cross_tol = 1e-9);

/// Signed sum of the side lengths parallel to `f`; sides are parallel when
/// |cross(side_dir, f_dir)| <= cross_tol.
double j_classic(const Polygon& poly, const DirectedLine& f, double cross_tol = 1e-9);

/// Sum over sides of f(directed side line) * side length.
double j_general(const Polygon& poly, const DirectedLineFunctional& f);

inline constexpr int kDefaultOrbitKMax = 64;

/// The orbit functional of a rotation: +1 on R^k(AB), -1 on R^k(BA) for
/// |k| <= k_max, 0 elsewhere. Throws IllDefinedFunctionalError when some
/// R^k(AB) coincides with some R^l(BA), and Error if `r` is a translation.
DirectedLineFunctional orbit_functional(const RigidMotion& r, const DirectedLine& ab,
                                        int k_max = kDefaultOrbitKMax, double len_tol = 1e-9);

}  // namespace nicecut
