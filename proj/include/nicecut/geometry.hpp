#pragma once

// Planar primitives shared by every other part of the library: points,
// directed lines, counterclockwise polygons, orientation-preserving motions
// and the tolerance-driven predicates built on them.

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nicecut {

using Point = Eigen::Vector2d;
using Vec2 = Eigen::Vector2d;

/// Angles in the public API are plain doubles measured in degrees.
using AngleDeg = double;

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(AngleDeg a) { return a * kPi / 180.0; }
inline AngleDeg rad2deg(double r) { return r * 180.0 / kPi; }

/// Unit vector at `a` degrees from the +x axis.
inline Vec2 unit_dir(AngleDeg a) {
  const double r = deg2rad(a);
  return {std::cos(r), std::sin(r)};
}

inline double cross(const Vec2& u, const Vec2& v) { return u.x() * v.y() - u.y() * v.x(); }

/// Reduces `a` into [0, period).
double wrap_angle(AngleDeg a, double period = 360.0);

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateSpecError : public Error {
 public:
  using Error::Error;
};

class DegenerateTriangleError : public Error {
 public:
  using Error::Error;
};

class TriangulationError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Lines

/// Line with an orientation. `direction` is kept at unit length.
struct DirectedLine {
  Point base;
  Vec2 direction;

  /// The line XY directed from `from` to `to`. Throws if the points coincide.
  static DirectedLine through(const Point& from, const Point& to);

  DirectedLine reversed() const { return {base, -direction}; }

  /// Signed distance of `p`, positive on the left.
  double signed_distance(const Point& p) const { return cross(direction, p - base); }
};

/// Same line with the same orientation: direction dot product above
/// 1 - 1e-12 and base point within `len_tol` of the other line.
bool same_directed_line(const DirectedLine& a, const DirectedLine& b, double len_tol);

/// Counterclockwise angle taking the undirected line `from` onto `to`, in [0, 180).
AngleDeg oriented_angle(const DirectedLine& from, const DirectedLine& to);

// ---------------------------------------------------------------------------
// Polygons

/// Counterclockwise polygon as a vertex cycle. Construction checks only the
/// vertex count and finiteness; `is_valid_polygon` does the full check.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Point> vertices);
  Polygon(std::initializer_list<Point> vertices) : Polygon(std::vector<Point>(vertices)) {}

  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  /// Cyclic access.
  const Point& at_cyclic(std::ptrdiff_t i) const;
  const std::vector<Point>& vertices() const { return vertices_; }
  std::span<const Point> span() const { return vertices_; }

  bool operator==(const Polygon&) const = default;

 private:
  std::vector<Point> vertices_;
};

/// Open chain of points (a cut).
struct Polyline {
  std::vector<Point> vertices;
};

/// Shoelace area; positive for counterclockwise vertex orders.
double signed_area(std::span<const Point> vertices);
inline double signed_area(const Polygon& p) { return signed_area(p.span()); }

double perimeter(const Polygon& p);
double diameter(const Polygon& p);
double diameter(std::span<const Point> pts);

/// Side lengths; entry i is |v_i v_{i+1}|.
std::vector<double> edge_lengths(const Polygon& p);
/// Interior angles in degrees, each in (0, 360).
std::vector<AngleDeg> interior_angles(const Polygon& p);

/// ≥3 vertices, positive area, no near-coincident consecutive vertices and
/// no self-intersection, all judged at `len_tol`.
bool is_valid_polygon(const Polygon& p, double len_tol);

/// Drops vertices whose two incident sides are collinear within `len_tol`.
Polygon merge_collinear(const Polygon& p, double len_tol);

// ---------------------------------------------------------------------------
// Triangles

/// Cake description by two angles and the length of AB.
struct TriangleSpec {
  AngleDeg alpha = 0;
  AngleDeg beta = 0;
  double side_c = 1.0;

  AngleDeg gamma() const { return 180.0 - alpha - beta; }
  /// Pairwise distinct angles within `tol` degrees.
  bool is_scalene(double tol = 1e-9) const;
  /// Throws DegenerateSpecError on nonpositive angles or side, or alpha + beta >= 180.
  void validate() const;
};

/// A = (0,0), B = (c,0), C above AB. Vertex order A, B, C.
Polygon construct_triangle(const TriangleSpec& spec);

/// Reflection across the vertical line x = axis_x, reordered to stay counterclockwise.
Polygon mirror_polygon(const Polygon& p, double axis_x);

Point incenter(const Polygon& tri);

// ---------------------------------------------------------------------------
// Motions

/// Orientation-preserving isometry p -> Rot(phi) p + t. Rotations are stored
/// by angle and center so that the certificate form round-trips exactly.
/// The translation part is cached for numerically stable application.
class RigidMotion {
 public:
  RigidMotion() = default;

  static RigidMotion identity() { return {}; }
  static RigidMotion translation(const Vec2& t);
  static RigidMotion rotation(AngleDeg phi, const Point& center);
  /// p -> Rot(phi) p + t; collapses to a pure translation when phi is
  /// within 1e-12 degrees of a full turn.
  static RigidMotion from_linear(AngleDeg phi, const Vec2& t);

  bool is_translation() const { return phi_ == 0.0; }
  /// Angle in [0, 360).
  AngleDeg phi() const { return phi_; }
  /// Rotation center; only meaningful when !is_translation().
  const Point& center() const { return center_; }
  Vec2 translation_part() const;
  Eigen::Matrix2d linear() const;
  double determinant() const { return linear().determinant(); }

  Point apply(const Point& p) const;
  DirectedLine apply(const DirectedLine& l) const;
  RigidMotion inverse() const;
  /// (*this) after `first`: p -> this(first(p)).
  RigidMotion compose(const RigidMotion& first) const;

 private:
  AngleDeg phi_ = 0.0;
  Point center_ = Point::Zero();
  Vec2 shift_ = Vec2::Zero();
};

Polygon apply_motion(const RigidMotion& m, const Polygon& p);

/// Orientation-preserving motion carrying `p` onto `q` as a vertex cycle, or
/// nothing. Ties go to the smallest phi, then the smallest translation.
std::optional<RigidMotion> find_motion(const Polygon& p, const Polygon& q, double tol);

/// Area of the intersection of two simple polygons.
double intersection_area(const Polygon& p, const Polygon& q);

/// Ear-clipping triangulation; reflex vertices allowed. Throws TriangulationError.
std::vector<Polygon> triangulate(const Polygon& p, double len_tol);

/// Some reflection maps the polygon onto itself.
bool is_mirror_symmetric(const Polygon& p, double tol);

/// Default length tolerance for an instance of the given diameter.
inline double default_len_tol(double diam) { return 1e-9 * diam; }

}  // namespace nicecut
