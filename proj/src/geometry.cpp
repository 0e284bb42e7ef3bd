#include "nicecut/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace nicecut {

double wrap_angle(AngleDeg a, double period) {
  double r = std::fmod(a, period);
  if (r < 0) r += period;
  if (r >= period) r -= period;
  return r;
}

// ---------------------------------------------------------------------------

DirectedLine DirectedLine::through(const Point& from, const Point& to) {
  const Vec2 d = to - from;
  const double n = d.norm();
  if (!(n > 0.0)) throw Error("directed line through coincident points");
  return {from, d / n};
}

bool same_directed_line(const DirectedLine& a, const DirectedLine& b, double len_tol) {
  if (a.direction.dot(b.direction) <= 1.0 - 1e-12) return false;
  return std::abs(b.signed_distance(a.base)) < len_tol;
}

AngleDeg oriented_angle(const DirectedLine& from, const DirectedLine& to) {
  const double a0 = std::atan2(from.direction.y(), from.direction.x());
  const double a1 = std::atan2(to.direction.y(), to.direction.x());
  return wrap_angle(rad2deg(a1 - a0), 180.0);
}

// ---------------------------------------------------------------------------

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw Error("polygon needs at least 3 vertices");
  for (const auto& v : vertices_)
    if (!v.allFinite()) throw Error("polygon vertex is not finite");
}

const Point& Polygon::at_cyclic(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

double signed_area(std::span<const Point> v) {
  if (v.size() < 3) return 0.0;
  // Relative to v[0] to keep cancellation small for offset polygons.
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) twice += cross(v[i] - v[0], v[i + 1] - v[0]);
  return 0.5 * twice;
}

double perimeter(const Polygon& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (p.at_cyclic(i + 1) - p[i]).norm();
  return s;
}

double diameter(std::span<const Point> pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, (pts[i] - pts[j]).norm());
  return d;
}

double diameter(const Polygon& p) { return diameter(p.span()); }

std::vector<double> edge_lengths(const Polygon& p) {
  std::vector<double> e(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) e[i] = (p.at_cyclic(i + 1) - p[i]).norm();
  return e;
}

std::vector<AngleDeg> interior_angles(const Polygon& p) {
  std::vector<AngleDeg> a(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto ii = static_cast<std::ptrdiff_t>(i);
    const Vec2 to_next = p.at_cyclic(ii + 1) - p[i];
    const Vec2 to_prev = p.at_cyclic(ii - 1) - p[i];
    a[i] = wrap_angle(rad2deg(std::atan2(cross(to_next, to_prev), to_next.dot(to_prev))));
  }
  return a;
}

namespace {

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
         d4 != 0;
}

double segment_distance(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (segments_cross(a, b, c, d)) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

}  // namespace

bool is_valid_polygon(const Polygon& p, double len_tol) {
  const std::size_t n = p.size();
  if (n < 3) return false;
  for (const auto& v : p.vertices())
    if (!v.allFinite()) return false;
  if (!(signed_area(p) > len_tol * diameter(p))) return false;
  for (std::size_t i = 0; i < n; ++i)
    if ((p.at_cyclic(i + 1) - p[i]).norm() <= len_tol) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = p[i];
    const Point& b = p.at_cyclic(i + 1);
    // Adjacent sides must not fold back onto each other.
    const Point& c = p.at_cyclic(i + 2);
    if ((b - a).dot(c - b) < 0 && std::abs(cross(b - a, c - b)) <= len_tol * (c - b).norm())
      return false;
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segment_distance(a, b, p[j], p.at_cyclic(j + 1)) <= len_tol) return false;
    }
  }
  return true;
}

Polygon merge_collinear(const Polygon& p, double len_tol) {
  std::vector<Point> v = p.vertices();
  bool changed = true;
  while (changed && v.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() > 3; ++i) {
      const Point& prev = v[(i + v.size() - 1) % v.size()];
      const Point& cur = v[i];
      const Point& next = v[(i + 1) % v.size()];
      const bool duplicate = (cur - prev).norm() <= len_tol;
      const Vec2 chord = next - prev;
      const double len = chord.norm();
      const bool straight = len > 0 && std::abs(cross(chord, cur - prev)) <= len_tol * len &&
                            (cur - prev).dot(next - cur) > 0;
      if (duplicate || straight) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return Polygon(std::move(v));
}

// ---------------------------------------------------------------------------

bool TriangleSpec::is_scalene(double tol) const {
  const double g = gamma();
  return std::abs(alpha - beta) > tol && std::abs(beta - g) > tol && std::abs(alpha - g) > tol;
}

void TriangleSpec::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(side_c))
    throw DegenerateSpecError("triangle spec has non-finite fields");
  if (alpha <= 0 || beta <= 0) throw DegenerateSpecError("triangle angles must be positive");
  if (alpha + beta >= 180.0 - 1e-9)
    throw DegenerateSpecError("alpha + beta must be below 180 degrees");
  if (side_c <= 0) throw DegenerateSpecError("side length must be positive");
}

Polygon construct_triangle(const TriangleSpec& spec) {
  spec.validate();
  // Law of sines: |AC| = c sin(beta) / sin(gamma).
  const double b = spec.side_c * std::sin(deg2rad(spec.beta)) / std::sin(deg2rad(spec.gamma()));
  return Polygon{Point(0, 0), Point(spec.side_c, 0), b * unit_dir(spec.alpha)};
}

Polygon mirror_polygon(const Polygon& p, double axis_x) {
  std::vector<Point> out;
  out.reserve(p.size());
  const auto reflect = [axis_x](const Point& v) { return Point(2 * axis_x - v.x(), v.y()); };
  out.push_back(reflect(p[0]));
  for (std::size_t i = p.size() - 1; i >= 1; --i) out.push_back(reflect(p[i]));
  return Polygon(std::move(out));
}

Point incenter(const Polygon& tri) {
  if (tri.size() != 3) throw DegenerateTriangleError("incenter needs a triangle");
  const Point& A = tri[0];
  const Point& B = tri[1];
  const Point& C = tri[2];
  const double a = (C - B).norm();
  const double b = (A - C).norm();
  const double c = (B - A).norm();
  const double diam = std::max({a, b, c});
  if (!(std::abs(signed_area(tri)) > 1e-12 * diam * diam))
    throw DegenerateTriangleError("incenter of a degenerate triangle");
  return (a * A + b * B + c * C) / (a + b + c);
}

// ---------------------------------------------------------------------------

RigidMotion RigidMotion::translation(const Vec2& t) {
  RigidMotion m;
  m.shift_ = t;
  return m;
}

RigidMotion RigidMotion::rotation(AngleDeg phi, const Point& center) {
  RigidMotion m;
  m.phi_ = wrap_angle(phi);
  m.center_ = center;
  if (m.phi_ == 0.0) m.center_ = Point::Zero();
  m.shift_ = m.center_ - m.linear() * m.center_;
  return m;
}

RigidMotion RigidMotion::from_linear(AngleDeg phi, const Vec2& t) {
  const double w = wrap_angle(phi);
  if (w < 1e-12 || w > 360.0 - 1e-12) return translation(t);
  const Eigen::Matrix2d rot = Eigen::Rotation2Dd(deg2rad(w)).toRotationMatrix();
  const Point c = (Eigen::Matrix2d::Identity() - rot).inverse() * t;
  // Keep t itself: the center is ill-conditioned for small angles.
  RigidMotion m = rotation(w, c);
  m.shift_ = t;
  return m;
}

Eigen::Matrix2d RigidMotion::linear() const {
  if (is_translation()) return Eigen::Matrix2d::Identity();
  return Eigen::Rotation2Dd(deg2rad(phi_)).toRotationMatrix();
}

Vec2 RigidMotion::translation_part() const { return shift_; }

Point RigidMotion::apply(const Point& p) const {
  if (is_translation()) return p + shift_;
  return linear() * p + shift_;
}

DirectedLine RigidMotion::apply(const DirectedLine& l) const {
  return {apply(l.base), linear() * l.direction};
}

RigidMotion RigidMotion::inverse() const {
  if (is_translation()) return translation(-shift_);
  RigidMotion m = rotation(360.0 - phi_, center_);
  m.shift_ = -(m.linear() * shift_);
  return m;
}

RigidMotion RigidMotion::compose(const RigidMotion& first) const {
  const Vec2 t = linear() * first.translation_part() + translation_part();
  return from_linear(phi_ + first.phi_, t);
}

Polygon apply_motion(const RigidMotion& m, const Polygon& p) {
  std::vector<Point> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(m.apply(v));
  return Polygon(std::move(out));
}

std::optional<RigidMotion> find_motion(const Polygon& p, const Polygon& q, double tol) {
  const std::size_t n = p.size();
  if (n != q.size() || n < 3) return std::nullopt;
  const auto ep = edge_lengths(p);
  const auto eq = edge_lengths(q);
  const auto ap = interior_angles(p);
  const auto aq = interior_angles(q);
  const double min_edge = std::max(*std::min_element(ep.begin(), ep.end()), tol);
  const double angle_tol = rad2deg(4.0 * tol / min_edge);

  Point pc = Point::Zero();
  for (const auto& v : p.vertices()) pc += v;
  pc /= static_cast<double>(n);

  std::optional<RigidMotion> best;
  double best_norm = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const std::size_t j = (i + r) % n;
      const double da = std::abs(wrap_angle(ap[i] - aq[j] + 180.0) - 180.0);
      ok = std::abs(ep[i] - eq[j]) <= 2.0 * tol && da <= angle_tol;
    }
    if (!ok) continue;

    // Least-squares rotation aligning the matched vertex cycles.
    Point qc = Point::Zero();
    for (std::size_t i = 0; i < n; ++i) qc += q[(i + r) % n];
    qc /= static_cast<double>(n);
    double s = 0.0, c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 u = p[i] - pc;
      const Vec2 w = q[(i + r) % n] - qc;
      s += cross(u, w);
      c += u.dot(w);
    }
    const double theta = std::atan2(s, c);
    const Eigen::Matrix2d rot = Eigen::Rotation2Dd(theta).toRotationMatrix();
    const RigidMotion m = RigidMotion::from_linear(rad2deg(theta), qc - rot * pc);

    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, (m.apply(p[i]) - q[(i + r) % n]).norm());
    if (worst > tol) continue;

    const double norm = m.translation_part().norm();
    if (!best || m.phi() < best->phi() - 1e-9 ||
        (std::abs(m.phi() - best->phi()) <= 1e-9 && norm < best_norm)) {
      best = m;
      best_norm = norm;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

namespace {

bool in_triangle(const Point& p, const Point& a, const Point& b, const Point& c, double tol) {
  return cross(b - a, p - a) >= -tol * (b - a).norm() && cross(c - b, p - b) >= -tol * (c - b).norm() &&
         cross(a - c, p - c) >= -tol * (a - c).norm();
}

/// Clips a convex counterclockwise polygon by the left half-plane of a->b.
std::vector<Point> clip_half_plane(const std::vector<Point>& poly, const Point& a, const Point& b) {
  std::vector<Point> out;
  if (poly.empty()) return out;
  const Vec2 d = b - a;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& cur = poly[i];
    const Point& nxt = poly[(i + 1) % poly.size()];
    const double sc = cross(d, cur - a);
    const double sn = cross(d, nxt - a);
    if (sc >= 0) out.push_back(cur);
    if ((sc >= 0) != (sn >= 0)) {
      const double t = sc / (sc - sn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

double convex_intersection_area(const Polygon& s, const Polygon& c) {
  std::vector<Point> poly = s.vertices();
  for (std::size_t i = 0; i < c.size() && !poly.empty(); ++i) poly = clip_half_plane(poly, c[i], c.at_cyclic(i + 1));
  return poly.size() < 3 ? 0.0 : std::max(0.0, signed_area(poly));
}

}  // namespace

std::vector<Polygon> triangulate(const Polygon& p, double len_tol) {
  const Polygon merged = merge_collinear(p, len_tol);
  const auto& v = merged.vertices();
  if (signed_area(merged) <= 0) throw TriangulationError("polygon is not counterclockwise");
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Polygon> out;
  out.reserve(v.size() - 2);

  while (idx.size() > 3) {
    bool clipped = false;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const std::size_t ip = idx[(k + idx.size() - 1) % idx.size()];
      const std::size_t ic = idx[k];
      const std::size_t in = idx[(k + 1) % idx.size()];
      const Point &a = v[ip], &b = v[ic], &c = v[in];
      if (cross(b - a, c - b) <= len_tol * (c - a).norm()) continue;  // reflex or flat
      bool empty = true;
      for (std::size_t o : idx) {
        if (o == ip || o == ic || o == in) continue;
        if ((v[o] - a).norm() <= len_tol || (v[o] - b).norm() <= len_tol || (v[o] - c).norm() <= len_tol)
          continue;
        if (in_triangle(v[o], a, b, c, len_tol)) {
          empty = false;
          break;
        }
      }
      if (!empty) continue;
      out.push_back(Polygon{a, b, c});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
      break;
    }
    if (!clipped) throw TriangulationError("no ear found; polygon is not simple");
  }
  out.push_back(Polygon{v[idx[0]], v[idx[1]], v[idx[2]]});
  return out;
}

double intersection_area(const Polygon& p, const Polygon& q) {
  const double scale = std::max(diameter(p), diameter(q));
  const double tol = 1e-12 * scale;
  const auto tp = triangulate(p, tol);
  const auto tq = triangulate(q, tol);
  double sum = 0.0;
  for (const auto& a : tp)
    for (const auto& b : tq) sum += convex_intersection_area(a, b);
  return sum;
}

bool is_mirror_symmetric(const Polygon& p, double tol) {
  return find_motion(p, mirror_polygon(p, 0.0), tol).has_value();
}

}  // namespace nicecut
