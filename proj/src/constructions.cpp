#include "nicecut/constructions.hpp"

#include "nicecut/verifier.hpp"

#include <string>

namespace nicecut {

namespace {

struct Cake {
  Polygon tri;
  Point A, B, C;
  double len_tol;
};

Cake make_cake(const TriangleSpec& spec) {
  Polygon tri = construct_triangle(spec);
  const double tol = default_len_tol(diameter(tri));
  return {tri, tri[0], tri[1], tri[2], tol};
}

void require_scalene(const TriangleSpec& spec, const char* family) {
  if (!spec.is_scalene(kFamilyTol)) throw WrongFamilyError(std::string(family) + " needs a scalene cake");
}

void require_identity(bool holds, const std::string& what) {
  if (!holds) throw WrongFamilyError("cake is outside the family: needs " + what);
}

/// Intersection of the lines p + t*d and q + u*e.
Point intersect(const Point& p, const Vec2& d, const Point& q, const Vec2& e) {
  const double den = cross(d, e);
  if (std::abs(den) < 1e-15) throw Error("parallel cut lines");
  return p + (cross(q - p, e) / den) * d;
}

Point foot(const Point& p, const Point& a, const Point& b) {
  const Vec2 ab = b - a;
  return a + ((p - a).dot(ab) / ab.squaredNorm()) * ab;
}

/// All pieces are mirror-symmetric, so the box (the cake reflected in
/// x = c/2) is tiled by the reflected pieces, each directly congruent to
/// its original.
Dissection assemble(const TriangleSpec& spec, const Cake& cake, Family family, int n,
                    std::vector<Polygon> pieces, std::vector<Polyline> cuts) {
  Dissection d;
  d.spec = spec;
  d.cake = cake.tri;
  const double axis = spec.side_c / 2.0;
  d.box = mirror_polygon(cake.tri, axis);
  std::vector<Polygon> box_pieces;
  box_pieces.reserve(pieces.size());
  for (const auto& p : pieces) box_pieces.push_back(mirror_polygon(p, axis));
  auto motions = recover_motions(pieces, box_pieces, cake.len_tol);
  if (!motions) throw Error(family_tag(family, n) + ": could not recover the motions into the box");
  d.pieces = std::move(pieces);
  d.motions = std::move(*motions);
  d.cuts = std::move(cuts);
  d.family = family;
  d.n = n;
  return d;
}

/// Points V_0 = A, ..., V_{2n+1} of a broken line of equal segments with the
/// given directions, scaled so the chain spans AB. Checks that the direction
/// sum is parallel to AB and that V_{2n+1} lands on B.
std::vector<Point> equal_segment_chain(const Cake& cake, const std::vector<AngleDeg>& dirs) {
  Vec2 sum = Vec2::Zero();
  for (AngleDeg a : dirs) sum += unit_dir(a);
  const double c = (cake.B - cake.A).norm();
  if (std::abs(sum.y()) * c / sum.norm() > 1e-9 * c)
    throw ClosureResidualError("segment directions do not close up along AB");
  const double s = c / sum.norm();
  std::vector<Point> v{cake.A};
  for (AngleDeg a : dirs) v.push_back(v.back() + s * unit_dir(a));
  if ((v.back() - cake.B).norm() > cake.len_tol)
    throw ClosureResidualError("broken line misses B by " + std::to_string((v.back() - cake.B).norm()));
  v.back() = cake.B;
  return v;
}

/// The second to last vertex must sit strictly inside side BC.
void require_on_bc(const Cake& cake, const Point& p) {
  const DirectedLine bc = DirectedLine::through(cake.B, cake.C);
  const double along = (p - cake.B).dot(bc.direction);
  if (std::abs(bc.signed_distance(p)) > cake.len_tol || along <= cake.len_tol ||
      along >= (cake.C - cake.B).norm() - cake.len_tol)
    throw ClosureResidualError("last joint of the broken line is not inside BC");
}

void require_wheel_family(const TriangleSpec& spec, int n, const char* name) {
  if (n < 1) throw WrongFamilyError(std::string(name) + " needs n >= 1");
  require_identity(std::abs(spec.alpha - (n + 1) * spec.beta / n) <= kFamilyTol, "alpha = (n+1) beta / n");
  require_scalene(spec, name);
  require_identity((2 * n + 1) * (spec.alpha - spec.beta) < 360.0, "(2n+1)(alpha - beta) < 360");
}

}  // namespace

Dissection cut_incenter3(const TriangleSpec& spec) {
  const Cake k = make_cake(spec);
  const Point I = incenter(k.tri);
  const Point fa = foot(I, k.B, k.C);
  const Point fb = foot(I, k.C, k.A);
  const Point fc = foot(I, k.A, k.B);
  std::vector<Polygon> pieces{Polygon{k.A, fc, I, fb}, Polygon{k.B, fa, I, fc}, Polygon{k.C, fb, I, fa}};
  return assemble(spec, k, Family::Incenter3, 0, std::move(pieces), {{{fa, I, fb}}, {{I, fc}}});
}

Dissection cut_median(const TriangleSpec& spec) {
  spec.validate();
  require_identity(std::abs(spec.alpha - 90.0) <= kFamilyTol, "alpha = 90");
  require_scalene(spec, "median");
  const Cake k = make_cake(spec);
  const Point M = 0.5 * (k.B + k.C);
  return assemble(spec, k, Family::Median, 0, {Polygon{k.A, k.B, M}, Polygon{k.A, M, k.C}}, {{{k.A, M}}});
}

Dissection cut_alpha_3beta(const TriangleSpec& spec) {
  spec.validate();
  require_identity(std::abs(spec.alpha - 3.0 * spec.beta) <= kFamilyTol, "alpha = 3 beta");
  require_scalene(spec, "alpha3beta");
  const Cake k = make_cake(spec);
  // Ray from A at angle beta above AB meets BC at D; ABD and ADC are isosceles.
  const Point D = intersect(k.A, unit_dir(spec.beta), k.B, k.C - k.B);
  return assemble(spec, k, Family::Alpha3Beta, 0, {Polygon{k.A, k.B, D}, Polygon{k.A, D, k.C}}, {{{k.A, D}}});
}

Dissection cut_2beta_acute(const TriangleSpec& spec) {
  spec.validate();
  require_identity(std::abs(spec.alpha - 2.0 * spec.beta) <= kFamilyTol && spec.alpha < 90.0,
                   "alpha = 2 beta < 90");
  require_scalene(spec, "twobeta_acute");
  const Cake k = make_cake(spec);
  // Turn CB clockwise by beta, towards CA; BCD and ADC are isosceles.
  const Vec2 cb = (k.B - k.C).normalized();
  const Vec2 dir = Eigen::Rotation2Dd(-deg2rad(spec.beta)) * cb;
  const Point D = intersect(k.C, dir, k.A, k.B - k.A);
  return assemble(spec, k, Family::TwoBetaAcute, 0, {Polygon{k.A, D, k.C}, Polygon{D, k.B, k.C}}, {{{k.C, D}}});
}

Dissection cut_2beta_obtuse(const TriangleSpec& spec) {
  spec.validate();
  require_identity(std::abs(spec.alpha - 2.0 * spec.beta) <= kFamilyTol && spec.alpha > 90.0,
                   "alpha = 2 beta > 90");
  require_scalene(spec, "twobeta_obtuse");
  const Cake k = make_cake(spec);
  // Reflect AB in the bisector at C: A goes to A* on CB, B to B* on ray CA.
  const double a = (k.C - k.B).norm();
  const double b = (k.A - k.C).norm();
  const Point a_star = k.C + b * (k.B - k.C).normalized();
  const Point b_star = k.C + a * (k.A - k.C).normalized();
  const Point E = intersect(a_star, b_star - a_star, k.A, k.B - k.A);
  return assemble(spec, k, Family::TwoBetaObtuse, 0, {Polygon{E, k.B, a_star}, Polygon{k.A, E, a_star, k.C}},
                  {{{E, a_star}}});
}

Dissection cut_wheel(const TriangleSpec& spec, int n) {
  spec.validate();
  require_wheel_family(spec, n, "wheel");
  const Cake k = make_cake(spec);
  const double delta = spec.alpha - spec.beta;
  // Equal chords turning clockwise by delta: an arc of a circle centered below AB.
  std::vector<AngleDeg> dirs;
  for (int j = 0; j <= 2 * n; ++j) dirs.push_back(spec.beta - j * delta);
  const auto v = equal_segment_chain(k, dirs);
  const std::size_t last = v.size() - 2;  // V_{2n}
  require_on_bc(k, v[last]);

  std::vector<Point> wheel{k.A, k.B};
  for (std::size_t j = last; j >= 1; --j) wheel.push_back(v[j]);
  std::vector<Point> rest(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  rest.push_back(k.C);
  Polyline cut{std::vector<Point>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(last) + 1)};
  return assemble(spec, k, Family::Wheel, n, {Polygon(std::move(wheel)), Polygon(std::move(rest))}, {cut});
}

Dissection cut_gear(const TriangleSpec& spec, int n) {
  spec.validate();
  require_wheel_family(spec, n, "gear");
  const Cake k = make_cake(spec);
  const double delta = spec.alpha - spec.beta;
  // Segment 0 runs along AB; then turns of +beta and -alpha alternate.
  std::vector<AngleDeg> dirs;
  for (int i = 0; i <= 2 * n; ++i) dirs.push_back(i % 2 == 0 ? -(i / 2) * delta : (n - i / 2) * delta);
  const auto v = equal_segment_chain(k, dirs);
  const std::size_t last = v.size() - 2;  // N = V_{2n}
  require_on_bc(k, v[last]);
  if (!(v[1].x() > k.len_tol && v[1].x() < spec.side_c - k.len_tol))
    throw ClosureResidualError("first saw joint is not inside AB");

  std::vector<Point> gear{v[1], k.B};
  for (std::size_t j = last; j >= 2; --j) gear.push_back(v[j]);
  std::vector<Point> rest(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  rest.push_back(k.C);
  Polyline cut{std::vector<Point>(v.begin() + 1, v.begin() + static_cast<std::ptrdiff_t>(last) + 1)};
  return assemble(spec, k, Family::Gear, n, {Polygon(std::move(gear)), Polygon(std::move(rest))}, {cut});
}

Dissection cut_scissors(const TriangleSpec& spec) {
  spec.validate();
  require_identity(std::abs(spec.alpha - 30.0) <= kFamilyTol && std::abs(spec.beta - 20.0) <= kFamilyTol,
                   "(alpha, beta, gamma) = (30, 20, 130)");
  const Cake k = make_cake(spec);
  const double turn = 180.0 - spec.gamma();
  const Vec2 d1 = unit_dir(180.0 + spec.alpha);  // C -> A
  const Vec2 d2 = unit_dir(180.0 + spec.alpha + turn);
  const Vec2 d3 = unit_dir(180.0 + spec.alpha + 2 * turn);
  const auto end_height = [&](double s) { return (k.C + s * (d1 + d2 + d3)).y(); };

  // Height of M above AB decreases along s; bisect for the zero.
  const double b = (k.C - k.A).norm();
  double lo = 0.0, hi = b;
  if (!(end_height(lo) > 0 && end_height(hi) < 0)) throw RootFindError("no segment length puts M on AB");
  for (int it = 0; it < 200 && hi - lo > 1e-12 * spec.side_c; ++it) {
    const double mid = 0.5 * (lo + hi);
    (end_height(mid) > 0 ? lo : hi) = mid;
  }
  const double s = 0.5 * (lo + hi);
  const Point K = k.C + s * d1;
  const Point L = K + s * d2;
  Point M = L + s * d3;
  if (std::abs(M.y()) > k.len_tol || M.x() <= k.len_tol || M.x() >= spec.side_c - k.len_tol)
    throw RootFindError("M does not land inside AB");
  M.y() = 0.0;
  return assemble(spec, k, Family::Scissors, 0, {Polygon{k.A, M, L, K}, Polygon{k.B, k.C, K, L, M}},
                  {{{K, L, M}}});
}

Dissection construct(Family family, const TriangleSpec& spec, int n) {
  switch (family) {
    case Family::Incenter3: return cut_incenter3(spec);
    case Family::Median: return cut_median(spec);
    case Family::Alpha3Beta: return cut_alpha_3beta(spec);
    case Family::TwoBetaAcute: return cut_2beta_acute(spec);
    case Family::TwoBetaObtuse: return cut_2beta_obtuse(spec);
    case Family::Wheel: return cut_wheel(spec, n);
    case Family::Gear: return cut_gear(spec, n);
    case Family::Scissors: return cut_scissors(spec);
    case Family::StraightCut: break;
  }
  throw WrongFamilyError("straight cuts come from the search, not a construction");
}

}  // namespace nicecut
