#pragma once

// Shared fixtures: seeded random cakes and polygons, and independent oracles
// that do not go through the library.

#include "nicecut/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace testing_support {

using nicecut::Point;
using nicecut::Polygon;
using nicecut::TriangleSpec;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// Scalene cake with every angle at least `margin` degrees and pairwise gaps of at least `margin`.
inline TriangleSpec random_scalene(double margin = 5.0) {
  for (;;) {
    const double a = uniform(margin, 180.0 - 2 * margin);
    const double b = uniform(margin, 180.0 - a - margin);
    const double g = 180.0 - a - b;
    if (g < margin || std::abs(a - b) < margin || std::abs(b - g) < margin || std::abs(a - g) < margin) continue;
    return {a, b, uniform(0.5, 3.0)};
  }
}

/// Star-shaped polygon around `center` with n vertices at increasing angles.
/// Angular gaps stay below a half turn so `center` is in the kernel.
inline Polygon random_star(int n, Point center = Point::Zero()) {
  std::vector<double> ang;
  for (;;) {
    ang.clear();
    for (int i = 0; i < n; ++i) ang.push_back(uniform(0.0, 2 * nicecut::kPi));
    std::sort(ang.begin(), ang.end());
    double gap = ang.front() + 2 * nicecut::kPi - ang.back();
    for (int i = 1; i < n; ++i) gap = std::max(gap, ang[i] - ang[i - 1]);
    if (gap < 0.9 * nicecut::kPi) break;
  }
  std::vector<Point> v;
  for (double a : ang) v.push_back(center + uniform(0.5, 2.0) * Point(std::cos(a), std::sin(a)));
  return Polygon(std::move(v));
}

/// Shoelace written out independently of the library.
inline double shoelace(const std::vector<Point>& v) {
  double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    s += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * s;
}

/// Angle at vertex `b` between rays b->a and b->c, in degrees.
inline double angle_at(const Point& a, const Point& b, const Point& c) {
  const Point u = a - b, w = c - b;
  return std::acos(std::clamp(u.dot(w) / (u.norm() * w.norm()), -1.0, 1.0)) * 180.0 / nicecut::kPi;
}

inline double sind(double deg) { return std::sin(deg * nicecut::kPi / 180.0); }
inline double cosd(double deg) { return std::cos(deg * nicecut::kPi / 180.0); }

}  // namespace testing_support
