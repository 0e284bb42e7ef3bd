#include "nicecut/invariants.hpp"

#include <memory>

namespace nicecut {

DirectedLineFunctional line_table_functional(std::vector<std::pair<DirectedLine, double>> table,
                                             double len_tol) {
  auto shared = std::make_shared<const std::vector<std::pair<DirectedLine, double>>>(std::move(table));
  return DirectedLineFunctional([shared, len_tol](const DirectedLine& l) {
    for (const auto& [line, value] : *shared) {
      if (same_directed_line(l, line, len_tol)) return value;
      if (same_directed_line(l.reversed(), line, len_tol)) return -value;
    }
    return 0.0;
  });
}

DirectedLineFunctional direction_class_functional(const Vec2& dir, double cross_tol) {
  const Vec2 u = dir.normalized();
  return DirectedLineFunctional([u, cross_tol](const DirectedLine& l) {
    if (std::abs(cross(l.direction, u)) > cross_tol) return 0.0;
    return l.direction.dot(u) > 0 ? 1.0 : -1.0;
  });
}

double j_classic(const Polygon& poly, const DirectedLine& f, double cross_tol) {
  double sum = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2 side = poly.at_cyclic(i + 1) - poly[i];
    const double len = side.norm();
    if (len == 0.0) continue;
    const Vec2 u = side / len;
    if (std::abs(cross(u, f.direction)) > cross_tol) continue;
    sum += u.dot(f.direction) > 0 ? len : -len;
  }
  return sum;
}

double j_general(const Polygon& poly, const DirectedLineFunctional& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly.at_cyclic(i + 1);
    const double len = (b - a).norm();
    if (len == 0.0) continue;
    sum += f(DirectedLine::through(a, b)) * len;
  }
  return sum;
}

DirectedLineFunctional orbit_functional(const RigidMotion& r, const DirectedLine& ab, int k_max,
                                        double len_tol) {
  if (r.is_translation()) throw Error("orbit functional needs a rotation");
  if (k_max < 0) throw Error("orbit functional needs k_max >= 0");

  // R^k(AB) for k = -k_max..k_max.
  std::vector<DirectedLine> forward;
  forward.reserve(static_cast<std::size_t>(2 * k_max + 1));
  const RigidMotion inv = r.inverse();
  std::vector<DirectedLine> neg;
  DirectedLine cur = ab;
  for (int k = 1; k <= k_max; ++k) neg.push_back(cur = inv.apply(cur));
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) forward.push_back(*it);
  forward.push_back(ab);
  cur = ab;
  for (int k = 1; k <= k_max; ++k) forward.push_back(cur = r.apply(cur));

  for (const auto& x : forward)
    for (const auto& y : forward)
      if (same_directed_line(x, y.reversed(), len_tol))
        throw IllDefinedFunctionalError(
            "rotation orbit of the line meets its own reversal; the functional is not well defined");

  std::vector<std::pair<DirectedLine, double>> table;
  table.reserve(forward.size());
  for (const auto& l : forward) table.emplace_back(l, 1.0);
  return line_table_functional(std::move(table), len_tol);
}

}  // namespace nicecut
