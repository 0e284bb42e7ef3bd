#include "nicecut/angle_relations.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

namespace nicecut {

int IntegerRelation::max_abs() const { return std::max({std::abs(k), std::abs(l), std::abs(m)}); }

namespace {

IntegerRelation normalized(int k, int l, int m) {
  const int g = std::gcd(std::gcd(std::abs(k), std::abs(l)), std::abs(m));
  k /= g;
  l /= g;
  m /= g;
  const int lead = k != 0 ? k : (l != 0 ? l : m);
  if (lead < 0) {
    k = -k;
    l = -l;
    m = -m;
  }
  return {k, l, m};
}

}  // namespace

std::optional<IntegerRelation> find_integer_relation(AngleDeg alpha, AngleDeg beta, AngleDeg gamma,
                                                     int k_max, double tol) {
  if (!(alpha > 0) || !(beta > 0) || !(gamma > 0) || std::abs(alpha + beta + gamma - 180.0) > 1e-9)
    throw InvalidAngleError("angles must be positive and sum to 180 degrees");
  if (k_max < 1 || !(tol > 0)) throw InvalidAngleError("k_max must be >= 1 and tol > 0");

  std::optional<IntegerRelation> best;
  auto key = [](const IntegerRelation& r) { return std::make_tuple(r.max_abs(), r.k, r.l, r.m); };
  for (int k = -k_max; k <= k_max; ++k)
    for (int l = -k_max; l <= k_max; ++l)
      for (int m = -k_max; m <= k_max; ++m) {
        if (k == 0 && l == 0 && m == 0) continue;
        if (std::abs(k * alpha + l * beta + m * gamma) > tol) continue;
        // Only normalized triples compete; their multiples are the same relation.
        const IntegerRelation r = normalized(k, l, m);
        if (r != IntegerRelation{k, l, m}) continue;
        if (!best || key(r) < key(*best)) best = r;
      }
  return best;
}

std::optional<MultipleWitness> is_multiple(AngleDeg psi, AngleDeg phi, int k_max, int l_max, double tol) {
  if (phi == 0.0) throw ZeroPhiError("is_multiple needs a nonzero phi");
  if (k_max < 1 || l_max < 1) throw Error("is_multiple bounds must be >= 1");
  std::optional<MultipleWitness> best;
  auto key = [](const MultipleWitness& w) { return std::make_tuple(std::abs(w.k), std::abs(w.l), -w.k, -w.l); };
  for (int k = -k_max; k <= k_max; ++k)
    for (int l = -l_max; l <= l_max; ++l) {
      if (std::abs(psi - k * phi - l * 180.0) > tol) continue;
      const MultipleWitness w{k, l};
      if (!best || key(w) < key(*best)) best = w;
    }
  return best;
}

std::optional<RationalAngle> is_rational_angle(AngleDeg psi, int l_max, double tol) {
  for (int l = 1; l <= l_max; ++l) {
    const double x = psi * l / 180.0;
    const double r = std::round(x);
    if (std::abs(x - r) > tol * l) continue;
    const int k = static_cast<int>(r);
    const int g = std::gcd(std::abs(k), l);
    return RationalAngle{k / g, l / g};
  }
  return std::nullopt;
}

}  // namespace nicecut
