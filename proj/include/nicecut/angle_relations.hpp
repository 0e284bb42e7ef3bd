#pragma once

// Bounded searches for integer relations among angles.

#include "nicecut/geometry.hpp"

#include <optional>

namespace nicecut {

class InvalidAngleError : public Error {
 public:
  using Error::Error;
};

class ZeroPhiError : public Error {
 public:
  using Error::Error;
};

/// k*alpha + l*beta + m*gamma = 0, normalized: gcd 1, first nonzero coefficient positive.
struct IntegerRelation {
  int k = 0;
  int l = 0;
  int m = 0;

  int max_abs() const;
  double residual(AngleDeg alpha, AngleDeg beta, AngleDeg gamma) const {
    return k * alpha + l * beta + m * gamma;
  }
  bool operator==(const IntegerRelation&) const = default;
};

/// psi = k*phi + l*180.
struct MultipleWitness {
  int k = 0;
  int l = 0;
  bool operator==(const MultipleWitness&) const = default;
};

/// psi = k*180/l in lowest terms.
struct RationalAngle {
  int k = 0;
  int l = 1;
  bool operator==(const RationalAngle&) const = default;
};

inline constexpr int kDefaultRelationKMax = 10;
inline constexpr double kDefaultRelationTol = 1e-6;

/// Exhaustive scan over |k|,|l|,|m| <= k_max. Among relations with residual
/// <= tol returns the one with the smallest max coefficient, then the
/// lexicographically smallest (k, l, m).
std::optional<IntegerRelation> find_integer_relation(AngleDeg alpha, AngleDeg beta, AngleDeg gamma,
                                                     int k_max = kDefaultRelationKMax,
                                                     double tol = kDefaultRelationTol);

/// Smallest (|k|, |l|) with |psi - k*phi - l*180| <= tol.
std::optional<MultipleWitness> is_multiple(AngleDeg psi, AngleDeg phi, int k_max, int l_max,
                                           double tol = kDefaultRelationTol);

/// Smallest denominator l <= l_max with psi*l/180 within tol*l of an integer.
std::optional<RationalAngle> is_rational_angle(AngleDeg psi, int l_max, double tol = 1e-9);

}  // namespace nicecut
