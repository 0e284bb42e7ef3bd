#pragma once

// Brute-force search for nice two-piece cuts along a single straight chord.
//
// A chord is named by two perimeter parameters: arc length along the cake
// boundary measured counterclockwise from A (side AB, then BC, then CA).
// Box chords are cake chords reflected into the box. A grid hit is a pair of
// chords whose pieces match up to a motion within the grid resolution; hits
// are optionally refined and every reported candidate is re-verified.
//
// An empty result means "no straight nice cut at this resolution", never a
// proof that no such cut exists.

#include "nicecut/dissection.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace nicecut {

inline constexpr const char* kSearchResolutionCaveat =
    "an empty result means no straight nice cut at this resolution, not a proof of impossibility";

/// Point of the triangle boundary at arc length `s` (wrapped into [0, perimeter)).
Point boundary_point(const Polygon& tri, double s);

/// Pieces cut from the triangle by the chord between boundary parameters s
/// and t. Empty when the chord is degenerate or runs along a side.
std::optional<std::pair<Polygon, Polygon>> split_by_params(const Polygon& tri, double s, double t);

struct CutCandidate {
  double s = 0, t = 0;          // cake chord, s < t
  double s_box = 0, t_box = 0;  // box chord in cake parameters, s_box < t_box
  /// Cake piece 0 goes to box piece 1 (and 1 to 0) instead of 0 to 0.
  bool crossed = false;
  /// Largest vertex mismatch after aligning matched pieces.
  double residual = 0;
};

struct SearchOptions {
  int grid_n = 128;
  /// Relative tolerance for the final verify_nice.
  double rel_tol = 1e-9;
  bool refine = true;
  bool area_prefilter = true;
  bool edge_prefilter = true;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Called with (cake chords scanned, total cake chords).
  std::function<void(std::size_t, std::size_t)> progress;
};

std::vector<CutCandidate> search_straight_cuts(const TriangleSpec& spec, const SearchOptions& options);

inline std::vector<CutCandidate> search_straight_cuts(const TriangleSpec& spec, int grid_n, double rel_tol,
                                                      bool refine) {
  SearchOptions o;
  o.grid_n = grid_n;
  o.rel_tol = rel_tol;
  o.refine = refine;
  return search_straight_cuts(spec, o);
}

/// Dissection realized by a candidate, with recovered motions; empty if the
/// pieces cannot be matched at the given tolerance.
std::optional<Dissection> assemble_candidate(const TriangleSpec& spec, const CutCandidate& c,
                                             double rel_tol = 1e-9);

}  // namespace nicecut
