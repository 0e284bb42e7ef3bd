#include "nicecut/cut_search.hpp"

#include "nicecut/verifier.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>

namespace nicecut {

namespace {

/// Triangle with its vertex parameters 0, c, c + a and perimeter.
struct Frame {
  Polygon tri;
  std::array<double, 4> vp{};
  double per = 0.0;

  explicit Frame(const Polygon& t) : tri(t) {
    const auto e = edge_lengths(t);
    vp = {0.0, e[0], e[0] + e[1], e[0] + e[1] + e[2]};
    per = vp[3];
  }

  double snap() const { return 1e-12 * per; }
};

struct Loc {
  double s = 0.0;
  int vertex = -1;
  int side = -1;

  bool on_side(int i) const { return vertex >= 0 ? (i == vertex || i == (vertex + 2) % 3) : i == side; }
};

double wrap_param(double s, double per) {
  s = std::fmod(s, per);
  if (s < 0) s += per;
  return s;
}

Loc locate(const Frame& f, double s) {
  s = wrap_param(s, f.per);
  for (int v = 0; v < 3; ++v)
    if (std::abs(s - f.vp[v]) <= f.snap() || (v == 0 && f.per - s <= f.snap())) return {f.vp[v], v, -1};
  int side = 0;
  while (side < 2 && s > f.vp[side + 1]) ++side;
  return {s, -1, side};
}

Point point_at(const Frame& f, const Loc& l) {
  if (l.vertex >= 0) return f.tri[l.vertex];
  const Point& p = f.tri[l.side];
  const Point& q = f.tri.at_cyclic(l.side + 1);
  const double len = f.vp[l.side + 1] - f.vp[l.side];
  return p + (l.s - f.vp[l.side]) / len * (q - p);
}

std::optional<std::pair<Polygon, Polygon>> split(const Frame& f, double s, double t) {
  Loc a = locate(f, s);
  Loc b = locate(f, t);
  for (int i = 0; i < 3; ++i)
    if (a.on_side(i) && b.on_side(i)) return std::nullopt;
  if (a.s > b.s) std::swap(a, b);
  const Point pa = point_at(f, a);
  const Point pb = point_at(f, b);

  std::vector<Point> first{pa};
  for (int v = 0; v < 3; ++v)
    if (f.vp[v] > a.s && f.vp[v] < b.s) first.push_back(f.tri[v]);
  first.push_back(pb);

  std::vector<Point> second{pb};
  for (int v = 0; v < 3; ++v)
    if (f.vp[v] > b.s) second.push_back(f.tri[v]);
  for (int v = 0; v < 3; ++v)
    if (f.vp[v] < a.s) second.push_back(f.tri[v]);
  second.push_back(pa);
  return std::make_pair(Polygon(std::move(first)), Polygon(std::move(second)));
}

// ---------------------------------------------------------------------------
// Alignment residuals

/// Pairs p[i] with q[i + shift], fits the best rotation by least squares and
/// appends the per-vertex mismatch. Returns the largest mismatch.
double aligned_residual(const Polygon& p, const Polygon& q, std::size_t shift, std::vector<double>* out) {
  const std::size_t n = p.size();
  Point pc = Point::Zero(), qc = Point::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    pc += p[i];
    qc += q[(i + shift) % n];
  }
  pc /= double(n);
  qc /= double(n);
  double sc = 0.0, sd = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 u = p[i] - pc;
    const Vec2 v = q[(i + shift) % n] - qc;
    sd += u.dot(v);
    sc += cross(u, v);
  }
  const double th = std::atan2(sc, sd);
  const Eigen::Matrix2d r = Eigen::Rotation2Dd(th).toRotationMatrix();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 d = r * (p[i] - pc) + qc - q[(i + shift) % n];
    worst = std::max(worst, d.norm());
    if (out) {
      out->push_back(d.x());
      out->push_back(d.y());
    }
  }
  return worst;
}

std::pair<std::size_t, double> best_shift(const Polygon& p, const Polygon& q) {
  std::size_t best = 0;
  double val = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double r = aligned_residual(p, q, k, nullptr);
    if (r < val) {
      val = r;
      best = k;
    }
  }
  return {best, val};
}

// ---------------------------------------------------------------------------
// Grid tables

struct Chord {
  double s = 0.0, t = 0.0;
  bool s_vertex = false, t_vertex = false;
  Polygon p1, p2;  // cake pieces
  Polygon q1, q2;  // mirrored into the box
  double area1 = 0.0;
  std::vector<double> edges1, edges2;
};

std::vector<double> sorted_edges(const Polygon& p) {
  auto e = edge_lengths(p);
  std::sort(e.begin(), e.end());
  return e;
}

bool edges_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

struct Hit {
  std::size_t cake = 0, box = 0;
  bool crossed = false;
  double residual = 0.0;
};

struct Seed {
  std::array<double, 4> x{};
  std::array<bool, 4> anchored{};
  bool crossed = false;
  double residual = 0.0;
};

double circ_dist(double a, double b, double per) {
  const double d = std::abs(a - b);
  return std::min(d, per - d);
}

double param_dist(const std::array<double, 4>& a, const std::array<double, 4>& b, double per) {
  double d = 0.0;
  for (int k = 0; k < 4; ++k) d = std::max(d, circ_dist(a[k], b[k], per));
  return d;
}

// ---------------------------------------------------------------------------
// Refinement

/// Matched pieces at parameters x with fixed vertex pairing.
struct Objective {
  const Frame& frame;
  double axis = 0.0;
  bool crossed = false;
  std::size_t shift1 = 0, shift2 = 0;

  std::optional<std::array<Polygon, 4>> pieces(const std::array<double, 4>& x) const {
    auto cake = split(frame, x[0], x[1]);
    auto box = split(frame, x[2], x[3]);
    if (!cake || !box) return std::nullopt;
    Polygon q1 = mirror_polygon(box->first, axis);
    Polygon q2 = mirror_polygon(box->second, axis);
    if (crossed) std::swap(q1, q2);
    if (cake->first.size() != q1.size() || cake->second.size() != q2.size()) return std::nullopt;
    return std::array<Polygon, 4>{cake->first, q1, cake->second, q2};
  }

  bool residuals(const std::array<double, 4>& x, std::vector<double>& r) const {
    r.clear();
    const auto p = pieces(x);
    if (!p) return false;
    aligned_residual((*p)[0], (*p)[1], shift1, &r);
    aligned_residual((*p)[2], (*p)[3], shift2, &r);
    return true;
  }

  double cost(const std::array<double, 4>& x) const {
    std::vector<double> r;
    if (!residuals(x, r)) return std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (double v : r) s += v * v;
    return s;
  }
};

struct Bounds {
  std::array<double, 4> lo{}, hi{};
  std::array<bool, 4> free{};
};

Bounds free_intervals(const Frame& f, const Seed& seed) {
  Bounds b;
  const double margin = 1e-9 * f.per;
  for (int k = 0; k < 4; ++k) {
    b.free[k] = !seed.anchored[k];
    b.lo[k] = b.hi[k] = seed.x[k];
    if (!b.free[k]) continue;
    const Loc l = locate(f, seed.x[k]);
    b.lo[k] = f.vp[l.side] + margin;
    b.hi[k] = f.vp[l.side + 1] - margin;
  }
  return b;
}

std::array<double, 4> golden_sweeps(const Objective& obj, const Bounds& b, std::array<double, 4> x, double h) {
  constexpr double g = 0.6180339887498949;
  for (int sweep = 0; sweep < 3; ++sweep) {
    for (int k = 0; k < 4; ++k) {
      if (!b.free[k]) continue;
      double lo = std::max(b.lo[k], x[k] - h);
      double hi = std::min(b.hi[k], x[k] + h);
      if (!(hi > lo)) continue;
      auto at = [&](double v) {
        auto y = x;
        y[k] = v;
        return obj.cost(y);
      };
      double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
      double fc = at(c), fd = at(d);
      for (int it = 0; it < 60; ++it) {
        if (fc < fd) {
          hi = d;
          d = c;
          fd = fc;
          c = hi - g * (hi - lo);
          fc = at(c);
        } else {
          lo = c;
          c = d;
          fc = fd;
          d = lo + g * (hi - lo);
          fd = at(d);
        }
      }
      const double v = 0.5 * (lo + hi);
      auto y = x;
      y[k] = v;
      if (obj.cost(y) <= obj.cost(x)) x = y;
    }
  }
  return x;
}

std::array<double, 4> gauss_newton(const Objective& obj, const Bounds& b, std::array<double, 4> x, double per) {
  std::vector<int> idx;
  for (int k = 0; k < 4; ++k)
    if (b.free[k]) idx.push_back(k);
  if (idx.empty()) return x;
  const double eta = 1e-7 * per;
  auto clamp = [&](std::array<double, 4> y) {
    for (int k : idx) y[k] = std::clamp(y[k], b.lo[k], b.hi[k]);
    return y;
  };

  std::vector<double> r0, rp, rm;
  double cost = obj.cost(x);
  for (int it = 0; it < 50 && cost > 0.0; ++it) {
    if (!obj.residuals(x, r0)) break;
    Eigen::MatrixXd jac(r0.size(), idx.size());
    bool ok = true;
    for (std::size_t c = 0; c < idx.size() && ok; ++c) {
      auto xp = x, xm = x;
      xp[idx[c]] += eta;
      xm[idx[c]] -= eta;
      xp = clamp(xp);
      xm = clamp(xm);
      const double span = xp[idx[c]] - xm[idx[c]];
      ok = span > 0 && obj.residuals(xp, rp) && obj.residuals(xm, rm) && rp.size() == r0.size() &&
           rm.size() == r0.size();
      if (!ok) break;
      for (std::size_t i = 0; i < r0.size(); ++i) jac(i, c) = (rp[i] - rm[i]) / span;
    }
    if (!ok) break;
    const Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(r0.data(), r0.size());
    const Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(rhs);

    double lambda = 1.0;
    bool improved = false;
    for (int bt = 0; bt < 30; ++bt, lambda *= 0.5) {
      auto y = x;
      for (std::size_t c = 0; c < idx.size(); ++c) y[idx[c]] += lambda * step(c);
      y = clamp(y);
      const double cy = obj.cost(y);
      if (cy < cost) {
        x = y;
        cost = cy;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return x;
}

std::optional<Dissection> assemble_at(const TriangleSpec& spec, const CutCandidate& c, double len_tol) {
  const Polygon tri = construct_triangle(spec);
  const Frame f(tri);
  const auto cake = split(f, c.s, c.t);
  const auto box = split(f, c.s_box, c.t_box);
  if (!cake || !box) return std::nullopt;
  const double axis = spec.side_c / 2.0;
  std::vector<Polygon> pieces{cake->first, cake->second};
  std::vector<Polygon> box_pieces{mirror_polygon(box->first, axis), mirror_polygon(box->second, axis)};
  auto motions = recover_motions(pieces, box_pieces, len_tol);
  if (!motions) return std::nullopt;
  Dissection d;
  d.spec = spec;
  d.cake = tri;
  d.box = mirror_polygon(tri, axis);
  d.pieces = std::move(pieces);
  d.motions = std::move(*motions);
  d.cuts = {Polyline{{boundary_point(tri, c.s), boundary_point(tri, c.t)}}};
  d.family = Family::StraightCut;
  return d;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, unsigned(std::max<std::size_t>(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace

Point boundary_point(const Polygon& tri, double s) {
  const Frame f(tri);
  return point_at(f, locate(f, s));
}

std::optional<std::pair<Polygon, Polygon>> split_by_params(const Polygon& tri, double s, double t) {
  if (tri.size() != 3) throw Error("split_by_params expects a triangle");
  return split(Frame(tri), s, t);
}

std::optional<Dissection> assemble_candidate(const TriangleSpec& spec, const CutCandidate& c, double rel_tol) {
  const Polygon tri = construct_triangle(spec);
  return assemble_at(spec, c, rel_tol * diameter(tri));
}

std::vector<CutCandidate> search_straight_cuts(const TriangleSpec& spec, const SearchOptions& options) {
  spec.validate();
  if (!spec.is_scalene()) throw DegenerateSpecError("search needs a scalene cake");
  if (options.grid_n < 8) throw Error("grid_n must be at least 8");

  const Polygon tri = construct_triangle(spec);
  const Frame frame(tri);
  const double per = frame.per;
  const double axis = spec.side_c / 2.0;
  const double h = per / options.grid_n;
  // Nearest grid points sit within h/2 of a true cut on every endpoint, so a
  // true cut shows up as a grid hit at about h; the extra margin absorbs the
  // least-squares fit not being the max-norm optimum.
  const double grid_tol = 2.0 * h;
  const double total_area = signed_area(tri);
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());

  // Grid: uniform parameters plus the exact vertices.
  std::vector<double> grid;
  for (int k = 0; k < options.grid_n; ++k) grid.push_back(k * h);
  for (int v = 0; v < 3; ++v) grid.push_back(frame.vp[v]);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(), [&](double a, double b) { return b - a <= frame.snap(); }),
             grid.end());

  std::vector<Chord> chords;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      auto parts = split(frame, grid[i], grid[j]);
      if (!parts) continue;
      Chord c;
      c.s = grid[i];
      c.t = grid[j];
      c.s_vertex = locate(frame, c.s).vertex >= 0;
      c.t_vertex = locate(frame, c.t).vertex >= 0;
      c.p1 = parts->first;
      c.p2 = parts->second;
      c.q1 = mirror_polygon(c.p1, axis);
      c.q2 = mirror_polygon(c.p2, axis);
      c.area1 = signed_area(c.p1);
      c.edges1 = sorted_edges(c.p1);
      c.edges2 = sorted_edges(c.p2);
      chords.push_back(std::move(c));
    }
  }

  std::vector<std::size_t> by_area(chords.size());
  std::iota(by_area.begin(), by_area.end(), 0);
  std::sort(by_area.begin(), by_area.end(),
            [&](std::size_t a, std::size_t b) { return chords[a].area1 < chords[b].area1; });
  std::vector<double> sorted_area;
  for (auto k : by_area) sorted_area.push_back(chords[k].area1);

  // Vertex mismatches of at most grid_tol move an area by at most
  // grid_tol * perimeter plus a second-order term per vertex.
  auto band = [&](const Polygon& p, const Polygon& q) {
    return grid_tol * (perimeter(p) + perimeter(q)) + double(p.size() + q.size()) * grid_tol * grid_tol;
  };

  std::mutex mu;
  std::vector<Hit> hits;
  std::size_t done = 0;
  auto match = [&](const Polygon& p, const Polygon& q, const std::vector<double>& ep,
                   const std::vector<double>& eq) {
    if (p.size() != q.size()) return std::optional<double>{};
    if (options.edge_prefilter && !edges_close(ep, eq, 2.0 * grid_tol)) return std::optional<double>{};
    if (!find_motion(p, q, grid_tol)) return std::optional<double>{};
    return std::optional<double>{best_shift(p, q).second};
  };

  parallel_for(chords.size(), threads, [&](std::size_t i) {
    const Chord& a = chords[i];
    std::vector<Hit> local;
    for (int crossed = 0; crossed < 2; ++crossed) {
      std::size_t lo = 0, hi = chords.size();
      if (options.area_prefilter) {
        // Largest box chords still compatible with the band for piece 1.
        const double target = crossed ? total_area - a.area1 : a.area1;
        const double w = band(a.p1, a.p1) + band(a.p2, a.p2);
        lo = std::lower_bound(sorted_area.begin(), sorted_area.end(), target - w) - sorted_area.begin();
        hi = std::upper_bound(sorted_area.begin(), sorted_area.end(), target + w) - sorted_area.begin();
      }
      for (std::size_t k = lo; k < hi; ++k) {
        const std::size_t j = options.area_prefilter ? by_area[k] : k;
        const Chord& b = chords[j];
        const Polygon& m1 = crossed ? b.q2 : b.q1;
        const Polygon& m2 = crossed ? b.q1 : b.q2;
        const auto& e1 = crossed ? b.edges2 : b.edges1;
        const auto& e2 = crossed ? b.edges1 : b.edges2;
        const auto r1 = match(a.p1, m1, a.edges1, e1);
        if (!r1) continue;
        const auto r2 = match(a.p2, m2, a.edges2, e2);
        if (!r2) continue;
        local.push_back({i, j, crossed == 1, std::max(*r1, *r2)});
      }
    }
    std::lock_guard lock(mu);
    hits.insert(hits.end(), local.begin(), local.end());
    ++done;
    if (options.progress) options.progress(done, chords.size());
  });

  std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) {
    return std::tie(x.residual, x.cake, x.box, x.crossed) < std::tie(y.residual, y.cake, y.box, y.crossed);
  });

  // One analytic cut lights up a cluster of neighbouring grid hits.
  std::vector<Seed> seeds;
  for (const Hit& hit : hits) {
    const Chord& a = chords[hit.cake];
    const Chord& b = chords[hit.box];
    Seed s;
    s.x = {a.s, a.t, b.s, b.t};
    s.anchored = {a.s_vertex, a.t_vertex, b.s_vertex, b.t_vertex};
    s.crossed = hit.crossed;
    s.residual = hit.residual;
    const bool near = std::any_of(seeds.begin(), seeds.end(), [&](const Seed& o) {
      return o.crossed == s.crossed && param_dist(o.x, s.x, per) <= 2.0 * h;
    });
    if (!near) seeds.push_back(s);
  }

  const double len_tol = options.rel_tol * diameter(tri);
  // Without refinement the pieces only match to grid accuracy.
  const double check_rel = options.refine ? options.rel_tol
                                          : std::max(options.rel_tol, 2.0 * grid_tol * per / total_area);
  const double check_len = options.refine ? len_tol : grid_tol;

  std::vector<std::optional<CutCandidate>> refined(seeds.size());
  parallel_for(seeds.size(), threads, [&](std::size_t k) {
    const Seed& seed = seeds[k];
    std::array<double, 4> x = seed.x;
    double residual = seed.residual;
    if (options.refine) {
      Objective obj{frame, axis, seed.crossed};
      const auto p = obj.pieces(x);
      if (!p) return;
      obj.shift1 = best_shift((*p)[0], (*p)[1]).first;
      obj.shift2 = best_shift((*p)[2], (*p)[3]).first;
      const Bounds b = free_intervals(frame, seed);
      for (int i = 0; i < 4; ++i) x[i] = std::clamp(x[i], b.lo[i], b.hi[i]);
      x = golden_sweeps(obj, b, x, h);
      x = gauss_newton(obj, b, x, per);
      const auto q = obj.pieces(x);
      if (!q) return;
      residual = std::max(aligned_residual((*q)[0], (*q)[1], obj.shift1, nullptr),
                          aligned_residual((*q)[2], (*q)[3], obj.shift2, nullptr));
    }
    CutCandidate c{std::min(x[0], x[1]), std::max(x[0], x[1]), std::min(x[2], x[3]), std::max(x[2], x[3]),
                   seed.crossed, residual};
    const auto d = assemble_at(spec, c, check_len);
    if (!d || !verify_nice(*d, check_rel).passed) return;
    refined[k] = c;
  });

  std::vector<CutCandidate> found;
  for (auto& c : refined)
    if (c) found.push_back(*c);
  std::stable_sort(found.begin(), found.end(),
                   [](const CutCandidate& x, const CutCandidate& y) { return x.residual < y.residual; });
  std::vector<CutCandidate> out;
  for (const auto& c : found) {
    const std::array<double, 4> xc{c.s, c.t, c.s_box, c.t_box};
    const bool dup = std::any_of(out.begin(), out.end(), [&](const CutCandidate& o) {
      return param_dist({o.s, o.t, o.s_box, o.t_box}, xc, per) < h;
    });
    if (!dup) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const CutCandidate& x, const CutCandidate& y) {
    return std::tie(x.s, x.t, x.s_box, x.t_box, x.crossed) < std::tie(y.s, y.t, y.s_box, y.t_box, y.crossed);
  });
  return out;
}

}  // namespace nicecut
