// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "nicecut/certificate.hpp"
#include "nicecut/constructions.hpp"
#include "nicecut/cut_search.hpp"
#include "nicecut/invariants.hpp"
#include "nicecut/verifier.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace nicecut;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

struct Built {
  std::string label;
  Dissection d;
  double seconds = 0;
};

std::string label_of(const std::string& family, const TriangleSpec& s) {
  std::ostringstream ss;
  ss.precision(6);
  ss << family << " (" << s.alpha << ", " << s.beta << ", " << s.gamma() << ")";
  return ss.str();
}

/// Random beta avoiding isosceles shapes for a family alpha = ratio * beta.
double family_beta(double lo, double hi, double ratio) {
  for (;;) {
    const double b = uniform(lo, hi);
    const TriangleSpec s{ratio * b, b, 1};
    if (s.gamma() > 2 && s.is_scalene(2.0)) return b;
  }
}

std::vector<Built> build_all(Outcome& o) {
  std::vector<std::pair<std::string, std::function<Dissection()>>> jobs;
  for (int i = 0; i < 20; ++i) {
    const TriangleSpec s = random_scalene(2.0);
    jobs.emplace_back(label_of("incenter3", s), [s] { return cut_incenter3(s); });
  }
  for (int i = 0; i < 10; ++i) {
    double b;
    do b = uniform(5, 85);
    while (std::abs(b - 45) < 2);
    const TriangleSpec s{90, b, uniform(0.5, 3)};
    jobs.emplace_back(label_of("median", s), [s] { return cut_median(s); });
  }
  for (int i = 0; i < 10; ++i) {
    const double b = family_beta(3, 44, 3);
    const TriangleSpec s{3 * b, b, uniform(0.5, 3)};
    jobs.emplace_back(label_of("alpha3beta", s), [s] { return cut_alpha_3beta(s); });
  }
  for (int i = 0; i < 10; ++i) {
    const double b = family_beta(3, 44.5, 2);
    const TriangleSpec s{2 * b, b, uniform(0.5, 3)};
    jobs.emplace_back(label_of("twobeta_acute", s), [s] { return cut_2beta_acute(s); });
  }
  for (int i = 0; i < 10; ++i) {
    const double b = family_beta(45.5, 59, 2);
    const TriangleSpec s{2 * b, b, uniform(0.5, 3)};
    jobs.emplace_back(label_of("twobeta_obtuse", s), [s] { return cut_2beta_obtuse(s); });
  }
  const std::array<std::pair<double, double>, 6> wg{{{50, 25}, {30, 20}, {40, 30}, {50, 40}, {60, 50}, {70, 60}}};
  for (int n = 1; n <= 6; ++n) {
    const TriangleSpec s{wg[n - 1].first, wg[n - 1].second, 1};
    jobs.emplace_back(label_of("wheel(" + std::to_string(n) + ")", s), [s, n] { return cut_wheel(s, n); });
    jobs.emplace_back(label_of("gear(" + std::to_string(n) + ")", s), [s, n] { return cut_gear(s, n); });
  }
  const TriangleSpec sc{30, 20, 1};
  jobs.emplace_back(label_of("scissors", sc), [sc] { return cut_scissors(sc); });

  std::vector<Built> out;
  for (auto& [label, job] : jobs) {
    try {
      const auto t0 = Clock::now();
      Dissection d = job();
      out.push_back({label, std::move(d), seconds_since(t0)});
    } catch (const std::exception& e) {
      o.fail(label + " threw: " + e.what());
    }
  }
  return out;
}

void report(int k, const std::string& name, const Outcome& o, double secs) {
  std::cout << "criterion " << k << " [" << name << "]: " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail.str()
            << (o.detail.str().empty() ? "" : "; ") << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s)" << std::endl;
  std::cout.unsetf(std::ios::fixed);
}

// ---------------------------------------------------------------------------

Outcome soundness(const std::vector<Built>& all) {
  Outcome o;
  double worst_defect = 0, worst_overlap = 0, slowest = 0;
  for (const auto& b : all) {
    const auto t0 = Clock::now();
    const NiceReport r = verify_nice(b.d);
    const double secs = b.seconds + seconds_since(t0);
    const double area = signed_area(b.d.cake);
    worst_defect = std::max(worst_defect, std::abs(r.area_defect) / area);
    worst_overlap = std::max(worst_overlap, r.max_overlap_area / area);
    slowest = std::max(slowest, secs);
    if (!r.passed) o.fail(b.label + " failed verify_nice");
    if (secs >= 1.0) o.fail(b.label + " took over 1 s");
  }
  if (worst_defect > 1e-9 || worst_overlap > 1e-9) o.fail("defect or overlap above 1e-9 of the area");
  o.detail << (o.detail.str().empty() ? "" : "; ") << all.size() << " dissections, max defect/area "
           << worst_defect << ", max overlap/area " << worst_overlap << ", slowest " << slowest << " s";
  return o;
}

Outcome relation_witness(const std::vector<Built>& all) {
  Outcome o;
  int checked = 0, worst = 0;
  for (const auto& b : all) {
    if (b.d.pieces.size() != 2) continue;
    ++checked;
    const auto r = theorem1_check(b.d, kDefaultRelationKMax, 1e-6);
    if (!r) {
      o.fail(b.label + ": no relation");
      continue;
    }
    worst = std::max(worst, r->max_abs());
    if (r->max_abs() > 5) o.fail(b.label + ": relation coefficient above 5");
    if (b.d.spec.alpha == 30 && b.d.spec.beta == 20 && (b.d.family == Family::Wheel || b.d.family == Family::Gear) &&
        !(*r == IntegerRelation{2, -3, 0}))
      o.fail(b.label + ": expected (2, -3, 0)");
  }
  o.detail << checked << " two-piece dissections, largest coefficient " << worst
           << ", wheel/gear (30, 20) give (2, -3, 0)";
  return o;
}

Outcome additivity() {
  Outcome o;
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const Dissection d = cut_incenter3(random_scalene(2.0));
    const double per = perimeter(d.cake);
    for (int k = 0; k < 3; ++k) {
      const DirectedLine f = DirectedLine::through(d.cake[k], d.cake.at_cyclic(k + 1));
      double sum = 0;
      for (const auto& p : d.pieces) sum += j_classic(p, f);
      const double err = std::abs(j_classic(d.cake, f) - sum) / per;
      worst = std::max(worst, err);
    }
  }
  if (worst > 1e-9) o.fail("additivity violated");
  o.detail << "300 checks, max |J(cake) - sum J(pieces)| / perimeter = " << worst;
  return o;
}

Outcome translation_obstruction() {
  Outcome o;
  int canonical_separated = 0;
  for (int i = 0; i < 100; ++i) {
    const TriangleSpec s = random_scalene(2.0);
    const Polygon cake = construct_triangle(s);
    const DirectedLine ab = DirectedLine::through(cake[0], cake[1]);
    const double jc = j_classic(cake, ab);
    if (std::abs(jc - s.side_c) > 1e-9) o.fail("J_AB(cake) differs from |AB|");

    // Mirror image across a generic line through the origin.
    const Vec2 n = unit_dir(uniform(5, 85));
    std::vector<Point> v;
    for (int k = 2; k >= 0; --k) v.push_back(cake[k] - 2.0 * n.dot(cake[k]) * n);
    const double jb = j_classic(Polygon(v), ab);
    const bool in_set = std::abs(jb) <= 1e-9 || std::abs(jb + s.side_c) <= 1e-9;
    if (!in_set) o.fail("J_AB(box) outside {0, -|AB|}");
    if (std::abs(jc - jb) < s.side_c - 1e-9) o.fail("J_AB values closer than |AB|");

    // Canonical box: A'B' lies along AB, so the separation shows up on another side.
    const Polygon box = mirror_polygon(cake, s.side_c / 2);
    const auto e = edge_lengths(cake);
    bool separated = false;
    for (int k = 0; k < 3; ++k) {
      const DirectedLine f = DirectedLine::through(cake[k], cake.at_cyclic(k + 1));
      separated |= std::abs(j_classic(cake, f) - j_classic(box, f)) >= e[k] - 1e-9;
    }
    canonical_separated += separated;
  }
  if (canonical_separated != 100) o.fail("canonical box not separated on some side");
  o.detail << "100 cakes; generic mirror box has J_AB in {0, -|AB|}; canonical box separated on some side in "
           << canonical_separated << "/100";
  return o;
}

Outcome wheel_angles() {
  Outcome o;
  const Dissection d = cut_wheel({30, 20, 1}, 2);
  // The wheel piece is A B V4 V3 V2 V1; the complement is a hexagon too.
  const Polygon* hex = nullptr;
  for (const auto& p : d.pieces)
    if (p.size() == 6 && (p[1] - d.cake[1]).norm() < 1e-12) hex = &p;
  if (!hex) {
    o.fail("no hexagon");
    return o;
  }
  auto ang = interior_angles(*hex);
  std::sort(ang.begin(), ang.end());
  const std::vector<double> want{20, 20, 170, 170, 170, 170};
  double worst = 0, sum = 0;
  for (int k = 0; k < 6; ++k) {
    worst = std::max(worst, std::abs(ang[k] - want[k]));
    sum += ang[k];
  }
  if (worst > 1e-9) o.fail("angle multiset mismatch");
  if (std::abs(sum - 720) > 1e-9) o.fail("angle sum is not 720");
  o.detail << "max angle error " << worst << " deg, sum - 720 = " << sum - 720;
  return o;
}

Outcome claim_suite(const std::vector<Built>& all) {
  Outcome o;
  int checked = 0, witnessed = 0, waived = 0;
  for (const auto& b : all) {
    if (b.d.pieces.size() != 2) continue;
    ++checked;
    const ClaimReport r = claim_angle_checks(b.d, 1e-6);
    if (r.normalized_is_translation) {
      o.fail(b.label + ": relative motion is a translation");
      continue;
    }
    if (r.sides_through_center > 1) o.fail(b.label + ": center on more than one side line");
    for (const MultipleCheck* c : {&r.side_checks[0], &r.vertex_checks[0]}) {
      if (!c->precondition) {
        ++waived;
        continue;
      }
      if (!c->witness || std::abs(c->witness->k) > 8 || std::abs(c->witness->l) > 2)
        o.fail(b.label + ": " + c->label + " has no bounded witness");
      else
        ++witnessed;
    }
  }
  o.detail << (o.detail.str().empty() ? "" : "; ") << checked << " two-piece dissections, " << witnessed << " witnessed checks, " << waived
           << " reported as outside the precondition";
  return o;
}

Outcome orbit_ill_defined() {
  Outcome o;
  const Polygon cake = construct_triangle({30, 20, 1});
  const DirectedLine ab = DirectedLine::through(cake[0], cake[1]);
  try {
    orbit_functional(RigidMotion::rotation(180, Point(0.37, 0)), ab);
    o.fail("no error raised");
  } catch (const IllDefinedFunctionalError&) {
    o.detail << "180 deg rotation about a point of AB raises the ill-defined-functional error";
  }
  return o;
}

Outcome search_rediscovery() {
  Outcome o;
  double slowest = 0;
  auto run = [&](const TriangleSpec& s) {
    SearchOptions opt;
    opt.grid_n = 128;
    opt.refine = true;
    const auto t0 = Clock::now();
    auto found = search_straight_cuts(s, opt);
    const double secs = seconds_since(t0);
    slowest = std::max(slowest, secs);
    if (secs > 600) o.fail(label_of("search", s) + " over 10 minutes");
    return found;
  };

  const TriangleSpec median{90, 55, 1};
  const Polygon mt = construct_triangle(median);
  const double mper = perimeter(mt);
  const double mt_t = edge_lengths(mt)[0] + edge_lengths(mt)[1] / 2;
  double best = 1e300;
  for (const auto& c : run(median)) best = std::min(best, std::max(std::abs(c.s), std::abs(c.t - mt_t)));
  if (best > 1e-6 * mper) o.fail("median cut not found within 1e-6 perimeter");

  const TriangleSpec a3b{75, 25, 1};
  const Dissection ref = cut_alpha_3beta(a3b);
  const double t_ref = a3b.side_c + (ref.cuts[0].vertices[1] - ref.cake[1]).norm();
  const double aper = perimeter(ref.cake);
  double best3 = 1e300;
  for (const auto& c : run(a3b)) best3 = std::min(best3, std::max(std::abs(c.s), std::abs(c.t - t_ref)));
  if (best3 > aper / 128) o.fail("alpha = 3 beta cut not found");

  const auto none = run({83.7, 41.9, 1});
  if (!none.empty()) o.fail("candidates found for (83.7, 41.9, 54.4)");

  o.detail << "median match " << best / mper << " x perimeter, alpha3beta match " << best3 / aper
           << " x perimeter, (83.7, 41.9) candidates " << none.size() << ", slowest " << slowest << " s";
  return o;
}

Outcome certificate_determinism(const std::vector<Built>& all) {
  Outcome o;
  for (const auto& b : all) {
    try {
      const std::string text = serialize(b.d);
      const Dissection back = parse_certificate(text);
      if (serialize(back) != text) o.fail(b.label + ": certificate text changed");
      const NiceReport r1 = verify_nice(b.d), r2 = verify_nice(back);
      if (r1.passed != r2.passed || r1.partition_cake != r2.partition_cake || r1.partition_box != r2.partition_box ||
          r1.motions_proper != r2.motions_proper)
        o.fail(b.label + ": verdict changed");
      if (serialize(b.d) != text) o.fail(b.label + ": serialization not deterministic");
    } catch (const std::exception& e) {
      o.fail(b.label + ": " + e.what());
    }
  }
  o.detail << all.size() << " certificates byte-identical after parse and reserialize";
  return o;
}

Outcome perturbation(const std::vector<Built>& all) {
  Outcome o;
  int trials = 0, flipped = 0;
  for (const auto& b : all) {
    if (!verify_nice(b.d).passed) continue;
    const double eps = 1e-6 * diameter(b.d.cake);
    for (std::size_t i = 0; i < b.d.pieces.size(); ++i) {
      for (std::size_t k = 0; k < b.d.pieces[i].size(); ++k) {
        for (const Vec2 dir : {Vec2(1, 0), Vec2(0, 1), Vec2(-1, 0), Vec2(0, -1)}) {
          Dissection e = b.d;
          std::vector<Point> v = e.pieces[i].vertices();
          v[k] += eps * dir;
          e.pieces[i] = Polygon(v);
          ++trials;
          if (!verify_nice(e).passed)
            ++flipped;
          else
            o.fail(b.label + ": perturbed dissection still verifies");
        }
      }
    }
  }
  o.detail << flipped << "/" << trials << " single-vertex displacements of 1e-6 x diameter rejected";
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  auto run = [&](int k, const std::string& name, auto&& fn) {
    const auto t0 = Clock::now();
    Outcome o = fn();
    report(k, name, o, seconds_since(t0));
    ok &= o.pass;
  };

  Outcome build_outcome;
  const std::vector<Built> all = build_all(build_outcome);

  run(1, "construction soundness", [&] {
    Outcome o = soundness(all);
    if (!build_outcome.pass) o.fail(build_outcome.detail.str());
    return o;
  });
  run(2, "angle relation witness", [&] { return relation_witness(all); });
  run(3, "invariant additivity", [] { return additivity(); });
  run(4, "translation obstruction", [] { return translation_obstruction(); });
  run(5, "wheel angle bookkeeping", [] { return wheel_angles(); });
  run(6, "rotation claim suite", [&] { return claim_suite(all); });
  run(7, "orbit functional well-definedness", [] { return orbit_ill_defined(); });
  run(8, "search rediscovery", [] { return search_rediscovery(); });
  run(9, "certificate determinism", [&] { return certificate_determinism(all); });
  run(10, "perturbation sensitivity", [&] { return perturbation(all); });
  return ok ? 0 : 1;
}
