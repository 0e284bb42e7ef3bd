#include "nicecut/angle_relations.hpp"
#include "nicecut/constructions.hpp"
#include "nicecut/verifier.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace nicecut;
using namespace testing_support;

namespace {

std::vector<Dissection> all_families() {
  return {cut_incenter3({73.1, 41.6, 1}), cut_median({90, 55, 1}),   cut_alpha_3beta({75, 25, 1}),
          cut_2beta_acute({70, 35, 1}),   cut_2beta_obtuse({100, 50, 1}), cut_wheel({30, 20, 1}, 2),
          cut_gear({30, 20, 1}, 2),       cut_scissors({30, 20, 1})};
}

Polygon nudge(const Polygon& p, std::size_t k, const Vec2& d) {
  std::vector<Point> v = p.vertices();
  v[k] += d;
  return Polygon(v);
}

}  // namespace

TEST_CASE("partition") {
  const Polygon sq{Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)};
  const Polygon lo{Point(0, 0), Point(1, 0), Point(1, 0.5), Point(0, 0.5)};
  const Polygon hi{Point(0, 0.5), Point(1, 0.5), Point(1, 1), Point(0, 1)};
  const std::vector<Polygon> good{lo, hi};
  const auto r = verify_partition(good, sq, 1e-12);
  CHECK(r.ok);
  CHECK(r.max_overlap == doctest::Approx(0.0));
  CHECK(r.area_defect == doctest::Approx(0.0));

  const std::vector<Polygon> twice{lo, lo};
  const auto bad = verify_partition(twice, sq, 1e-12);
  CHECK_FALSE(bad.ok);
  CHECK(bad.max_overlap == doctest::Approx(0.5));
}

TEST_CASE("every construction verifies") {
  for (const auto& d : all_families()) {
    const NiceReport r = verify_nice(d);
    CHECK(r.passed);
    CHECK(r.motions_proper);
  }
}

TEST_CASE("wrong motions are caught") {
  Dissection d = cut_median({90, 55, 1});
  const RigidMotion m = d.motions[1];
  d.motions[1] = RigidMotion::rotation(m.phi() + 1e-3, m.center());
  CHECK_FALSE(verify_nice(d).partition_box);

  Dissection still = cut_alpha_3beta({75, 25, 1});
  still.motions = {RigidMotion::identity(), RigidMotion::identity()};
  CHECK_FALSE(verify_nice(still).partition_box);
}

TEST_CASE("perturbing a vertex breaks verification") {
  for (const auto& d : all_families()) {
    const double eps = 1e-6 * diameter(d.cake);
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
      for (std::size_t k = 0; k < d.pieces[i].size(); ++k) {
        for (const Vec2 dir : {Vec2(1, 0), Vec2(0, 1), Vec2(-1, 0), Vec2(0, -1)}) {
          Dissection e = d;
          e.pieces[i] = nudge(d.pieces[i], k, eps * dir);
          CHECK_FALSE(verify_nice(e).passed);
        }
      }
    }
  }
}

TEST_CASE("verdict does not depend on piece order") {
  for (const auto& d : all_families()) {
    std::vector<std::size_t> perm(d.pieces.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Dissection e = d;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        e.pieces[i] = d.pieces[perm[i]];
        e.motions[i] = d.motions[perm[i]];
      }
      CHECK(verify_nice(e).passed);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("motion recovery") {
  const Dissection inc = cut_incenter3({73.1, 41.6, 1});
  std::vector<Polygon> mirrored;
  for (const auto& p : inc.pieces) mirrored.push_back(mirror_polygon(p, 0.5));
  const auto ms = recover_motions(inc.pieces, mirrored, 1e-9);
  REQUIRE(ms);
  for (const auto& m : *ms) CHECK_FALSE(m.is_translation());

  std::vector<Polygon> shifted;
  for (const auto& p : inc.pieces) shifted.push_back(apply_motion(RigidMotion::translation(Vec2(4, 1)), p));
  std::reverse(shifted.begin(), shifted.end());
  const auto ts = recover_motions(inc.pieces, shifted, 1e-9);
  REQUIRE(ts);
  for (const auto& m : *ts) CHECK(m.is_translation());

  const std::vector<Polygon> one{inc.cake};
  const std::vector<Polygon> other{inc.box};
  CHECK_FALSE(recover_motions(one, other, 1e-9));
}

TEST_CASE("integer relation of a two-piece cut") {
  CHECK(theorem1_check(cut_wheel({30, 20, 1}, 2)) == IntegerRelation{2, -3, 0});
  CHECK(theorem1_check(cut_median({90, 55, 1})) == IntegerRelation{1, -1, -1});
  CHECK_THROWS_AS(theorem1_check(cut_incenter3({73.1, 41.6, 1})), WrongArityError);
  for (const auto& d : all_families()) {
    if (d.pieces.size() != 2) continue;
    const auto r = theorem1_check(d);
    REQUIRE(r);
    CHECK(r->max_abs() <= 5);
  }
}

TEST_CASE("claim checks") {
  const ClaimReport w = claim_angle_checks(cut_wheel({30, 20, 1}, 2));
  CHECK_FALSE(w.normalized_is_translation);
  CHECK(std::abs(w.phi_line) == doctest::Approx(10.0));
  REQUIRE(w.vertex_checks.size() == 3);
  REQUIRE(w.vertex_checks[0].witness);
  CHECK(std::abs(w.vertex_checks[0].witness->k) == 6);
  CHECK(w.vertex_checks[0].witness->l == 0);

  const ClaimReport g = claim_angle_checks(cut_gear({30, 20, 1}, 2));
  CHECK(g.sides_through_center <= 1);
  CHECK(g.center_claim_holds);

  const ClaimReport s = claim_angle_checks(cut_scissors({30, 20, 1}));
  REQUIRE(s.side_checks[0].witness);
  CHECK(std::abs(s.side_checks[0].witness->k) <= 8);

  for (const auto& d : all_families()) {
    if (d.pieces.size() != 2) continue;
    const ClaimReport r = claim_angle_checks(d);
    CHECK(r.center_claim_holds);
    for (const auto& c : r.side_checks)
      if (c.precondition) CHECK(c.witness);
    for (const auto& c : r.vertex_checks)
      if (c.precondition) CHECK(c.witness);
    CHECK(r.notes.empty());
  }
  CHECK_THROWS_AS(claim_angle_checks(cut_incenter3({73.1, 41.6, 1})), WrongArityError);
}

TEST_CASE("claim witnesses can exceed the report bound") {
  // wheel(4) at beta = 30: phi = -7.5 and 2 alpha = 75 needs k = -10.
  const ClaimReport r = claim_angle_checks(cut_wheel({37.5, 30, 1}, 4));
  CHECK(r.center_claim_holds);
  REQUIRE(r.vertex_checks[0].precondition);
  CHECK_FALSE(r.vertex_checks[0].witness);
  CHECK_FALSE(r.notes.empty());
  const auto w = is_multiple(r.vertex_checks[0].psi, r.phi_line, 16, kClaimLMax, 1e-9);
  REQUIRE(w);
  CHECK(w->k == -10);
  CHECK(w->l == 0);
}

TEST_CASE("a translation-only relative motion is reported") {
  Dissection d = cut_median({90, 55, 1});
  d.motions = {RigidMotion::identity(), RigidMotion::translation(Vec2(0.1, 0))};
  const ClaimReport r = claim_angle_checks(d);
  CHECK(r.normalized_is_translation);
  CHECK_FALSE(r.notes.empty());
}
