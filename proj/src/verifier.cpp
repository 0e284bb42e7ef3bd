#include "nicecut/verifier.hpp"

#include <algorithm>
#include <numeric>

namespace nicecut {

PartitionResult verify_partition(std::span<const Polygon> pieces, const Polygon& target, double area_tol) {
  PartitionResult r;
  const double target_area = signed_area(target);
  const double len_tol = 1e-12 * diameter(target);
  double total = 0.0;
  bool ok = !pieces.empty() && is_valid_polygon(target, len_tol);
  for (const auto& p : pieces) {
    if (!is_valid_polygon(p, len_tol)) ok = false;
    total += signed_area(p);
  }
  r.area_defect = total - target_area;
  if (!ok) return r;

  try {
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j)
        r.max_overlap = std::max(r.max_overlap, intersection_area(pieces[i], pieces[j]));
    for (const auto& p : pieces)
      r.max_outside = std::max(r.max_outside, signed_area(p) - intersection_area(p, target));
  } catch (const TriangulationError&) {
    return r;
  }
  r.ok = std::abs(r.area_defect) <= area_tol && r.max_overlap <= area_tol && r.max_outside <= area_tol;
  return r;
}

NiceReport verify_nice(const Dissection& d, double rel_tol) {
  NiceReport rep;
  if (d.pieces.size() != d.motions.size()) return rep;
  const double area_tol = rel_tol * std::abs(signed_area(d.cake));

  rep.motions_proper = std::all_of(d.motions.begin(), d.motions.end(),
                                   [](const RigidMotion& m) { return std::abs(m.determinant() - 1.0) <= 1e-12; });

  std::vector<Polygon> images;
  images.reserve(d.pieces.size());
  for (std::size_t i = 0; i < d.pieces.size(); ++i) images.push_back(apply_motion(d.motions[i], d.pieces[i]));

  const PartitionResult cake = verify_partition(d.pieces, d.cake, area_tol);
  const PartitionResult box = verify_partition(images, d.box, area_tol);
  rep.partition_cake = cake.ok;
  rep.partition_box = box.ok;
  rep.max_overlap_area = std::max(cake.max_overlap, box.max_overlap);
  rep.area_defect = std::abs(cake.area_defect) >= std::abs(box.area_defect) ? cake.area_defect : box.area_defect;
  rep.passed = rep.partition_cake && rep.partition_box && rep.motions_proper &&
               rep.max_overlap_area <= area_tol && std::abs(rep.area_defect) <= area_tol;
  return rep;
}

namespace {

bool assign(std::size_t i, std::span<const Polygon> cake, std::span<const Polygon> box, double len_tol,
            bool backtrack, std::vector<bool>& used, std::vector<RigidMotion>& out) {
  if (i == cake.size()) return true;
  const double area = signed_area(cake[i]);
  const double area_tol = len_tol * perimeter(cake[i]);
  std::vector<std::size_t> order(box.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(signed_area(box[a]) - area) < std::abs(signed_area(box[b]) - area);
  });
  for (std::size_t j : order) {
    if (used[j]) continue;
    if (std::abs(signed_area(box[j]) - area) > 2.0 * area_tol) break;
    const auto m = find_motion(cake[i], box[j], len_tol);
    if (!m) continue;
    used[j] = true;
    out[i] = *m;
    if (assign(i + 1, cake, box, len_tol, backtrack, used, out)) return true;
    used[j] = false;
    if (!backtrack) return false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<RigidMotion>> recover_motions(std::span<const Polygon> cake_pieces,
                                                        std::span<const Polygon> box_pieces, double len_tol) {
  if (cake_pieces.size() != box_pieces.size()) return std::nullopt;
  std::vector<bool> used(box_pieces.size(), false);
  std::vector<RigidMotion> out(cake_pieces.size());
  // Full enumeration stays affordable up to 8 pieces; beyond that only the greedy pass runs.
  const bool backtrack = cake_pieces.size() <= 8;
  if (!assign(0, cake_pieces, box_pieces, len_tol, backtrack, used, out)) return std::nullopt;
  return out;
}

namespace {

std::array<AngleDeg, 3> cake_angles(const Polygon& cake) {
  if (cake.size() != 3) throw Error("cake must be a triangle");
  const auto a = interior_angles(cake);
  return {a[0], a[1], 180.0 - a[0] - a[1]};
}

/// A half-turn acts trivially on line directions, so only multiples of 180 qualify.
std::optional<MultipleWitness> multiple_of(AngleDeg psi, AngleDeg phi_line, double tol) {
  if (std::abs(phi_line) > tol) return is_multiple(psi, phi_line, kClaimKMax, kClaimLMax, tol);
  for (int l = 0; l <= kClaimLMax; ++l)
    for (int sign : {1, -1})
      if (std::abs(psi - sign * l * 180.0) <= tol) return MultipleWitness{0, sign * l};
  return std::nullopt;
}

void require_two_pieces(const Dissection& d) {
  if (d.pieces.size() != 2 || d.motions.size() != 2)
    throw WrongArityError("expected a two-piece dissection, got " + std::to_string(d.pieces.size()) + " pieces");
}

}  // namespace

std::optional<IntegerRelation> theorem1_check(const Dissection& d, int k_max, double tol) {
  require_two_pieces(d);
  const auto [alpha, beta, gamma] = cake_angles(d.cake);
  return find_integer_relation(alpha, beta, gamma, k_max, tol);
}

ClaimReport claim_angle_checks(const Dissection& d, double tol) {
  require_two_pieces(d);
  ClaimReport rep;
  const auto angles = cake_angles(d.cake);
  const double len_tol = 1e-9 * diameter(d.cake);

  const RigidMotion fix = d.motions[0].inverse();
  const RigidMotion moving = fix.compose(d.motions[1]);
  const Polygon box = apply_motion(fix, d.box);

  // Box vertex carrying each cake angle.
  const auto box_angles = interior_angles(box);
  std::array<std::size_t, 3> label{};
  for (std::size_t v = 0; v < 3; ++v) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < box.size(); ++j)
      if (std::abs(box_angles[j] - angles[v]) < std::abs(box_angles[best] - angles[v])) best = j;
    label[v] = best;
  }

  if (moving.is_translation()) {
    rep.normalized_is_translation = true;
    rep.notes.emplace_back("normalized motion is a translation; a nice two-piece cut must rotate the moving piece");
    return rep;
  }

  rep.phi = moving.phi();
  rep.phi_line = wrap_angle(rep.phi, 180.0);
  if (rep.phi_line > 90.0) rep.phi_line -= 180.0;
  rep.center = moving.center();
  rep.phi_rational = is_rational_angle(rep.phi, kClaimRationalDenominator);
  const bool irrational = !rep.phi_rational.has_value();

  static constexpr std::array<const char*, 3> names{"A", "B", "C"};
  std::array<DirectedLine, 3> sides;
  for (std::size_t i = 0; i < 3; ++i) {
    sides[i] = DirectedLine::through(d.cake[i], d.cake.at_cyclic(i + 1));
    rep.center_on_side[i] = std::abs(sides[i].signed_distance(rep.center)) <= len_tol;
    rep.sides_through_center += rep.center_on_side[i] ? 1 : 0;
  }
  rep.center_claim_holds = rep.sides_through_center <= 1;
  if (!rep.center_claim_holds) rep.notes.emplace_back("rotation center lies on more than one side line");

  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    MultipleCheck c;
    c.label = std::string("angle(") + names[i] + names[j] + "," + names[i] + "'" + names[j] + "')";
    const DirectedLine image = DirectedLine::through(box[label[i]], box[label[j]]);
    c.psi = oriented_angle(sides[i], image);
    c.precondition = irrational || !rep.center_on_side[i];
    c.witness = multiple_of(c.psi, rep.phi_line, tol);
    if (c.precondition && !c.witness) rep.notes.push_back(c.label + " is not a bounded multiple of phi");
    rep.side_checks.push_back(std::move(c));
  }
  for (std::size_t v = 0; v < 3; ++v) {
    MultipleCheck c;
    static constexpr std::array<const char*, 3> greek{"alpha", "beta", "gamma"};
    c.label = std::string("2*") + greek[v];
    c.psi = 2.0 * angles[v];
    // Vertex v sits on sides v and v-1.
    c.precondition = irrational || (!rep.center_on_side[v] && !rep.center_on_side[(v + 2) % 3]);
    c.witness = multiple_of(c.psi, rep.phi_line, tol);
    if (c.precondition && !c.witness) rep.notes.push_back(c.label + " is not a bounded multiple of phi");
    rep.vertex_checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace nicecut
