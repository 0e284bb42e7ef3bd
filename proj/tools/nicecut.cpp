// Command-line front end: construct, verify, invariant, relation, search, render.
//
// Exit codes: 0 success or verified, 1 verification failed, 2 usage or parse
// error, 3 construction precondition failed.

#include "nicecut/certificate.hpp"
#include "nicecut/constructions.hpp"
#include "nicecut/cut_search.hpp"
#include "nicecut/invariants.hpp"
#include "nicecut/svg.hpp"
#include "nicecut/verifier.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace nicecut;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kPrecondition = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

json to_json(const Point& p) { return json::array({p.x(), p.y()}); }

json to_json(const NiceReport& r) {
  return {{"partition_cake", r.partition_cake}, {"partition_box", r.partition_box},
          {"motions_proper", r.motions_proper}, {"max_overlap_area", r.max_overlap_area},
          {"area_defect", r.area_defect},       {"passed", r.passed}};
}

json to_json(const std::optional<IntegerRelation>& r) {
  if (!r) return nullptr;
  return {{"k", r->k}, {"l", r->l}, {"m", r->m}};
}

json to_json(const MultipleCheck& c) {
  json w = nullptr;
  if (c.witness) w = {{"k", c.witness->k}, {"l", c.witness->l}};
  return {{"label", c.label}, {"psi", c.psi}, {"precondition", c.precondition}, {"witness", w}};
}

json to_json(const ClaimReport& r) {
  json j = {{"normalized_is_translation", r.normalized_is_translation}, {"notes", r.notes}};
  if (r.normalized_is_translation) return j;
  j["phi"] = r.phi;
  j["phi_line"] = r.phi_line;
  j["center"] = to_json(r.center);
  j["phi_rational"] = r.phi_rational ? json{{"k", r.phi_rational->k}, {"l", r.phi_rational->l}} : json(nullptr);
  j["center_on_side"] = {{"AB", r.center_on_side[0]}, {"BC", r.center_on_side[1]}, {"CA", r.center_on_side[2]}};
  j["center_claim_holds"] = r.center_claim_holds;
  j["side_checks"] = json::array();
  for (const auto& c : r.side_checks) j["side_checks"].push_back(to_json(c));
  j["vertex_checks"] = json::array();
  for (const auto& c : r.vertex_checks) j["vertex_checks"].push_back(to_json(c));
  return j;
}

Point parse_xy(const std::string& a, const std::string& b) {
  std::size_t pa = 0, pb = 0;
  const double x = std::stod(a, &pa);
  const double y = std::stod(b, &pb);
  if (pa != a.size() || pb != b.size()) throw UsageError("bad number");
  return {x, y};
}

DirectedLine parse_line(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 4) throw UsageError("--line expects X1,Y1,X2,Y2");
  try {
    return DirectedLine::through(parse_xy(parts[0], parts[1]), parse_xy(parts[2], parts[3]));
  } catch (const std::invalid_argument&) {
    throw UsageError("--line expects four numbers");
  }
}

Polygon read_poly(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (!j.is_array()) throw UsageError(path + ": expected an array of [x, y] points");
  std::vector<Point> v;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw UsageError(path + ": expected an array of [x, y] points");
    v.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  try {
    return Polygon(std::move(v));
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

const std::map<std::string, Family> kFamilies{
    {"incenter3", Family::Incenter3},          {"median", Family::Median},
    {"alpha3beta", Family::Alpha3Beta},        {"twobeta-acute", Family::TwoBetaAcute},
    {"twobeta-obtuse", Family::TwoBetaObtuse}, {"wheel", Family::Wheel},
    {"gear", Family::Gear},                    {"scissors", Family::Scissors}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nice cuttings of a triangle into its mirror image"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build a dissection of a family and write its certificate");
  std::string family, out_file, svg_file;
  double alpha = 0, beta = 0, side = 1.0;
  int n = 1;
  construct->add_option("--family", family, "family")
      ->required()
      ->check(CLI::IsMember({"incenter3", "median", "alpha3beta", "twobeta-acute", "twobeta-obtuse", "wheel", "gear",
                             "scissors"}));
  construct->add_option("--alpha", alpha)->required();
  construct->add_option("--beta", beta)->required();
  construct->add_option("--n", n, "order for wheel and gear")->capture_default_str();
  construct->add_option("--side", side, "length of AB")->capture_default_str();
  construct->add_option("--out", out_file, "certificate file")->required();
  construct->add_option("--svg", svg_file, "also render a figure");

  auto* verify = app.add_subcommand("verify", "verify a certificate");
  std::string cert_file;
  double tol = kDefaultRelTol;
  bool theorem1 = false, claims = false;
  verify->add_option("FILE", cert_file)->required();
  verify->add_option("--tol", tol, "relative tolerance")->capture_default_str();
  verify->add_flag("--theorem1", theorem1, "report the integer angle relation");
  verify->add_flag("--claims", claims, "report the angle checks of the normalized rotation");

  auto* invariant = app.add_subcommand("invariant", "J_f of a polygon for the functional of a directed line");
  std::string poly_file, line_text;
  invariant->add_option("--poly", poly_file, "file holding a JSON array of [x, y] vertices")->required();
  invariant->add_option("--line", line_text, "X1,Y1,X2,Y2")->required();

  auto* relation = app.add_subcommand("relation", "bounded search for k alpha + l beta + m gamma = 0");
  int kmax = kDefaultRelationKMax;
  double rel_tol = kDefaultRelationTol;
  relation->add_option("--alpha", alpha)->required();
  relation->add_option("--beta", beta)->required();
  relation->add_option("--kmax", kmax)->capture_default_str()->check(CLI::PositiveNumber);
  relation->add_option("--tol", rel_tol)->capture_default_str();

  auto* search = app.add_subcommand("search", "grid search for straight two-piece nice cuts");
  int grid = 128;
  bool refine = false;
  std::string search_out;
  unsigned threads = 0;
  search->add_option("--alpha", alpha)->required();
  search->add_option("--beta", beta)->required();
  search->add_option("--grid", grid)->required()->check(CLI::Range(8, 100000));
  search->add_flag("--refine", refine);
  search->add_option("--out", search_out);
  search->add_option("--threads", threads, "0 uses every core")->capture_default_str();

  auto* render = app.add_subcommand("render", "draw a certificate as SVG");
  std::string render_svg_file;
  render->add_option("FILE", cert_file)->required();
  render->add_option("--svg", render_svg_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) {
      const TriangleSpec spec{alpha, beta, side};
      const Dissection d = nicecut::construct(kFamilies.at(family), spec, n);
      write_file(out_file, serialize(d));
      if (!svg_file.empty()) write_file(svg_file, render_svg(d));
      const NiceReport rep = verify_nice(d);
      std::cout << json{{"family", family_tag(d.family, d.n)}, {"pieces", d.pieces.size()}, {"report", to_json(rep)}}
                       .dump(2)
                << "\n";
      return rep.passed ? kOk : kFailed;
    }
    if (*verify) {
      const Dissection d = parse_certificate(read_file(cert_file));
      const NiceReport rep = verify_nice(d, tol);
      json j = {{"report", to_json(rep)}};
      if (theorem1 || claims) {
        if (d.pieces.size() != 2) {
          j["two_piece_checks"] = "skipped: not a two-piece dissection";
        } else {
          if (theorem1) j["relation"] = to_json(theorem1_check(d));
          if (claims) j["claims"] = to_json(claim_angle_checks(d));
        }
      }
      std::cout << j.dump(2) << "\n";
      return rep.passed ? kOk : kFailed;
    }
    if (*invariant) {
      const Polygon poly = read_poly(poly_file);
      const DirectedLine f = parse_line(line_text);
      std::cout << fmt::format("{:.17g}\n", j_classic(poly, f));
      return kOk;
    }
    if (*relation) {
      const TriangleSpec spec{alpha, beta, 1.0};
      spec.validate();
      const auto r = find_integer_relation(alpha, beta, spec.gamma(), kmax, rel_tol);
      if (!r) {
        std::cout << "none within bounds\n";
        return kFailed;
      }
      std::cout << to_json(r).dump() << "\n";
      return kOk;
    }
    if (*search) {
      SearchOptions o;
      o.grid_n = grid;
      o.refine = refine;
      o.threads = threads;
      const TriangleSpec spec{alpha, beta, 1.0};
      const auto found = search_straight_cuts(spec, o);
      json list = json::array();
      for (const auto& c : found)
        list.push_back({{"cake_cut", {c.s, c.t}},
                        {"box_cut", {c.s_box, c.t_box}},
                        {"assignment", c.crossed ? "crossed" : "straight"},
                        {"residual", c.residual}});
      const json j = {{"spec", {{"alpha", alpha}, {"beta", beta}, {"side_c", 1.0}}},
                      {"grid", grid},
                      {"refine", refine},
                      {"candidates", list},
                      {"caveat", kSearchResolutionCaveat}};
      if (!search_out.empty()) write_file(search_out, j.dump(2) + "\n");
      std::cout << j.dump(2) << "\n";
      return kOk;
    }
    if (*render) {
      const Dissection d = parse_certificate(read_file(cert_file));
      write_file(render_svg_file, render_svg(d));
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const VersionError& e) {
    std::cerr << "version error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidAngleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateSpecError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const WrongFamilyError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ClosureResidualError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const RootFindError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
