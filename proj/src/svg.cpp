#include "nicecut/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>

namespace nicecut {

namespace {

constexpr std::array<const char*, 8> kPalette{"#e6a141", "#5b8fd1", "#7cbf6b", "#d9675f",
                                              "#a07cc5", "#4fb7b3", "#c9b458", "#d383b0"};

struct Frame {
  double xmin, ymax, scale, dx;

  std::pair<double, double> map(const Point& p) const { return {dx + (p.x() - xmin) * scale, (ymax - p.y()) * scale}; }
};

std::string coords(const Frame& f, const Point& p) {
  const auto [x, y] = f.map(p);
  return fmt::format("{:.6f},{:.6f}", x, y);
}

std::string path_data(const Frame& f, const Polygon& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto [x, y] = f.map(p[i]);
    s += fmt::format("{}{:.6f} {:.6f} ", i ? "L" : "M", x, y);
  }
  return s + "Z";
}

std::string point_list(const Frame& f, std::span<const Point> pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + coords(f, pts[i]);
  return s;
}

}  // namespace

std::string render_svg(const Dissection& d, const SvgOptions& o) {
  std::vector<Point> all(d.cake.vertices());
  all.insert(all.end(), d.box.vertices().begin(), d.box.vertices().end());
  double xmin = all[0].x(), xmax = xmin, ymin = all[0].y(), ymax = ymin;
  for (const auto& p : all) {
    xmin = std::min(xmin, p.x());
    xmax = std::max(xmax, p.x());
    ymin = std::min(ymin, p.y());
    ymax = std::max(ymax, p.y());
  }
  const double inner = o.panel_width - 2.0 * o.margin;
  const double scale = inner / std::max(xmax - xmin, 1e-300);
  const double height = (ymax - ymin) * scale + 2.0 * o.margin;
  const double width = 2.0 * o.panel_width;

  // Both panels share the scale; the y margin is folded into the offset.
  const Frame left{xmin, ymax + o.margin / scale, scale, o.margin};
  const Frame right{xmin, ymax + o.margin / scale, scale, o.panel_width + o.margin};

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.6f}\" height=\"{:.6f}\" "
      "viewBox=\"0 0 {:.6f} {:.6f}\">\n",
      width, height, width, height);
  s += fmt::format("<title>{}</title>\n", family_tag(d.family, d.n));

  for (int panel = 0; panel < 2; ++panel) {
    const Frame& f = panel ? right : left;
    s += fmt::format("<g id=\"{}\">\n", panel ? "box" : "cake");
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
      const Polygon piece =
          panel && i < d.motions.size() ? apply_motion(d.motions[i], d.pieces[i]) : d.pieces[i];
      s += fmt::format("<path d=\"{}\" fill=\"{}\" fill-opacity=\"0.85\" stroke=\"#333333\" stroke-width=\"{:.6f}\"/>\n",
                       path_data(f, piece), kPalette[i % kPalette.size()], 0.5 * o.stroke_width);
    }
    const Polygon& outline = panel ? d.box : d.cake;
    s += fmt::format("<polygon points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{:.6f}\"/>\n",
                     point_list(f, outline.span()), o.stroke_width);
    if (!panel) {
      for (const auto& cut : d.cuts)
        s += fmt::format(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"#b00000\" stroke-width=\"{:.6f}\"/>\n",
            point_list(f, cut.vertices), o.stroke_width);
    }
    if (o.vertex_labels && outline.size() == 3) {
      // The box is stored as A', C', B' after mirroring.
      static constexpr std::array<const char*, 3> cake_names{"A", "B", "C"};
      static constexpr std::array<const char*, 3> box_names{"A'", "C'", "B'"};
      Point centroid = (outline[0] + outline[1] + outline[2]) / 3.0;
      for (std::size_t v = 0; v < 3; ++v) {
        const Vec2 away = (outline[v] - centroid).normalized() * (10.0 / scale);
        const auto [x, y] = f.map(outline[v] + away);
        s += fmt::format(
            "<text x=\"{:.6f}\" y=\"{:.6f}\" font-family=\"serif\" font-size=\"12\" text-anchor=\"middle\" "
            "dominant-baseline=\"middle\">{}</text>\n",
            x, y, panel ? box_names[v] : cake_names[v]);
      }
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace nicecut
