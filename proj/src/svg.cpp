#include "ellspec/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "ellspec/vecops.hpp"

namespace ellspec {

namespace {

constexpr double kSize = 560.0;    // canvas edge, px
constexpr double kCenter = kSize / 2.0;
constexpr double kRadius = 240.0;  // px mapped to the major-axis modulus

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct P {
  double x, y;
};

// Plane coordinates (major axis along +x) to pixel coordinates.
P to_px(double x, double y, double scale) {
  return {kCenter + x * scale, kCenter - y * scale};
}

void arrow(std::string& out, P tip, const char* color, const char* dash,
           const std::string& label) {
  const P base{kCenter, kCenter};
  out += "  <line x1=\"" + px(base.x) + "\" y1=\"" + px(base.y) + "\" x2=\"" +
         px(tip.x) + "\" y2=\"" + px(tip.y) + "\" stroke=\"" + color +
         "\" stroke-width=\"1.5\"" + dash + "/>\n";

  const double dx = tip.x - base.x;
  const double dy = tip.y - base.y;
  const double len = std::hypot(dx, dy);
  if (len > 1.0) {
    const double ux = dx / len, uy = dy / len;  // unit along the arrow, px
    const P l{tip.x - 10.0 * ux + 4.0 * -uy, tip.y - 10.0 * uy + 4.0 * ux};
    const P r{tip.x - 10.0 * ux - 4.0 * -uy, tip.y - 10.0 * uy - 4.0 * ux};
    out += "  <polygon points=\"" + px(tip.x) + "," + px(tip.y) + " " +
           px(l.x) + "," + px(l.y) + " " + px(r.x) + "," + px(r.y) +
           "\" fill=\"" + color + "\"/>\n";
    const P at{tip.x + 16.0 * ux, tip.y + 16.0 * uy};
    out += "  <text x=\"" + px(at.x) + "\" y=\"" + px(at.y) + "\" fill=\"" +
           color +
           "\" font-family=\"sans-serif\" font-size=\"14\" "
           "text-anchor=\"middle\" dominant-baseline=\"middle\">" +
           label + "</text>\n";
  }
}

}  // namespace

std::string ellipse_plot_svg(const EllipseAB& e, const std::string& title) {
  const double na = modulus(e.a);
  const double nb = modulus(e.b);
  const double scale = na > 0.0 ? kRadius / na : 1.0;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kSize) +
         "\" height=\"" + px(kSize) + "\" viewBox=\"0 0 " + px(kSize) + " " +
         px(kSize) + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "  <line x1=\"0\" y1=\"" + px(kCenter) + "\" x2=\"" + px(kSize) +
         "\" y2=\"" + px(kCenter) + "\" stroke=\"#dddddd\"/>\n";
  out += "  <line x1=\"" + px(kCenter) + "\" y1=\"0\" x2=\"" + px(kCenter) +
         "\" y2=\"" + px(kSize) + "\" stroke=\"#dddddd\"/>\n";

  if (na > 0.0) {
    // The curve a*sin(theta) + b*cos(theta) in plane coordinates.
    out += "  <polyline fill=\"none\" stroke=\"#333333\" stroke-width=\"1.5\""
           " points=\"";
    const int steps = 128;
    for (int k = 0; k <= steps; ++k) {
      const double th = 2.0 * std::numbers::pi * k / steps;
      const P p = to_px(na * std::sin(th), nb * std::cos(th), scale);
      if (k) out += " ";
      out += px(p.x) + "," + px(p.y);
    }
    out += "\"/>\n";

    arrow(out, to_px(na, 0.0, scale), "#c0392b", "", "a");
    if (nb > 0.0) arrow(out, to_px(0.0, nb, scale), "#2980b9", "", "b");
    const char* dash = " stroke-dasharray=\"6 4\"";
    // c = a*cos(psi) - b*sin(psi), s = a*sin(psi) + b*cos(psi), expressed in
    // the (a, b) plane basis.
    const double cp = std::cos(e.psi), sp = std::sin(e.psi);
    arrow(out, to_px(na * cp, -nb * sp, scale), "#27ae60", dash, "c");
    arrow(out, to_px(na * sp, nb * cp, scale), "#8e44ad", dash, "s");
  } else {
    out += "  <circle cx=\"" + px(kCenter) + "\" cy=\"" + px(kCenter) +
           "\" r=\"3\" fill=\"#333333\"/>\n";
  }

  out += "  <text x=\"12\" y=\"22\" fill=\"#333333\" "
         "font-family=\"sans-serif\" font-size=\"14\">" +
         title + "</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace ellspec
