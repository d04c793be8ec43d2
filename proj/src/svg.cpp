#include "sylvan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "sylvan/error.hpp"

namespace sylvan {
namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct Mapper {
  double x0, y1, scale;  // world-left, world-top, world-to-pixel
  std::string x(double wx) const { return num((wx - x0) * scale); }
  std::string y(double wy) const { return num((y1 - wy) * scale); }  // SVG y grows downward
};

void append_cells(std::string& out, const std::vector<Cell>& cells, double side, const Mapper& m,
                  const char* fill) {
  for (const Cell& c : cells) {
    const double cx = static_cast<double>(c.k) * side - side / 2.0;
    const double cy = static_cast<double>(c.kp) * side + side / 2.0;  // top edge
    out += "<rect x=\"" + m.x(cx) + "\" y=\"" + m.y(cy) + "\" width=\"" + num(side * m.scale) +
           "\" height=\"" + num(side * m.scale) + "\" fill=\"" + fill + "\" stroke=\"none\"/>\n";
  }
}

}  // namespace

std::string domain_svg(const GridDomain& dom, const SpectrumSet& sa, const SpectrumSet& sb,
                       double margin) {
  if (!(margin >= 0.0) || !std::isfinite(margin))
    raise(ErrorCode::InvalidSpec, "svg margin must be finite and >= 0");

  double lox = std::numeric_limits<double>::infinity(), hix = -lox;
  double loy = lox, hiy = -lox;
  auto take = [&](double x, double y) {
    lox = std::min(lox, x);
    hix = std::max(hix, x);
    loy = std::min(loy, y);
    hiy = std::max(hiy, y);
  };
  for (const Complex& v : sa.values) take(v.real(), v.imag());
  for (const Complex& v : sb.values) take(v.real(), v.imag());
  for (const Loop& loop : dom.loops)
    for (const Complex& v : loop.vertices) take(v.real(), v.imag());
  if (!std::isfinite(lox)) raise(ErrorCode::InvalidSpec, "nothing to draw");
  lox -= margin;
  hix += margin;
  loy -= margin;
  hiy += margin;

  const double world_w = std::max(hix - lox, 1e-9);
  const double world_h = std::max(hiy - loy, 1e-9);
  const double width = 640.0;
  const double scale = width / world_w;
  const double height = world_h * scale;
  const Mapper m{lox, hiy, scale};

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" fill=\"#ffffff\"/>\n";
  append_cells(out, dom.d3, dom.side, m, "#f0f4f8");
  append_cells(out, dom.d2, dom.side, m, "#d7e3ee");
  append_cells(out, dom.d1, dom.side, m, "#b3c9dd");
  for (const Loop& loop : dom.loops) {
    std::string d = "M";
    for (std::size_t i = 0; i < loop.vertices.size(); ++i) {
      const Complex& v = loop.vertices[i];
      if (i > 0) d += " L";
      d += " " + m.x(v.real()) + " " + m.y(v.imag());
    }
    d += " Z";
    out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" +
           (loop.counterclockwise ? "#1f5fa6" : "#a65f1f") + "\" stroke-width=\"1.5\"/>\n";
  }
  for (const Complex& v : sa.values) {
    out += "<circle cx=\"" + m.x(v.real()) + "\" cy=\"" + m.y(v.imag()) +
           "\" r=\"3\" fill=\"#15803d\"/>\n";
  }
  const double arm = 3.5;
  for (const Complex& v : sb.values) {
    const double px = (v.real() - lox) * scale;
    const double py = (hiy - v.imag()) * scale;
    out += "<path d=\"M " + num(px - arm) + " " + num(py - arm) + " L " + num(px + arm) + " " +
           num(py + arm) + " M " + num(px - arm) + " " + num(py + arm) + " L " + num(px + arm) +
           " " + num(py - arm) + "\" stroke=\"#b91c1c\" stroke-width=\"1.5\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace sylvan
