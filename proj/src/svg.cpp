#include "girthforge/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace girthforge {

namespace {

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

WorldBox bounding_box(const PlanarArrangement& arr) {
  if (arr.points.empty()) throw Error("cannot frame an arrangement without points");
  WorldBox b{arr.points[0].x, arr.points[0].x, arr.points[0].y, arr.points[0].y};
  for (const auto& p : arr.points) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  }
  auto pad = [](Rational& lo, Rational& hi) {
    Rational margin = hi == lo ? Rational(1) : Rational((hi - lo) / 20);
    lo -= margin;
    hi += margin;
  };
  pad(b.xmin, b.xmax);
  pad(b.ymin, b.ymax);
  return b;
}

std::optional<std::pair<PlanarPoint, PlanarPoint>> clip_line(const PlanarLine& line, const WorldBox& box) {
  std::vector<PlanarPoint> hits;
  auto inside = [&box](const PlanarPoint& p) {
    return box.xmin <= p.x && p.x <= box.xmax && box.ymin <= p.y && p.y <= box.ymax;
  };
  if (line.b != 0) {
    for (const Rational& x : {box.xmin, box.xmax}) {
      PlanarPoint p{x, Rational(-(line.a * x + line.c) / line.b)};
      if (inside(p)) hits.push_back(p);
    }
  }
  if (line.a != 0) {
    for (const Rational& y : {box.ymin, box.ymax}) {
      PlanarPoint p{Rational(-(line.b * y + line.c) / line.a), y};
      if (inside(p)) hits.push_back(p);
    }
  }
  auto less = [](const PlanarPoint& a, const PlanarPoint& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; };
  std::sort(hits.begin(), hits.end(), less);
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  if (hits.size() < 2) return std::nullopt;
  return std::make_pair(hits.front(), hits.back());
}

std::string export_svg(const PlanarArrangement& arr, const Viewport& viewport) {
  const WorldBox box = bounding_box(arr);
  const double w = viewport.width, h = viewport.height;
  const Rational sx = box.xmax - box.xmin, sy = box.ymax - box.ymin;
  auto px = [&](const Rational& x) { return fixed3(Rational((x - box.xmin) / sx).get_d() * w); };
  auto py = [&](const Rational& y) { return fixed3(h - Rational((y - box.ymin) / sy).get_d() * h); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << viewport.width << "\" height=\""
      << viewport.height + 30 << "\" viewBox=\"0 0 " << viewport.width << ' ' << viewport.height + 30 << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << viewport.width << "\" height=\"" << viewport.height
      << "\" fill=\"white\"/>\n"
      << "<g stroke=\"#4477aa\" stroke-width=\"0.5\" stroke-opacity=\"0.6\">\n";
  for (const auto& line : arr.lines) {
    auto seg = clip_line(line, box);
    if (!seg) continue;
    out << "<line x1=\"" << px(seg->first.x) << "\" y1=\"" << py(seg->first.y) << "\" x2=\"" << px(seg->second.x)
        << "\" y2=\"" << py(seg->second.y) << "\"/>\n";
  }
  out << "</g>\n<g fill=\"#cc3311\">\n";
  for (const auto& p : arr.points) out << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"2\"/>\n";
  out << "</g>\n"
      << "<text x=\"10\" y=\"" << viewport.height + 20 << "\" font-family=\"monospace\" font-size=\"14\">"
      << arr.points.size() << " points, " << arr.lines.size() << " lines, " << arr.incidences.size()
      << " incidences</text>\n"
      << "</svg>\n";
  return out.str();
}

}  // namespace girthforge
