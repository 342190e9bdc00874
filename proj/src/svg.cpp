// Copyright 2026 The kgon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kgon/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kgon {

namespace {

constexpr const char* kPalette[] = {"#f2c200", "#d62728", "#1f77b4", "#2ca02c",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

Coord CeilDiv(Coord a, Coord b) { return (a + b - 1) / b; }

}  // namespace

std::string RenderSvg(const ConvexPolygon& polygon, const std::vector<Overlay>& overlays) {
  const std::size_t n = polygon.size();
  for (const Overlay& overlay : overlays) {
    for (std::size_t i : overlay.indices) {
      if (i >= n) {
        throw Error(ErrorCode::kOutOfRange, "overlay '" + overlay.label + "' uses vertex " +
                                                std::to_string(i) + " but n=" +
                                                std::to_string(n));
      }
    }
  }

  Coord min_x = polygon[0].x, max_x = polygon[0].x;
  Coord min_y = polygon[0].y, max_y = polygon[0].y;
  for (const Point2& p : polygon.vertices()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const Coord w = max_x - min_x;
  const Coord h = max_y - min_y;
  const Coord margin_x = std::max<Coord>(1, CeilDiv(w, 20));
  const Coord margin_y = std::max<Coord>(1, CeilDiv(h, 20));
  const Coord size = std::max(w, h);
  const Coord stroke = std::max<Coord>(1, size / 400);
  const Coord font = std::max<Coord>(1, size / 40);
  const Coord dot = std::max<Coord>(1, size / 250);

  // SVG's y axis points down; mirror so the polygon keeps its orientation.
  auto sx = [&](Coord x) { return x; };
  auto sy = [&](Coord y) { return min_y + max_y - y; };

  const Coord view_w = w + 2 * margin_x;
  const Coord view_h = h + 2 * margin_y;
  const Coord pixel_w = 800;
  const Coord pixel_h = std::max<Coord>(1, (pixel_w * view_h + view_w / 2) / view_w);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (min_x - margin_x) << ' '
      << (min_y - margin_y) << ' ' << view_w << ' ' << view_h << "\" width=\"" << pixel_w
      << "\" height=\"" << pixel_h << "\">\n";
  out << "  <rect x=\"" << (min_x - margin_x) << "\" y=\"" << (min_y - margin_y)
      << "\" width=\"" << view_w << "\" height=\"" << view_h << "\" fill=\"white\"/>\n";

  for (std::size_t o = 0; o < overlays.size(); ++o) {
    const char* color = kPalette[o % std::size(kPalette)];
    out << "  <polygon class=\"overlay\" points=\"";
    for (std::size_t j = 0; j < overlays[o].indices.size(); ++j) {
      const Point2& p = polygon[overlays[o].indices[j]];
      out << (j ? " " : "") << sx(p.x) << ',' << sy(p.y);
    }
    out << "\" fill=\"" << color << "\" fill-opacity=\"0.35\" stroke=\"" << color
        << "\" stroke-width=\"" << stroke << "\"/>\n";
  }

  out << "  <path class=\"outline\" d=\"";
  for (std::size_t i = 0; i < n; ++i) {
    out << (i ? " L " : "M ") << sx(polygon[i].x) << ' ' << sy(polygon[i].y);
  }
  out << " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke << "\"/>\n";

  Wide sum_x = 0, sum_y = 0;
  for (const Point2& p : polygon.vertices()) {
    sum_x += p.x;
    sum_y += p.y;
  }
  const double cx = static_cast<double>(sum_x) / static_cast<double>(n);
  const double cy = static_cast<double>(sum_y) / static_cast<double>(n);
  out << "  <g class=\"vertices\" font-family=\"sans-serif\" font-size=\"" << font << "\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = polygon[i];
    const double dx = static_cast<double>(p.x) - cx;
    const double dy = static_cast<double>(p.y) - cy;
    const double len = std::max(1.0, std::hypot(dx, dy));
    const Coord lx = p.x + static_cast<Coord>(std::lround(dx / len * static_cast<double>(font)));
    const Coord ly = p.y + static_cast<Coord>(std::lround(dy / len * static_cast<double>(font)));
    out << "    <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"" << dot
        << "\"/>\n";
    out << "    <text x=\"" << sx(lx) << "\" y=\"" << sy(ly)
        << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">a<tspan font-size=\"70%\" "
           "baseline-shift=\"sub\">"
        << (i + 1) << "</tspan></text>\n";
  }
  out << "  </g>\n";

  if (!overlays.empty()) {
    const Coord left = min_x - margin_x + font / 2;
    const Coord top = min_y - margin_y + font / 2;
    out << "  <g class=\"legend\" font-family=\"sans-serif\" font-size=\"" << font << "\">\n";
    for (std::size_t o = 0; o < overlays.size(); ++o) {
      const char* color = kPalette[o % std::size(kPalette)];
      const Coord y = top + static_cast<Coord>(o) * font * 3 / 2;
      out << "    <g class=\"legend-entry\"><rect x=\"" << left << "\" y=\"" << y
          << "\" width=\"" << font << "\" height=\"" << font << "\" fill=\"" << color
          << "\" fill-opacity=\"0.6\"/><text x=\"" << (left + font * 3 / 2) << "\" y=\""
          << (y + font * 4 / 5) << "\">" << Escape(overlays[o].label) << "</text></g>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace kgon
