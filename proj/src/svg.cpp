/*
 * Copyright 2026 The instanton-quiver Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "iq/svg.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace iq {

namespace {

constexpr long kOrigin = 320;
constexpr long kReach = 280;
constexpr long kMin = kOrigin - kReach;
constexpr long kMax = kOrigin + kReach;

struct Point {
  long x;
  long y;
};

long round_half_up(const Rational& v) {
  const Rational shifted = v + Rational(1, 2);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.numerator().get_mpz_t(), shifted.denominator().get_mpz_t());
  return q.get_si();
}

// Where the ray leaves the drawing square.
Point edge_point(const Ray& r) {
  const Rational m = std::max(abs(r.alpha), abs(r.gamma));
  return {kOrigin + round_half_up(Rational(kReach) * r.alpha / m),
          kOrigin - round_half_up(Rational(kReach) * r.gamma / m)};
}

Rational cross(const Ray& a, const Ray& b) { return a.alpha * b.gamma - a.gamma * b.alpha; }

// Counterclockwise angle order relative to `origin`.
bool relative_less(const Ray& origin, const Ray& x, const Ray& y) {
  auto h = [&](const Ray& r) {
    const auto c = cross(origin, r);
    const auto d = origin.alpha * r.alpha + origin.gamma * r.gamma;
    return (c.sign() > 0 || (c.is_zero() && d.sign() > 0)) ? 0 : 1;
  };
  const int hx = h(x);
  const int hy = h(y);
  if (hx != hy) return hx < hy;
  return cross(x, y).sign() > 0;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

void polygon(std::ostringstream& os, const std::vector<Point>& pts, const char* fill, const char* extra = "") {
  os << "  <polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << pts[i].x << ',' << pts[i].y;
  os << "\" fill=\"" << fill << "\"" << extra << "/>\n";
}

void text(std::ostringstream& os, long x, long y, const std::string& s, const char* anchor = "start") {
  os << "  <text x=\"" << x << "\" y=\"" << y << "\" text-anchor=\"" << anchor << "\">" << escape(s)
     << "</text>\n";
}

void line(std::ostringstream& os, Point a, Point b, const char* stroke, int width, const char* extra = "") {
  os << "  <line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y << "\" stroke=\""
     << stroke << "\" stroke-width=\"" << width << "\"" << extra << "/>\n";
}

void overlay_sector(std::ostringstream& os, const Sector& s) {
  const std::vector<Ray> corners{{Rational(1), Rational(1)},
                                 {Rational(-1), Rational(1)},
                                 {Rational(-1), Rational(-1)},
                                 {Rational(1), Rational(-1)}};
  std::vector<Ray> inner;
  for (const auto& c : corners)
    if (c != s.from && c != s.to && relative_less(s.from, c, s.to)) inner.push_back(c);
  std::sort(inner.begin(), inner.end(), [&](const Ray& x, const Ray& y) { return relative_less(s.from, x, y); });
  std::vector<Point> pts{{kOrigin, kOrigin}, edge_point(s.from)};
  for (const auto& c : inner) pts.push_back(edge_point(c));
  pts.push_back(edge_point(s.to));
  polygon(os, pts, "#3b7dd8", " fill-opacity=\"0.35\" stroke=\"#1f4e8c\" stroke-width=\"2\"");
}

}  // namespace

std::string render_regions_svg(const std::optional<SvgOverlay>& overlay) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"680\" "
        "viewBox=\"0 0 640 680\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"680\" fill=\"#ffffff\"/>\n";

  polygon(os, {{kMin, kMin}, {kMax, kMin}, {kMax, kOrigin}, {kOrigin, kOrigin}, {kOrigin, kMax}, {kMin, kMax}},
          "#e0e0e0");
  polygon(os, {{kOrigin, kOrigin}, {kOrigin, kMax}, {kMax, kMax}}, "#f6d7b0");
  polygon(os, {{kOrigin, kOrigin}, {kMax, kMax}, {kMax, kOrigin}}, "#cfe8c4");

  line(os, {kMin, kOrigin}, {kOrigin, kOrigin}, "#808080", 1);
  line(os, {kOrigin, kMin}, {kOrigin, kOrigin}, "#808080", 1);
  line(os, {kOrigin, kOrigin}, {kMax, kOrigin}, "#7a3fa0", 3, " stroke-dasharray=\"6,4\"");
  line(os, {kOrigin, kOrigin}, {kOrigin, kMax}, "#7a3fa0", 3, " stroke-dasharray=\"6,4\"");
  line(os, {kOrigin, kOrigin}, {kMax, kMax}, "#c0392b", 3);

  if (overlay) {
    for (const auto& s : overlay->region.sectors) overlay_sector(os, s);
    if (overlay->region.whole_plane)
      polygon(os, {{kMin, kMin}, {kMax, kMin}, {kMax, kMax}, {kMin, kMax}}, "#3b7dd8", " fill-opacity=\"0.35\"");
  }

  text(os, kMax + 6, kOrigin + 4, "α");
  text(os, kOrigin, kMin - 8, "γ", "middle");
  text(os, 60, 90, "empty: no semistable representations");
  text(os, 60, 106, "(outside the fourth quadrant)");
  text(os, kOrigin + 8, kMax - 40, "γ < −α: P⁵, quadric points are");
  text(os, kOrigin + 8, kMax - 24, "non-locally-free instanton sheaves");
  text(os, kMax - 8, kOrigin + 40, "γ > −α: P⁵, quadric points are", "end");
  text(os, kMax - 8, kOrigin + 56, "perverse instanton duals", "end");
  text(os, kMax - 12, kMax - 70, "wall γ = −α", "end");
  text(os, kOrigin + 8, kOrigin - 8, "quadrant boundary: semistable only");

  const long legend_y = kMax + 40;
  if (overlay) {
    os << "  <rect x=\"" << kMin << "\" y=\"" << legend_y - 10 << "\" width=\"12\" height=\"12\" fill=\"#3b7dd8\" "
       << "fill-opacity=\"0.35\" stroke=\"#1f4e8c\"/>\n";
    text(os, kMin + 18, legend_y, "stable region: " + overlay->label);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace iq
