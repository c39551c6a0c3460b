#include "breakout/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace breakout {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const FigureSpec& fig) {
  if (fig.events.empty()) throw DomainError("figure needs at least one event");
  if (fig.period == 0) throw DomainError("figure period must be positive");
  if (fig.colors.empty()) throw DomainError("figure needs at least one color");
  if (!(fig.scale > 0)) throw DomainError("figure scale must be positive");

  // Events drawn: preperiod, complete periods, and at most one marker brick.
  const std::size_t n = fig.events.size();
  const std::size_t periodic = n > fig.preperiod ? n - fig.preperiod : 0;
  const std::size_t full = periodic / fig.period;
  std::size_t drawn = std::min(n, fig.preperiod + full * fig.period);
  bool has_marker = false;
  if (drawn < n && n > fig.preperiod) {
    ++drawn;
    has_marker = true;
  }

  long long min_x = kOriginHole.x, max_x = kOriginHole.x + 1;
  long long min_y = kOriginHole.y, max_y = kOriginHole.y + 1;
  for (std::size_t i = 0; i < drawn; ++i) {
    const BrickId& b = fig.events[i].brick;
    min_x = std::min(min_x, b.x);
    max_x = std::max(max_x, b.x + 1);
    min_y = std::min(min_y, b.y);
    max_y = std::max(max_y, b.y + 1);
  }
  const double s = fig.scale;
  const double margin = 1.0;
  const auto px = [&](double x) { return (x - min_x + margin) * s; };
  const auto py = [&](double y) { return (max_y - y + margin) * s; };
  const double width = (max_x - min_x + 2 * margin) * s;
  const double height = (max_y - min_y + 2 * margin) * s;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\"white\"/>\n";

  out << "<rect x=\"" << num(px(kOriginHole.x)) << "\" y=\"" << num(py(kOriginHole.y + 1)) << "\" width=\"" << num(s)
      << "\" height=\"" << num(s) << "\" fill=\"none\" stroke=\"#808080\" stroke-dasharray=\"3,3\"/>\n";

  out << "<g stroke=\"white\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < drawn; ++i) {
    const BrickId& b = fig.events[i].brick;
    std::string fill;
    std::size_t label = i;
    if (i < fig.preperiod) {
      fill = fig.preperiod_color;
    } else {
      const std::size_t k = i - fig.preperiod;
      label = k % fig.period;
      const bool marker = has_marker && i + 1 == drawn;
      fill = marker ? "black" : fig.colors[(k / fig.period) % fig.colors.size()];
    }
    out << "<rect x=\"" << num(px(b.x)) << "\" y=\"" << num(py(b.y + 1)) << "\" width=\"" << num(s) << "\" height=\""
        << num(s) << "\" fill=\"" << fill << "\"><title>" << i << "</title></rect>\n";
    out << "<text x=\"" << num(px(b.x + 0.5)) << "\" y=\"" << num(py(b.y + 0.5)) << "\" font-size=\"" << num(s * 0.4)
        << "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"white\" stroke=\"none\">" << label
        << "</text>\n";
  }
  out << "</g>\n";

  out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
  bool first = true;
  const auto vertex = [&](const Point& p) {
    if (!first) out << ' ';
    out << num(px(p.x.to_double())) << ',' << num(py(p.y.to_double()));
    first = false;
  };
  if (fig.start) vertex(*fig.start);
  for (std::size_t i = 0; i < drawn; ++i) vertex(fig.events[i].hit);
  out << "\"/>\n</svg>\n";
  return out.str();
}

}  // namespace breakout
