#pragma once

#include <optional>
#include <string>
#include <vector>

#include "breakout/simulator.hpp"

namespace breakout {

struct FigureSpec {
  std::vector<OrbitEvent> events;
  std::size_t preperiod = 0;
  std::size_t period = 0;
  /// Cycled per period; preperiod bricks are drawn in `preperiod_color`.
  std::vector<std::string> colors{"#e4572e", "#4c72b0", "#55a868", "#8172b2", "#ccb974"};
  std::string preperiod_color = "#b0b0b0";
  double scale = 24.0;
  /// Launch point; the polyline starts here when set.
  std::optional<Point> start;
};

/// SVG 1.1 text. Bricks are numbered from 0 inside each period; the first
/// brick after the last complete period is drawn black. Events past that
/// marker are not drawn. Throws DomainError on an empty event list or a zero
/// period.
std::string render_svg(const FigureSpec& fig);

}  // namespace breakout
