#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace qess {

// Static 800x600 SVG 1.1 line chart: linear axes, 10 ticks per axis, no
// external assets. xs and ys must have equal nonzero length.
void write_line_chart(std::ostream& os, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      std::span<const double> xs, std::span<const double> ys);

}  // namespace qess
