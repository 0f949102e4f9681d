#include "qess/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qess {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 600;
constexpr int kMarginLeft = 80;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 50;
constexpr int kMarginBottom = 70;
constexpr int kTicks = 10;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string px(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Range {
  double lo, hi;
};

Range padded_range(std::span<const double> values) {
  double lo = values[0], hi = values[0];
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (lo == hi) {
    const double pad = (lo == 0.0) ? 1.0 : std::abs(lo) * 0.1;
    lo -= pad;
    hi += pad;
  }
  return {lo, hi};
}

}  // namespace

void write_line_chart(std::ostream& os, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      std::span<const double> xs, std::span<const double> ys) {
  if (xs.empty() || xs.size() != ys.size()) {
    throw std::invalid_argument("line chart needs equal-length nonempty data");
  }

  const Range xr = padded_range(xs);
  const Range yr = padded_range(ys);
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto x_px = [&](double x) {
    return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  const auto y_px = [&](double y) {
    return kMarginTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h;
  };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << kWidth << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth
     << ' ' << kHeight << "\">\n"
     << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" fill=\"white\"/>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"18\">"
     << title << "</text>\n";

  // axes
  const double x0 = kMarginLeft, x1 = kWidth - kMarginRight;
  const double y0 = kMarginTop + plot_h, y1 = kMarginTop;
  os << "<line x1=\"" << px(x0) << "\" y1=\"" << px(y0) << "\" x2=\""
     << px(x1) << "\" y2=\"" << px(y0) << "\" stroke=\"black\"/>\n"
     << "<line x1=\"" << px(x0) << "\" y1=\"" << px(y0) << "\" x2=\""
     << px(x0) << "\" y2=\"" << px(y1) << "\" stroke=\"black\"/>\n";

  for (int i = 0; i < kTicks; ++i) {
    const double f = static_cast<double>(i) / (kTicks - 1);
    const double xv = xr.lo + f * (xr.hi - xr.lo);
    const double yv = yr.lo + f * (yr.hi - yr.lo);
    const double xp = x_px(xv);
    const double yp = y_px(yv);
    os << "<line class=\"xtick\" x1=\"" << px(xp) << "\" y1=\"" << px(y0)
       << "\" x2=\"" << px(xp) << "\" y2=\"" << px(y0 + 6)
       << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << px(xp) << "\" y=\"" << px(y0 + 22)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"11\">"
       << num(xv) << "</text>\n"
       << "<line class=\"ytick\" x1=\"" << px(x0 - 6) << "\" y1=\"" << px(yp)
       << "\" x2=\"" << px(x0) << "\" y2=\"" << px(yp)
       << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << px(x0 - 9) << "\" y=\"" << px(yp + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
          "font-size=\"11\">"
       << num(yv) << "</text>\n";
  }

  os << "<text x=\"" << (kMarginLeft + plot_w / 2) << "\" y=\""
     << (kHeight - 18)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"14\">"
     << x_label << "</text>\n"
     << "<text x=\"20\" y=\"" << (kMarginTop + plot_h / 2)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"14\" transform=\"rotate(-90 20 "
     << (kMarginTop + plot_h / 2) << ")\">" << y_label << "</text>\n";

  os << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" "
        "points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) os << ' ';
    os << px(x_px(xs[i])) << ',' << px(y_px(ys[i]));
  }
  os << "\"/>\n</svg>\n";
}

}  // namespace qess
