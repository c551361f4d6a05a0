#include "fuzzydepth/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <vector>

#include "fuzzydepth/errors.hpp"

namespace fuzzydepth {

namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 560.0;
constexpr double kMarginX = 40.0;
constexpr double kMarginY = 20.0;

struct Rgb {
  int r, g, b;
};

// Fixed ramp endpoints (documented in the README):
//   top:    #FF0000 (deepest) -> #FFFF00
//   bottom: #7FFFD4 (shallowest) -> #EE82EE
constexpr Rgb kTopFrom{255, 0, 0};
constexpr Rgb kTopTo{255, 255, 0};
constexpr Rgb kBottomFrom{127, 255, 212};
constexpr Rgb kBottomTo{238, 130, 238};

Rgb lerp(Rgb from, Rgb to, double t) {
  auto mix = [t](int a, int b) {
    return static_cast<int>(std::lround(a + t * (b - a)));
  };
  return {mix(from.r, to.r), mix(from.g, to.g), mix(from.b, to.b)};
}

std::string hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

double depth_of(const ReportRow& row, DepthKind kind) {
  switch (kind) {
    case DepthKind::naive: return row.d_ns;
    case DepthKind::modified: return row.d_ms;
    case DepthKind::simplicial: return row.d_fs;
  }
  return row.d_ms;
}

std::string polygon(const Trapezoid& t, double x0, double x_scale,
                    const std::string& attrs) {
  auto px = [&](double x) { return kMarginX + (x - x0) * x_scale; };
  auto py = [](double membership) {
    return kHeight - kMarginY - membership * (kHeight - 2.0 * kMarginY);
  };
  std::string points = num(px(t.a)) + "," + num(py(0)) + " " + num(px(t.b)) +
                       "," + num(py(1)) + " " + num(px(t.c)) + "," +
                       num(py(1)) + " " + num(px(t.d)) + "," + num(py(0));
  return "<polygon points=\"" + points + "\" " + attrs + "/>\n";
}

}  // namespace

std::string render_svg(const ReportFile& report, const PlotOptions& options) {
  const auto& rows = report.rows;
  if (rows.empty()) throw DomainError("cannot plot an empty report");

  double lo = rows[0].shape.a, hi = rows[0].shape.d;
  for (const ReportRow& r : rows) {
    lo = std::min(lo, r.shape.a);
    hi = std::max(hi, r.shape.d);
  }
  if (options.highlight_median) {
    lo = std::min(lo, report.median.a);
    hi = std::max(hi, report.median.d);
  }
  if (hi <= lo) hi = lo + 1.0;
  double x_scale = (kWidth - 2.0 * kMarginX) / (hi - lo);

  // Deepest first, ties broken by input order.
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return depth_of(rows[i], options.by) > depth_of(rows[j], options.by);
  });

  std::size_t top_k = std::min(options.top_k, rows.size());
  std::size_t bottom_k = std::min(options.bottom_k, rows.size() - top_k);
  std::vector<std::string> color(rows.size());
  for (std::size_t i = 0; i < bottom_k; ++i) {
    double t = bottom_k > 1
                   ? static_cast<double>(i) / static_cast<double>(bottom_k - 1)
                   : 0.0;
    color[order[rows.size() - 1 - i]] = hex(lerp(kBottomFrom, kBottomTo, t));
  }
  for (std::size_t i = 0; i < top_k; ++i) {
    double t =
        top_k > 1 ? static_cast<double>(i) / static_cast<double>(top_k - 1)
                  : 0.0;
    color[order[i]] = hex(lerp(kTopFrom, kTopTo, t));
  }

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
         " " + num(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  // Grey base layer, then the colored items on top in depth order.
  for (const ReportRow& r : rows)
    svg += polygon(r.shape, lo, x_scale,
                   "fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"1\"");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (color[*it].empty()) continue;
    svg += polygon(rows[*it].shape, lo, x_scale,
                   "fill=\"none\" stroke=\"" + color[*it] +
                       "\" stroke-width=\"2\" class=\"depth-colored\"");
  }
  if (options.highlight_median)
    svg += polygon(report.median, lo, x_scale,
                   "fill=\"none\" stroke=\"#000000\" stroke-width=\"2.5\" "
                   "class=\"median\"");
  svg += "</svg>\n";
  return svg;
}

}  // namespace fuzzydepth
