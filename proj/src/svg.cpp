#include "pdicke/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

namespace pdicke {
namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kPaletteSize = 6;

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmtg(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

struct Range {
  double lo = 0.0, hi = 1.0;
  bool seen = false;
  void take(double v) {
    if (!std::isfinite(v)) return;
    if (!seen) {
      lo = hi = v;
      seen = true;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  void pad() {
    if (!seen) {
      lo = 0.0;
      hi = 1.0;
    }
    double span = hi - lo;
    if (span <= 0.0) span = std::max(1.0, std::abs(hi));
    lo -= 0.05 * span;
    hi += 0.05 * span;
  }
};

struct Panel {
  double x0, y0, w, h;
  Range xr, yr;
  double sx(double v) const { return x0 + (v - xr.lo) / (xr.hi - xr.lo) * w; }
  double sy(double v) const { return y0 + h - (v - yr.lo) / (yr.hi - yr.lo) * h; }
};

using Points = std::vector<std::pair<double, double>>;

void append_polyline(std::string& svg, const Panel& p, const Points& pts,
                     const char* color, bool dashed) {
  std::string attr;
  Points run;
  auto flush = [&] {
    if (run.size() < 2) {
      run.clear();
      return;
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\"";
    if (dashed) svg += " stroke-dasharray=\"6 3\"";
    svg += " points=\"";
    for (const auto& [x, y] : run) {
      svg += fmt2(p.sx(x));
      svg += ",";
      svg += fmt2(p.sy(y));
      svg += " ";
    }
    svg += "\"/>\n";
    run.clear();
  };
  for (const auto& pt : pts) {
    if (std::isfinite(pt.first) && std::isfinite(pt.second)) {
      run.push_back(pt);
    } else {
      flush();
    }
  }
  flush();
}

void append_axes(std::string& svg, const Panel& p, const std::string& title,
                 const std::string& xlabel) {
  svg += "<rect x=\"" + fmt2(p.x0) + "\" y=\"" + fmt2(p.y0) + "\" width=\"" +
         fmt2(p.w) + "\" height=\"" + fmt2(p.h) +
         "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  for (int i = 0; i <= 2; ++i) {
    const double t = i / 2.0;
    const double xv = p.xr.lo + t * (p.xr.hi - p.xr.lo);
    const double yv = p.yr.lo + t * (p.yr.hi - p.yr.lo);
    svg += "<text x=\"" + fmt2(p.sx(xv)) + "\" y=\"" + fmt2(p.y0 + p.h + 16) +
           "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#333\">" + fmtg(xv) +
           "</text>\n";
    svg += "<text x=\"" + fmt2(p.x0 - 6) + "\" y=\"" + fmt2(p.sy(yv) + 3) +
           "\" font-size=\"10\" text-anchor=\"end\" fill=\"#333\">" + fmtg(yv) +
           "</text>\n";
  }
  svg += "<text x=\"" + fmt2(p.x0 + p.w / 2) + "\" y=\"" + fmt2(p.y0 - 8) +
         "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#111\">" + title +
         "</text>\n";
  svg += "<text x=\"" + fmt2(p.x0 + p.w / 2) + "\" y=\"" + fmt2(p.y0 + p.h + 32) +
         "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#111\">" + xlabel +
         "</text>\n";
}

}  // namespace

std::string render_scan_svg(const std::vector<ScanRecord>& records,
                            const std::string& param_name) {
  std::map<double, Points> jz_by_j, n_by_j;
  Points a_jz, a_n;
  double j_max = -1.0;
  for (const auto& r : records) {
    jz_by_j[r.j].push_back({r.coupling, r.jz_over_j});
    n_by_j[r.j].push_back({r.coupling, r.n_over_j});
    j_max = std::max(j_max, r.j);
  }
  for (const auto& r : records) {
    if (r.j == j_max) {
      a_jz.push_back({r.coupling, r.analytic_jz});
      a_n.push_back({r.coupling, r.analytic_n});
    }
  }

  Panel left{60, 40, 280, 280};
  Panel right{440, 40, 280, 280};
  for (const auto& r : records) {
    left.xr.take(r.coupling);
    right.xr.take(r.coupling);
    left.yr.take(r.jz_over_j);
    left.yr.take(r.analytic_jz);
    right.yr.take(r.n_over_j);
    right.yr.take(r.analytic_n);
  }
  left.xr.pad();
  left.yr.pad();
  right.xr.pad();
  right.yr.pad();

  std::string svg;
  svg +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"780\" "
      "height=\"380\" viewBox=\"0 0 780 380\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"780\" height=\"380\" fill=\"#ffffff\"/>\n";

  append_axes(svg, left, "Jz / j", param_name);
  append_axes(svg, right, "n / j", param_name);

  int idx = 0;
  double legend_y = 52;
  for (const auto& [j, pts] : jz_by_j) {
    const char* color = kPalette[idx % kPaletteSize];
    append_polyline(svg, left, pts, color, false);
    append_polyline(svg, right, n_by_j[j], color, false);
    svg += "<line x1=\"730\" y1=\"" + fmt2(legend_y) + "\" x2=\"750\" y2=\"" +
           fmt2(legend_y) + "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"754\" y=\"" + fmt2(legend_y + 3) +
           "\" font-size=\"10\" fill=\"#111\">j=" + fmtg(j) + "</text>\n";
    legend_y += 16;
    ++idx;
  }
  append_polyline(svg, left, a_jz, "#111111", true);
  append_polyline(svg, right, a_n, "#111111", true);
  svg += "<line x1=\"730\" y1=\"" + fmt2(legend_y) + "\" x2=\"750\" y2=\"" +
         fmt2(legend_y) +
         "\" stroke=\"#111111\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>\n";
  svg += "<text x=\"754\" y=\"" + fmt2(legend_y + 3) +
         "\" font-size=\"10\" fill=\"#111\">limit</text>\n";

  svg += "</svg>\n";
  return svg;
}

}  // namespace pdicke
