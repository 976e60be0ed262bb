#include "auxin/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace auxin::svg {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 480;
constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 55;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!std::isfinite(lo)) lo = 0, hi = 1;
    if (hi - lo < 1e-12) lo -= 0.5, hi += 0.5;
    const double pad = 0.04 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
};

class Canvas {
 public:
  Canvas(Range x, Range y) : x_(x), y_(y) {
    os_ << std::setprecision(6);
    os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  double px(double x) const { return kLeft + (x - x_.lo) / (x_.hi - x_.lo) * (kWidth - kLeft - kRight); }
  double py(double y) const { return kHeight - kBottom - (y - y_.lo) / (y_.hi - y_.lo) * (kHeight - kTop - kBottom); }

  std::ostringstream& out() { return os_; }

  void axes(const std::string& x_label, const std::string& y_label, const std::string& title) {
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    os_ << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\"" << y0 - y1
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 5; ++k) {
      const double xv = x_.lo + k * (x_.hi - x_.lo) / 5;
      const double yv = y_.lo + k * (y_.hi - y_.lo) / 5;
      os_ << "<line x1=\"" << px(xv) << "\" y1=\"" << y0 << "\" x2=\"" << px(xv) << "\" y2=\"" << y0 + 5
          << "\" stroke=\"black\"/>\n";
      os_ << "<text x=\"" << px(xv) << "\" y=\"" << y0 + 18 << "\" text-anchor=\"middle\">" << tick(xv)
          << "</text>\n";
      os_ << "<line x1=\"" << x0 - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << x0 << "\" y2=\"" << py(yv)
          << "\" stroke=\"black\"/>\n";
      os_ << "<text x=\"" << x0 - 8 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << tick(yv)
          << "</text>\n";
    }
    os_ << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">"
        << escape(x_label) << "</text>\n";
    os_ << "<text x=\"18\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << (y0 + y1) / 2 << ")\">" << escape(y_label) << "</text>\n";
    if (!title.empty()) {
      os_ << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
          << "</text>\n";
    }
  }

  void polyline(const std::vector<double>& xs, const std::vector<double>& ys, std::size_t from, std::size_t to,
                const std::string& color, bool dotted) {
    os_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (dotted) os_ << " stroke-dasharray=\"2,3\"";
    os_ << " points=\"";
    for (std::size_t k = from; k < to; ++k) os_ << (k == from ? "" : " ") << px(xs[k]) << "," << py(ys[k]);
    os_ << "\"/>\n";
  }

  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  static std::string tick(double v) {
    std::ostringstream ss;
    ss << std::setprecision(3) << v;
    return ss.str();
  }

  Range x_, y_;
  std::ostringstream os_;
};

}  // namespace

std::string line_plot(const std::vector<Series>& series, const std::string& x_label, const std::string& y_label,
                      const std::string& title) {
  Range xr, yr;
  for (const auto& s : series) {
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  xr.finish();
  yr.finish();
  Canvas c(xr, yr);
  c.axes(x_label, y_label, title);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const std::string color = kPalette[k % std::size(kPalette)];
    c.polyline(s.x, s.y, 0, std::min(s.x.size(), s.y.size()), color, false);
    if (!s.label.empty()) {
      c.out() << "<text x=\"" << kWidth - kRight - 10 << "\" y=\"" << kTop + 16 + 16 * k
              << "\" text-anchor=\"end\" fill=\"" << color << "\">" << escape(s.label) << "</text>\n";
    }
  }
  return c.finish();
}

std::string bifurcation_diagram(const std::vector<Branch>& branches, int probe_cell, const std::string& title) {
  Range xr, yr;
  for (const auto& b : branches) {
    for (const auto& pt : b.points) {
      xr.add(pt.lambda);
      yr.add(pt.a_at(probe_cell));
    }
  }
  xr.finish();
  yr.finish();
  Canvas c(xr, yr);
  const std::string param = branches.empty() ? "lambda" : std::string(param_name(branches.front().param));
  c.axes(param, "a_" + std::to_string(probe_cell), title);
  for (std::size_t bi = 0; bi < branches.size(); ++bi) {
    const auto& b = branches[bi];
    const std::string color = kPalette[bi % std::size(kPalette)];
    std::vector<double> xs, ys;
    for (const auto& pt : b.points) {
      xs.push_back(pt.lambda);
      ys.push_back(pt.a_at(probe_cell));
    }
    // Segments of constant stability; a thin connector bridges segment ends.
    std::size_t start = 0;
    for (std::size_t k = 1; k <= b.points.size(); ++k) {
      if (k == b.points.size() || b.points[k].stability.stable() != b.points[start].stability.stable()) {
        c.polyline(xs, ys, start, k, color, !b.points[start].stability.stable());
        if (k < b.points.size()) {
          c.out() << "<line x1=\"" << c.px(xs[k - 1]) << "\" y1=\"" << c.py(ys[k - 1]) << "\" x2=\"" << c.px(xs[k])
                  << "\" y2=\"" << c.py(ys[k]) << "\" stroke=\"" << color << "\" stroke-dasharray=\"2,3\"/>\n";
        }
        start = k;
      }
    }
    for (const auto& ev : b.events) {
      if (ev.u.size() == 0) continue;
      const double ex = c.px(ev.lambda);
      const double ey = c.py(ev.u(ev.u.size() / 2 + probe_cell - 1));
      c.out() << "<circle cx=\"" << ex << "\" cy=\"" << ey << "\" r=\"4\" fill=\"black\"/>\n";
      c.out() << "<text x=\"" << ex + 6 << "\" y=\"" << ey - 6 << "\">" << event_name(ev.kind) << "</text>\n";
    }
  }
  return c.finish();
}

std::string stability_heatmap(const StabilityGrid& grid, const BoundaryTypeCurve* boundary) {
  Range xr{grid.x.value(0), grid.x.value(grid.x.count - 1)};
  Range yr{grid.y.value(0), grid.y.value(grid.y.count - 1)};
  Canvas c(xr, yr);
  const double cw = (kWidth - kLeft - kRight) / grid.x.count;
  const double ch = (kHeight - kTop - kBottom) / grid.y.count;
  for (int j = 0; j < grid.y.count; ++j) {
    for (int i = 0; i < grid.x.count; ++i) {
      const CellState s = grid.at(i, j);
      const char* fill = s == CellState::Stable ? "#b0b0b0" : s == CellState::Unstable ? "white" : "#f4a0a0";
      c.out() << "<rect x=\"" << kLeft + i * cw << "\" y=\"" << kHeight - kBottom - (j + 1) * ch << "\" width=\""
              << cw + 0.2 << "\" height=\"" << ch + 0.2 << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  c.axes(std::string(param_name(grid.x.param)), std::string(param_name(grid.y.param)), "stability of the trivial solution");
  if (boundary != nullptr) {
    for (const auto& s : boundary->samples) {
      const char* color = s.unresolved ? "orange" : s.kind == EventKind::Hopf ? "#d62728" : "#1f77b4";
      c.out() << "<circle cx=\"" << c.px(s.x) << "\" cy=\"" << c.py(s.y) << "\" r=\"2\" fill=\"" << color << "\"/>\n";
    }
    c.out() << "<text x=\"" << kLeft + 8 << "\" y=\"" << kTop + 16 << "\" fill=\"#1f77b4\">BP</text>\n";
    c.out() << "<text x=\"" << kLeft + 36 << "\" y=\"" << kTop + 16 << "\" fill=\"#d62728\">Hopf</text>\n";
  }
  return c.finish();
}

std::string space_time(const Trajectory& traj, const std::string& title) {
  if (traj.size() == 0) return Canvas(Range{0, 1}, Range{0, 1}).finish();
  const int n = traj.states.front().cells();
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& s : traj.states) {
    lo = std::min(lo, s.a().minCoeff());
    hi = std::max(hi, s.a().maxCoeff());
  }
  if (hi - lo < 1e-12) hi = lo + 1;
  Range xr{0.5, n + 0.5};
  Range yr{traj.times.front(), std::max(traj.times.back(), traj.times.front() + 1e-12)};
  Canvas c(xr, yr);
  // At most ~200 rows are drawn.
  const std::size_t stride = std::max<std::size_t>(1, traj.size() / 200);
  const double cw = (kWidth - kLeft - kRight) / n;
  for (std::size_t r = 0; r < traj.size(); r += stride) {
    const std::size_t r_next = std::min(r + stride, traj.size() - 1);
    const double y_top = c.py(traj.times[r_next]);
    const double height = std::max(c.py(traj.times[r]) - y_top, 0.5);
    for (int i = 0; i < n; ++i) {
      const double f = (traj.states[r].a()(i) - lo) / (hi - lo);
      const int red = static_cast<int>(255 * f);
      const int blue = 255 - red;
      c.out() << "<rect x=\"" << kLeft + i * cw << "\" y=\"" << y_top << "\" width=\"" << cw + 0.2
              << "\" height=\"" << height + 0.2 << "\" fill=\"rgb(" << red << ",40," << blue << ")\"/>\n";
    }
  }
  c.axes("cell", "t", title);
  return c.finish();
}

}  // namespace auxin::svg
