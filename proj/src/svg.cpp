#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "prga/errors.hpp"
#include "prga/harness.hpp"

namespace prga {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v, const char* fmt = "%.2f") {
    char buf[32];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

struct Point {
    double x;
    double y;
};

struct Series {
    std::string label;
    std::vector<Point> empirical;
    std::vector<Point> bound;
};

// Nice tick spacing covering [lo, hi] with about five intervals.
double tick_step(double lo, double hi) {
    const double raw = (hi - lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        if (m * mag >= raw) return m * mag;
    }
    return 10.0 * mag;
}

std::string polyline(const std::vector<Point>& pts, const auto& sx, const auto& sy, const char* color,
                     bool dashed) {
    std::string s = "  <polyline fill=\"none\" stroke=\"";
    s += color;
    s += "\" stroke-width=\"2\"";
    if (dashed) s += " stroke-dasharray=\"8,5\"";
    s += " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ' ';
        s += num(sx(pts[i].x)) + ',' + num(sy(pts[i].y));
    }
    s += "\"/>\n";
    return s;
}

}  // namespace

std::string render_svg(const std::vector<SweepCell>& cells) {
    if (cells.empty()) throw DomainError("no cells to render");
    const bool mu_sweep = cells.front().mode == SweepMode::MuSweep;

    std::map<double, Series> grouped;
    for (const auto& c : cells) {
        const double key = mu_sweep ? c.alpha : c.mu;
        Series& s = grouped[key];
        s.label = (mu_sweep ? "\xce\xb1 = " : "\xce\xbc = ") + num(key, "%g");
        const double x = mu_sweep ? c.mu : c.alpha;
        s.empirical.push_back({x, mu_sweep ? c.min_residual : c.final_residual});
        if (c.lower_bound) s.bound.push_back({x, *c.lower_bound});
    }

    double xmin = mu_sweep ? cells.front().mu : cells.front().alpha;
    double xmax = xmin;
    double ymax = 0.0;
    for (const auto& [key, s] : grouped) {
        for (const auto* pts : {&s.empirical, &s.bound}) {
            for (const auto& p : *pts) {
                xmin = std::min(xmin, p.x);
                xmax = std::max(xmax, p.x);
                ymax = std::max(ymax, p.y);
            }
        }
    }
    if (xmax <= xmin) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax <= 0.0) ymax = 1.0;
    const double ystep = tick_step(0.0, ymax * 1.05);
    const double ytop = std::ceil(ymax * 1.05 / ystep) * ystep;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double y) { return kTop + plot_h - y / ytop * plot_h; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out += "  <text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">";
    out += mu_sweep ? "Minimum residual norm vs coherence" : "Final residual norm vs step-size exponent";
    out += "</text>\n";

    // axes
    out += "  <g stroke=\"black\" stroke-width=\"1\">\n";
    out += "    <line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" + num(kLeft + plot_w) +
           "\" y2=\"" + num(kTop + plot_h) + "\"/>\n";
    out += "    <line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
           num(kTop + plot_h) + "\"/>\n";
    out += "  </g>\n";

    out += "  <g font-family=\"sans-serif\" font-size=\"12\">\n";
    const double xstep = tick_step(xmin, xmax);
    for (double t = std::ceil(xmin / xstep - 1e-9) * xstep; t <= xmax + 1e-9 * xstep; t += xstep) {
        const double px = sx(t);
        out += "    <line x1=\"" + num(px) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" + num(px) + "\" y2=\"" +
               num(kTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
        out += "    <text x=\"" + num(px) + "\" y=\"" + num(kTop + plot_h + 20) + "\" text-anchor=\"middle\">" +
               num(std::abs(t) < 1e-12 ? 0.0 : t, "%g") + "</text>\n";
    }
    for (double t = 0.0; t <= ytop + 1e-9 * ystep; t += ystep) {
        const double py = sy(t);
        out += "    <line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
               num(py) + "\" stroke=\"black\"/>\n";
        out += "    <text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py + 4) + "\" text-anchor=\"end\">" +
               num(t, "%g") + "</text>\n";
    }
    out += "    <text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 20) +
           "\" text-anchor=\"middle\" font-size=\"14\">" + (mu_sweep ? "\xce\xbc" : "\xce\xb1") + "</text>\n";
    out += "    <text x=\"20\" y=\"" + num(kTop + plot_h / 2) + "\" text-anchor=\"middle\" font-size=\"14\" " +
           "transform=\"rotate(-90 20 " + num(kTop + plot_h / 2) + ")\">residual norm</text>\n";
    out += "  </g>\n";

    std::size_t color = 0;
    std::string legend;
    double ly = kTop + 15;
    for (const auto& [key, s] : grouped) {
        const char* c = kPalette[color++ % std::size(kPalette)];
        out += polyline(s.empirical, sx, sy, c, false);
        if (!s.bound.empty()) out += polyline(s.bound, sx, sy, c, true);

        const double lx = kLeft + plot_w - 190;
        legend += "    <line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 30) + "\" y2=\"" +
                  num(ly) + "\" stroke=\"" + c + "\" stroke-width=\"2\"/>\n";
        legend += "    <text x=\"" + num(lx + 36) + "\" y=\"" + num(ly + 4) + "\">" + s.label + " PRGA</text>\n";
        ly += 18;
        if (!s.bound.empty()) {
            legend += "    <line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 30) + "\" y2=\"" +
                      num(ly) + "\" stroke=\"" + c + "\" stroke-width=\"2\" stroke-dasharray=\"8,5\"/>\n";
            legend += "    <text x=\"" + num(lx + 36) + "\" y=\"" + num(ly + 4) + "\">" + s.label +
                      " lower bound</text>\n";
            ly += 18;
        }
    }
    out += "  <g font-family=\"sans-serif\" font-size=\"12\">\n" + legend + "  </g>\n";
    out += "</svg>\n";
    return out;
}

void render_svg(const std::vector<SweepCell>& cells, const std::string& path) {
    write_text_file(path, render_svg(cells));
}

}  // namespace prga
