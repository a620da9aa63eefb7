#include "gtpac/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gtpac/csv.hpp"
#include "gtpac/errors.hpp"

namespace gtpac {

namespace {

constexpr int kWidth = 760;
constexpr int kHeight = 520;
constexpr int kMarginLeft = 78;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 46;
constexpr int kMarginBottom = 64;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

struct AxisScale {
    double lo = 0.0, hi = 1.0;
    bool log = false;

    double to_unit(double v) const {
        if (log) return (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
        return (v - lo) / (hi - lo);
    }
};

std::string fmt(double v) { return csv_format(v); }

/// Tick labels don't need round-trip precision; six significant digits
/// keep 0.1-step grids free of float dust.
std::string fmt_tick(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<double> linear_ticks(double lo, double hi) {
    const double span = hi - lo;
    if (!(span > 0)) return {lo};
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double mult : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        if (mag * mult >= raw) {
            step = mag * mult;
            break;
        }
    }
    std::vector<double> ticks;
    const long long first = static_cast<long long>(std::ceil(lo / step));
    for (long long i = first; static_cast<double>(i) * step <= hi + step * 1e-9; ++i)
        ticks.push_back(i == 0 ? 0.0 : static_cast<double>(i) * step);
    return ticks;
}

std::vector<double> log_ticks(double lo, double hi) {
    std::vector<double> ticks;
    const int e_lo = static_cast<int>(std::floor(std::log10(lo)));
    const int e_hi = static_cast<int>(std::ceil(std::log10(hi)));
    for (int e = e_lo; e <= e_hi; ++e) {
        const double t = std::pow(10.0, e);
        if (t >= lo * (1 - 1e-12) && t <= hi * (1 + 1e-12)) ticks.push_back(t);
    }
    if (ticks.size() < 2) return {lo, hi};
    return ticks;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out.push_back(ch);
        }
    }
    return out;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void SvgPlot::add_line(const std::string& name, std::vector<double> x, std::vector<double> y,
                       bool dashed) {
    if (x.size() != y.size()) throw InvalidParameter("series", "x/y length mismatch");
    series_.push_back({name, std::move(x), std::move(y), false, dashed});
}

void SvgPlot::add_scatter(const std::string& name, std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size()) throw InvalidParameter("series", "x/y length mismatch");
    series_.push_back({name, std::move(x), std::move(y), true, false});
}

void SvgPlot::add_heatmap(const std::vector<double>& x, const std::vector<double>& y,
                          const std::vector<std::vector<double>>& z) {
    if (z.size() != y.size()) throw InvalidParameter("heatmap", "z rows must match y");
    for (const auto& row : z)
        if (row.size() != x.size()) throw InvalidParameter("heatmap", "z cols must match x");
    heat_x_ = x;
    heat_y_ = y;
    heat_z_ = z;
}

std::string SvgPlot::render() const {
    double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
    auto absorb = [&](double vx, double vy) {
        if (log_x_ && !(vx > 0)) return;
        if (log_y_ && !(vy > 0)) return;
        x_lo = std::min(x_lo, vx);
        x_hi = std::max(x_hi, vx);
        y_lo = std::min(y_lo, vy);
        y_hi = std::max(y_hi, vy);
    };
    for (const auto& s : series_)
        for (std::size_t i = 0; i < s.x.size(); ++i) absorb(s.x[i], s.y[i]);
    for (double vx : heat_x_)
        for (double vy : heat_y_) absorb(vx, vy);
    if (x_lo > x_hi) { x_lo = 0; x_hi = 1; }
    if (y_lo > y_hi) { y_lo = 0; y_hi = 1; }
    if (x_lo == x_hi) { x_lo -= 0.5; x_hi += 0.5; }
    if (y_lo == y_hi) { y_lo = y_lo == 0 ? -0.5 : y_lo * 0.9; y_hi = y_hi == 0 ? 0.5 : y_hi * 1.1; }
    if (!log_y_) {
        const double pad = (y_hi - y_lo) * 0.05;
        y_lo -= pad;
        y_hi += pad;
    }

    const AxisScale xs{x_lo, x_hi, log_x_};
    const AxisScale ys{y_lo, y_hi, log_y_};
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto px = [&](double v) { return kMarginLeft + xs.to_unit(v) * plot_w; };
    auto py = [&](double v) { return kMarginTop + (1.0 - ys.to_unit(v)) * plot_h; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << escape_xml(title_) << "</text>\n";

    // Heatmap cells under everything else.
    if (!heat_z_.empty()) {
        double z_lo = 1e300, z_hi = -1e300;
        for (const auto& row : heat_z_)
            for (double v : row) {
                if (std::isfinite(v)) {
                    z_lo = std::min(z_lo, v);
                    z_hi = std::max(z_hi, v);
                }
            }
        if (z_lo > z_hi) { z_lo = 0; z_hi = 1; }
        for (std::size_t yi = 0; yi < heat_y_.size(); ++yi) {
            for (std::size_t xi = 0; xi < heat_x_.size(); ++xi) {
                const double v = heat_z_[yi][xi];
                if (!std::isfinite(v)) continue;
                const double t = z_hi > z_lo ? (v - z_lo) / (z_hi - z_lo) : 0.5;
                const int r = static_cast<int>(40 + 215 * t);
                const int g = static_cast<int>(60 + 80 * (1 - t));
                const int b = static_cast<int>(220 - 180 * t);
                const double cx0 = xi == 0 ? px(heat_x_[0]) : (px(heat_x_[xi - 1]) + px(heat_x_[xi])) / 2;
                const double cx1 = xi + 1 == heat_x_.size() ? px(heat_x_[xi])
                                                            : (px(heat_x_[xi]) + px(heat_x_[xi + 1])) / 2;
                const double cy0 = yi + 1 == heat_y_.size() ? py(heat_y_[yi])
                                                            : (py(heat_y_[yi]) + py(heat_y_[yi + 1])) / 2;
                const double cy1 = yi == 0 ? py(heat_y_[0]) : (py(heat_y_[yi - 1]) + py(heat_y_[yi])) / 2;
                out << "<rect x=\"" << fmt(cx0) << "\" y=\"" << fmt(cy0) << "\" width=\""
                    << fmt(std::max(0.0, cx1 - cx0)) << "\" height=\"" << fmt(std::max(0.0, cy1 - cy0))
                    << "\" fill=\"rgb(" << r << ',' << g << ',' << b << ")\"/>\n";
            }
        }
    }

    // Axes, ticks, grid.
    out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << fmt(plot_w)
        << "\" height=\"" << fmt(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    const auto xticks = log_x_ ? log_ticks(x_lo, x_hi) : linear_ticks(x_lo, x_hi);
    for (double t : xticks) {
        const double x = px(t);
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kMarginTop + plot_h) << "\" x2=\""
            << fmt(x) << "\" y2=\"" << fmt(kMarginTop + plot_h + 5) << "\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << kMarginTop << "\" x2=\"" << fmt(x)
            << "\" y2=\"" << fmt(kMarginTop + plot_h) << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kMarginTop + plot_h + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fmt_tick(t)
            << "</text>\n";
    }
    const auto yticks = log_y_ ? log_ticks(y_lo, y_hi) : linear_ticks(y_lo, y_hi);
    for (double t : yticks) {
        const double y = py(t);
        out << "<line x1=\"" << fmt(kMarginLeft - 5) << "\" y1=\"" << fmt(y) << "\" x2=\""
            << kMarginLeft << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << fmt(y) << "\" x2=\""
            << fmt(kMarginLeft + plot_w) << "\" y2=\"" << fmt(y) << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << fmt(kMarginLeft - 8) << "\" y=\"" << fmt(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt_tick(t)
            << "</text>\n";
    }
    out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << escape_xml(x_label_) << "</text>\n";
    out << "<text x=\"20\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 20 " << kHeight / 2 << ")\">" << escape_xml(y_label_)
        << "</text>\n";

    // Series.
    for (std::size_t si = 0; si < series_.size(); ++si) {
        const auto& s = series_[si];
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
        if (s.scatter) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if ((log_x_ && !(s.x[i] > 0)) || (log_y_ && !(s.y[i] > 0))) continue;
                out << "<circle cx=\"" << fmt(px(s.x[i])) << "\" cy=\"" << fmt(py(s.y[i]))
                    << "\" r=\"3\" fill=\"" << color << "\"/>\n";
            }
        } else {
            out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\"";
            if (s.dashed) out << " stroke-dasharray=\"6 4\"";
            out << " points=\"";
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if ((log_x_ && !(s.x[i] > 0)) || (log_y_ && !(s.y[i] > 0))) continue;
                out << fmt(px(s.x[i])) << ',' << fmt(py(s.y[i])) << ' ';
            }
            out << "\"/>\n";
        }
    }

    // Legend.
    double ly = kMarginTop + 10;
    for (std::size_t si = 0; si < series_.size(); ++si) {
        const auto& s = series_[si];
        if (s.name.empty()) continue;
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
        const double lx = kMarginLeft + plot_w - 180;
        out << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly - 4) << "\" x2=\"" << fmt(lx + 22)
            << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\"";
        if (s.dashed) out << " stroke-dasharray=\"6 4\"";
        out << "/>\n";
        out << "<text x=\"" << fmt(lx + 28) << "\" y=\"" << fmt(ly)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape_xml(s.name)
            << "</text>\n";
        ly += 16;
    }

    out << "</svg>\n";
    return out.str();
}

void SvgPlot::save(const std::string& path) const {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidParameter("path", "cannot open " + path + " for writing");
    file << render();
}

}  // namespace gtpac
