#pragma once

#include <string>
#include <vector>

namespace gtpac {

/// Minimal deterministic SVG line/scatter plotting: fixed palette, linear or
/// log axes, legend, no timestamps or external dependencies, so reruns are
/// byte-identical.
class SvgPlot {
public:
    SvgPlot(std::string title, std::string x_label, std::string y_label);

    void set_log_x(bool v) { log_x_ = v; }
    void set_log_y(bool v) { log_y_ = v; }

    void add_line(const std::string& name, std::vector<double> x, std::vector<double> y,
                  bool dashed = false);
    void add_scatter(const std::string& name, std::vector<double> x, std::vector<double> y);

    /// Grid heatmap (used for surface figures); cells colored by value.
    void add_heatmap(const std::vector<double>& x, const std::vector<double>& y,
                     const std::vector<std::vector<double>>& z);

    std::string render() const;
    void save(const std::string& path) const;

private:
    struct Series {
        std::string name;
        std::vector<double> x, y;
        bool scatter = false;
        bool dashed = false;
    };

    std::string title_, x_label_, y_label_;
    bool log_x_ = false, log_y_ = false;
    std::vector<Series> series_;
    std::vector<double> heat_x_, heat_y_;
    std::vector<std::vector<double>> heat_z_;
};

}  // namespace gtpac
