#pragma once

#include <map>
#include <string>
#include <vector>

namespace gtpac {

/// A reproducible figure: stable string id plus parameter overrides.
/// Each figure writes fig_<id>.csv and fig_<id>.svg into out_dir.
struct FigureSpec {
    std::string id;
    std::map<std::string, std::string> overrides;
    std::string out_dir = ".";
    int threads = 0;
};

/// Known figure ids, in emission order.
const std::vector<std::string>& figure_ids();

/// Renders the figure; returns the paths written (csv first). Throws
/// InvalidParameter for unknown ids or bad overrides; points whose bound is
/// unsatisfiable are dropped with a note on stderr and the Unsatisfiable
/// degeneracy is reported through the return of make_figure's caller.
struct FigureOutput {
    std::string csv_path;
    std::string svg_path;
    long long dropped_points = 0;
};

FigureOutput make_figure(const FigureSpec& spec);

}  // namespace gtpac
