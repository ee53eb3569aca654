#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace landau::cli {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

/// Fixed notation with `digits` after the point, for SVG coordinates.
std::string format_fixed(double v, int digits);

void write_text(const std::filesystem::path& path, std::string_view text);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
};

std::string to_csv(const CsvTable& table);

struct Series {
  std::string label;
  std::string color;
  const std::vector<double>* x;
  const std::vector<double>* y;
};

struct PlotLabels {
  std::string title;
  std::string x_axis;
  std::string y_axis;
};

std::string line_plot_svg(const PlotLabels& labels, const std::vector<Series>& series);

/// Square heatmap of `values` (row-major, n x n, first row at the top) in gray levels.
std::string heatmap_svg(const PlotLabels& labels, int n, const std::vector<double>& values,
                        double extent);

/// Horizontal bar chart of y against x, one text row per sampled point.
std::string ascii_plot(const std::vector<double>& x, const std::vector<double>& y, int rows = 32,
                       int width = 60);

}  // namespace landau::cli
