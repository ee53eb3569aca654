#include "output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace landau::cli {

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

std::string format_fixed(double v, int digits) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, digits);
  return {buf.data(), res.ptr};
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t j = 0; j < table.header.size(); ++j) {
    if (j) out += ',';
    out += table.header[j];
  }
  out += '\n';
  const std::size_t rows = table.columns.empty() ? 0 : table.columns.front().size();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
      if (j) out += ',';
      out += format_double(table.columns[j][i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

constexpr double kWidth = 640, kHeight = 400;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string header(const PlotLabels& labels) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"15\">" << escape(labels.title) << "</text>\n";
  return s.str();
}

std::string axis_labels(const PlotLabels& labels) {
  std::ostringstream s;
  s << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
    << escape(labels.x_axis) << "</text>\n"
    << "<text x=\"16\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"13\" transform=\"rotate(-90 16 " << kHeight / 2 << ")\">"
    << escape(labels.y_axis) << "</text>\n";
  return s.str();
}

}  // namespace

std::string line_plot_svg(const PlotLabels& labels, const std::vector<Series>& series) {
  double x_min = 0, x_max = 1, y_max = 0;
  bool first = true;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x->size(); ++i) {
      if (first) {
        x_min = x_max = (*s.x)[i];
        first = false;
      }
      x_min = std::min(x_min, (*s.x)[i]);
      x_max = std::max(x_max, (*s.x)[i]);
      y_max = std::max(y_max, (*s.y)[i]);
    }
  }
  if (x_max <= x_min) x_max = x_min + 1;
  if (y_max <= 0) y_max = 1;
  y_max *= 1.05;
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + pw * (x - x_min) / (x_max - x_min); };
  auto py = [&](double y) { return kTop + ph * (1.0 - y / y_max); };

  std::string out = header(labels);
  out += "<g stroke=\"black\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + format_fixed(kLeft, 2) + "\" y1=\"" + format_fixed(kTop + ph, 2) + "\" x2=\"" +
         format_fixed(kLeft + pw, 2) + "\" y2=\"" + format_fixed(kTop + ph, 2) + "\"/>\n";
  out += "<line x1=\"" + format_fixed(kLeft, 2) + "\" y1=\"" + format_fixed(kTop, 2) + "\" x2=\"" +
         format_fixed(kLeft, 2) + "\" y2=\"" + format_fixed(kTop + ph, 2) + "\"/>\n";
  out += "</g>\n";
  // Five ticks per axis.
  out += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double xv = x_min + (x_max - x_min) * t / 4.0;
    const double yv = y_max * t / 4.0;
    out += "<text x=\"" + format_fixed(px(xv), 2) + "\" y=\"" + format_fixed(kTop + ph + 16, 2) +
           "\" text-anchor=\"middle\">" + format_fixed(xv, 2) + "</text>\n";
    out += "<text x=\"" + format_fixed(kLeft - 6, 2) + "\" y=\"" + format_fixed(py(yv) + 4, 2) +
           "\" text-anchor=\"end\">" + format_fixed(yv, 3) + "</text>\n";
  }
  out += "</g>\n";
  out += axis_labels(labels);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x->size(); ++i) {
      if (i) out += ' ';
      out += format_fixed(px((*s.x)[i]), 2) + ',' + format_fixed(py((*s.y)[i]), 2);
    }
    out += "\"/>\n";
    const double ly = kTop + 14 + 16 * static_cast<double>(k);
    out += "<line x1=\"" + format_fixed(kWidth - 190, 2) + "\" y1=\"" + format_fixed(ly - 4, 2) +
           "\" x2=\"" + format_fixed(kWidth - 165, 2) + "\" y2=\"" + format_fixed(ly - 4, 2) +
           "\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"/>\n";
    out += "<text x=\"" + format_fixed(kWidth - 160, 2) + "\" y=\"" + format_fixed(ly, 2) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(s.label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string heatmap_svg(const PlotLabels& labels, int n, const std::vector<double>& values,
                        double extent) {
  const double peak = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
  const double side = std::min(kWidth - kLeft - kRight, kHeight - kTop - kBottom);
  const double x0 = (kWidth - side) / 2, cell = side / n;
  std::string out = header(labels);
  out += "<g shape-rendering=\"crispEdges\">\n";
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double v = values[static_cast<std::size_t>(r * n + c)];
      const int level = peak > 0 ? static_cast<int>(std::lround(255.0 * (1.0 - v / peak))) : 255;
      const std::string g = std::to_string(level);
      out += "<rect x=\"" + format_fixed(x0 + c * cell, 2) + "\" y=\"" + format_fixed(kTop + r * cell, 2) +
             "\" width=\"" + format_fixed(cell, 2) + "\" height=\"" + format_fixed(cell, 2) +
             "\" fill=\"rgb(" + g + ',' + g + ',' + g + ")\"/>\n";
    }
  }
  out += "</g>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
  out += "<text x=\"" + format_fixed(x0, 2) + "\" y=\"" + format_fixed(kTop + side + 16, 2) + "\">" +
         format_fixed(-extent, 2) + "</text>\n";
  out += "<text x=\"" + format_fixed(x0 + side, 2) + "\" y=\"" + format_fixed(kTop + side + 16, 2) +
         "\">" + format_fixed(extent, 2) + "</text>\n";
  out += "</g>\n";
  out += axis_labels(labels);
  out += "</svg>\n";
  return out;
}

std::string ascii_plot(const std::vector<double>& x, const std::vector<double>& y, int rows, int width) {
  std::string out;
  if (x.empty()) return out;
  const double peak = *std::max_element(y.begin(), y.end());
  const std::size_t count = x.size();
  const std::size_t used = std::min<std::size_t>(count, static_cast<std::size_t>(rows));
  for (std::size_t r = 0; r < used; ++r) {
    const std::size_t i = used == 1 ? 0 : r * (count - 1) / (used - 1);
    const int bar = peak > 0 ? static_cast<int>(std::lround(width * y[i] / peak)) : 0;
    std::string label = format_fixed(x[i], 3);
    if (label.size() < 8) label.insert(0, 8 - label.size(), ' ');
    out += label + " |" + std::string(static_cast<std::size_t>(bar), '#') + '\n';
  }
  return out;
}

}  // namespace landau::cli
