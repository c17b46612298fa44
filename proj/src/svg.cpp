#include "hsdt/svg.hpp"

#include <cstdio>
#include <sstream>

namespace hsdt {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_region_svg(const PlotSpec& spec, int n,
                              std::span<const std::uint8_t> mask) {
  if (spec.width < 64 || spec.height < 64)
    throw DomainError("svg: width and height must be >= 64");
  if (n < 1) throw DomainError("svg: grid size must be >= 1");
  if (mask.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw DimMismatch("svg: mask size does not match grid");

  const double margin = 48.0;
  const double plot_w = spec.width - 2.0 * margin;
  const double plot_h = spec.height - 2.0 * margin;
  const double cell_w = plot_w / n;
  const double cell_h = plot_h / n;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width
      << " " << spec.height << "\">\n"
      << "  <title>Ellsberg region, d = " << fmt6(spec.d) << "</title>\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" fill=\"white\"/>\n"
      << "  <g fill=\"" << spec.fill << "\" stroke=\"none\">\n";

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (!mask[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(i)])
        continue;
      // y axis points up: row j sits (n-1-j) cells below the top edge.
      const double px = margin + i * cell_w;
      const double py = margin + (n - 1 - j) * cell_h;
      out << "    <rect class=\"cell\" x=\"" << fmt(px) << "\" y=\"" << fmt(py)
          << "\" width=\"" << fmt(cell_w) << "\" height=\"" << fmt(cell_h)
          << "\"/>\n";
    }
  }

  const double x0 = margin;
  const double x1 = margin + plot_w;
  const double y0 = margin + plot_h;  // pixel row of y = 0
  const double y1 = margin;           // pixel row of y = 1
  out << "  </g>\n"
      << "  <rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y1) << "\" width=\""
      << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n"
      << "  <g font-family=\"sans-serif\" font-size=\"14\" fill=\"black\">\n"
      << "    <text x=\"" << fmt((x0 + x1) / 2.0) << "\" y=\""
      << fmt(y0 + 32.0) << "\" text-anchor=\"middle\">" << spec.x_label
      << "</text>\n"
      << "    <text x=\"" << fmt(x0 - 32.0) << "\" y=\""
      << fmt((y0 + y1) / 2.0) << "\" text-anchor=\"middle\" transform=\"rotate(-90 "
      << fmt(x0 - 32.0) << " " << fmt((y0 + y1) / 2.0) << ")\">" << spec.y_label
      << "</text>\n"
      << "    <text x=\"" << fmt(x0) << "\" y=\"" << fmt(y0 + 16.0)
      << "\" text-anchor=\"middle\">0</text>\n"
      << "    <text x=\"" << fmt(x1) << "\" y=\"" << fmt(y0 + 16.0)
      << "\" text-anchor=\"middle\">1</text>\n"
      << "    <text x=\"" << fmt(x0 - 12.0) << "\" y=\"" << fmt(y1 + 4.0)
      << "\" text-anchor=\"end\">1</text>\n"
      << "  </g>\n"
      << "</svg>\n";
  return out.str();
}

}  // namespace hsdt
