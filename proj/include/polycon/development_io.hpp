#ifndef POLYCON_DEVELOPMENT_IO_HPP
#define POLYCON_DEVELOPMENT_IO_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "polycon/development.hpp"
#include "polycon/error.hpp"

namespace polycon {

enum class TemplateFormat { Svg, Csv };

namespace detail {

// Evenly spaced hues, fixed saturation and lightness.
inline std::string patchStroke(int id, int count) {
  const double hue = 360.0 * id / std::max(count, 1);
  const double s = 0.75, l = 0.40;
  const double c = (1.0 - std::abs(2.0 * l - 1.0)) * s;
  const double hp = hue / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(hp)) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  const double m = l - c / 2.0;
  char hex[8];
  std::snprintf(hex, sizeof hex, "#%02x%02x%02x", static_cast<int>(std::lround((r + m) * 255)),
                static_cast<int>(std::lround((g + m) * 255)), static_cast<int>(std::lround((b + m) * 255)));
  return hex;
}

}  // namespace detail

/// SVG 1.1, one user unit per millimetre, one unfilled path per patch. The
/// template's y axis points up, so y is negated on output.
inline std::string toSvg(const DevelopedTemplate& layout) {
  Box2 box;
  for (const auto& patch : layout.patches) {
    for (const Vec2& p : patch.boundary) box.extend(p);
  }
  const double margin = 5.0;
  const double width = box.hi.x() - box.lo.x() + 2.0 * margin;
  const double height = box.hi.y() - box.lo.y() + 2.0 * margin;
  const double left = box.lo.x() - margin;
  const double top = -box.hi.y() - margin;

  std::string svg;
  char buf[256];
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.6fmm\" "
                "height=\"%.6fmm\" viewBox=\"%.6f %.6f %.6f %.6f\">\n",
                width, height, left, top, width, height);
  svg += buf;
  const int count = static_cast<int>(layout.patches.size());
  for (const auto& patch : layout.patches) {
    std::string d;
    for (std::size_t i = 0; i < patch.boundary.size(); ++i) {
      const Vec2& p = patch.boundary[i];
      std::snprintf(buf, sizeof buf, "%s%.6f,%.6f ", i == 0 ? "M " : "L ", p.x(), -p.y());
      d += buf;
    }
    d += "Z";
    svg += "  <path id=\"patch-" + std::to_string(patch.pieceId) + "\" d=\"" + d +
           "\" fill=\"none\" stroke=\"" + detail::patchStroke(patch.pieceId, count) +
           "\" stroke-width=\"0.2\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

/// CSV rows "patchId,vertexIndex,x,y" in layout order.
inline std::string toCsv(const DevelopedTemplate& layout) {
  std::string csv = "patchId,vertexIndex,x,y\n";
  char buf[128];
  for (const auto& patch : layout.patches) {
    for (std::size_t i = 0; i < patch.boundary.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%d,%zu,%.17g,%.17g\n", patch.pieceId, i, patch.boundary[i].x(),
                    patch.boundary[i].y());
      csv += buf;
    }
  }
  return csv;
}

inline void exportTemplate(const DevelopedTemplate& layout, TemplateFormat format,
                           const std::filesystem::path& path) {
  if (layout.patches.empty()) throw IntegrityError("refusing to export an empty template");
  const std::string text = format == TemplateFormat::Svg ? toSvg(layout) : toCsv(layout);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace polycon

#endif  // POLYCON_DEVELOPMENT_IO_HPP
