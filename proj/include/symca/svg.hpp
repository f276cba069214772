#ifndef SYMCA_SVG_HPP
#define SYMCA_SVG_HPP

#include <string>

#include "symca/io.hpp"

namespace symca::io {

struct PlotSpec {
  std::size_t axis_x = 0;
  std::size_t axis_y = 1;
  int width = 800;
  int height = 800;
  int margin = 60;
  std::string row_fill = "#1f77b4";
  std::string col_fill = "#d62728";
  double fill_opacity = 0.25;
  int font_size = 12;
  int precision = 2;  ///< decimals for screen coordinates
};

inline constexpr double kPointMarkerSize = 3.0;

/// SVG 1.1 drawing of the principal plane: one group per modality (rows by
/// index, then columns) holding its rectangle, center marker and label;
/// axis lines through the origin; captions with inertia percentages.
/// A rectangle dimension of zero extent is drawn kPointMarkerSize pixels
/// wide, so a modality without variation shows as a small square.
std::string render_principal_plane_svg(const ResultDocument& doc, const PlotSpec& spec);

}  // namespace symca::io

#endif  // SYMCA_SVG_HPP
