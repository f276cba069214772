#include "symca/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "symca/errors.hpp"

namespace symca::io {

namespace {

struct Frame {
  double x_min, y_min, scale, left, bottom;
  double sx(double x) const { return left + (x - x_min) * scale; }
  double sy(double y) const { return bottom - (y - y_min) * scale; }
};

class Writer {
 public:
  explicit Writer(int precision) : precision_(precision) {}

  double round(double v) const {
    const double f = std::pow(10.0, precision_);
    return std::round(v * f) / f;
  }

  std::string num(double v) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision_, round(v));
    std::string s = buf;
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
    return s;
  }

 private:
  int precision_;
};

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

void validate(const ResultDocument& doc, const PlotSpec& spec) {
  if (spec.axis_x == spec.axis_y) throw ValidationError("plot axes must differ");
  if (spec.axis_x >= doc.n_axes() || spec.axis_y >= doc.n_axes())
    throw ValidationError("requested axis is not retained (result has " + std::to_string(doc.n_axes()) + " axes)");
  if (spec.width <= 0 || spec.height <= 0 || spec.margin < 0 || 2 * spec.margin >= std::min(spec.width, spec.height))
    throw ValidationError("plot dimensions must be positive and exceed twice the margin");
  if (spec.precision < 0 || spec.precision > 10) throw ValidationError("precision must be within [0, 10]");
  if (spec.font_size <= 0) throw ValidationError("font size must be positive");
}

Frame frame_for(const ResultDocument& doc, const PlotSpec& spec) {
  double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
  auto extend = [&](const ModalityRecord& r) {
    x_lo = std::min({x_lo, r.rect_lo[spec.axis_x], r.coords[spec.axis_x]});
    x_hi = std::max({x_hi, r.rect_hi[spec.axis_x], r.coords[spec.axis_x]});
    y_lo = std::min({y_lo, r.rect_lo[spec.axis_y], r.coords[spec.axis_y]});
    y_hi = std::max({y_hi, r.rect_hi[spec.axis_y], r.coords[spec.axis_y]});
  };
  for (const auto& r : doc.rows) extend(r);
  for (const auto& c : doc.cols) extend(c);

  double x_range = x_hi - x_lo;
  double y_range = y_hi - y_lo;
  if (x_range <= 0.0) x_range = 1.0;
  if (y_range <= 0.0) y_range = 1.0;
  x_lo -= 0.05 * x_range;
  y_lo -= 0.05 * y_range;
  x_range *= 1.1;
  y_range *= 1.1;

  const double inner_w = spec.width - 2.0 * spec.margin;
  const double inner_h = spec.height - 2.0 * spec.margin;
  const double scale = std::min(inner_w / x_range, inner_h / y_range);
  // Same scale on both axes; center the drawing inside the margins.
  const double left = spec.margin + 0.5 * (inner_w - x_range * scale);
  const double bottom = spec.height - spec.margin - 0.5 * (inner_h - y_range * scale);
  return {x_lo, y_lo, scale, left, bottom};
}

void modality(std::string& out, const Writer& w, const Frame& f, const PlotSpec& spec, const ModalityRecord& r,
              const char* kind, const std::string& fill) {
  double x0 = w.round(f.sx(r.rect_lo[spec.axis_x]));
  double x1 = w.round(f.sx(r.rect_hi[spec.axis_x]));
  double y0 = w.round(f.sy(r.rect_hi[spec.axis_y]));
  double y1 = w.round(f.sy(r.rect_lo[spec.axis_y]));
  const double cx = w.round(f.sx(r.coords[spec.axis_x]));
  const double cy = w.round(f.sy(r.coords[spec.axis_y]));
  const bool flat_x = r.rect_hi[spec.axis_x] == r.rect_lo[spec.axis_x];
  const bool flat_y = r.rect_hi[spec.axis_y] == r.rect_lo[spec.axis_y];
  const double half = kPointMarkerSize / 2.0;
  if (flat_x) {
    x0 = w.round(cx - half);
    x1 = w.round(cx + half);
  }
  if (flat_y) {
    y0 = w.round(cy - half);
    y1 = w.round(cy + half);
  }
  const char* shape = flat_x && flat_y ? "point" : "box";

  out += "  <g class=\"modality " + std::string(kind) + "\">\n";
  out += "    <rect class=\"" + std::string(shape) + "\" x=\"" + w.num(x0) + "\" y=\"" + w.num(y0) +
         "\" width=\"" + w.num(x1 - x0) + "\" height=\"" + w.num(y1 - y0) + "\" fill=\"" + fill +
         "\" fill-opacity=\"" + (flat_x && flat_y ? std::string("1") : w.num(spec.fill_opacity)) +
         "\" stroke=\"" + fill + "\" stroke-width=\"1\"/>\n";
  out += "    <circle cx=\"" + w.num(cx) + "\" cy=\"" + w.num(cy) + "\" r=\"2\" fill=\"" + fill + "\"/>\n";
  out += "    <text x=\"" + w.num(cx + 4.0) + "\" y=\"" + w.num(cy - 4.0) + "\" font-size=\"" +
         std::to_string(spec.font_size) + "\" fill=\"" + fill + "\">" + escape_xml(r.label) + "</text>\n";
  out += "  </g>\n";
}

std::string percent(double share) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * share);
  return buf;
}

}  // namespace

std::string render_principal_plane_svg(const ResultDocument& doc, const PlotSpec& spec) {
  validate(doc, spec);
  const Writer w(spec.precision);
  const Frame f = frame_for(doc, spec);
  const std::string width = std::to_string(spec.width);
  const std::string height = std::to_string(spec.height);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + width + "\" height=\"" + height +
         "\" viewBox=\"0 0 " + width + " " + height + "\" font-family=\"sans-serif\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + width + "\" height=\"" + height + "\" fill=\"white\"/>\n";

  const double ox = w.round(f.sx(0.0));
  const double oy = w.round(f.sy(0.0));
  out += "  <g class=\"axes\" stroke=\"#444444\" stroke-width=\"1\">\n";
  out += "    <line x1=\"" + w.num(spec.margin) + "\" y1=\"" + w.num(oy) + "\" x2=\"" + w.num(spec.width - spec.margin) +
         "\" y2=\"" + w.num(oy) + "\"/>\n";
  out += "    <line x1=\"" + w.num(ox) + "\" y1=\"" + w.num(spec.margin) + "\" x2=\"" + w.num(ox) + "\" y2=\"" +
         w.num(spec.height - spec.margin) + "\"/>\n";
  out += "  </g>\n";

  const std::string font = std::to_string(spec.font_size);
  out += "  <text class=\"caption\" x=\"" + w.num(spec.width - spec.margin) + "\" y=\"" +
         w.num(spec.height - spec.margin / 3.0) + "\" font-size=\"" + font + "\" text-anchor=\"end\">Axis " +
         std::to_string(spec.axis_x + 1) + " (" + percent(doc.inertia_share[spec.axis_x]) + ")</text>\n";
  out += "  <text class=\"caption\" x=\"" + w.num(spec.margin / 3.0) + "\" y=\"" + w.num(spec.margin) +
         "\" font-size=\"" + font + "\" transform=\"rotate(-90 " + w.num(spec.margin / 3.0) + " " +
         w.num(spec.margin) + ")\" text-anchor=\"end\">Axis " + std::to_string(spec.axis_y + 1) + " (" +
         percent(doc.inertia_share[spec.axis_y]) + ")</text>\n";

  for (const auto& r : doc.rows) modality(out, w, f, spec, r, "row", spec.row_fill);
  for (const auto& c : doc.cols) modality(out, w, f, spec, c, "col", spec.col_fill);
  out += "</svg>\n";
  return out;
}

}  // namespace symca::io
