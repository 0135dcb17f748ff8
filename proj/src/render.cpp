#include "raag/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <locale>
#include <sstream>

#include "raag/errors.hpp"

namespace raag {

namespace {

std::string num(double v) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << std::fixed << std::setprecision(3) << v;
  std::string s = out.str();
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string draw_piling(const Piling& p, const RenderOptions& opts) {
  if (p.n_columns() == 0) throw EmptyGroup();
  if (!(opts.scale > 0.0) || !std::isfinite(opts.scale)) {
    throw Error("render scale must be positive, got " + num(opts.scale));
  }
  const double s = opts.scale;
  std::size_t height = 1;
  for (const auto& c : p.columns()) height = std::max(height, c.size());
  const double h = static_cast<double>(height);
  const double width = s * (p.n_columns() + 1);
  const double total_height = s * (h + 2.0);
  const double base = s * (h + 1.0);  // bottom end of every string

  std::ostringstream svg;
  svg.imbue(std::locale::classic());
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(width) << "\" height=\"" << num(total_height) << "\" viewBox=\"0 0 "
      << num(width) << ' ' << num(total_height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (Generator i = 1; i <= p.n_columns(); ++i) {
    const double x = s * i;
    svg << "<g class=\"column\" id=\"column-" << i << "\">\n"
        << "<line class=\"string\" x1=\"" << num(x) << "\" y1=\"" << num(s * 0.5)
        << "\" x2=\"" << num(x) << "\" y2=\"" << num(base)
        << "\" stroke=\"black\" stroke-width=\"" << num(s * 0.04) << "\"/>\n";
    const auto& col = p.column(i);
    for (std::size_t b = 0; b < col.size(); ++b) {
      const double y = base - s * (static_cast<double>(b) + 0.5);
      const char* kind = "zero";
      const std::string* fill = &opts.zero_colour;
      const char* glyph = nullptr;
      if (col[b] == Bead::plus) {
        kind = "plus";
        fill = &opts.plus_colour;
        glyph = "+";
      } else if (col[b] == Bead::minus) {
        kind = "minus";
        fill = &opts.minus_colour;
        glyph = "−";
      }
      svg << "<circle class=\"bead bead-" << kind << "\" cx=\"" << num(x)
          << "\" cy=\"" << num(y) << "\" r=\"" << num(s * 0.4) << "\" fill=\""
          << escape(*fill) << "\" stroke=\"black\" stroke-width=\""
          << num(s * 0.02) << "\"/>\n";
      if (glyph) {
        svg << "<text class=\"glyph\" x=\"" << num(x) << "\" y=\"" << num(y)
            << "\" font-size=\"" << num(s * 0.5)
            << "\" text-anchor=\"middle\" dominant-baseline=\"central\" "
               "fill=\"white\">"
            << glyph << "</text>\n";
      }
    }
    svg << "<text class=\"label\" x=\"" << num(x) << "\" y=\"" << num(base + s * 0.6)
        << "\" font-size=\"" << num(s * 0.4) << "\" text-anchor=\"middle\">a<tspan "
        << "baseline-shift=\"sub\" font-size=\"" << num(s * 0.28) << "\">" << i
        << "</tspan></text>\n"
        << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace raag
