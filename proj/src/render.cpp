#include "etass/render.hpp"

#include <algorithm>
#include <sstream>

namespace etass::render {

namespace {

bool stem_valid(int m, bool kw) {
  if (m < 0 || m == 1) return false;
  return !kw || m % 2 == 0;
}

point::Op entry(int source, int target, bool kw) {
  return kw ? e1::kw_d1_entry(source, target) : e1::d1_entry(source, target);
}

/* arrow styling keyed by operation; slopes follow the figure conventions */
struct ArrowStyle {
  point::Op op;
  int offset;  // target stem - source stem
  const char* css_class;
  const char* description;
};
constexpr ArrowStyle kStyles[] = {
    {point::Op::Tau, -2, "tau", "tau (slope -1/2)"},
    {point::Op::Rho, -1, "rho", "rho (slope -1)"},
    {point::Op::Sq2, 0, "sq2", "Sq2 (vertical)"},
    {point::Op::Sq2PlusRhoSq1, 0, "sq2r", "Sq2+rhoSq1 (vertical, dashed)"},
    {point::Op::Sq2Sq1PlusSq3, 1, "sq213", "Sq2Sq1+Sq3 (slope 1)"},
    {point::Op::Sq3Sq1, 2, "sq31", "Sq3Sq1 (slope 1/2)"},
};

const ArrowStyle* style_of(point::Op op) {
  for (const auto& s : kStyles)
    if (s.op == op) return &s;
  return nullptr;
}

std::string dim_glyph(int d) {
  if (d == 0) return ".";
  if (d < 10) return std::to_string(d);
  return "+";
}

}  // namespace

std::string ascii_generator_plane(int max_stem, int min_slice, int max_slice,
                                  bool kw) {
  std::ostringstream out;
  out << "first page, generator plane (stem horizontal, slice vertical)"
      << (kw ? " [kw]" : "") << "\n";
  for (int n = max_slice; n >= min_slice; --n) {
    out << (n < 0 ? "" : " ") << n << " |";
    for (int m = 0; m <= max_stem; ++m)
      out << (stem_valid(m, kw) ? "  #" : "  .");
    out << "\n";
  }
  out << "   +";
  for (int m = 0; m <= max_stem; ++m) out << "---";
  out << "\n    ";
  for (int m = 0; m <= max_stem; ++m) out << (m < 10 ? "  " : " ") << m;
  out << "  (stem)\n\narrows (source stem: operation -> target stem):\n";
  for (int m = 0; m <= max_stem; ++m) {
    if (!stem_valid(m, kw)) continue;
    std::string line;
    for (int off = -2; off <= 2; ++off) {
      int t = m + off;
      if (!stem_valid(t, kw)) continue;
      point::Op op = entry(m, t, kw);
      if (op == point::Op::Zero) continue;
      if (!line.empty()) line += ", ";
      line += std::string(point::op_name(op)) + " -> " + std::to_string(t);
    }
    if (!line.empty()) out << "  stem " << m << ": " << line << "\n";
  }
  out << "\nlegend:";
  for (const auto& s : kStyles) out << " " << s.description << ";";
  out << "\n";
  return out.str();
}

std::string svg_generator_plane(int max_stem, int min_slice, int max_slice,
                                bool kw) {
  const int unit = 36, margin = 60;
  int width = margin * 2 + unit * max_stem;
  int height = margin * 2 + unit * (max_slice - min_slice);
  auto x = [&](int m) { return margin + m * unit; };
  auto y = [&](int n) { return margin + (max_slice - n) * unit; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height + 90 << "\">\n"
      << "<style>\n"
         "line{stroke-width:1.3}\n"
         ".tau{stroke:#999}.rho{stroke:#000}.sq2{stroke:#1f77b4}\n"
         ".sq2r{stroke:#1f77b4;stroke-dasharray:5 3}\n"
         ".sq213{stroke:#d62728}.sq31{stroke:#2ca02c}\n"
         "rect{fill:none;stroke:#333}text{font:11px monospace}\n"
         "</style>\n";
  out << "<text x=\"10\" y=\"16\">first page (stem vs slice)"
      << (kw ? " [kw]" : "") << "</text>\n";
  int ly = 30;
  int lx = 10;
  for (const auto& s : kStyles) {
    out << "<line class=\"" << s.css_class << "\" x1=\"" << lx << "\" y1=\"" << ly
        << "\" x2=\"" << lx + 24 << "\" y2=\"" << ly << "\"/>"
        << "<text x=\"" << lx + 30 << "\" y=\"" << ly + 4 << "\">" << s.description
        << "</text>\n";
    lx += 220;
    if (lx > width - 200) {
      lx = 10;
      ly += 16;
    }
  }
  out << "<g transform=\"translate(0,70)\">\n";
  for (int m = 0; m <= max_stem; ++m) {
    if (!stem_valid(m, kw)) continue;
    out << "<text x=\"" << x(m) - 3 << "\" y=\"" << y(min_slice) + 28 << "\">" << m
        << "</text>\n";
    for (int n = min_slice; n <= max_slice; ++n) {
      out << "<rect x=\"" << x(m) - 5 << "\" y=\"" << y(n) - 5
          << "\" width=\"10\" height=\"10\"/>\n";
      if (n == max_slice) continue;
      for (int off = -2; off <= 2; ++off) {
        int t = m + off;
        if (!stem_valid(t, kw) || t > max_stem) continue;
        const ArrowStyle* st = style_of(entry(m, t, kw));
        if (!st) continue;
        out << "<line class=\"" << st->css_class << "\" x1=\"" << x(m) << "\" y1=\""
            << y(n) - 6 << "\" x2=\"" << x(t) << "\" y2=\"" << y(n + 1) + 6
            << "\"/>\n";
      }
    }
  }
  for (int n = min_slice; n <= max_slice; ++n)
    out << "<text x=\"" << margin - 40 << "\" y=\"" << y(n) + 4 << "\">" << n
        << "</text>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

namespace {

template <typename DimAt>
std::string ascii_grid(const std::string& title, int n, int max_q, int max_stem,
                       DimAt dim_at) {
  std::ostringstream out;
  out << title << "\n";
  for (int q = max_q; q >= n; --q) {
    out << "q=" << (q < 10 && q >= 0 ? " " : "") << q << " |";
    for (int m = 0; m <= max_stem; ++m) out << "  " << dim_glyph(dim_at(q, m));
    out << "\n";
  }
  out << "     +";
  for (int m = 0; m <= max_stem; ++m) out << "---";
  out << "\n      ";
  for (int m = 0; m <= max_stem; ++m) out << (m < 10 ? "  " : " ") << m;
  out << "  (stem)\n";
  return out.str();
}

std::string log_lines(const std::vector<pages::DiffRecord>& log) {
  std::ostringstream out;
  if (log.empty()) return "differentials: none\n";
  out << "differentials:\n";
  for (const auto& rec : log)
    out << "  d" << rec.page << ": (q=" << rec.q << ", m=" << rec.m << ") -> (q="
        << rec.q + rec.page << ", m=" << rec.m - 1 << ")  " << rec.source << " -> "
        << rec.target << "  rank " << rec.rank << "\n";
  return out.str();
}

template <typename DimAt>
std::string svg_grid(const std::string& title, int n, int max_q, int max_stem,
                     DimAt dim_at, const std::vector<pages::DiffRecord>& log) {
  const int unit = 34, margin = 56;
  int width = margin * 2 + unit * max_stem;
  int height = margin * 2 + unit * (max_q - n);
  auto x = [&](int m) { return margin + m * unit; };
  auto y = [&](int q) { return margin + (max_q - q) * unit; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height + 60 << "\">\n"
      << "<style>text{font:11px monospace}circle{fill:#333}\n"
         ".d3{stroke:#d62728}.d4{stroke:#1f77b4;stroke-dasharray:5 3}\n"
         ".d5{stroke:#2ca02c;stroke-dasharray:2 3}.dhi{stroke:#9467bd;stroke-dasharray:7 2}\n"
         "</style>\n"
      << "<text x=\"10\" y=\"16\">" << title << "</text>\n"
      << "<text x=\"10\" y=\"32\">legend: d3 solid red, d4 dashed blue, d5 dotted "
         "green, higher pages dash-dot purple</text>\n"
      << "<g transform=\"translate(0,44)\">\n";
  for (int q = n; q <= max_q; ++q)
    out << "<text x=\"" << margin - 44 << "\" y=\"" << y(q) + 4 << "\">" << q
        << "</text>\n";
  for (int m = 0; m <= max_stem; ++m) {
    out << "<text x=\"" << x(m) - 3 << "\" y=\"" << y(n) + 26 << "\">" << m
        << "</text>\n";
    for (int q = n; q <= max_q; ++q) {
      int d = dim_at(q, m);
      if (d == 0) continue;
      out << "<circle cx=\"" << x(m) << "\" cy=\"" << y(q) << "\" r=\"3.5\"/>\n";
      if (d > 1)
        out << "<text x=\"" << x(m) + 6 << "\" y=\"" << y(q) - 4 << "\">" << d
            << "</text>\n";
    }
  }
  for (const auto& rec : log) {
    if (rec.m - 1 < 0 || rec.m > max_stem || rec.q < n || rec.q + rec.page > max_q)
      continue;
    const char* cls = rec.page == 3 ? "d3" : rec.page == 4 ? "d4" : rec.page == 5 ? "d5" : "dhi";
    out << "<line class=\"" << cls << "\" x1=\"" << x(rec.m) - 4 << "\" y1=\""
        << y(rec.q) - 4 << "\" x2=\"" << x(rec.m - 1) + 4 << "\" y2=\""
        << y(rec.q + rec.page) + 4 << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace

std::string ascii_page(const pages::Page& p2,
                       const std::vector<pages::DiffRecord>& log) {
  std::string title = "second page over " + p2.field().name() + ", weight " +
                      std::to_string(p2.weight()) +
                      " (stem horizontal, slice vertical)";
  std::string grid =
      ascii_grid(title, p2.weight(), p2.max_filtration(), p2.max_stem(),
                 [&](int q, int m) { return p2.cell(q, m).dim; });
  return grid + log_lines(log);
}

std::string svg_page(const pages::Page& p2,
                     const std::vector<pages::DiffRecord>& log) {
  return svg_grid("second page over " + p2.field().name() + ", weight " +
                      std::to_string(p2.weight()),
                  p2.weight(), p2.max_filtration(), p2.max_stem(),
                  [&](int q, int m) { return p2.cell(q, m).dim; }, log);
}

std::string ascii_einf(const pages::EInfPage& einf) {
  std::string title = "E-infinity over " + einf.field().name() + ", weight " +
                      std::to_string(einf.weight()) + ", profile " +
                      einf.profile().str();
  std::string grid = ascii_grid(
      title, einf.weight(), einf.max_filtration(), einf.max_stem(),
      [&](int q, int m) { return static_cast<int>(einf.cell(q, m).reps.size()); });
  std::ostringstream notes;
  for (const auto& note : einf.notes()) notes << "note: " << note << "\n";
  return grid + log_lines(einf.log()) + notes.str();
}

std::string svg_einf(const pages::EInfPage& einf) {
  return svg_grid(
      "E-infinity over " + einf.field().name() + ", profile " + einf.profile().str(),
      einf.weight(), einf.max_filtration(), einf.max_stem(),
      [&](int q, int m) { return static_cast<int>(einf.cell(q, m).reps.size()); },
      einf.log());
}

}  // namespace etass::render
