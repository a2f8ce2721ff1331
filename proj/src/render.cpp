#include "stoim/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace stoim {

namespace {

// Arcs stacked greedily by increasing span: an arc sits one level above
// every shorter arc whose horizontal extent it overlaps. Disjoint arcs
// share a level.
std::vector<int> arc_levels(const std::vector<Arc>& arcs) {
  std::vector<std::size_t> order(arcs.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int span_a = arcs[a].closer - arcs[a].opener;
    const int span_b = arcs[b].closer - arcs[b].opener;
    if (span_a != span_b) return span_a < span_b;
    return arcs[a].opener < arcs[b].opener;
  });
  std::vector<int> level(arcs.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Arc& a = arcs[order[k]];
    int h = 1;
    for (std::size_t j = 0; j < k; ++j) {
      const Arc& b = arcs[order[j]];
      if (b.opener < a.closer && a.opener < b.closer)
        h = std::max(h, level[order[j]] + 1);
    }
    level[order[k]] = h;
  }
  return level;
}

}  // namespace

std::string render_ascii(const Matching& m) {
  const auto arcs = m.arcs();
  const auto level = arc_levels(arcs);
  const int points = m.point_count();
  const int digits =
      static_cast<int>(std::to_string(points).size());
  const int gap = std::max(2, digits + 1);
  const auto col = [&](int p) { return (p - 1) * gap; };

  const int top = *std::max_element(level.begin(), level.end());
  // Rows 0..top-1 hold the arcs, row top the points, row top+1 the labels.
  std::vector<std::string> grid(top + 2, std::string(col(points) + digits, ' '));

  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const int row = top - level[k];
    for (int c = col(arcs[k].opener) + 1; c < col(arcs[k].closer); ++c)
      grid[row][c] = '-';
    grid[row][col(arcs[k].opener)] = '.';
    grid[row][col(arcs[k].closer)] = '.';
  }
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    for (int row = top - level[k] + 1; row < top; ++row) {
      grid[row][col(arcs[k].opener)] = '|';
      grid[row][col(arcs[k].closer)] = '|';
    }
  }
  for (int p = 1; p <= points; ++p)
    grid[top][col(p)] = m.is_opener(p) ? '*' : '#';
  for (int p = 1; p <= points; ++p) {
    const std::string label = std::to_string(p);
    grid[top + 1].replace(col(p), label.size(), label);
  }

  std::ostringstream os;
  for (auto& row : grid) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    os << row << '\n';
  }
  return os.str();
}

std::string render_svg(const Matching& m) {
  const auto arcs = m.arcs();
  const int points = m.point_count();
  int max_radius = 0;
  for (const Arc& a : arcs)
    max_radius = std::max(max_radius, 20 * (a.closer - a.opener));
  const int baseline = max_radius + 40;
  const int width = 40 * (points + 1);
  const int height = baseline + 40;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";
  os << "  <line x1=\"40\" y1=\"" << baseline << "\" x2=\"" << 40 * points
     << "\" y2=\"" << baseline << "\" stroke=\"black\"/>\n";
  for (const Arc& a : arcs) {
    const int x1 = 40 * a.opener;
    const int x2 = 40 * a.closer;
    const int r = 20 * (a.closer - a.opener);
    os << "  <path d=\"M " << x1 << ' ' << baseline << " A " << r << ' ' << r
       << " 0 0 1 " << x2 << ' ' << baseline
       << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  for (int p = 1; p <= points; ++p) {
    const int x = 40 * p;
    if (m.is_opener(p)) {
      os << "  <circle cx=\"" << x << "\" cy=\"" << baseline
         << "\" r=\"4\" fill=\"black\"/>\n";
    } else {
      os << "  <rect x=\"" << x - 4 << "\" y=\"" << baseline - 4
         << "\" width=\"8\" height=\"8\" fill=\"white\" "
            "stroke=\"black\"/>\n";
    }
    os << "  <text x=\"" << x << "\" y=\"" << baseline + 20
       << "\" font-size=\"12\" text-anchor=\"middle\">" << p << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render(const Matching& m, RenderFormat format) {
  return format == RenderFormat::Ascii ? render_ascii(m) : render_svg(m);
}

}  // namespace stoim
