#include "tropmat/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tropmat/partition.hpp"

namespace tropmat {

namespace {

struct Xy {
  double x = 0;
  double y = 0;
};

constexpr std::array<const char*, 8> kPalette = {"#1b6ca8", "#c0392b", "#27ae60", "#8e44ad",
                                                 "#d35400", "#16a085", "#7f8c8d", "#2c3e50"};

// Average lattice location of the tope faces of a cell.
std::array<Rational, 3> barycenter(const NdType& cell) {
  std::array<Rational, 3> sum{};
  int count = 0;
  for (const NdType& f : faces(cell)) {
    if (!f.is_total()) continue;
    const std::vector<int> q = tope_location(f);
    for (int k = 0; k < 3; ++k) sum[k] += q[k];
    ++count;
  }
  for (Rational& x : sum) x /= count;
  return sum;
}

Xy plane(const std::array<Rational, 3>& q, int n, double scale) {
  const double q2 = q[1].get_d();
  const double q3 = q[2].get_d();
  const double margin = 0.35 * scale;
  return {margin + scale * (q2 + q3 / 2.0), margin + scale * (n - q3) * std::sqrt(3.0) / 2.0};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '<') {
      out += "&lt;";
    } else if (c == '>') {
      out += "&gt;";
    } else if (c == '&') {
      out += "&amp;";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const MixedSubdivision& s, const RenderOptions& options) {
  if (s.d() != 3) throw std::invalid_argument("rendering needs d = 3");
  const int n = s.n();
  const double scale = options.scale;
  const std::vector<NdType>& cells = s.maximal_cells();
  std::vector<Xy> centers;
  for (const NdType& c : cells) centers.push_back(plane(barycenter(c), n, scale));

  const double width = scale * (n + 0.7);
  const double height = scale * (n * std::sqrt(3.0) / 2.0 + 0.7);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";

  const std::array<std::array<Rational, 3>, 3> corners{{{n, 0, 0}, {0, n, 0}, {0, 0, n}}};
  out << "  <polygon class=\"simplex\" fill=\"none\" stroke=\"#cccccc\" points=\"";
  for (std::size_t k = 0; k < corners.size(); ++k) {
    const Xy p = plane(corners[k], n, scale);
    out << (k ? " " : "") << num(p.x) << ',' << num(p.y);
  }
  out << "\"/>\n";

  std::vector<NdType> edges;
  for (const NdType& f : s.all_cells()) {
    if (cell_dimension(f) == 1) edges.push_back(f);
  }
  for (int i = 1; i <= n; ++i) {
    out << "  <g class=\"hyperplane\" id=\"h" << i << "\" stroke=\"" << kPalette[(i - 1) % kPalette.size()]
        << "\" stroke-width=\"2\" fill=\"none\">\n";
    for (const NdType& f : edges) {
      if (popcount(f.at(i)) < 2) continue;
      std::vector<std::size_t> around;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (is_face(f, cells[c])) around.push_back(c);
      }
      if (around.empty()) continue;
      const Xy a = centers[around[0]];
      Xy b;
      if (around.size() >= 2) {
        b = centers[around[1]];
      } else {
        const Xy mid = plane(barycenter(f), n, scale);
        b = {mid.x + 0.5 * (mid.x - a.x), mid.y + 0.5 * (mid.y - a.y)};
      }
      out << "    <line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\""
          << num(b.y) << "\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "  <g class=\"vertices\" fill=\"#000000\">\n";
  for (const Xy& p : centers) out << "    <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"3\"/>\n";
  out << "  </g>\n";
  if (options.labels) {
    out << "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << "    <text x=\"" << num(centers[c].x + 5) << "\" y=\"" << num(centers[c].y - 5) << "\">"
          << escape(cells[c].str()) << "</text>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tropmat
