#pragma once

// Picture of a standard walk in two variables: the visited cones of the
// Groebner fan as sectors of the nonnegative quadrant, a ray per crossing and
// a dot per intermediate weight. Directions are scaled to unit length.

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "gwalk/walk.hpp"

namespace gwalk {

/// Bounds of a cone in the plane, as slopes y/x; nullopt upper means the y axis.
struct SectorBounds {
  mpq_class lower;
  std::optional<mpq_class> upper;
};

inline SectorBounds sector_bounds(const ConeInequalities& cone) {
  SectorBounds b{mpq_class(0), std::nullopt};
  for (const auto& v : cone.vectors) {
    if (v.size() != 2) throw DimensionMismatch("sector bounds need two variables");
    const int sa = v[0].sign();
    const int sb = v[1].sign();
    // a x + b y >= 0
    if (sa > 0 && sb < 0) {
      mpq_class s(v[0].to_mpz(), -v[1].to_mpz());
      s.canonicalize();
      if (!b.upper || s < *b.upper) b.upper = s;
    } else if (sa < 0 && sb > 0) {
      mpq_class s(-v[0].to_mpz(), v[1].to_mpz());
      s.canonicalize();
      if (s > b.lower) b.lower = s;
    }
  }
  return b;
}

namespace detail {

struct Point {
  double x;
  double y;
};

constexpr double kSize = 512;
constexpr double kMargin = 40;
constexpr double kRadius = kSize - 2 * kMargin;

inline Point unit(double x, double y) {
  const double len = std::hypot(x, y);
  return {x / len, y / len};
}

inline Point screen(Point u, double scale = 1.0) {
  return {kMargin + kRadius * scale * u.x, kSize - kMargin - kRadius * scale * u.y};
}

inline Point slope_dir(const mpq_class& s) { return unit(1.0, s.get_d()); }

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace detail

/// SVG 1.1 document for a standard walk in two variables; `bases` holds the
/// basis of each visited cone in walk order.
template <class F>
std::string fan_svg(const WalkTrace& trace, const std::vector<MarkedBasis<F>>& bases) {
  using detail::fmt;
  if (trace.crossed.empty()) throw InvalidInput("fan picture needs a nonempty trace");
  if (trace.algorithm != "standard_walk") throw InvalidInput("fan picture needs a standard walk trace");
  for (const auto& w : trace.crossed) {
    if (w.size() != 2) throw DimensionMismatch("fan picture needs exactly two variables");
  }
  if (bases.size() != trace.crossed.size()) throw InvalidInput("fan picture needs one basis per trace weight");
  for (const auto& g : bases) {
    if (!g.empty() && g[0].mark().size() != 2) throw DimensionMismatch("fan picture needs exactly two variables");
  }
  static const char* const kFills[] = {"#cfe2f3", "#f4cccc", "#d9ead3", "#fff2cc", "#d9d2e9", "#fce5cd"};
  const auto s = detail::kSize;
  const auto o = detail::screen({0, 0});
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(s) + "\" height=\"" + fmt(s) +
         "\" viewBox=\"0 0 " + fmt(s) + " " + fmt(s) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(s) + "\" height=\"" + fmt(s) + "\" fill=\"white\"/>\n";

  out += "<g id=\"cones\" stroke=\"#666666\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const SectorBounds b = sector_bounds(cone_inequalities(bases[i]));
    const auto p = detail::screen(detail::slope_dir(b.lower));
    const auto q = detail::screen(b.upper ? detail::slope_dir(*b.upper) : detail::Point{0, 1});
    const std::string r = fmt(detail::kRadius);
    out += "<path d=\"M " + fmt(o.x) + " " + fmt(o.y) + " L " + fmt(p.x) + " " + fmt(p.y) + " A " + r + " " + r +
           " 0 0 0 " + fmt(q.x) + " " + fmt(q.y) + " Z\" fill=\"" + kFills[i % std::size(kFills)] + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g id=\"axes\" stroke=\"black\" stroke-width=\"1.5\">\n";
  const auto ex = detail::screen({1.05, 0});
  const auto ey = detail::screen({0, 1.05});
  out += "<line x1=\"" + fmt(o.x) + "\" y1=\"" + fmt(o.y) + "\" x2=\"" + fmt(ex.x) + "\" y2=\"" + fmt(ex.y) + "\"/>\n";
  out += "<line x1=\"" + fmt(o.x) + "\" y1=\"" + fmt(o.y) + "\" x2=\"" + fmt(ey.x) + "\" y2=\"" + fmt(ey.y) + "\"/>\n";
  out += "</g>\n";

  out += "<g id=\"crossings\" stroke=\"#cc0000\" stroke-width=\"1\" stroke-dasharray=\"4 3\">\n";
  for (std::size_t k = 1; k < trace.crossed.size(); ++k) {
    const auto& w = trace.crossed[k];
    const auto e = detail::screen(detail::unit(w[0].to_mpz().get_d(), w[1].to_mpz().get_d()));
    out += "<line x1=\"" + fmt(o.x) + "\" y1=\"" + fmt(o.y) + "\" x2=\"" + fmt(e.x) + "\" y2=\"" + fmt(e.y) + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g id=\"weights\" font-family=\"monospace\" font-size=\"11\">\n";
  for (const auto& w : trace.crossed) {
    const auto u = detail::unit(w[0].to_mpz().get_d(), w[1].to_mpz().get_d());
    const auto d = detail::screen(u, 0.85);
    out += "<circle cx=\"" + fmt(d.x) + "\" cy=\"" + fmt(d.y) + "\" r=\"4\" fill=\"black\"/>\n";
    out += "<text x=\"" + fmt(d.x + 6) + "\" y=\"" + fmt(d.y - 6) + "\">" + format_vector(w) + "</text>\n";
  }
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

template <class F>
void write_fan_svg(const WalkTrace& trace, const std::vector<MarkedBasis<F>>& bases, const std::string& path) {
  const std::string svg = fan_svg(trace, bases);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << svg;
}

}  // namespace gwalk
