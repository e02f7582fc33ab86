#include "fvslab/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace fvslab {

std::string dump_svg(const PlaneDigraph& g, const std::set<int>& highlight) {
  const double size = 640.0, margin = 40.0;
  int n = g.n();
  std::vector<double> x(n, size / 2), y(n, size / 2);
  std::vector<char> pinned(n, 0);

  // Pin the outer face (designated, else the longest walk) on a circle.
  int outer = -1;
  if (g.has_outer_face())
    outer = g.outer_face();
  else
    for (int w = 0; w < g.walks(); ++w)
      if (outer == -1 || g.face_len(w) > g.face_len(outer)) outer = w;
  std::vector<int> boundary;
  if (outer != -1) {
    for (DartId d : g.face_darts(outer)) {
      int v = g.vertex_of(d);
      bool seen = false;
      for (int b : boundary) seen |= b == v;
      if (!seen) boundary.push_back(v);
    }
  }
  double r = size / 2 - margin;
  for (size_t i = 0; i < boundary.size(); ++i) {
    double angle = 2 * M_PI * static_cast<double>(i) / static_cast<double>(boundary.size());
    x[boundary[i]] = size / 2 + r * std::cos(angle);
    y[boundary[i]] = size / 2 + r * std::sin(angle);
    pinned[boundary[i]] = 1;
  }
  // Fixed-count averaging rounds.
  std::vector<std::vector<int>> nb(n);
  for (int a = 0; a < g.m(); ++a) {
    nb[g.tail(a)].push_back(g.head(a));
    nb[g.head(a)].push_back(g.tail(a));
  }
  for (int round = 0; round < 300; ++round) {
    for (int v = 0; v < n; ++v) {
      if (pinned[v] || nb[v].empty()) continue;
      double sx = 0, sy = 0;
      for (int w : nb[v]) {
        sx += x[w];
        sy += y[w];
      }
      x[v] = sx / static_cast<double>(nb[v].size());
      y[v] = sy / static_cast<double>(nb[v].size());
    }
  }

  std::ostringstream out;
  char buf[256];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << static_cast<int>(size)
      << "\" height=\"" << static_cast<int>(size) << "\">\n";
  out << "<style>.arc{stroke:#333;fill:none;marker-end:url(#tip)}"
         ".link{stroke:#0a7f2e;fill:none;marker-end:url(#tip)}"
         ".v{fill:#222}text{font:10px sans-serif}</style>\n";
  out << "<defs><marker id=\"tip\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
         "<path d=\"M0,0L10,5L0,10z\" fill=\"#555\"/></marker></defs>\n";
  for (int a = 0; a < g.m(); ++a) {
    int u = g.tail(a), w = g.head(a);
    // Slight curvature so parallel and antiparallel arcs stay visible.
    double mx = (x[u] + x[w]) / 2, my = (y[u] + y[w]) / 2;
    double dx = x[w] - x[u], dy = y[w] - y[u];
    double len = std::max(1.0, std::hypot(dx, dy));
    double off = 6.0 + (a % 3) * 3.0;
    double cx = mx - dy / len * off, cy = my + dx / len * off;
    std::snprintf(buf, sizeof buf,
                  "<path class=\"%s\" d=\"M%.2f,%.2f Q%.2f,%.2f %.2f,%.2f\"/>\n",
                  highlight.count(a) ? "link" : "arc", x[u], y[u], cx, cy, x[w], y[w]);
    out << buf;
  }
  for (int v = 0; v < n; ++v) {
    std::snprintf(buf, sizeof buf,
                  "<circle class=\"v\" cx=\"%.2f\" cy=\"%.2f\" r=\"3\"/>"
                  "<text x=\"%.2f\" y=\"%.2f\">%d</text>\n",
                  x[v], y[v], x[v] + 4, y[v] - 4, g.vertex_label(v));
    out << buf;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fvslab
