#pragma once

#include <optional>
#include <vector>

#include "fvslab/plane_digraph.hpp"

namespace fvslab {

// A simple directed cycle, stored as its arc sequence rotated so that the
// smallest arc id comes first (canonical form, usable as a map key).
struct DiCycle {
  std::vector<int> arcs;

  DiCycle() = default;
  explicit DiCycle(std::vector<int> a) : arcs(std::move(a)) { canonicalize(); }

  int length() const { return static_cast<int>(arcs.size()); }
  void canonicalize();
  std::vector<int> vertices(const PlaneDigraph& g) const;  // tails, in arc order
  bool contains_arc(int a) const;
  bool contains_vertex(const PlaneDigraph& g, int v) const;

  auto operator<=>(const DiCycle&) const = default;
};

// Checks closure (head of arc i = tail of arc i+1) and vertex distinctness.
bool is_valid_dicycle(const PlaneDigraph& g, const DiCycle& c);

enum class Orientation { Clockwise, CounterClockwise };

// Interior of the region of a directed cycle: the elements on the side of the
// cycle not containing the outer face, the cycle's own elements excluded.
struct Region {
  std::vector<char> face_inside;    // per face id
  std::vector<char> vertex_inside;  // strictly inside (excludes the cycle)
  std::vector<char> arc_inside;
  long long interior_elements = 0;  // ||int C|| = inside vertices + inside arcs
  Orientation orientation = Orientation::Clockwise;
};

Region cycle_region(const PlaneDigraph& g, const DiCycle& c);

// Element-level crossing test: some element of c2 lies strictly inside c1 and
// some element of c1 lies strictly inside c2. A cycle never crosses itself.
bool crossing(const PlaneDigraph& g, const DiCycle& c1, const DiCycle& c2);
bool crossing(const PlaneDigraph& g, const DiCycle& c1, const Region& r1, const DiCycle& c2,
              const Region& r2);

// R̄(inner) ⊆ R̄(outer): every element of the inner cycle lies in the closed
// region of the outer one.
bool region_contains(const PlaneDigraph& g, const DiCycle& outer, const Region& router,
                     const DiCycle& inner);

bool is_acyclic(const PlaneDigraph& g);

// All simple directed cycles, Johnson-style, deterministic order.
// Throws CycleBudgetExceeded past the cap.
std::vector<DiCycle> enumerate_dicycles(const PlaneDigraph& g, long long max_count = 200000);

std::optional<int> digirth(const PlaneDigraph& g);
std::optional<DiCycle> shortest_dicycle(const PlaneDigraph& g);
std::optional<int> shortest_dipath_len(const PlaneDigraph& g, int u, int v);

}  // namespace fvslab
