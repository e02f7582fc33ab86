#include "fvslab/coating_search.hpp"

#include <algorithm>

#include "fvslab/cycles.hpp"

namespace fvslab {

namespace {

struct Csp {
  const Skeleton& s;
  int g;
  bool perfect;
  bool check_digirth;
  long long budget;
  long long nodes = 0;

  std::vector<int> value;        // per corner, -1 unassigned
  std::vector<int> cap;          // per corner, max admissible value
  std::vector<int> vtx_left;     // per vertex: residual sum
  std::vector<int> vtx_count;    // per vertex: unassigned corners
  std::vector<long long> face_left;   // per face (walk): g - assigned (may go < 0 if not perfect)
  std::vector<int> face_count;   // per face: unassigned corners
  std::vector<int> order;        // corner assignment order
  std::optional<CoatingFunction> found;

  Csp(const Skeleton& skel, int gg, bool perf, bool check, long long b)
      : s(skel), g(gg), perfect(perf), check_digirth(check), budget(b) {}

  bool feasible_vertex(int v) const {
    // Residual must be fillable with values in [1, cap] over the remaining corners.
    long long maxfill = 0;
    for (int corner : s.corners_of_vertex(v))
      if (value[corner] == -1) maxfill += cap[corner];
    return vtx_left[v] >= vtx_count[v] && vtx_left[v] <= maxfill;
  }

  bool feasible_face(int face) const {
    if (face < 0) return true;
    long long maxfill = 0;
    for (int corner : s.corners_of_face(face))
      if (value[corner] == -1) maxfill += cap[corner];
    if (perfect) return face_left[face] >= face_count[face] && face_left[face] <= maxfill;
    return face_left[face] <= maxfill;  // only the >= g side binds
  }

  bool dfs(size_t idx) {
    if (++nodes > budget) fail(Errc::BudgetExhausted, "coating search budget exhausted");
    if (idx == order.size()) {
      CoatingFunction h(value.begin(), value.end());
      if (!check_digirth) {
        found = h;
        return true;
      }
      Coating c = build_coating(s, h);
      auto girth = digirth(c.graph);
      if (girth && *girth == g) {
        found = h;
        return true;
      }
      return false;
    }
    int corner = order[idx];
    int v = s.corners()[corner].vertex;
    int face = s.corners()[corner].face;
    for (int val = 1; val <= cap[corner]; ++val) {
      value[corner] = val;
      vtx_left[v] -= val;
      --vtx_count[v];
      if (face >= 0) {
        face_left[face] -= val;
        --face_count[face];
      }
      bool ok = feasible_vertex(v) && feasible_face(face);
      if (ok && dfs(idx + 1)) return true;
      value[corner] = -1;
      vtx_left[v] += val;
      ++vtx_count[v];
      if (face >= 0) {
        face_left[face] += val;
        ++face_count[face];
      }
    }
    return false;
  }
};

}  // namespace

std::optional<CoatingFunction> search_coating_function(const Skeleton& s, int g, bool perfect,
                                                       const CoatingSearchOptions& opts) {
  if (2 * s.max_degree() > g) return std::nullopt;  // no g-coating can exist
  if (s.has_loops() && perfect) return std::nullopt;

  Csp csp(s, g, perfect, opts.check_digirth, opts.budget);
  int ncorners = static_cast<int>(s.corners().size());
  csp.value.assign(ncorners, -1);
  csp.cap.assign(ncorners, 0);
  csp.vtx_left.assign(s.n(), 0);
  csp.vtx_count.assign(s.n(), 0);
  csp.face_left.assign(s.walks(), g);
  csp.face_count.assign(s.walks(), 0);
  for (int v = 0; v < s.n(); ++v) {
    int deg = s.degree(v);
    int target = g - deg;
    if (target < std::max(1, deg)) return std::nullopt;
    csp.vtx_left[v] = target;
    csp.vtx_count[v] = static_cast<int>(s.corners_of_vertex(v).size());
  }
  for (int corner = 0; corner < ncorners; ++corner) {
    int v = s.corners()[corner].vertex;
    int deg = s.degree(v);
    int others = std::max(0, static_cast<int>(s.corners_of_vertex(v).size()) - 1);
    csp.cap[corner] = g - deg - others;  // leave 1 per sibling corner
    if (csp.cap[corner] < 1) return std::nullopt;
    int face = s.corners()[corner].face;
    if (face >= 0) ++csp.face_count[face];
  }
  // Assign corners face-by-face so the exact/lower face sums bind early.
  std::vector<char> placed(ncorners, 0);
  for (int face = 0; face < s.walks(); ++face)
    for (int corner : s.corners_of_face(face))
      if (!placed[corner]) {
        placed[corner] = 1;
        csp.order.push_back(corner);
      }
  for (int corner = 0; corner < ncorners; ++corner)
    if (!placed[corner]) csp.order.push_back(corner);

  csp.dfs(0);
  return csp.found;
}

bool coating_independence_check(const Skeleton& s, const CoatingFunction& h1,
                                const CoatingFunction& h2, const FvsOptions& opts) {
  Coating c1 = build_coating(s, h1);
  Coating c2 = build_coating(s, h2);
  return fvs_exact(c1.graph, opts).size == fvs_exact(c2.graph, opts).size;
}

}  // namespace fvslab
