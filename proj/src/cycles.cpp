#include "fvslab/cycles.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace fvslab {

void DiCycle::canonicalize() {
  if (arcs.empty()) return;
  auto it = std::min_element(arcs.begin(), arcs.end());
  std::rotate(arcs.begin(), it, arcs.end());
}

std::vector<int> DiCycle::vertices(const PlaneDigraph& g) const {
  std::vector<int> vs;
  vs.reserve(arcs.size());
  for (int a : arcs) vs.push_back(g.tail(a));
  return vs;
}

bool DiCycle::contains_arc(int a) const {
  return std::find(arcs.begin(), arcs.end(), a) != arcs.end();
}

bool DiCycle::contains_vertex(const PlaneDigraph& g, int v) const {
  for (int a : arcs)
    if (g.tail(a) == v) return true;
  return false;
}

bool is_valid_dicycle(const PlaneDigraph& g, const DiCycle& c) {
  if (c.arcs.empty()) return false;
  std::vector<int> seen;
  for (size_t i = 0; i < c.arcs.size(); ++i) {
    int a = c.arcs[i];
    int b = c.arcs[(i + 1) % c.arcs.size()];
    if (a < 0 || a >= g.m()) return false;
    if (g.head(a) != g.tail(b)) return false;
    seen.push_back(g.tail(a));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

Region cycle_region(const PlaneDigraph& g, const DiCycle& c) {
  int outer = g.outer_face();
  std::vector<char> on_cycle_arc(g.m(), 0);
  for (int a : c.arcs) on_cycle_arc[a] = 1;
  std::vector<char> on_cycle_vertex(g.n(), 0);
  for (int a : c.arcs) on_cycle_vertex[g.tail(a)] = on_cycle_vertex[g.head(a)] = 1;

  // Faces reachable from the outer face crossing only non-cycle arcs are the
  // exterior side. Components other than the cycle's count as exterior too
  // (disconnected components sit side by side, never nested).
  int cycle_comp = g.component_of(g.tail(c.arcs[0]));
  require(!g.face_darts(outer).empty() &&
              g.component_of(g.vertex_of(g.face_darts(outer).front())) == cycle_comp,
          Errc::NoOuterFace, "outer face lies in a different component than the cycle");
  std::vector<char> exterior(g.walks(), 0);
  std::deque<int> q{outer};
  exterior[outer] = 1;
  while (!q.empty()) {
    int face = q.front();
    q.pop_front();
    for (DartId d : g.face_darts(face)) {
      int a = dart_arc(d);
      if (on_cycle_arc[a]) continue;
      int other = g.face_of(dart_reverse(d));
      if (!exterior[other]) {
        exterior[other] = 1;
        q.push_back(other);
      }
    }
  }
  for (int face = 0; face < g.walks(); ++face) {
    if (g.face_darts(face).empty()) continue;
    if (g.component_of(g.vertex_of(g.face_darts(face).front())) != cycle_comp) exterior[face] = 1;
  }

  Region r;
  r.face_inside.assign(g.walks(), 0);
  for (int face = 0; face < g.walks(); ++face) r.face_inside[face] = !exterior[face];
  r.arc_inside.assign(g.m(), 0);
  for (int a = 0; a < g.m(); ++a)
    if (!on_cycle_arc[a] && r.face_inside[g.face_left(a)]) r.arc_inside[a] = 1;
  r.vertex_inside.assign(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (on_cycle_vertex[v] || g.degree(v) == 0) continue;  // isolated: outer by convention
    if (r.face_inside[g.face_of(g.rotation(v)[0])]) r.vertex_inside[v] = 1;
  }
  for (char x : r.arc_inside) r.interior_elements += x;
  for (char x : r.vertex_inside) r.interior_elements += x;
  r.orientation =
      r.face_inside[g.face_right(c.arcs[0])] ? Orientation::Clockwise : Orientation::CounterClockwise;
  return r;
}

bool crossing(const PlaneDigraph& g, const DiCycle& c1, const Region& r1, const DiCycle& c2,
              const Region& r2) {
  if (c1 == c2) return false;
  auto has_element_inside = [&g](const DiCycle& c, const Region& other) {
    for (int a : c.arcs)
      if (other.arc_inside[a]) return true;
    for (int a : c.arcs)
      if (other.vertex_inside[g.tail(a)]) return true;
    return false;
  };
  return has_element_inside(c2, r1) && has_element_inside(c1, r2);
}

bool crossing(const PlaneDigraph& g, const DiCycle& c1, const DiCycle& c2) {
  if (c1 == c2) return false;
  return crossing(g, c1, cycle_region(g, c1), c2, cycle_region(g, c2));
}

bool region_contains(const PlaneDigraph& g, const DiCycle& outer, const Region& router,
                     const DiCycle& inner) {
  std::vector<char> on_outer_arc(g.m(), 0), on_outer_vertex(g.n(), 0);
  for (int a : outer.arcs) {
    on_outer_arc[a] = 1;
    on_outer_vertex[g.tail(a)] = on_outer_vertex[g.head(a)] = 1;
  }
  for (int a : inner.arcs) {
    if (!on_outer_arc[a] && !router.arc_inside[a]) return false;
    int v = g.tail(a);
    if (!on_outer_vertex[v] && !router.vertex_inside[v]) return false;
  }
  return true;
}

bool is_acyclic(const PlaneDigraph& g) {
  std::vector<int> indeg(g.n(), 0);
  for (int a = 0; a < g.m(); ++a) ++indeg[g.head(a)];
  std::deque<int> q;
  for (int v = 0; v < g.n(); ++v)
    if (indeg[v] == 0) q.push_back(v);
  int seen = 0;
  std::vector<std::vector<int>> out(g.n());
  for (int a = 0; a < g.m(); ++a) out[g.tail(a)].push_back(g.head(a));
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    ++seen;
    for (int w : out[v])
      if (--indeg[w] == 0) q.push_back(w);
  }
  return seen == g.n();
}

namespace {

// Arc-level Johnson enumeration. Multigraph-aware: parallel arcs give distinct
// cycles. Self-loops are emitted as length-1 cycles.
class JohnsonEnumerator {
 public:
  JohnsonEnumerator(const PlaneDigraph& g, long long cap) : g_(g), cap_(cap) {
    out_.resize(g.n());
    for (int a = 0; a < g.m(); ++a) out_[g.tail(a)].push_back(a);
    for (auto& v : out_) std::sort(v.begin(), v.end());
  }

  std::vector<DiCycle> run() {
    blocked_.assign(g_.n(), 0);
    b_sets_.assign(g_.n(), {});
    for (start_ = 0; start_ < g_.n(); ++start_) {
      path_.clear();
      std::fill(blocked_.begin(), blocked_.end(), 0);
      for (auto& b : b_sets_) b.clear();
      dfs(start_);
    }
    std::sort(result_.begin(), result_.end());
    return std::move(result_);
  }

 private:
  bool dfs(int v) {
    bool found = false;
    blocked_[v] = 1;
    for (int a : out_[v]) {
      int w = g_.head(a);
      if (w < start_) continue;  // cycles rooted at their minimal vertex
      if (w == start_) {
        path_.push_back(a);
        emit();
        path_.pop_back();
        found = true;
      } else if (!blocked_[w]) {
        path_.push_back(a);
        if (dfs(w)) found = true;
        path_.pop_back();
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (int a : out_[v]) {
        int w = g_.head(a);
        if (w < start_) continue;
        auto& b = b_sets_[w];
        if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
      }
    }
    return found;
  }

  void unblock(int v) {
    blocked_[v] = 0;
    auto work = std::move(b_sets_[v]);
    b_sets_[v].clear();
    for (int w : work)
      if (blocked_[w]) unblock(w);
  }

  void emit() {
    if (static_cast<long long>(result_.size()) >= cap_)
      fail(Errc::CycleBudgetExceeded, "more than " + std::to_string(cap_) + " directed cycles");
    result_.push_back(DiCycle(path_));
  }

  const PlaneDigraph& g_;
  long long cap_;
  std::vector<std::vector<int>> out_;
  std::vector<char> blocked_;
  std::vector<std::vector<int>> b_sets_;
  std::vector<int> path_;
  int start_ = 0;
  std::vector<DiCycle> result_;
};

}  // namespace

std::vector<DiCycle> enumerate_dicycles(const PlaneDigraph& g, long long max_count) {
  return JohnsonEnumerator(g, max_count).run();
}

std::optional<int> shortest_dipath_len(const PlaneDigraph& g, int u, int v) {
  require(u >= 0 && u < g.n(), Errc::UnknownVertex, "u=" + std::to_string(u));
  require(v >= 0 && v < g.n(), Errc::UnknownVertex, "v=" + std::to_string(v));
  if (u == v) return 0;
  std::vector<std::vector<int>> out(g.n());
  for (int a = 0; a < g.m(); ++a) out[g.tail(a)].push_back(g.head(a));
  std::vector<int> dist(g.n(), -1);
  dist[u] = 0;
  std::deque<int> q{u};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : out[x]) {
      if (dist[y] != -1) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      q.push_back(y);
    }
  }
  return std::nullopt;
}

std::optional<DiCycle> shortest_dicycle(const PlaneDigraph& g) {
  // BFS from each arc head back to its tail; reconstruct the arc path.
  std::optional<DiCycle> best;
  std::vector<std::vector<std::pair<int, int>>> out(g.n());  // (target, arc)
  for (int a = 0; a < g.m(); ++a) out[g.tail(a)].push_back({g.head(a), a});
  for (int a0 = 0; a0 < g.m(); ++a0) {
    int src = g.head(a0), dst = g.tail(a0);
    if (best && best->length() == 1) break;
    if (src == dst) {  // self-loop
      DiCycle c({a0});
      if (!best || c.length() < best->length() || (c.length() == best->length() && c < *best)) best = c;
      continue;
    }
    std::vector<int> via_arc(g.n(), -1);
    std::vector<int> dist(g.n(), -1);
    dist[src] = 0;
    std::deque<int> q{src};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      if (x == dst) break;
      if (best && dist[x] + 2 > best->length()) continue;
      for (auto [y, arc] : out[x]) {
        if (dist[y] != -1) continue;
        dist[y] = dist[x] + 1;
        via_arc[y] = arc;
        q.push_back(y);
      }
    }
    if (dist[dst] == -1) continue;
    std::vector<int> arcs{a0};
    for (int x = dst; x != src; x = g.tail(via_arc[x])) arcs.push_back(via_arc[x]);
    std::reverse(arcs.begin() + 1, arcs.end());
    DiCycle c(std::move(arcs));
    if (!best || c.length() < best->length() || (c.length() == best->length() && c < *best)) best = c;
  }
  return best;
}

std::optional<int> digirth(const PlaneDigraph& g) {
  auto c = shortest_dicycle(g);
  if (!c) return std::nullopt;
  return c->length();
}

}  // namespace fvslab
