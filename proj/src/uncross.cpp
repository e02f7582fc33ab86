#include "fvslab/uncross.hpp"

#include <algorithm>
#include <set>

namespace fvslab {

const Region& RegionCache::of(const DiCycle& c) {
  auto it = cache_.find(c);
  if (it == cache_.end()) it = cache_.emplace(c, cycle_region(g_, c)).first;
  return it->second;
}

bool RegionCache::cross(const DiCycle& a, const DiCycle& b) {
  if (a == b) return false;
  return crossing(g_, a, of(a), b, of(b));
}

namespace {

// The superposition of two cycles: arc instances with balanced in/out at every
// vertex (1 or 2 of each). A re-pairing picks, at every vertex with two
// passes, which incoming instance continues into which outgoing instance.
struct Superposition {
  std::vector<int> arcs;  // instance -> arc id
  struct VertexPasses {
    int v;
    int ins[2] = {-1, -1};   // instance ids arriving at v
    int outs[2] = {-1, -1};  // instance ids leaving v
    int count = 0;           // 1 or 2
  };
  std::vector<VertexPasses> passes;
  std::vector<int> pass_of_head;  // instance -> index in passes (vertex it enters)
  std::vector<int> choice_vertices;  // indices into passes with count == 2
};

Superposition superpose(const PlaneDigraph& g, const DiCycle& c1, const DiCycle& c2) {
  Superposition s;
  for (int a : c1.arcs) s.arcs.push_back(a);
  for (int a : c2.arcs) s.arcs.push_back(a);
  std::map<int, int> pass_index;
  auto pass_at = [&](int v) {
    auto it = pass_index.find(v);
    if (it == pass_index.end()) {
      it = pass_index.emplace(v, static_cast<int>(s.passes.size())).first;
      s.passes.push_back({});
      s.passes.back().v = v;
    }
    return it->second;
  };
  s.pass_of_head.assign(s.arcs.size(), -1);
  for (size_t i = 0; i < s.arcs.size(); ++i) {
    int pi = pass_at(g.head(s.arcs[i]));
    auto& p = s.passes[pi];
    (p.ins[0] == -1 ? p.ins[0] : p.ins[1]) = static_cast<int>(i);
    s.pass_of_head[i] = pi;
    int po = pass_at(g.tail(s.arcs[i]));
    auto& q = s.passes[po];
    (q.outs[0] == -1 ? q.outs[0] : q.outs[1]) = static_cast<int>(i);
  }
  for (size_t pi = 0; pi < s.passes.size(); ++pi) {
    auto& p = s.passes[pi];
    p.count = (p.ins[1] == -1) ? 1 : 2;
    if (p.count == 2) s.choice_vertices.push_back(static_cast<int>(pi));
  }
  return s;
}

// Decodes one pairing assignment into cycles; empty result if it does not
// split into exactly two simple cycles.
std::vector<DiCycle> decode(const PlaneDigraph& g, const Superposition& s, uint32_t assign) {
  size_t k = s.arcs.size();
  std::vector<int> succ(k, -1);
  for (size_t pi = 0, bit = 0; pi < s.passes.size(); ++pi) {
    const auto& p = s.passes[pi];
    if (p.count == 1) {
      succ[p.ins[0]] = p.outs[0];
    } else {
      bool swap = (assign >> bit++) & 1;
      succ[p.ins[0]] = p.outs[swap ? 1 : 0];
      succ[p.ins[1]] = p.outs[swap ? 0 : 1];
    }
  }
  std::vector<int> orbit(k, -1);
  std::vector<DiCycle> out;
  std::vector<char> vertex_seen(g.n(), 0);
  for (size_t i0 = 0; i0 < k; ++i0) {
    if (orbit[i0] != -1) continue;
    int id = static_cast<int>(out.size());
    if (id >= 2) return {};
    std::vector<int> arcs;
    std::vector<int> touched;
    int i = static_cast<int>(i0);
    do {
      orbit[i] = id;
      int v = g.tail(s.arcs[i]);
      if (vertex_seen[v]) {  // revisits a vertex: not a simple cycle
        for (int w : touched) vertex_seen[w] = 0;
        return {};
      }
      vertex_seen[v] = 1;
      touched.push_back(v);
      arcs.push_back(s.arcs[i]);
      i = succ[i];
    } while (i != static_cast<int>(i0));
    for (int w : touched) vertex_seen[w] = 0;
    out.push_back(DiCycle(std::move(arcs)));
  }
  if (out.size() != 2) return {};
  return out;
}

}  // namespace

std::pair<DiCycle, DiCycle> uncross_step(const PlaneDigraph& g, RegionCache& cache,
                                         const DiCycle& c1, const DiCycle& c2) {
  Superposition s = superpose(g, c1, c2);
  size_t nchoice = s.choice_vertices.size();
  require(nchoice <= 20, Errc::TooLarge,
          "uncrossing superposition with " + std::to_string(nchoice) + " shared vertices");
  long long before = (1 + cache.interior(c1)) * (1 + cache.interior(c2));

  std::set<std::pair<DiCycle, DiCycle>> seen;
  std::pair<DiCycle, DiCycle> best;
  long long best_product = -1;
  for (uint32_t assign = 0; assign < (1u << nchoice); ++assign) {
    auto cycles = decode(g, s, assign);
    if (cycles.empty()) continue;
    if (cycles[1] < cycles[0]) std::swap(cycles[0], cycles[1]);
    auto pair = std::make_pair(std::move(cycles[0]), std::move(cycles[1]));
    if (!seen.insert(pair).second) continue;
    long long product = (1 + cache.interior(pair.first)) * (1 + cache.interior(pair.second));
    if (product >= before) continue;
    if (best_product == -1 || product < best_product ||
        (product == best_product && pair < best)) {
      best_product = product;
      best = pair;
    }
  }
  require(best_product != -1, Errc::PinchedCrossing,
          "crossing pair admits no two-cycle re-pairing (pinched side region)");
  return best;
}

std::vector<DiCycle> level_decompose(const PlaneDigraph& g, RegionCache& cache,
                                     const std::vector<DiCycle>& cycles) {
  // Dual potential: +1 on faces enclosed clockwise, -1 counterclockwise.
  std::vector<long long> p(g.walks(), 0);
  std::vector<long long> usage(g.m(), 0);
  for (const auto& c : cycles) {
    const Region& r = cache.of(c);
    long long delta = r.orientation == Orientation::Clockwise ? 1 : -1;
    for (int w = 0; w < g.walks(); ++w)
      if (r.face_inside[w]) p[w] += delta;
    for (int a : c.arcs) ++usage[a];
  }
  long long lo = 0, hi = 0;
  for (long long x : p) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  std::vector<DiCycle> out;
  for (long long level = lo + 1; level <= hi; ++level) {
    // Arcs crossed by the level boundary, high side on the right.
    std::vector<char> in_level(g.m(), 0);
    std::vector<int> level_arcs;
    for (int a = 0; a < g.m(); ++a)
      if (p[g.face_left(a)] < level && level <= p[g.face_right(a)]) {
        in_level[a] = 1;
        level_arcs.push_back(a);
      }
    if (level_arcs.empty()) continue;
    // Non-crossing matching in -> out around each vertex: repeatedly join an
    // in-dart to the next boundary dart clockwise when that dart is an out.
    std::map<int, int> succ;
    std::vector<char> touched(g.n(), 0);
    for (int a : level_arcs) touched[g.tail(a)] = touched[g.head(a)] = 1;
    for (int v = 0; v < g.n(); ++v) {
      if (!touched[v]) continue;
      std::vector<DartId> ring;
      for (DartId d : g.rotation(v))
        if (in_level[dart_arc(d)]) ring.push_back(d);
      std::vector<char> gone(ring.size(), 0);
      size_t remaining = ring.size();
      while (remaining > 0) {
        bool advanced = false;
        for (size_t i = 0; i < ring.size(); ++i) {
          if (gone[i] || !dart_at_head(ring[i])) continue;  // want an in-dart
          size_t j = (i + 1) % ring.size();
          while (gone[j]) j = (j + 1) % ring.size();
          if (dart_at_head(ring[j])) continue;  // next alive dart must be an out
          succ[dart_arc(ring[i])] = dart_arc(ring[j]);
          gone[i] = gone[j] = 1;
          remaining -= 2;
          advanced = true;
        }
        require(advanced, Errc::Internal, "level boundary darts do not balance");
      }
    }
    // Orbits, split at revisited vertices.
    std::set<int> left(level_arcs.begin(), level_arcs.end());
    while (!left.empty()) {
      int a0 = *left.begin();
      std::vector<int> orbit;
      int a = a0;
      do {
        orbit.push_back(a);
        left.erase(a);
        a = succ.at(a);
      } while (a != a0);
      std::vector<int> stack;
      std::map<int, int> pos;
      for (int arc : orbit) {
        int v = g.tail(arc);
        auto it = pos.find(v);
        if (it != pos.end()) {
          std::vector<int> loop(stack.begin() + it->second, stack.end());
          for (size_t i = it->second; i < stack.size(); ++i) pos.erase(g.tail(stack[i]));
          stack.resize(it->second);
          out.push_back(DiCycle(std::move(loop)));
        }
        pos[v] = static_cast<int>(stack.size());
        stack.push_back(arc);
      }
      if (!stack.empty()) out.push_back(DiCycle(std::move(stack)));
    }
  }
  for (const auto& c : out)
    require(is_valid_dicycle(g, c), Errc::Internal, "level decomposition: non-simple piece");
  // Exact usage preservation.
  std::vector<long long> check(g.m(), 0);
  for (const auto& c : out)
    for (int a : c.arcs) ++check[a];
  require(check == usage, Errc::Internal, "level decomposition changed arc usage");
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<DiCycle, DiCycle> uncross_pair(const PlaneDigraph& g, const DiCycle& c1,
                                         const DiCycle& c2) {
  RegionCache cache(g);
  require(cache.cross(c1, c2), Errc::NotCrossing, "cycles do not cross");
  std::pair<DiCycle, DiCycle> cur{c1, c2};
  do {
    cur = uncross_step(g, cache, cur.first, cur.second);
  } while (cache.cross(cur.first, cur.second));
  return cur;
}

BigInt psi_value(const PlaneDigraph& g, RegionCache& cache, const std::vector<DiCycle>& cycles) {
  (void)g;
  BigInt p = 1;
  for (const auto& c : cycles) p *= BigInt(1 + cache.interior(c));
  return p;
}

std::vector<int> arc_usage_counts(const PlaneDigraph& g, const std::vector<DiCycle>& cycles) {
  std::vector<int> usage(g.m(), 0);
  for (const auto& c : cycles)
    for (int a : c.arcs) ++usage[a];
  return usage;
}

bool is_laminar(const PlaneDigraph& g, const std::vector<DiCycle>& cycles) {
  RegionCache cache(g);
  for (size_t i = 0; i < cycles.size(); ++i)
    for (size_t j = i + 1; j < cycles.size(); ++j)
      if (cache.cross(cycles[i], cycles[j])) return false;
  return true;
}

std::vector<DiCycle> laminarize_multiset(const PlaneDigraph& g, std::vector<DiCycle> cycles,
                                         LaminarizeTrace* trace) {
  RegionCache cache(g);
  std::sort(cycles.begin(), cycles.end());
  if (trace) trace->psi.push_back(psi_value(g, cache, cycles));
  for (;;) {
    // Prefer a crossing pair that splits back into two cycles; only when
    // every crossing pair is pinched fall back to a smoothing split.
    bool any_crossing = false;
    bool stepped = false;
    for (size_t i = 0; i < cycles.size() && !stepped; ++i) {
      for (size_t j = i + 1; j < cycles.size() && !stepped; ++j) {
        if (!cache.cross(cycles[i], cycles[j])) continue;
        any_crossing = true;
        try {
          auto [d1, d2] = uncross_step(g, cache, cycles[i], cycles[j]);
          cycles[i] = d1;
          cycles[j] = d2;
          stepped = true;
        } catch (const Error& e) {
          if (e.code() != Errc::PinchedCrossing) throw;
        }
      }
    }
    if (!stepped) {
      if (!any_crossing) break;  // laminar
      // Every remaining crossing pair is pinched: finish through the dual
      // potential, which is laminar outright.
      cycles = level_decompose(g, cache, cycles);
      if (trace) ++trace->pinched_splits;
    }
    std::sort(cycles.begin(), cycles.end());
    if (trace) {
      ++trace->steps;
      trace->psi.push_back(psi_value(g, cache, cycles));
    }
  }
  return cycles;
}

}  // namespace fvslab
