#include "fvslab/valuation.hpp"

#include <algorithm>
#include <numeric>

namespace fvslab {

long long Valuation::weight() const {
  long long w = 0;
  for (auto& [c, k] : values) w += k;
  return w;
}

std::vector<DiCycle> Valuation::support() const {
  std::vector<DiCycle> out;
  for (auto& [c, k] : values)
    if (k > 0) out.push_back(c);
  return out;
}

long long Valuation::of(const DiCycle& c) const {
  auto it = values.find(c);
  return it == values.end() ? 0 : it->second;
}

void Valuation::add(const DiCycle& c, long long k) {
  auto it = values.emplace(c, 0).first;
  it->second += k;
  require(it->second >= 0, Errc::Internal, "negative cycle multiplicity");
  if (it->second == 0) values.erase(it);
}

Valuation Valuation::operator+(const Valuation& o) const {
  Valuation out = *this;
  for (auto& [c, k] : o.values) out.add(c, k);
  return out;
}

Valuation valuation_of_set(const std::vector<DiCycle>& cycles) {
  Valuation v;
  for (const auto& c : cycles) v.add(c, 1);
  return v;
}

long long arc_usage(const PlaneDigraph& g, const Valuation& v, int arc) {
  require(arc >= 0 && arc < g.m(), Errc::UnknownArc, std::to_string(arc));
  long long u = 0;
  for (auto& [c, k] : v.values)
    if (c.contains_arc(arc)) u += k;
  return u;
}

namespace {

// mu * V* per rotation slot of one vertex.
std::vector<long long> signed_usage_profile(const PlaneDigraph& g, const Valuation& v, int vertex) {
  std::vector<long long> usage(g.m(), 0);
  for (auto& [c, k] : v.values)
    for (int a : c.arcs) usage[a] += k;
  std::vector<long long> prof;
  for (DartId d : g.rotation(vertex))
    prof.push_back((dart_at_head(d) ? -1 : +1) * usage[dart_arc(d)]);
  return prof;
}

}  // namespace

long long segment_value(const PlaneDigraph& g, const Valuation& v, int vertex,
                        const std::vector<DartId>& segment) {
  require(vertex >= 0 && vertex < g.n(), Errc::UnknownVertex, std::to_string(vertex));
  const auto& rot = g.rotation(vertex);
  if (segment.empty()) return 0;
  require(segment.size() <= rot.size(), Errc::NotConsecutive, "segment longer than the rotation");
  auto it = std::find(rot.begin(), rot.end(), segment[0]);
  require(it != rot.end(), Errc::NotConsecutive, "segment dart not at this vertex");
  size_t start = it - rot.begin();
  for (size_t i = 1; i < segment.size(); ++i)
    require(rot[(start + i) % rot.size()] == segment[i], Errc::NotConsecutive,
            "darts are not consecutive in the rotation");
  auto prof = signed_usage_profile(g, v, vertex);
  long long sum = 0;
  for (size_t i = 0; i < segment.size(); ++i) sum += prof[(start + i) % prof.size()];
  return sum;
}

long long vertex_multiplicity(const PlaneDigraph& g, const Valuation& v, int vertex) {
  auto prof = signed_usage_profile(g, v, vertex);
  size_t d = prof.size();
  long long best = 0;
  for (size_t start = 0; start < d; ++start) {
    long long sum = 0;
    for (size_t len = 1; len <= d; ++len) {
      sum += prof[(start + len - 1) % d];
      best = std::max(best, std::abs(sum));
    }
  }
  return best;
}

long long multiplicity(const PlaneDigraph& g, const Valuation& v) {
  long long best = 0;
  for (int x = 0; x < g.n(); ++x) best = std::max(best, vertex_multiplicity(g, v, x));
  return best;
}

bool is_laminar_valuation(const PlaneDigraph& g, const Valuation& v) {
  return is_laminar(g, v.support());
}

Valuation laminarize_valuation(const PlaneDigraph& g, const Valuation& v) {
  Valuation cur = v;
  RegionCache cache(g);
  for (;;) {
    auto sup = cur.support();
    bool stepped = false;
    bool any_crossing = false;
    for (size_t i = 0; i < sup.size() && !stepped; ++i) {
      for (size_t j = i + 1; j < sup.size() && !stepped; ++j) {
        if (!cache.cross(sup[i], sup[j])) continue;
        any_crossing = true;
        try {
          auto [d1, d2] = uncross_step(g, cache, sup[i], sup[j]);
          cur.add(sup[i], -1);
          cur.add(sup[j], -1);
          cur.add(d1, 1);
          cur.add(d2, 1);
          stepped = true;
        } catch (const Error& e) {
          if (e.code() != Errc::PinchedCrossing) throw;
        }
      }
    }
    if (!stepped) {
      if (!any_crossing) return cur;
      // Every crossing support pair is pinched: laminarize the remaining
      // multiset through the dual potential (weight may grow; per-arc usage
      // and hence the multiplicity stay put).
      std::vector<DiCycle> expanded;
      for (const auto& [c, k] : cur.values)
        for (long long copy = 0; copy < k; ++copy) expanded.push_back(c);
      Valuation next;
      for (const auto& piece : level_decompose(g, cache, expanded)) next.add(piece, 1);
      return next;
    }
  }
}

LayerForest layer_forest(const PlaneDigraph& g, const Valuation& v) {
  require(is_laminar_valuation(g, v), Errc::NotLaminar, "layer forest needs a laminar valuation");
  RegionCache cache(g);
  auto sup = v.support();
  auto strictly_contains = [&](const DiCycle& outer, const DiCycle& inner) {
    if (outer == inner) return false;
    return region_contains(g, outer, cache.of(outer), inner) &&
           !region_contains(g, inner, cache.of(inner), outer);
  };
  // Tightest strict encloser per support cycle.
  std::vector<int> encloser(sup.size(), -1);
  for (size_t i = 0; i < sup.size(); ++i) {
    for (size_t j = 0; j < sup.size(); ++j) {
      if (i == j || !strictly_contains(sup[j], sup[i])) continue;
      if (encloser[i] == -1 || strictly_contains(sup[encloser[i]], sup[j]))
        encloser[i] = static_cast<int>(j);
    }
  }
  LayerForest forest;
  std::vector<int> first_node(sup.size()), last_node(sup.size());
  for (size_t i = 0; i < sup.size(); ++i) {
    long long copies = v.of(sup[i]);
    first_node[i] = static_cast<int>(forest.nodes.size());
    for (long long c = 0; c < copies; ++c) {
      LayerForest::Node node;
      node.cycle = sup[i];
      node.copy = static_cast<int>(c);
      node.orientation = cache.of(sup[i]).orientation;
      forest.nodes.push_back(std::move(node));
    }
    last_node[i] = static_cast<int>(forest.nodes.size()) - 1;
  }
  for (size_t i = 0; i < sup.size(); ++i) {
    for (int node = first_node[i]; node <= last_node[i]; ++node) {
      if (node > first_node[i])
        forest.nodes[node].parent = node - 1;
      else if (encloser[i] != -1)
        forest.nodes[node].parent = last_node[encloser[i]];
    }
  }
  // Layers by repeated relaxation (forest is shallow at desk scale).
  for (size_t i = 0; i < forest.nodes.size(); ++i) {
    int layer = 0;
    for (int p = forest.nodes[i].parent; p != -1; p = forest.nodes[p].parent) ++layer;
    forest.nodes[i].layer = layer;
    if (forest.nodes[i].parent == -1) forest.roots.push_back(static_cast<int>(i));
  }
  return forest;
}

SplitGraph split_graph(const PlaneDigraph& g, const Valuation& /*valuation*/,
                       const LayerForest& forest) {
  RegionCache cache(g);
  // Nodes riding each arc.
  std::vector<std::vector<int>> riders(g.m());
  for (size_t i = 0; i < forest.nodes.size(); ++i)
    for (int a : forest.nodes[i].cycle.arcs) riders[a].push_back(static_cast<int>(i));

  auto strictly_contains = [&](const DiCycle& outer, const DiCycle& inner) {
    if (outer == inner) return false;
    return region_contains(g, outer, cache.of(outer), inner) &&
           !region_contains(g, inner, cache.of(inner), outer);
  };
  // Bundle order across a doubled arc, leftmost copy first. A rider's curve
  // must stay clear of every nested rider's interior, which pins the order:
  // left-side riders innermost first (the deepest one hugs its own thin
  // region furthest left), then right-side riders outermost first. Copies of
  // one cycle nest by index (copy 0 outermost).
  auto side_left = [&](int node, int arc) {
    const Region& r = cache.of(forest.nodes[node].cycle);
    return r.face_inside[g.face_left(arc)] != 0;
  };
  for (int a = 0; a < g.m(); ++a) {
    std::sort(riders[a].begin(), riders[a].end(), [&](int x, int y) {
      bool lx = side_left(x, a), ly = side_left(y, a);
      if (lx != ly) return lx;  // left side first
      const auto &nx = forest.nodes[x], &ny = forest.nodes[y];
      int cmp;  // +1 when x encloses y
      if (nx.cycle == ny.cycle)
        cmp = nx.copy < ny.copy ? 1 : -1;  // smaller copy = outer
      else if (strictly_contains(nx.cycle, ny.cycle))
        cmp = 1;
      else
        cmp = -1;
      return lx ? cmp < 0 : cmp > 0;
    });
  }

  SplitGraph out;
  std::vector<int> new_vertex(g.n(), -1);
  for (int x = 0; x < g.n(); ++x) {
    bool used = false;
    for (DartId d : g.rotation(x))
      if (!riders[dart_arc(d)].empty()) used = true;
    if (used) {
      new_vertex[x] = static_cast<int>(out.orig_vertex.size());
      out.orig_vertex.push_back(x);
    }
  }
  std::vector<std::vector<int>> copy_arc(g.m());  // per rider position: new arc id
  std::vector<PlaneDigraph::Arc> arcs;
  for (int a = 0; a < g.m(); ++a) {
    for (int node : riders[a]) {
      copy_arc[a].push_back(static_cast<int>(arcs.size()));
      arcs.push_back({new_vertex[g.tail(a)], new_vertex[g.head(a)]});
      out.orig_arc.push_back(a);
      out.copy_node.push_back(node);
    }
  }
  std::vector<std::vector<DartId>> rot(out.orig_vertex.size());
  for (size_t nv = 0; nv < out.orig_vertex.size(); ++nv) {
    for (DartId d : g.rotation(out.orig_vertex[nv])) {
      int a = dart_arc(d);
      const auto& copies = copy_arc[a];
      if (copies.empty()) continue;
      if (!dart_at_head(d)) {
        for (int na : copies) rot[nv].push_back(tail_dart(na));
      } else {
        for (auto it = copies.rbegin(); it != copies.rend(); ++it)
          rot[nv].push_back(head_dart(*it));
      }
    }
  }
  out.graph = PlaneDigraph(std::move(arcs), std::move(rot));
  return out;
}

namespace {

bool in_part_one(const LayerForest::Node& node) {
  bool even = node.layer % 2 == 0;
  bool cw = node.orientation == Orientation::Clockwise;
  return even == cw;
}

void check_consecutive_half_arcs(const SplitGraph& split, const LayerForest& forest) {
  const PlaneDigraph& gv = split.graph;
  for (int v = 0; v < gv.n(); ++v) {
    const auto& rot = gv.rotation(v);
    auto mu = [&](DartId d) { return dart_at_head(d) ? -1 : +1; };
    for (bool part1 : {true, false}) {
      std::vector<size_t> part_pos;
      for (size_t i = 0; i < rot.size(); ++i)
        if (in_part_one(forest.nodes[split.copy_node[dart_arc(rot[i])]]) == part1)
          part_pos.push_back(i);
      if (part_pos.empty()) continue;
      require(part_pos.size() >= 2, Errc::Internal, "split part with a lone half-arc");
      for (size_t i = 0; i < part_pos.size(); ++i) {
        size_t from = part_pos[i];
        size_t to = part_pos[(i + 1) % part_pos.size()];
        long long between = 0;
        for (size_t j = (from + 1) % rot.size(); j != to; j = (j + 1) % rot.size())
          between += mu(rot[j]);
        long long expect2 = mu(rot[from]) + mu(rot[to]);
        require(2 * between == expect2, Errc::Internal,
                "consecutive-half-arc identity failed in the split graph");
      }
    }
  }
}

}  // namespace

std::pair<Valuation, Valuation> parity_partition(const PlaneDigraph& g, const Valuation& v,
                                                 bool check_half_arc_lemma) {
  LayerForest forest = layer_forest(g, v);  // NotLaminar if not laminar
  Valuation v1, v2;
  for (const auto& node : forest.nodes)
    (in_part_one(node) ? v1 : v2).add(node.cycle, 1);
  if (check_half_arc_lemma && !forest.nodes.empty()) {
    SplitGraph split = split_graph(g, v, forest);
    check_consecutive_half_arcs(split, forest);
  }
  return {std::move(v1), std::move(v2)};
}

Valuation reduce_multiplicity(const PlaneDigraph& g, const Valuation& v, int k,
                              const NormalSearchOptions& opts) {
  require(is_laminar_valuation(g, v), Errc::HypothesisViolated, "valuation must be laminar");
  long long mult = multiplicity(g, v);
  require(k >= 2, Errc::HypothesisViolated, "need k >= 2");
  require(mult >= 2 && mult <= k, Errc::HypothesisViolated,
          "need 2 <= mult <= k, got mult=" + std::to_string(mult));
  long long big_m = static_cast<long long>(max_normal_set(g, opts).size());
  require(v.weight() >= k * big_m + 1, Errc::HypothesisViolated,
          "need weight >= k*M+1, got " + std::to_string(v.weight()));
  long long half = (k + 1) / 2;

  auto even_split = [&](const Valuation& val, long long p) {
    auto [v1, v2] = parity_partition(g, val);
    const Valuation& pick = v1.weight() >= v2.weight() ? v1 : v2;
    require(pick.weight() >= p * big_m + 1, Errc::Internal, "parity split lost too much weight");
    require(multiplicity(g, pick) <= p, Errc::Internal, "parity split multiplicity too large");
    return pick;
  };

  if (k % 2 == 0) return even_split(v, k / 2);
  // Odd: absorb one maximum normal valuation first.
  Valuation n = valuation_of_set(max_normal_set(g, opts));
  Valuation tilde = laminarize_valuation(g, v + n);
  if (multiplicity(g, tilde) < 2) return tilde;  // already normal-grade
  return even_split(tilde, half);
}

std::vector<int> essential_vertices(const PlaneDigraph& g, const NormalSearchOptions& opts) {
  auto all = max_normal_sets_all(g, opts);
  std::vector<int> out;
  for (int x = 0; x < g.n(); ++x) {
    bool everywhere = !all.empty();
    for (const auto& set : all) {
      bool used = false;
      for (const auto& c : set)
        if (c.contains_vertex(g, x)) {
          used = true;
          break;
        }
      if (!used) {
        everywhere = false;
        break;
      }
    }
    if (everywhere) out.push_back(x);
  }
  return out;
}

std::vector<int> fvs_via_normal(const PlaneDigraph& g, const NormalSearchOptions& opts) {
  PlaneDigraph cur = g;
  std::vector<int> labels;
  for (;;) {
    auto cyc = shortest_dicycle(cur);
    if (!cyc) break;
    auto ess = essential_vertices(cur, opts);
    std::vector<char> is_ess(cur.n(), 0);
    for (int x : ess) is_ess[x] = 1;
    int pick = -1;
    for (int a : cyc->arcs) {
      int x = cur.tail(a);
      if (is_ess[x] && (pick == -1 || cur.vertex_label(x) < cur.vertex_label(pick))) pick = x;
    }
    require(pick != -1, Errc::Internal, "a directed cycle without essential vertices");
    labels.push_back(cur.vertex_label(pick));
    std::vector<char> kill(cur.n(), 0);
    kill[pick] = 1;
    cur = cur.delete_vertices(kill);
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::pair<Valuation, int> big_laminar_from_cycle(const PlaneDigraph& g, const DiCycle& d,
                                                 bool check_hypothesis,
                                                 const NormalSearchOptions& opts) {
  require(is_valid_dicycle(g, d), Errc::Internal, "d is not a directed cycle of g");
  auto all = max_normal_sets_all(g, opts);
  auto uses_vertex = [&](const std::vector<DiCycle>& set, int x) {
    for (const auto& c : set)
      if (c.contains_vertex(g, x)) return true;
    return false;
  };
  std::vector<int> dv = d.vertices(g);
  if (check_hypothesis) {
    for (int x : dv) {
      bool essential = !all.empty();
      for (const auto& set : all)
        if (!uses_vertex(set, x)) {
          essential = false;
          break;
        }
      require(!essential, Errc::EssentialVertexOnD,
              "vertex " + std::to_string(g.vertex_label(x)) + " of D is essential");
    }
  }
  // Arc label -> arc index, for mapping cycles found in vertex-deleted copies.
  std::vector<int> by_label;
  for (int a = 0; a < g.m(); ++a) {
    if (g.arc_label(a) >= static_cast<int>(by_label.size()))
      by_label.resize(g.arc_label(a) + 1, -1);
    by_label[g.arc_label(a)] = a;
  }
  Valuation w;
  for (int x : dv) {
    const std::vector<DiCycle>* avoiding = nullptr;
    for (const auto& set : all)
      if (!uses_vertex(set, x)) {
        avoiding = &set;
        break;
      }
    if (avoiding) {
      for (const auto& c : *avoiding) w.add(c, 1);
    } else {
      // Essential vertex with checks disabled: strongest avoiding set instead.
      std::vector<char> kill(g.n(), 0);
      kill[x] = 1;
      PlaneDigraph sub = g.delete_vertices(kill);
      for (const auto& c : max_normal_set(sub, opts)) {
        std::vector<int> arcs;
        for (int a : c.arcs) arcs.push_back(by_label[sub.arc_label(a)]);
        w.add(DiCycle(std::move(arcs)), 1);
      }
    }
  }
  w.add(d, 1);
  Valuation lam = laminarize_valuation(g, w);
  return {std::move(lam), static_cast<int>(dv.size())};
}

}  // namespace fvslab
