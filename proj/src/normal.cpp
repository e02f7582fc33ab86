#include "fvslab/normal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace fvslab {

InducedSubgraph induced_subgraph(const PlaneDigraph& g, const std::vector<DiCycle>& cycles) {
  std::vector<char> used(g.m(), 0);
  for (const auto& c : cycles)
    for (int a : c.arcs) used[a] = 1;
  return g.induced_by_arcs(used);
}

SubgraphStats subgraph_stats(const PlaneDigraph& g, const std::vector<DiCycle>& cycles) {
  auto ind = induced_subgraph(g, cycles);
  SubgraphStats s;
  s.n_c = ind.graph.n();
  s.m_c = ind.graph.m();
  s.c_c = ind.graph.components();
  if (ind.graph.m() == 0) {
    s.f_c = 1;
    s.face_lengths = {0};
    return s;
  }
  // Faces of G[C] are classes of host faces merged across unused arcs; each
  // class's length sums its boundary walks. This keeps the subgraph embedded
  // exactly as it sits inside the host (nested components and all) and makes
  // n_C + f_C = m_C + 1 + c_C hold.
  std::vector<char> used(g.m(), 0);
  for (const auto& c : cycles)
    for (int a : c.arcs) used[a] = 1;
  std::vector<int> cls(g.walks());
  for (int i = 0; i < g.walks(); ++i) cls[i] = i;
  std::function<int(int)> find = [&](int x) { return cls[x] == x ? x : cls[x] = find(cls[x]); };
  for (int a = 0; a < g.m(); ++a)
    if (!used[a]) cls[find(g.face_left(a))] = find(g.face_right(a));
  std::map<int, long long> class_len;
  for (int w = 0; w < ind.graph.walks(); ++w) {
    DartId d = ind.graph.face_darts(w).front();
    DartId host_dart = 2 * ind.arc_map[dart_arc(d)] + (d & 1);
    class_len[find(g.face_of(host_dart))] += ind.graph.face_len(w);
  }
  s.f_c = static_cast<int>(class_len.size());
  for (auto& [root, len] : class_len) s.face_lengths.push_back(static_cast<int>(len));
  return s;
}

int q_value(const SubgraphStats& stats) { return stats.m_c - stats.n_c; }

int q_of_set(const PlaneDigraph& g, const std::vector<DiCycle>& cycles) {
  return q_value(subgraph_stats(g, cycles));
}

bool is_normal(const PlaneDigraph& g, const std::vector<DiCycle>& cycles) {
  std::vector<int> usage(g.m(), 0);
  for (const auto& c : cycles) {
    if (!is_valid_dicycle(g, c)) return false;
    for (int a : c.arcs)
      if (++usage[a] > 1) return false;  // not arc-disjoint
  }
  // Alternation at every vertex of G[S].
  for (int v = 0; v < g.n(); ++v) {
    int prev_dir = 0, first_dir = 0, count = 0;
    for (DartId d : g.rotation(v)) {
      if (!usage[dart_arc(d)]) continue;
      int dir = dart_at_head(d) ? -1 : +1;
      if (count == 0)
        first_dir = dir;
      else if (dir == prev_dir)
        return false;
      prev_dir = dir;
      ++count;
    }
    if (count > 0 && prev_dir == first_dir && count > 1) return false;
    if (count == 1) return false;  // unbalanced vertex cannot happen on cycles
  }
  return true;
}

EnergyReport energies(const PlaneDigraph& g, const std::vector<DiCycle>& normal_set) {
  require(is_normal(g, normal_set), Errc::NotNormal, "energies need a normal set");
  auto girth = digirth(g);
  require(girth.has_value() && *girth >= 3, Errc::NotNormal, "host digirth must be >= 3");
  const int gg = *girth;
  SubgraphStats st = subgraph_stats(g, normal_set);

  EnergyReport e;
  long long cycle_excess = 0;
  for (const auto& c : normal_set) cycle_excess += c.length() - gg;
  e.e1 = Rat(BigInt(gg - 2) * cycle_excess, BigInt(gg));
  long long face_excess = 0;
  for (int len : st.face_lengths) face_excess += len - gg;
  e.e2 = Rat(BigInt(face_excess), BigInt(gg));
  e.e3 = Rat(g.n() - st.n_c);
  e.e4 = Rat(st.c_c - 1);
  e.e_tot = e.e1 + e.e2 + e.e3 + e.e4;
  return e;
}

bool energy_identity_check(const PlaneDigraph& g, const std::vector<DiCycle>& normal_set) {
  auto girth = digirth(g);
  if (!girth || *girth < 3) return false;
  EnergyReport e = energies(g, normal_set);
  Rat lhs(static_cast<long long>(normal_set.size()));
  Rat rhs = Rat(g.n() - 2, *girth - 2) - e.e_tot / Rat(*girth - 2);
  return lhs == rhs;
}

namespace {

// Shared state for the maximum-normal-set search.
struct NormalSearch {
  const PlaneDigraph& g;
  std::vector<DiCycle> cycles;  // sorted, deterministic order
  std::vector<int> usage;       // per arc
  std::vector<char> dart_used;  // per dart
  int upper = 0;                // global (n-2)/(g-2) bound, or #cycles
  std::vector<int> cur;
  int best_size = -1;
  std::vector<DiCycle> best;
  bool collect_all = false;
  int target = -1;
  long long solution_cap = 0;
  std::vector<std::vector<DiCycle>> all;

  explicit NormalSearch(const PlaneDigraph& host) : g(host) {}

  bool can_add(const DiCycle& c) {
    for (int a : c.arcs)
      if (usage[a]) return false;
    // Alternation is unfixable once two same-direction half-arcs sit adjacent
    // in the full rotation: nothing can ever come between them.
    for (int a : c.arcs) {
      for (DartId d : {tail_dart(a), head_dart(a)}) {
        for (DartId nb : {g.sigma_next(d), g.sigma_prev(d)}) {
          if (nb == d) continue;
          if (dart_used[nb] && dart_at_head(nb) == dart_at_head(d)) return false;
        }
      }
    }
    return true;
  }

  void add(const DiCycle& c) {
    for (int a : c.arcs) {
      ++usage[a];
      dart_used[tail_dart(a)] = dart_used[head_dart(a)] = 1;
    }
  }
  void remove(const DiCycle& c) {
    for (int a : c.arcs) {
      --usage[a];
      dart_used[tail_dart(a)] = dart_used[head_dart(a)] = 0;
    }
  }

  std::vector<DiCycle> selected() const {
    std::vector<DiCycle> out;
    for (int i : cur) out.push_back(cycles[i]);
    return out;
  }

  void dfs(size_t idx) {
    int remaining = static_cast<int>(cycles.size() - idx);
    int size = static_cast<int>(cur.size());
    if (collect_all) {
      if (size + remaining < target) return;
    } else {
      if (size + remaining <= best_size) return;
      if (size + std::min(remaining, upper - size) <= best_size) return;
    }
    if (idx == cycles.size()) {
      auto sel = selected();
      if (!is_normal(g, sel)) return;
      if (collect_all) {
        if (size == target) {
          if (static_cast<long long>(all.size()) >= solution_cap)
            fail(Errc::CycleBudgetExceeded, "more than " + std::to_string(solution_cap) +
                                                " maximum normal sets");
          all.push_back(std::move(sel));
        }
      } else if (size > best_size) {
        best_size = size;
        best = std::move(sel);
      }
      return;
    }
    if (size < upper && can_add(cycles[idx])) {
      add(cycles[idx]);
      cur.push_back(static_cast<int>(idx));
      dfs(idx + 1);
      cur.pop_back();
      remove(cycles[idx]);
    }
    dfs(idx + 1);
  }
};

NormalSearch make_search(const PlaneDigraph& g, const NormalSearchOptions& opts) {
  NormalSearch s(g);
  s.cycles = enumerate_dicycles(g, opts.cycle_cap);
  s.usage.assign(g.m(), 0);
  s.dart_used.assign(2 * g.m(), 0);
  auto girth = digirth(g);
  s.upper = static_cast<int>(s.cycles.size());
  if (girth && *girth >= 3 && g.n() >= 3)
    s.upper = std::min(s.upper, (g.n() - 2) / (*girth - 2));
  return s;
}

}  // namespace

std::vector<DiCycle> max_normal_set(const PlaneDigraph& g, const NormalSearchOptions& opts) {
  NormalSearch s = make_search(g, opts);
  s.best_size = -1;
  s.dfs(0);
  return s.best;
}

std::vector<std::vector<DiCycle>> max_normal_sets_all(const PlaneDigraph& g,
                                                      const NormalSearchOptions& opts) {
  NormalSearch s = make_search(g, opts);
  s.dfs(0);
  int target = s.best_size;
  NormalSearch s2 = make_search(g, opts);
  s2.collect_all = true;
  s2.target = target;
  s2.solution_cap = opts.solution_cap;
  s2.dfs(0);
  return std::move(s2.all);
}

DiCycle complete_arc_disjoint(const PlaneDigraph& g, const std::vector<DiCycle>& c,
                              const std::vector<DiCycle>& cp) {
  std::set<int> in_c, in_cp;
  for (const auto& x : c) in_c.insert(x.arcs.begin(), x.arcs.end());
  for (const auto& x : cp) in_cp.insert(x.arcs.begin(), x.arcs.end());
  for (int a : in_cp)
    require(in_c.count(a) > 0, Errc::NotStrictSubset, "E(C') not within E(C)");
  std::vector<int> avail;  // E(C) \ E(C'), sorted
  for (int a : in_c)
    if (!in_cp.count(a)) avail.push_back(a);
  require(!avail.empty(), Errc::NotStrictSubset, "E(C') equals E(C)");

  std::map<int, std::vector<int>> out;  // on the difference arc set
  for (int a : avail) out[g.tail(a)].push_back(a);
  std::vector<char> walked(g.m(), 0);
  std::vector<int> path_arcs;
  std::map<int, int> pos;  // vertex -> index in path where it was entered
  int start = g.tail(avail[0]);
  int v = start;
  pos[v] = 0;
  for (;;) {
    int chosen = -1;
    for (int a : out[v])
      if (!walked[a]) {
        chosen = a;
        break;
      }
    require(chosen != -1, Errc::Internal, "balanced walk got stuck");
    walked[chosen] = 1;
    path_arcs.push_back(chosen);
    v = g.head(chosen);
    auto it = pos.find(v);
    if (it != pos.end()) {
      std::vector<int> cyc(path_arcs.begin() + it->second, path_arcs.end());
      return DiCycle(std::move(cyc));
    }
    pos[v] = static_cast<int>(path_arcs.size());
  }
}

std::vector<DiCycle> weaken_normal_set(const PlaneDigraph& g,
                                       const std::vector<DiCycle>& normal_set) {
  require(!normal_set.empty(), Errc::EmptySet, "cannot weaken the empty normal set");
  require(is_normal(g, normal_set), Errc::NotNormal, "input must be normal");
  if (q_of_set(g, normal_set) == 0) {
    // Vertex-disjoint: drop the first cycle.
    std::vector<DiCycle> out(normal_set.begin() + 1, normal_set.end());
    return out;
  }
  auto lam = laminarize_multiset(g, normal_set);
  // A laminarized normal set stays normal: same arcs, same induced subgraph.
  RegionCache cache(g);
  auto shares_vertex = [&](size_t i) {
    std::vector<char> mine(g.n(), 0);
    for (int a : lam[i].arcs) mine[g.tail(a)] = mine[g.head(a)] = 1;
    for (size_t j = 0; j < lam.size(); ++j) {
      if (j == i) continue;
      for (int a : lam[j].arcs)
        if (mine[g.tail(a)] || mine[g.head(a)]) return true;
    }
    return false;
  };
  std::vector<char> isolated(lam.size(), 0);
  for (size_t i = 0; i < lam.size(); ++i) isolated[i] = !shares_vertex(i);
  for (size_t i = 0; i < lam.size(); ++i) {
    if (isolated[i]) continue;
    bool minimal = true;
    for (size_t j = 0; j < lam.size() && minimal; ++j) {
      if (j == i || isolated[j]) continue;
      bool j_in_i = region_contains(g, lam[i], cache.of(lam[i]), lam[j]);
      bool i_in_j = region_contains(g, lam[j], cache.of(lam[j]), lam[i]);
      if (j_in_i && !i_in_j) minimal = false;
    }
    if (minimal) {
      std::vector<DiCycle> out;
      for (size_t j = 0; j < lam.size(); ++j)
        if (j != i) out.push_back(lam[j]);
      return out;
    }
  }
  fail(Errc::Internal, "no inclusion-minimal non-isolated cycle found");
}

bool fvs_of_gN_check(const PlaneDigraph& g, const std::vector<DiCycle>& normal_set,
                     const FvsOptions& fvs_opts) {
  int q = q_of_set(g, normal_set);
  auto ind = induced_subgraph(g, normal_set);
  int k = fvs_exact(ind.graph, fvs_opts).size;
  bool fvs_equals_size = k == static_cast<int>(normal_set.size());
  return fvs_equals_size == (q == 0);
}

}  // namespace fvslab
