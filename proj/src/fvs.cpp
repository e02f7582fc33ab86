#include "fvslab/fvs.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fvslab {

namespace {

// Mutable digraph for the solver; vertex names survive deletions/bypasses.
struct SolverGraph {
  std::vector<int> names;                // dense -> original vertex id
  std::vector<std::vector<int>> out, in; // dense adjacency, deduplicated
  std::vector<char> self_loop;

  static SolverGraph from(const PlaneDigraph& g) {
    SolverGraph s;
    s.names.resize(g.n());
    std::iota(s.names.begin(), s.names.end(), 0);
    s.out.resize(g.n());
    s.in.resize(g.n());
    s.self_loop.assign(g.n(), 0);
    for (int a = 0; a < g.m(); ++a) {
      if (g.tail(a) == g.head(a)) {
        s.self_loop[g.tail(a)] = 1;
        continue;
      }
      s.out[g.tail(a)].push_back(g.head(a));
      s.in[g.head(a)].push_back(g.tail(a));
    }
    s.dedup();
    return s;
  }

  int n() const { return static_cast<int>(names.size()); }

  void dedup() {
    for (auto& v : out) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (auto& v : in) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }

  SolverGraph without(const std::vector<int>& kill_dense) const {
    std::vector<char> kill(n(), 0);
    for (int v : kill_dense) kill[v] = 1;
    std::vector<int> remap(n(), -1);
    SolverGraph s;
    for (int v = 0; v < n(); ++v) {
      if (kill[v]) continue;
      remap[v] = static_cast<int>(s.names.size());
      s.names.push_back(names[v]);
      s.self_loop.push_back(self_loop[v]);
    }
    s.out.resize(s.names.size());
    s.in.resize(s.names.size());
    for (int v = 0; v < n(); ++v) {
      if (kill[v]) continue;
      for (int w : out[v])
        if (!kill[w]) {
          s.out[remap[v]].push_back(remap[w]);
          s.in[remap[w]].push_back(remap[v]);
        }
    }
    return s;
  }
};

// Shortest directed cycle as dense vertex list; empty if acyclic.
std::vector<int> shortest_cycle_vertices(const SolverGraph& g) {
  int best_len = -1;
  std::vector<int> best;
  for (int s = 0; s < g.n(); ++s) {
    if (g.self_loop[s]) return {s};
    // BFS from s until s is re-reached.
    std::vector<int> dist(g.n(), -1), pred(g.n(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    int found = -1;
    while (!q.empty() && found == -1) {
      int x = q.front();
      q.pop_front();
      if (best_len != -1 && dist[x] + 1 >= best_len) break;
      for (int y : g.out[x]) {
        if (y == s) {
          found = x;
          break;
        }
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          pred[y] = x;
          q.push_back(y);
        }
      }
    }
    if (found == -1) continue;
    std::vector<int> cyc;
    for (int x = found; x != -1; x = pred[x]) cyc.push_back(x);
    std::reverse(cyc.begin(), cyc.end());
    if (best_len == -1 || static_cast<int>(cyc.size()) < best_len) {
      best_len = static_cast<int>(cyc.size());
      best = cyc;
    }
  }
  return best;
}

// Greedy vertex-disjoint short-cycle packing; valid lower bound.
int packing_lower_bound(SolverGraph g) {
  int count = 0;
  for (;;) {
    auto cyc = shortest_cycle_vertices(g);
    if (cyc.empty()) return count;
    ++count;
    g = g.without(cyc);
  }
}

struct SearchState {
  long long budget;
  std::atomic<long long> nodes{0};
  std::atomic<bool> over_budget{false};
};

struct Incumbent {
  int size = -1;                  // -1: none yet
  std::vector<int> witness;       // original ids, sorted

  bool better(int sz, const std::vector<int>& wit) const {
    if (size == -1) return true;
    if (sz != size) return sz < size;
    return wit < witness;
  }
};

// Applies reductions in place; appends forced vertices (original ids).
void reduce(SolverGraph& g, std::vector<int>& forced) {
  bool changed = true;
  while (changed) {
    changed = false;
    // Forced self-loops.
    std::vector<int> loops;
    for (int v = 0; v < g.n(); ++v)
      if (g.self_loop[v]) loops.push_back(v);
    if (!loops.empty()) {
      for (int v : loops) forced.push_back(g.names[v]);
      g = g.without(loops);
      changed = true;
      continue;
    }
    // Vertices on no directed cycle: keep only arcs inside strongly connected
    // components, drop singleton components.
    {
      int n = g.n();
      std::vector<int> comp(n, -1), low(n), num(n, -1), stck;
      int idx = 0, ncomp = 0;
      // Iterative Tarjan.
      std::vector<std::pair<int, size_t>> frame;
      std::vector<char> on_stack(n, 0);
      for (int s = 0; s < n; ++s) {
        if (num[s] != -1) continue;
        frame.push_back({s, 0});
        while (!frame.empty()) {
          auto& [v, ei] = frame.back();
          if (ei == 0) {
            num[v] = low[v] = idx++;
            stck.push_back(v);
            on_stack[v] = 1;
          }
          if (ei < g.out[v].size()) {
            int w = g.out[v][ei++];
            if (num[w] == -1)
              frame.push_back({w, 0});
            else if (on_stack[w])
              low[v] = std::min(low[v], num[w]);
          } else {
            if (low[v] == num[v]) {
              for (;;) {
                int w = stck.back();
                stck.pop_back();
                on_stack[w] = 0;
                comp[w] = ncomp;
                if (w == v) break;
              }
              ++ncomp;
            }
            int vv = v;
            frame.pop_back();
            if (!frame.empty()) low[frame.back().first] = std::min(low[frame.back().first], low[vv]);
          }
        }
      }
      std::vector<int> comp_size(ncomp, 0);
      for (int v = 0; v < n; ++v) ++comp_size[comp[v]];
      std::vector<int> singletons;
      for (int v = 0; v < n; ++v)
        if (comp_size[comp[v]] == 1) singletons.push_back(v);
      // Drop cross-component arcs.
      bool dropped = false;
      for (int v = 0; v < n; ++v) {
        auto keep = [&](int w) { return comp[w] == comp[v]; };
        size_t before = g.out[v].size();
        std::erase_if(g.out[v], [&](int w) { return !keep(w); });
        std::erase_if(g.in[v], [&](int w) { return !keep(w); });
        if (g.out[v].size() != before) dropped = true;
      }
      if (!singletons.empty()) {
        g = g.without(singletons);
        changed = true;
        continue;
      }
      if (dropped) changed = true;
    }
    // Bypass in-degree-1 / out-degree-1 vertices.
    for (int v = 0; v < g.n() && !changed; ++v) {
      if (g.in[v].size() == 1 && !g.self_loop[v]) {
        int u = g.in[v][0];
        for (int w : g.out[v]) {
          if (w == u)
            g.self_loop[u] = 1;
          else {
            g.out[u].push_back(w);
            g.in[w].push_back(u);
          }
        }
        g = g.without({v});
        g.dedup();
        changed = true;
      } else if (g.out[v].size() == 1 && !g.self_loop[v]) {
        int u = g.out[v][0];
        for (int w : g.in[v]) {
          if (w == u)
            g.self_loop[u] = 1;
          else {
            g.out[w].push_back(u);
            g.in[u].push_back(w);
          }
        }
        g = g.without({v});
        g.dedup();
        changed = true;
      }
    }
  }
}

void search(SolverGraph g, std::vector<int> chosen, SearchState& state, Incumbent& best) {
  if (state.over_budget.load(std::memory_order_relaxed)) return;
  if (state.nodes.fetch_add(1, std::memory_order_relaxed) >= state.budget) {
    state.over_budget.store(true, std::memory_order_relaxed);
    return;
  }
  reduce(g, chosen);
  auto cyc = shortest_cycle_vertices(g);
  if (cyc.empty()) {
    std::sort(chosen.begin(), chosen.end());
    if (best.better(static_cast<int>(chosen.size()), chosen)) {
      best.size = static_cast<int>(chosen.size());
      best.witness = chosen;
    }
    return;
  }
  int lb = packing_lower_bound(g);
  if (best.size != -1 && static_cast<int>(chosen.size()) + lb > best.size) return;
  // Branch on the vertices of the shortest cycle: descending total degree,
  // ties by vertex id.
  std::sort(cyc.begin(), cyc.end(), [&](int a, int b) {
    int da = static_cast<int>(g.out[a].size() + g.in[a].size());
    int db = static_cast<int>(g.out[b].size() + g.in[b].size());
    if (da != db) return da > db;
    return g.names[a] < g.names[b];
  });
  for (int v : cyc) {
    auto sub = g.without({v});
    auto next = chosen;
    next.push_back(g.names[v]);
    search(std::move(sub), std::move(next), state, best);
  }
}

}  // namespace

FvsResult fvs_exact(const PlaneDigraph& g, const FvsOptions& opts) {
  SolverGraph root = SolverGraph::from(g);
  SearchState state;
  state.budget = opts.node_budget;

  std::vector<int> forced;
  reduce(root, forced);
  Incumbent best;
  auto cyc0 = shortest_cycle_vertices(root);
  if (cyc0.empty()) {
    std::sort(forced.begin(), forced.end());
    return FvsResult{static_cast<int>(forced.size()), forced, true, state.nodes.load()};
  }
  std::sort(cyc0.begin(), cyc0.end(), [&](int a, int b) {
    int da = static_cast<int>(root.out[a].size() + root.in[a].size());
    int db = static_cast<int>(root.out[b].size() + root.in[b].size());
    if (da != db) return da > db;
    return root.names[a] < root.names[b];
  });

  if (opts.parallel_root) {
    std::vector<Incumbent> results(cyc0.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (size_t i = 0; i < cyc0.size(); ++i) {
      auto sub = root.without({cyc0[i]});
      auto chosen = forced;
      chosen.push_back(root.names[cyc0[i]]);
      search(std::move(sub), std::move(chosen), state, results[i]);
    }
    for (const auto& r : results)
      if (r.size != -1 && best.better(r.size, r.witness)) best = r;
  } else {
    for (int v : cyc0) {
      auto sub = root.without({v});
      auto chosen = forced;
      chosen.push_back(root.names[v]);
      search(std::move(sub), std::move(chosen), state, best);
    }
  }
  if (state.over_budget.load())
    fail(Errc::ResourceLimit,
         "fvs_exact exceeded node budget " + std::to_string(opts.node_budget));
  return FvsResult{best.size, best.witness, true, state.nodes.load()};
}

FvsResult fvs_bruteforce(const PlaneDigraph& g) {
  int n = g.n();
  require(n <= 15, Errc::TooLarge, "fvs_bruteforce needs n <= 15, got " + std::to_string(n));
  std::vector<uint32_t> out(n, 0);
  uint32_t loops = 0;
  for (int a = 0; a < g.m(); ++a) {
    if (g.tail(a) == g.head(a))
      loops |= 1u << g.tail(a);
    else
      out[g.tail(a)] |= 1u << g.head(a);
  }
  auto acyclic_without = [&](uint32_t removed) {
    if (loops & ~removed) return false;
    uint32_t alive = ~removed & ((n == 32 ? 0u : (1u << n)) - 1u);
    // Peel vertices with no alive out-neighbor.
    bool progress = true;
    while (alive && progress) {
      progress = false;
      for (int v = 0; v < n; ++v) {
        uint32_t bit = 1u << v;
        if ((alive & bit) && !(out[v] & alive)) {
          alive &= ~bit;
          progress = true;
        }
      }
    }
    return alive == 0;
  };
  long long tried = 0;
  for (int size = 0; size <= n; ++size) {
    // Combinations of `size` vertices in lexicographic order.
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    for (;;) {
      uint32_t mask = 0;
      for (int v : comb) mask |= 1u << v;
      ++tried;
      if (acyclic_without(mask)) return FvsResult{size, comb, true, tried};
      int i = size - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  fail(Errc::Internal, "unreachable: whole vertex set is always an fvs");
}

bool witness_is_minimal_fvs(const PlaneDigraph& g, const std::vector<int>& witness) {
  std::vector<char> kill(g.n(), 0);
  for (int v : witness) kill[v] = 1;
  if (!is_acyclic(g.delete_vertices(kill))) return false;
  for (int v : witness) {
    kill[v] = 0;
    bool acyc = is_acyclic(g.delete_vertices(kill));
    kill[v] = 1;
    if (acyc) return false;  // v was redundant
  }
  return true;
}

UpperBoundAudit audit_upper_bound(const PlaneDigraph& g, const FvsOptions& opts) {
  require(g.is_simple(), Errc::HypothesisViolated, "graph must be a simple digraph");
  require(g.n() >= 3, Errc::HypothesisViolated, "need n >= 3");
  auto girth = digirth(g);
  require(girth.has_value() && *girth >= 3, Errc::HypothesisViolated, "need digirth g >= 3");
  UpperBoundAudit audit;
  audit.fvs = fvs_exact(g, opts).size;
  audit.bound = Rat(g.n() - 2, *girth - 2);
  audit.holds = Rat(audit.fvs) <= audit.bound;
  audit.equality = Rat(audit.fvs) == audit.bound;
  audit.is_cg = g.n() == *girth && g.m() == g.n() && g.components() == 1;
  return audit;
}

}  // namespace fvslab
