#pragma once

#include <vector>

#include "fvslab/cycles.hpp"
#include "fvslab/fvs.hpp"
#include "fvslab/rational.hpp"
#include "fvslab/uncross.hpp"

namespace fvslab {

// Counts for G[C], the embedded subgraph induced by the arcs of a cycle set.
struct SubgraphStats {
  int n_c = 0;
  int m_c = 0;
  int f_c = 0;
  int c_c = 0;
  std::vector<int> face_lengths;
};

InducedSubgraph induced_subgraph(const PlaneDigraph& g, const std::vector<DiCycle>& cycles);
SubgraphStats subgraph_stats(const PlaneDigraph& g, const std::vector<DiCycle>& cycles);

// q(C) = m_C - n_C; zero iff the cycles are pairwise vertex-disjoint.
int q_value(const SubgraphStats& stats);
int q_of_set(const PlaneDigraph& g, const std::vector<DiCycle>& cycles);

// Arc-disjointness plus alternation: in G[S], the used half-arcs around every
// vertex alternate in/out in the rotation order.
bool is_normal(const PlaneDigraph& g, const std::vector<DiCycle>& cycles);

struct EnergyReport {
  Rat e1, e2, e3, e4, e_tot;
};

// The four energies of a normal set in a host of digirth g >= 3 (NotNormal if
// the set is not normal). For the empty set E2 and E4 go negative by the
// empty-subgraph conventions (f = 1, c = 0); the energy identity still holds.
EnergyReport energies(const PlaneDigraph& g, const std::vector<DiCycle>& normal_set);

// Exact check of |N| = (n-2)/(g-2) - E_tot/(g-2).
bool energy_identity_check(const PlaneDigraph& g, const std::vector<DiCycle>& normal_set);

struct NormalSearchOptions {
  long long cycle_cap = 200000;
  long long solution_cap = 100000;  // all-solutions mode
};

// A maximum-cardinality normal set, exact, by branch and bound over the
// enumerated cycles with arc-conflict and alternation pruning; the
// (n-2)/(g-2) bound prunes from above. Deterministic.
std::vector<DiCycle> max_normal_set(const PlaneDigraph& g, const NormalSearchOptions& opts = {});

// Every maximum normal set (CycleBudgetExceeded past solution_cap).
std::vector<std::vector<DiCycle>> max_normal_sets_all(const PlaneDigraph& g,
                                                      const NormalSearchOptions& opts = {});

// Lemma: if E(Cp) is a strict subset of E(C) (both arc-disjoint families),
// some directed cycle lives on E(C) \ E(Cp). Found by the balanced walk.
DiCycle complete_arc_disjoint(const PlaneDigraph& g, const std::vector<DiCycle>& c,
                              const std::vector<DiCycle>& cp);

// Lemma: drops one cycle from a nonempty normal set after laminarizing,
// giving |N'| = |N|-1, E(N') within E(N), q(N') <= max(0, q(N)-1).
std::vector<DiCycle> weaken_normal_set(const PlaneDigraph& g, const std::vector<DiCycle>& normal_set);

// Prop: for a maximum normal set N minimizing q, fvs(G[N]) = |N| iff q(N) = 0.
bool fvs_of_gN_check(const PlaneDigraph& g, const std::vector<DiCycle>& normal_set,
                     const FvsOptions& fvs_opts = {});

}  // namespace fvslab
