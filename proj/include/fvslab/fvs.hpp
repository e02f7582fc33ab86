#pragma once

#include <vector>

#include "fvslab/cycles.hpp"
#include "fvslab/plane_digraph.hpp"
#include "fvslab/rational.hpp"

namespace fvslab {

struct FvsResult {
  int size = 0;
  std::vector<int> witness;  // vertex ids of the input graph, sorted
  bool optimal = true;
  long long nodes = 0;
};

struct FvsOptions {
  long long node_budget = 10'000'000;
  bool parallel_root = false;  // OpenMP over the root branching, deterministic merge
};

// Exact minimum directed feedback vertex set. Branch and reduce:
// cycle-free vertices deleted, self-loop vertices forced, in/out-degree-1
// vertices bypassed, then branching over a shortest directed cycle with a
// vertex-disjoint cycle-packing lower bound. Ties between optimal witnesses
// are broken lexicographically, so results do not depend on thread timing.
// Throws ResourceLimit past the node budget (never silently suboptimal).
FvsResult fvs_exact(const PlaneDigraph& g, const FvsOptions& opts = {});

// Oracle: subsets enumerated by increasing size, first acyclifying set wins.
// Requires n <= 15 (TooLarge).
FvsResult fvs_bruteforce(const PlaneDigraph& g);

// Removing the witness leaves an acyclic graph and no proper subset does.
bool witness_is_minimal_fvs(const PlaneDigraph& g, const std::vector<int>& witness);

struct UpperBoundAudit {
  int fvs = 0;
  Rat bound;           // (n-2)/(g-2)
  bool holds = false;  // fvs <= bound
  bool equality = false;
  bool is_cg = false;  // G is the directed g-cycle
};

// Audits fvs(G) <= (n-2)/(g-2) with equality iff G = C_g. Hypotheses: simple
// plane digraph, digirth g >= 3, n >= 3 (HypothesisViolated otherwise).
UpperBoundAudit audit_upper_bound(const PlaneDigraph& g, const FvsOptions& opts = {});

}  // namespace fvslab
