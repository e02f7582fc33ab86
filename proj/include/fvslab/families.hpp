#pragma once

#include <map>
#include <string>

#include "fvslab/coating.hpp"
#include "fvslab/coating_search.hpp"
#include "fvslab/recursive.hpp"
#include "fvslab/rng.hpp"

namespace fvslab {

// Machine-checkable expectations attached to every generated instance; the
// verifiers re-derive each value.
struct FamilyClaim {
  std::string family;
  std::map<std::string, std::string> params;
  std::map<std::string, std::string> expected;  // rationals as p/q strings
};

struct GeneratedGraph {
  PlaneDigraph graph;
  FamilyClaim claim;
};

struct GeneratedCoating {
  Coating coating;
  FamilyClaim claim;
};

struct GeneratedSkeleton {
  Skeleton skeleton;
  FamilyClaim claim;
};

// The directed g-cycle, clockwise, outer face designated.
GeneratedGraph gen_dicycle(int g);

// The alternating triangulation tower: n = 3k, digirth 3, fvs = k, maximum
// normal set of size 3k-2. Returns the inductive minimum feedback vertex set.
struct OkFamily {
  PlaneDigraph graph;
  std::vector<int> fvs_witness;
  std::vector<DiCycle> normal_witness;  // the 3k-2 face triangles
  FamilyClaim claim;
};
OkFamily gen_octahedron_family(int k);

// O_k with every arc into the canonical feedback set subdivided g-3 times:
// n = 3k + (g-3)(3k-2), digirth g, normal size 3k-2.
GeneratedGraph gen_okg(int k, int g);

// Friezes: k clockwise g-cycles chained by link vertices and link arcs
// (the g-coating of the k-vertex path); n = k(g-1)+1, digirth g, fvs = k.
struct FriezeFamily {
  Coating coating;
  std::vector<int> fvs_witness;
  FamilyClaim claim;
};
FriezeFamily gen_frieze(int k, int g);

// Searched g-coating of digirth g of the cycle skeleton C_len (default C_4):
// n_H = len(g-1), fvs = len = n_H/(g-1).
GeneratedCoating gen_cycle_coating(int g, int len = 4);

// Chain families for base_g in {6,8,9,10,11}, extended by r via the digirth
// extension theorem. Throws SearchFailed/BudgetExhausted loudly.
struct SmallDigirthFamily {
  Skeleton skeleton;
  Coating coating;
  FamilyClaim claim;
  RecursiveFamily base;
};
SmallDigirthFamily gen_small_digirth_family(int base_g, int k, int r = 0);

// Block skeletons for perfect coatings: G_l^k (g = 8k+4) and G_l^{k,r}
// (g = 8k+4+r, r = 2a+b, a <= 3, b <= 1).
GeneratedSkeleton gen_glk_skeleton(int k, int l);
GeneratedSkeleton gen_glkr_skeleton(int k, int r, int l);

// Searched perfect g-coating of a skeleton (admissibility pre-checked).
GeneratedCoating gen_perfect_coating(const Skeleton& s, int g,
                                     const CoatingSearchOptions& opts = {});

struct TauBounds {
  int g = 0;
  Rat lower, upper;
  std::string witness;
};
TauBounds tau_report(int g);

// Deterministic random plane digraph: grown by inserting vertices and chords
// into faces of the running embedding. Connected, loop-free, no parallel
// arcs (antiparallel pairs allowed), outer face designated. min_digirth > 2
// additionally rejects chords that would close a shorter directed cycle.
PlaneDigraph gen_random_plane_digraph(int n, uint64_t seed, int min_digirth = 1);

// Random skeleton: a random plane digraph with orientations forgotten.
Skeleton gen_random_skeleton(int n, uint64_t seed);

// Random coating function with the per-vertex g-coating sums (g chosen by the
// caller, at least 2*maxdeg).
CoatingFunction gen_random_g_coating_function(const Skeleton& s, int g, Rng& rng);
CoatingFunction gen_random_coating_function(const Skeleton& s, Rng& rng, int max_h = 4);

}  // namespace fvslab
