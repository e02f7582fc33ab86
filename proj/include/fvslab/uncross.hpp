#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fvslab/cycles.hpp"
#include "fvslab/rational.hpp"

namespace fvslab {

// Caches interiors; cycles of one host graph only.
class RegionCache {
 public:
  explicit RegionCache(const PlaneDigraph& g) : g_(g) {}
  const Region& of(const DiCycle& c);
  long long interior(const DiCycle& c) { return of(c).interior_elements; }
  bool cross(const DiCycle& a, const DiCycle& b);

 private:
  const PlaneDigraph& g_;
  std::map<DiCycle, Region> cache_;
};

// One uncrossing step: replaces a crossing pair by two directed cycles on the
// same arc multiset whose interior product (1+||int C1'||)(1+||int C2'||) is
// strictly smaller. Chosen as the product-minimizing re-pairing of the
// superposed arc multiset, ties broken lexicographically, so the result is
// deterministic.
//
// Degenerate inputs exist: a pair can cross twice and additionally touch at a
// vertex so that both side regions pinch apart, and then NO two simple cycles
// cover the same arc multiset (exhausting every re-pairing proves it). Such
// pairs throw PinchedCrossing; uncross_smoothing still resolves them, at the
// cost of splitting into more than two cycles.
std::pair<DiCycle, DiCycle> uncross_step(const PlaneDigraph& g, RegionCache& cache,
                                         const DiCycle& c1, const DiCycle& c2);

// One-shot laminarization through the dual potential: p(face) sums +1 per
// enclosing clockwise cycle and -1 per counterclockwise one; the boundaries
// of the level sets {p >= l}, split non-crossingly at pinch vertices, form a
// laminar family using every arc exactly as often as the input does. The
// cycle count may differ from the input's.
std::vector<DiCycle> level_decompose(const PlaneDigraph& g, RegionCache& cache,
                                     const std::vector<DiCycle>& cycles);

// Iterates uncross_step on the pair until the two cycles no longer cross.
// Throws NotCrossing if the input pair does not cross and PinchedCrossing on
// the degenerate inputs above.
std::pair<DiCycle, DiCycle> uncross_pair(const PlaneDigraph& g, const DiCycle& c1,
                                         const DiCycle& c2);

struct LaminarizeTrace {
  // psi = prod over the multiset of (1 + ||interior||), before each step and
  // after the last; strictly decreasing.
  std::vector<BigInt> psi;
  int steps = 0;
  int pinched_splits = 0;  // smoothing fallbacks that grew the multiset
};

// Laminarization of a cycle multiset: same per-arc usage counts, pairwise
// non-crossing output, |F'| >= |F|. Cardinality is preserved except across
// pinched pairs (see uncross_step), where a cycle count increase is forced;
// the trace records how often that happened.
std::vector<DiCycle> laminarize_multiset(const PlaneDigraph& g, std::vector<DiCycle> cycles,
                                         LaminarizeTrace* trace = nullptr);

bool is_laminar(const PlaneDigraph& g, const std::vector<DiCycle>& cycles);

BigInt psi_value(const PlaneDigraph& g, RegionCache& cache, const std::vector<DiCycle>& cycles);

// Per-arc usage counts of a cycle multiset (index: arc id).
std::vector<int> arc_usage_counts(const PlaneDigraph& g, const std::vector<DiCycle>& cycles);

}  // namespace fvslab
