#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fvslab/uncross.hpp"
#include "fvslab/valuation.hpp"

using namespace fvslab;

// A pinned counterexample to the "two crossing cycles swap into two cycles on
// the same arcs" transformation: A and B cross twice (darts interleave at
// vertices 0 and 2) and touch at vertex 1, which pinches both side regions
// apart. Exhausting every re-pairing of the superposed arc multiset shows no
// pair of simple directed cycles covers it, so the pairwise uncrossing step
// must refuse and the laminarizer must fall back to the dual-potential
// decomposition (three cycles here).
namespace {

const char* kPinchedHost = R"(pdg 1
a 0 0 1
a 1 0 2
a 2 2 0
a 3 1 3
a 4 2 4
a 5 5 1
a 6 0 5
a 7 6 5
a 8 1 7
a 9 5 0
a 10 1 2
a 11 2 1
a 12 7 0
a 13 1 5
a 14 4 2
a 15 1 6
a 16 0 4
a 17 5 7
a 18 3 1
a 19 0 7
a 20 4 0
v 0 : 0+ 20- 16+ 2- 1+ 12- 19+ 6+ 9-
v 1 : 0- 13+ 15+ 5- 8+ 3+ 18- 11- 10+
v 2 : 1- 2+ 14- 4+ 10- 11+
v 3 : 3- 18+
v 4 : 4- 14+ 16- 20+
v 5 : 5+ 7- 13- 9+ 6- 17+
v 6 : 7+ 15-
v 7 : 8- 17- 19- 12+
outer 0 L
)";

}  // namespace

TEST_CASE("pinched crossing pair: no two-cycle re-pairing exists") {
  PlaneDigraph g = parse_pdg_string(kPinchedHost);
  DiCycle a({2, 6, 5, 10});            // 2 -> 0 -> 5 -> 1 -> 2, counterclockwise
  DiCycle b({8, 12, 16, 14, 11});      // 1 -> 7 -> 0 -> 4 -> 2 -> 1, clockwise
  REQUIRE(is_valid_dicycle(g, a));
  REQUIRE(is_valid_dicycle(g, b));
  REQUIRE(crossing(g, a, b));

  RegionCache cache(g);
  bool pinched = false;
  try {
    uncross_step(g, cache, a, b);
  } catch (const Error& e) {
    pinched = e.code() == Errc::PinchedCrossing;
  }
  CHECK(pinched);
  CHECK_THROWS_AS(uncross_pair(g, a, b), Error);

  // The dual-potential decomposition resolves it with three cycles on the
  // same arcs.
  auto pieces = level_decompose(g, cache, {a, b});
  CHECK(pieces.size() == 3);
  CHECK(is_laminar(g, pieces));
  CHECK(arc_usage_counts(g, pieces) == arc_usage_counts(g, {a, b}));

  // And the multiset laminarizer reports exactly one pinched split.
  LaminarizeTrace trace;
  auto out = laminarize_multiset(g, {a, b}, &trace);
  CHECK(trace.pinched_splits == 1);
  CHECK(out.size() == 3);
  CHECK(is_laminar(g, out));
  for (size_t i = 1; i < trace.psi.size(); ++i) CHECK(trace.psi[i] < trace.psi[i - 1]);
}

TEST_CASE("generic crossing pairs still resolve pairwise") {
  PlaneDigraph g = parse_pdg_string(kPinchedHost);
  DiCycle c0({1, 4, 20}), c1({2, 6, 5, 10});
  REQUIRE(crossing(g, c0, c1));
  auto [d1, d2] = uncross_pair(g, c0, c1);
  CHECK(!crossing(g, d1, d2));
  std::vector<int> usage_in = arc_usage_counts(g, {c0, c1});
  std::vector<int> usage_out = arc_usage_counts(g, {d1, d2});
  CHECK(usage_in == usage_out);
  CHECK_THROWS_AS(uncross_pair(g, c0, c0), Error);  // a cycle does not cross itself
}
