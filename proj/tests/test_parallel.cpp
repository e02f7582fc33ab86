#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fvslab/families.hpp"
#include "fvslab/fvs.hpp"
#include "fvslab/parallel.hpp"

using namespace fvslab;

// The OpenMP kernels must agree with their serial references bit for bit.

TEST_CASE("batch digirth: serial == omp") {
  std::vector<PlaneDigraph> graphs;
  for (int i = 0; i < 60; ++i) graphs.push_back(gen_random_plane_digraph(10, 500 + i));
  CHECK(batch_digirth_serial(graphs) == batch_digirth_omp(graphs));
}

TEST_CASE("densest subset scan: serial == omp, matches the rational oracle") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Skeleton s = gen_random_skeleton(9, 900 + seed);
    if (s.has_loops()) continue;
    auto a = densest_subset_scan_serial(s);
    auto b = densest_subset_scan_omp(s);
    CHECK(a.mask == b.mask);
    CHECK(a.num == b.num);
    CHECK(a.den == b.den);
    // Against the exact-rational arboricity path.
    auto exact = fractional_arboricity(s);
    CHECK(Rat(a.num, a.den) == exact.value);
  }
}

TEST_CASE("fvs parallel root branching: same size and witness") {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    PlaneDigraph g = gen_random_plane_digraph(10, 7100 + seed);
    FvsOptions serial, parallel;
    parallel.parallel_root = true;
    auto a = fvs_exact(g, serial);
    auto b = fvs_exact(g, parallel);
    CHECK(a.size == b.size);
    CHECK(a.witness == b.witness);
  }
  Coating c = gen_cycle_coating(5).coating;
  FvsOptions serial, parallel;
  parallel.parallel_root = true;
  CHECK(fvs_exact(c.graph, serial).witness == fvs_exact(c.graph, parallel).witness);
}

TEST_CASE("for_each_index drivers fill the same slots") {
  std::vector<int> a(100, 0), b(100, 0);
  for_each_index_serial(100, [&](int i) { a[i] = i * i; });
  for_each_index_omp(100, [&](int i) { b[i] = i * i; });
  CHECK(a == b);
}
