// Serial-vs-OpenMP comparison for the data-parallel kernels: batch digirth,
// the densest-subset scan, and parallel-root exact fvs.
#include <chrono>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fvslab/families.hpp"
#include "fvslab/fvs.hpp"
#include "fvslab/parallel.hpp"

using namespace fvslab;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

void row(const std::string& name, double serial_ms, double omp_ms) {
  std::printf("%-28s serial %9.2f ms   omp %9.2f ms   speedup %.2fx\n", name.c_str(), serial_ms,
              omp_ms, omp_ms > 0 ? serial_ms / omp_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 1;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP off)\n");
#endif

  // Batch digirth over random plane digraphs.
  std::vector<PlaneDigraph> graphs;
  for (int i = 0; i < 40 * scale; ++i) graphs.push_back(gen_random_plane_digraph(160, 42 + i));
  auto t0 = clock_type::now();
  auto serial = batch_digirth_serial(graphs);
  double d_serial = ms_since(t0);
  t0 = clock_type::now();
  auto parallel = batch_digirth_omp(graphs);
  double d_omp = ms_since(t0);
  if (serial != parallel) {
    std::fprintf(stderr, "batch digirth mismatch\n");
    return 1;
  }
  row("batch digirth (40x n=160)", d_serial, d_omp);

  // Densest-subset scan on a block skeleton (n = 15: 32k subsets) and a
  // larger random one.
  Skeleton dense = gen_glkr_skeleton(1, 0, 1).skeleton;
  t0 = clock_type::now();
  auto s1 = densest_subset_scan_serial(dense);
  double s_serial = ms_since(t0);
  t0 = clock_type::now();
  auto s2 = densest_subset_scan_omp(dense);
  double s_omp = ms_since(t0);
  if (s1.mask != s2.mask || s1.num != s2.num) {
    std::fprintf(stderr, "densest scan mismatch\n");
    return 1;
  }
  Skeleton big = gen_random_skeleton(20, 7);
  t0 = clock_type::now();
  auto b1 = densest_subset_scan_serial(big);
  double b_serial = ms_since(t0);
  t0 = clock_type::now();
  auto b2 = densest_subset_scan_omp(big);
  double b_omp = ms_since(t0);
  if (b1.mask != b2.mask || b1.num != b2.num) {
    std::fprintf(stderr, "densest scan mismatch (n=20)\n");
    return 1;
  }
  row("densest scan (n=15)", s_serial, s_omp);
  row("densest scan (n=20)", b_serial, b_omp);

  // A batch of exact fvs solves, looped serially vs through the OpenMP
  // index driver (the verification suites' workload).
  std::vector<PlaneDigraph> instances;
  for (int i = 0; i < 40 * scale; ++i)
    instances.push_back(gen_random_plane_digraph(13, 9000 + i, 3));
  std::vector<int> sizes_serial(instances.size()), sizes_omp(instances.size());
  t0 = clock_type::now();
  for_each_index_serial(static_cast<int>(instances.size()),
                        [&](int i) { sizes_serial[i] = fvs_exact(instances[i]).size; });
  double f_serial = ms_since(t0);
  t0 = clock_type::now();
  for_each_index_omp(static_cast<int>(instances.size()),
                     [&](int i) { sizes_omp[i] = fvs_exact(instances[i]).size; });
  double f_omp = ms_since(t0);
  if (sizes_serial != sizes_omp) {
    std::fprintf(stderr, "fvs batch mismatch\n");
    return 1;
  }
  row("fvs batch (40x n=13)", f_serial, f_omp);
  return 0;
}
