#pragma once

#include <functional>
#include <vector>

#include "fvslab/arboricity.hpp"
#include "fvslab/cycles.hpp"

namespace fvslab {

// Data-parallel kernels with serial reference twins. The OpenMP variants are
// deterministic: reductions merge per-thread results in index order.

// Shortest directed cycle length per graph of a batch (0 = acyclic).
std::vector<int> batch_digirth_serial(const std::vector<PlaneDigraph>& graphs);
std::vector<int> batch_digirth_omp(const std::vector<PlaneDigraph>& graphs);

// Densest-subgraph scan max m_S/(n_S-1) over all vertex subsets (n <= 20);
// ties by smallest subset mask.
struct DensestScanResult {
  uint32_t mask = 0;
  long long num = -1;  // m_S
  int den = 0;         // n_S - 1
};
DensestScanResult densest_subset_scan_serial(const Skeleton& s);
DensestScanResult densest_subset_scan_omp(const Skeleton& s);

// Runs fn(i) for i in [0, count), serial or OpenMP; results land in a
// caller-owned array, so both orders are equivalent.
void for_each_index_serial(int count, const std::function<void(int)>& fn);
void for_each_index_omp(int count, const std::function<void(int)>& fn);

}  // namespace fvslab
