#include "fvslab/parallel.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fvslab {

namespace {

int one_digirth(const PlaneDigraph& g) { return digirth(g).value_or(0); }

DensestScanResult scan_range(const Skeleton& s, uint32_t lo, uint32_t hi) {
  int n = s.n();
  std::vector<uint32_t> adj(n, 0);
  bool multi = false;
  {
    std::vector<std::pair<int, int>> seen;
    for (int e = 0; e < s.m(); ++e) {
      auto key = std::minmax(s.edge(e).u, s.edge(e).v);
      seen.emplace_back(key.first, key.second);
    }
    std::sort(seen.begin(), seen.end());
    multi = std::adjacent_find(seen.begin(), seen.end()) != seen.end();
  }
  for (int e = 0; e < s.m(); ++e) {
    adj[s.edge(e).u] |= 1u << s.edge(e).v;
    adj[s.edge(e).v] |= 1u << s.edge(e).u;
  }
  DensestScanResult best;
  for (uint32_t mask = lo; mask < hi; ++mask) {
    int k = __builtin_popcount(mask);
    if (k < 2) continue;
    long long edges = 0;
    if (multi) {
      for (int e = 0; e < s.m(); ++e)
        if ((mask >> s.edge(e).u & 1) && (mask >> s.edge(e).v & 1)) ++edges;
    } else {
      for (uint32_t rest = mask; rest;) {
        int v = __builtin_ctz(rest);
        rest &= rest - 1;
        edges += __builtin_popcount(adj[v] & mask);
      }
      edges /= 2;
    }
    // edges/(k-1) > num/den  <=>  edges*den > num*(k-1)
    if (best.num < 0 || edges * best.den > best.num * (k - 1)) {
      best = {mask, edges, k - 1};
    }
  }
  return best;
}

bool beats(const DensestScanResult& a, const DensestScanResult& b) {
  // a strictly denser than b, or equal density with smaller mask.
  if (b.num < 0) return a.num >= 0;
  if (a.num < 0) return false;
  long long lhs = a.num * b.den, rhs = b.num * a.den;
  if (lhs != rhs) return lhs > rhs;
  return a.mask < b.mask;
}

}  // namespace

std::vector<int> batch_digirth_serial(const std::vector<PlaneDigraph>& graphs) {
  std::vector<int> out(graphs.size());
  for (size_t i = 0; i < graphs.size(); ++i) out[i] = one_digirth(graphs[i]);
  return out;
}

std::vector<int> batch_digirth_omp(const std::vector<PlaneDigraph>& graphs) {
  std::vector<int> out(graphs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (size_t i = 0; i < graphs.size(); ++i) out[i] = one_digirth(graphs[i]);
  return out;
}

DensestScanResult densest_subset_scan_serial(const Skeleton& s) {
  require(s.n() <= 20, Errc::TooLarge, "subset scan needs n <= 20");
  return scan_range(s, 1, 1u << s.n());
}

DensestScanResult densest_subset_scan_omp(const Skeleton& s) {
  require(s.n() <= 20, Errc::TooLarge, "subset scan needs n <= 20");
  uint32_t total = 1u << s.n();
#ifdef _OPENMP
  int chunks = std::max(1, omp_get_max_threads() * 4);
#else
  int chunks = 1;
#endif
  uint32_t step = total / chunks + 1;
  std::vector<DensestScanResult> partial(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < chunks; ++i) {
    uint32_t lo = std::max<uint32_t>(1, static_cast<uint32_t>(i) * step);
    uint32_t hi = std::min<uint64_t>(total, static_cast<uint64_t>(i + 1) * step);
    if (lo < hi) partial[i] = scan_range(s, lo, hi);
  }
  DensestScanResult best;
  for (const auto& p : partial)
    if (p.num >= 0 && beats(p, best)) best = p;
  return best;
}

void for_each_index_serial(int count, const std::function<void(int)>& fn) {
  for (int i = 0; i < count; ++i) fn(i);
}

void for_each_index_omp(int count, const std::function<void(int)>& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int i = 0; i < count; ++i) fn(i);
}

}  // namespace fvslab
