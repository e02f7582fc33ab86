#pragma once

#include <vector>

#include "fvslab/rational.hpp"
#include "fvslab/skeleton.hpp"

namespace fvslab {

struct DensityCertificate {
  std::vector<int> vertices;  // the densest subgraph found
  Rat density;                // m_S / (n_S - 1)
};

struct ArboricityResult {
  Rat value;
  DensityCertificate certificate;
};

// Fractional arboricity max m_S/(n_S-1), exact. Exhaustive over vertex
// subsets up to n = 20; Dinkelbach-style iteration over max-flow density
// tests beyond that. Loops make it infinite conceptually; they are rejected.
ArboricityResult fractional_arboricity(const Skeleton& s);

struct WeightedForestFamily {
  std::vector<std::vector<int>> forests;  // edge id subsets, each acyclic
  std::vector<Rat> weights;
};

// Checks: forests acyclic, every edge covered with total weight >= 1, weights
// summing to exactly c.
bool verify_arborization(const Skeleton& s, const WeightedForestFamily& family, const Rat& c);

// Exact fractional forest cover of total weight <= c over the maximal-forest
// family, via rational simplex; nullopt when the optimum exceeds c.
// Requires m <= 14 (TooLarge).
std::optional<WeightedForestFamily> build_arborization(const Skeleton& s, const Rat& c);

int degeneracy(const Skeleton& s);

struct AdmissibilityReport {
  bool admissible = false;
  bool connected = false;
  bool loopless = false;
  Rat a_f;
  Rat target;  // 2g/(g+2)
};

// Thm: a perfect g-coating of S has digirth g iff S is connected, loopless
// and a_f(S) = 2g/(g+2).
AdmissibilityReport perfect_coating_admissible(const Skeleton& s, int g);

}  // namespace fvslab
