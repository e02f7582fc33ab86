#pragma once

#include <optional>

#include "fvslab/coating.hpp"

namespace fvslab {

struct CoatingSearchOptions {
  long long budget = 2'000'000;  // DFS nodes + digirth checks
  // The sum constraints alone do not force digirth g; turning the final
  // check off exposes exactly that gap (used by the admissibility audit).
  bool check_digirth = true;
};

// Searches a coating function with h >= 1, per-vertex sums g - deg(v), face
// sums = g when perfect (>= g otherwise), and digirth(build(S,h)) = g checked
// directly on every complete candidate (sum constraints alone do not imply
// digirth g). Returns nullopt when the space is exhausted; BudgetExhausted
// when the node budget runs out first.
std::optional<CoatingFunction> search_coating_function(const Skeleton& s, int g, bool perfect,
                                                       const CoatingSearchOptions& opts = {});

// fvs of a coating does not depend on the choice of the coating function.
bool coating_independence_check(const Skeleton& s, const CoatingFunction& h1,
                                const CoatingFunction& h2, const FvsOptions& opts = {});

}  // namespace fvslab
