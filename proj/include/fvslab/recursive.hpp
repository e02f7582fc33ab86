#pragma once

#include <optional>
#include <vector>

#include "fvslab/coating.hpp"

namespace fvslab {

// A chain family: G_k is a ring of length 4 with k stacked copies of a fixed
// block between consecutive rings. Per copy: 4 mid vertices (a quad ring),
// two in-spokes at ring positions {0,2}, two out-spokes at positions {1,3},
// plus optional degree-2 "theta" vertices doubling a spoke.
struct ChainTemplate {
  int base_g = 6;
  enum class End { RingBelow, Mid, RingAbove };
  struct Theta {
    End end1;
    int pos1;
    End end2;
    int pos2;
    bool east = true;  // which flank of the parallel spoke it rides
  };
  std::vector<Theta> thetas;
};

ChainTemplate chain_template_for(int base_g);  // base_g in {6,8,9,10,11}

struct ChainSkeleton {
  Skeleton skeleton;
  int copies = 0;
  std::vector<std::vector<int>> ring_vertices;  // per level 0..k, 4 ids
  std::vector<int> ring0_edges;                 // the shared C_in ring, 4 ids
  // Corner composition against the interior corner roles: h(corner) =
  // sum of role values + bonus (melted boundary slots).
  std::vector<std::vector<int>> corner_roles;
  std::vector<int> corner_bonus;
  // Role grouping: per vertex role, its corner roles and the target sum
  // g - interior_degree.
  std::vector<std::vector<int>> role_groups;
  std::vector<int> group_deg;
  int n_roles = 0;
};

// Builds G_k for the template (NonFacialRing if the interface rings fail to
// bound faces, which the templates never do).
ChainSkeleton build_chain_skeleton(const ChainTemplate& tmpl, int k);

// Periodic coating-function values, one per interior corner role.
using ChainClassValues = std::vector<int>;

CoatingFunction chain_coating_function(const ChainSkeleton& chain, const ChainClassValues& values);

struct RecursiveFamily {
  ChainTemplate tmpl;
  ChainClassValues values;
  Coating h0, h1;  // coatings of G_0 and G_1
  std::vector<int> ring0_edges_g0, ring0_edges_g1;
};

// Finds periodic class values giving digirth(H_0) = digirth(H_1) = base_g and
// non-decreasing link distances; deterministic first hit. SearchFailed when
// the space is exhausted.
RecursiveFamily search_recursive_family(const ChainTemplate& tmpl, long long budget = 5'000'000);

// Builds (G_k, H_k) of a certified family.
std::pair<ChainSkeleton, Coating> build_recursive_member(const RecursiveFamily& family, int k);

// d(link(e_i), link(e_j)) over the given skeleton edges, in arc steps.
std::vector<std::vector<int>> link_distance_table(const Coating& c,
                                                  const std::vector<int>& ring_edges);

struct RecursiveCertificate {
  bool ok = false;
  int digirth_h0 = 0, digirth_h1 = 0;
  std::vector<std::vector<int>> table_h0, table_h1;
  std::string detail;
};

// The two base digirth checks plus link-distance monotonicity; by the chain
// lemma this certifies digirth(H_k) = g for every k.
RecursiveCertificate verify_recursive_digirth(const RecursiveFamily& family, int g);

}  // namespace fvslab
