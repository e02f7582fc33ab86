#pragma once

#include <array>
#include <string>
#include <vector>

#include "fvslab/fvs.hpp"
#include "fvslab/rational.hpp"
#include "fvslab/skeleton.hpp"

namespace fvslab {

// Corner -> number of coating vertices strictly inside the corner (>= 1).
// Indexed by the skeleton's global corner ids.
using CoatingFunction = std::vector<int>;

// The coating of a skeleton: every skeleton vertex becomes a clockwise cycle,
// every edge a link vertex plus two link arcs. Provenance maps tie the plane
// digraph back to the skeleton.
struct Coating {
  PlaneDigraph graph;
  Skeleton skeleton;
  CoatingFunction h;
  std::vector<std::vector<int>> vertex_cycle;        // per skeleton vertex, clockwise walk
  std::vector<int> link_vertex;                      // per skeleton edge
  std::vector<std::array<int, 2>> link_arcs;         // per skeleton edge
  std::vector<std::vector<int>> corner_run;          // per corner, clockwise
  std::vector<std::vector<std::vector<int>>> face_cycles;  // per skeleton face: arc lists
  std::vector<char> is_link_vertex;                  // per graph vertex

  int cv_len(int skeleton_vertex) const {
    return static_cast<int>(vertex_cycle[skeleton_vertex].size());
  }
  int cf_len(int skeleton_face) const;  // |C_f|, summed over its cycles
  bool is_g_coating(int* g_out = nullptr) const;
  bool is_perfect(int g) const;
};

// Builds the coating of (skeleton, h). Loops merge two slots of one vertex
// cycle; the merged slots must be at distance >= 3 along the cycle
// (LoopTooTight). NonPositiveH if some h(c) < 1.
Coating build_coating(const Skeleton& s, const CoatingFunction& h);

struct CoatingAuditItem {
  std::string name;
  bool pass;
  std::string expected, actual;
};

// Structural identities: face count, the two n_H sums, sum of h, g-coating
// size and degree bound, and the vertex-disjoint face-cycle packing bound.
std::vector<CoatingAuditItem> coating_stats_audit(const Coating& c);

// Swaps link vertices out of a minimum feedback vertex set, preserving size.
std::vector<int> strip_link_vertices_from_fvs(const Coating& c, std::vector<int> fvs);

// H - s is a coating of G/uv (or of the loop split). Returns the rebuilt
// coating of the contracted skeleton.
Coating delete_link_vertex(const Coating& c, int skeleton_edge);

// Coating of G - e / G - v derived from an existing coating (the subgraph
// observation); digirth can only grow.
Coating coating_delete_skeleton_edge(const Coating& c, int skeleton_edge);
Coating coating_delete_skeleton_vertex(const Coating& c, int skeleton_vertex);

struct CoatingFvsAudit {
  bool g_coating = false;
  int g = 0;  // digirth of the coating
  bool digirth_equals_g = false;
  int fvs = -1;             // exact, when computed
  bool fvs_computed = false;
  bool pass = true;
  std::string detail;
};

// For a g-coating of digirth g asserts fvs = n_G (cross-checked by the exact
// solver when feasible); otherwise audits g*fvs <= n_H + m_G and fvs >= n_G.
CoatingFvsAudit audit_coating_fvs(const Coating& c, bool run_exact = true,
                                  const FvsOptions& opts = {});

// Cor: fvs(H) = (n_H - beta)/(g - alpha) when m_G = alpha*n_G - beta.
Rat compute_fvs_formula(const Coating& c, const Rat& alpha, const Rat& beta);

// Thm: raises a g-coating of digirth g to digirth g+r by adding r vertices at
// the corners of a link-free minimum feedback vertex set.
Coating extend_digirth(const Coating& c, int r, const FvsOptions& opts = {});

// CF text format: `cf 1`; `h <vertex> <corner-token> <value>` per corner.
CoatingFunction parse_cf(std::istream& in, const Skeleton& s);
CoatingFunction parse_cf_string(const std::string& text, const Skeleton& s);
CoatingFunction load_cf(const std::string& path, const Skeleton& s);
std::string print_cf(const Skeleton& s, const CoatingFunction& h);

}  // namespace fvslab
