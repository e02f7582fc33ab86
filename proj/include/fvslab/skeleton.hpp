#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fvslab/plane_digraph.hpp"

namespace fvslab {

// Half-edge of an undirected edge e: 2e sits at endpoint u, 2e+1 at v.
// For a loop both sit at the same vertex but are distinct rotation entries.
using HalfEdge = int;
inline HalfEdge he_a(int e) { return 2 * e; }
inline HalfEdge he_b(int e) { return 2 * e + 1; }
inline int he_edge(HalfEdge h) { return h >> 1; }
inline HalfEdge he_mate(HalfEdge h) { return h ^ 1; }

// An embedded undirected plane multigraph (loops allowed), rotation-system
// based like PlaneDigraph. The skeleton of the coating framework.
class Skeleton {
 public:
  struct Edge {
    int u = -1, v = -1;
  };

  // A corner: the gap after half-edge rotation(v)[pos] in clockwise order,
  // i.e. the triple (rot[pos], v, rot[pos+1]). Isolated vertices carry a
  // single sentinel corner with pos = -1.
  struct Corner {
    int vertex = -1;
    int pos = -1;   // index of the preceding half-edge in the rotation
    int face = -1;  // incident face (-1 only for isolated vertices)
  };

  Skeleton() = default;
  Skeleton(std::vector<Edge> edges, std::vector<std::vector<HalfEdge>> rotation,
           std::optional<std::pair<int, Side>> outer = std::nullopt);

  int n() const { return static_cast<int>(rot_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  // Plane face count (walks minus the outer identifications); face ids below
  // index the boundary walks.
  int f() const;
  int walks() const { return static_cast<int>(face_darts_.size()); }
  int components() const { return n_comp_; }
  const Edge& edge(int e) const { return edges_[e]; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  int max_degree() const;
  bool has_loops() const;
  const std::vector<HalfEdge>& rotation(int v) const { return rot_[v]; }
  int he_vertex(HalfEdge h) const { return (h & 1) ? edges_[h >> 1].v : edges_[h >> 1].u; }

  int face_of(HalfEdge h) const { return face_of_[h]; }
  const std::vector<HalfEdge>& face_darts(int face) const { return face_darts_[face]; }
  int face_len(int face) const { return static_cast<int>(face_darts_[face].size()); }
  bool has_outer_face() const { return outer_face_.has_value(); }
  int outer_face() const;

  // Corners, globally indexed; per-vertex and per-face views.
  const std::vector<Corner>& corners() const { return corners_; }
  const std::vector<int>& corners_of_vertex(int v) const { return vertex_corners_[v]; }
  const std::vector<int>& corners_of_face(int face) const { return face_corners_[face]; }
  // Corner after a given half-edge (by rotation position).
  int corner_after(int v, int pos) const;

  int vertex_label(int v) const { return vertex_labels_[v]; }
  int edge_label(int e) const { return edge_labels_[e]; }
  void set_labels(std::vector<int> vlab, std::vector<int> elab);

  // Edge contraction (loops around the pair become loops); used by the
  // link-vertex deletion remark. Not defined for loops.
  Skeleton contract_edge(int e) const;
  Skeleton delete_edge(int e) const;
  Skeleton delete_vertex(int v) const;
  // Splits a vertex with a loop into interior/exterior parts (loop deleted).
  Skeleton split_at_loop(int loop_edge) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<HalfEdge>> rot_;
  std::vector<int> rot_index_;
  std::vector<int> face_of_;
  std::vector<std::vector<HalfEdge>> face_darts_;
  std::optional<int> outer_face_;
  std::vector<int> comp_of_;
  int n_comp_ = 0;
  std::vector<Corner> corners_;
  std::vector<std::vector<int>> vertex_corners_;
  std::vector<std::vector<int>> face_corners_;
  std::vector<int> vertex_labels_, edge_labels_;

  void trace_faces();
  void build_corners();
};

// Forgets arc directions; labels carried over.
Skeleton skeleton_of(const PlaneDigraph& g);

// PSK text format: `psk 1`; `e <id> <u> <v>`; `v <id> : <tok>...` with tokens
// <eid>a / <eid>b; `outer <eid> <L|R>`.
Skeleton parse_psk(std::istream& in);
Skeleton parse_psk_string(const std::string& text);
Skeleton load_psk(const std::string& path);
std::string print_psk(const Skeleton& s);

// Stable file token of a corner: preceding half-edge token, or "-" for an
// isolated vertex.
std::string corner_token(const Skeleton& s, int corner);
int corner_by_token(const Skeleton& s, int vertex_label, const std::string& token);

}  // namespace fvslab
