#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fvslab/errors.hpp"

namespace fvslab {

// A half-arc (dart). Arc a yields dart 2a at its tail and 2a+1 at its head.
using DartId = int;
inline DartId tail_dart(int arc) { return 2 * arc; }
inline DartId head_dart(int arc) { return 2 * arc + 1; }
inline int dart_arc(DartId d) { return d >> 1; }
inline bool dart_at_head(DartId d) { return (d & 1) != 0; }
inline DartId dart_reverse(DartId d) { return d ^ 1; }

enum class Side { Left, Right };
inline char side_char(Side s) { return s == Side::Left ? 'L' : 'R'; }

struct InducedSubgraph;

// An embedded directed multigraph on the sphere, given by a rotation system:
// for each vertex, the cyclic clockwise order of its incident half-arcs.
// Faces are the orbits of d -> sigma(reverse(d)); with clockwise rotations the
// orbit through the tail dart of an arc is the face on the arc's LEFT side.
// Immutable once constructed; construction validates the embedding.
class PlaneDigraph {
 public:
  struct Arc {
    int tail = -1;
    int head = -1;
  };

  PlaneDigraph() = default;

  // rotation[v] lists dart ids clockwise. Every dart of every arc must appear
  // exactly once, at its endpoint. outer: (arc, side), resolved to a face.
  PlaneDigraph(std::vector<Arc> arcs, std::vector<std::vector<DartId>> rotation,
               std::optional<std::pair<int, Side>> outer = std::nullopt);

  int n() const { return static_cast<int>(rot_.size()); }
  int m() const { return static_cast<int>(arcs_.size()); }
  // Plane face count: boundary walks minus the c-1 outer-face identifications
  // of a disconnected drawing, so that n - m + f = 1 + c always holds.
  int f() const;
  // Face-tracing orbits (boundary walks); all face ids below index these.
  int walks() const { return static_cast<int>(face_darts_.size()); }
  int components() const { return n_comp_; }

  int tail(int arc) const { return arcs_[arc].tail; }
  int head(int arc) const { return arcs_[arc].head; }
  const Arc& arc(int a) const { return arcs_[a]; }

  int vertex_of(DartId d) const { return dart_at_head(d) ? arcs_[dart_arc(d)].head : arcs_[dart_arc(d)].tail; }
  const std::vector<DartId>& rotation(int v) const { return rot_[v]; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }

  // Clockwise successor of d around vertex_of(d).
  DartId sigma_next(DartId d) const;
  DartId sigma_prev(DartId d) const;
  // Face-tracing successor: sigma_next(reverse(d)).
  DartId phi_next(DartId d) const { return sigma_next(dart_reverse(d)); }

  int face_of(DartId d) const { return face_of_[d]; }
  int face_left(int arc) const { return face_of_[tail_dart(arc)]; }
  int face_right(int arc) const { return face_of_[head_dart(arc)]; }
  const std::vector<DartId>& face_darts(int face) const { return face_darts_[face]; }
  int face_len(int face) const { return static_cast<int>(face_darts_[face].size()); }

  bool has_outer_face() const { return outer_face_.has_value(); }
  int outer_face() const;
  int component_of(int v) const { return comp_of_[v]; }

  // External labels (file ids); default to the dense index.
  int vertex_label(int v) const { return vertex_labels_[v]; }
  int arc_label(int a) const { return arc_labels_[a]; }
  void set_labels(std::vector<int> vlab, std::vector<int> alab);
  int vertex_by_label(int label) const;  // UnknownVertex if absent

  // True iff no loops and no two arcs share (tail, head) or form a loop pair
  // with equal endpoints in the same direction.
  bool is_simple() const;

  // Replaces arc a by a directed path of t+1 arcs through t new degree-2
  // vertices, preserving the embedding. t = 0 returns a copy.
  PlaneDigraph subdivide_arc(int a, int t) const;

  // Embedded subgraph induced by an arc subset: used vertices kept, rotations
  // filtered in order. Maps give original ids per new id.
  InducedSubgraph induced_by_arcs(const std::vector<char>& arc_used) const;

  // Deletes a vertex set (embedding of the rest kept). Outer face designation
  // is dropped if its reference arc dies.
  PlaneDigraph delete_vertices(const std::vector<char>& kill) const;

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<DartId>> rot_;
  std::vector<int> rot_index_;  // dart -> position in rotation of its vertex
  std::vector<int> face_of_;
  std::vector<std::vector<DartId>> face_darts_;
  std::optional<int> outer_face_;
  std::vector<int> comp_of_;
  int n_comp_ = 0;
  std::vector<int> vertex_labels_;
  std::vector<int> arc_labels_;

  void trace_faces();
  void check_euler() const;
};

struct InducedSubgraph {
  PlaneDigraph graph;
  std::vector<int> vertex_map;
  std::vector<int> arc_map;
};

// PDG text format:
//   pdg 1
//   a <id> <tail> <head>
//   v <id> : <tok>...        tokens <arcid>+ (tail half-arc) / <arcid>- (head)
//   outer <arcid> <L|R>
// Unknown directives are rejected.
PlaneDigraph parse_pdg(std::istream& in);
PlaneDigraph parse_pdg_string(const std::string& text);
PlaneDigraph load_pdg(const std::string& path);
std::string print_pdg(const PlaneDigraph& g);

bool structurally_equal(const PlaneDigraph& a, const PlaneDigraph& b);

}  // namespace fvslab
