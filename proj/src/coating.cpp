#include "fvslab/coating.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "fvslab/cycles.hpp"

namespace fvslab {

int Coating::cf_len(int skeleton_face) const {
  int len = 0;
  for (const auto& cyc : face_cycles[skeleton_face]) len += static_cast<int>(cyc.size());
  return len;
}

bool Coating::is_g_coating(int* g_out) const {
  if (skeleton.n() == 0) return false;
  int g = cv_len(0);
  for (int v = 1; v < skeleton.n(); ++v)
    if (cv_len(v) != g) return false;
  if (g_out) *g_out = g;
  return true;
}

bool Coating::is_perfect(int g) const {
  int gc = 0;
  if (!is_g_coating(&gc) || gc != g) return false;
  for (int face = 0; face < skeleton.walks(); ++face)
    if (cf_len(face) != g) return false;
  return true;
}

Coating build_coating(const Skeleton& s, const CoatingFunction& h) {
  require(static_cast<int>(h.size()) == static_cast<int>(s.corners().size()), Errc::NonPositiveH,
          "coating function must value every corner");
  for (int x : h)
    require(x >= 1, Errc::NonPositiveH, "coating function values must be >= 1");

  Coating c;
  c.skeleton = s;
  c.h = h;

  // Lay out C_v position lists: per skeleton vertex, clockwise slots.
  // Each slot is either the link slot of a half-edge or a plain corner vertex.
  struct Slot {
    int half_edge = -1;  // link slot when != -1
    int corner = -1;     // plain slot: corner id
    int corner_pos = 0;
    int vertex = -1;     // assigned graph vertex
  };
  std::vector<std::vector<Slot>> layout(s.n());
  for (int v = 0; v < s.n(); ++v) {
    if (s.degree(v) == 0) {
      int corner = s.corners_of_vertex(v)[0];
      for (int i = 0; i < h[corner]; ++i) layout[v].push_back({-1, corner, i, -1});
      continue;
    }
    for (int i = 0; i < s.degree(v); ++i) {
      layout[v].push_back({s.rotation(v)[i], -1, 0, -1});
      int corner = s.corner_after(v, i);
      for (int j = 0; j < h[corner]; ++j) layout[v].push_back({-1, corner, j, -1});
    }
  }

  // Assign graph vertices: one per plain slot, one per skeleton edge.
  int next_vertex = 0;
  c.link_vertex.assign(s.m(), -1);
  for (int e = 0; e < s.m(); ++e) c.link_vertex[e] = next_vertex++;
  for (int v = 0; v < s.n(); ++v)
    for (auto& slot : layout[v])
      slot.vertex = slot.half_edge != -1 ? c.link_vertex[he_edge(slot.half_edge)] : next_vertex++;
  int n_h = next_vertex;
  c.is_link_vertex.assign(n_h, 0);
  for (int e = 0; e < s.m(); ++e) c.is_link_vertex[c.link_vertex[e]] = 1;

  // Loop distance check: both slots of a loop sit in one cycle; each side
  // between them must have length >= 3 so link arcs stay simple.
  for (int e = 0; e < s.m(); ++e) {
    if (s.edge(e).u != s.edge(e).v) continue;
    int v = s.edge(e).u;
    int len = static_cast<int>(layout[v].size());
    int p1 = -1, p2 = -1;
    for (int i = 0; i < len; ++i)
      if (layout[v][i].half_edge != -1 && he_edge(layout[v][i].half_edge) == e)
        (p1 == -1 ? p1 : p2) = i;
    int d1 = (p2 - p1 + len) % len, d2 = (p1 - p2 + len) % len;
    require(d1 >= 3 && d2 >= 3, Errc::LoopTooTight,
            "merged loop slots at distance " + std::to_string(std::min(d1, d2)));
  }

  // Cycle arcs (clockwise) and the provenance walks.
  std::vector<PlaneDigraph::Arc> arcs;
  c.vertex_cycle.assign(s.n(), {});
  c.corner_run.assign(s.corners().size(), {});
  // Per slot: the cycle arc leaving it and the one entering it.
  std::vector<std::vector<int>> out_arc(s.n()), in_arc(s.n());
  for (int v = 0; v < s.n(); ++v) {
    int len = static_cast<int>(layout[v].size());
    require(len >= 2 || s.degree(v) == 0, Errc::Internal, "degenerate vertex cycle");
    out_arc[v].assign(len, -1);
    in_arc[v].assign(len, -1);
    for (int i = 0; i < len; ++i) {
      int j = (i + 1) % len;
      out_arc[v][i] = in_arc[v][j] = static_cast<int>(arcs.size());
      arcs.push_back({layout[v][i].vertex, layout[v][j].vertex});
    }
    for (int i = 0; i < len; ++i) {
      c.vertex_cycle[v].push_back(layout[v][i].vertex);
      if (layout[v][i].corner != -1) c.corner_run[layout[v][i].corner].push_back(layout[v][i].vertex);
    }
  }

  // Link arcs: per edge, from the predecessor of the slot on one side to the
  // successor of the slot on the other side, both ways.
  c.link_arcs.assign(s.m(), {-1, -1});
  struct SlotRef {
    int v = -1, pos = -1;
  };
  std::vector<std::array<SlotRef, 2>> slot_of_he(s.m());  // [he&1]
  for (int v = 0; v < s.n(); ++v)
    for (int i = 0; i < static_cast<int>(layout[v].size()); ++i)
      if (layout[v][i].half_edge != -1)
        slot_of_he[he_edge(layout[v][i].half_edge)][layout[v][i].half_edge & 1] = {v, i};
  auto pred_vertex = [&](SlotRef r) {
    int len = static_cast<int>(layout[r.v].size());
    return layout[r.v][(r.pos + len - 1) % len].vertex;
  };
  auto succ_vertex = [&](SlotRef r) {
    int len = static_cast<int>(layout[r.v].size());
    return layout[r.v][(r.pos + 1) % len].vertex;
  };
  // Remember link arcs incident to each slot end for rotation building.
  std::vector<int> link_out_at(n_h, -1), link_in_at(n_h, -1);
  for (int e = 0; e < s.m(); ++e) {
    SlotRef sa = slot_of_he[e][0], sb = slot_of_he[e][1];
    int a1 = static_cast<int>(arcs.size());
    arcs.push_back({pred_vertex(sa), succ_vertex(sb)});
    int a2 = static_cast<int>(arcs.size());
    arcs.push_back({pred_vertex(sb), succ_vertex(sa)});
    c.link_arcs[e] = {a1, a2};
    link_out_at[pred_vertex(sa)] = a1;
    link_in_at[succ_vertex(sb)] = a1;
    link_out_at[pred_vertex(sb)] = a2;
    link_in_at[succ_vertex(sa)] = a2;
  }

  // Rotations. Plain vertices: [cycle-in, cycle-out] with link arcs woven in
  // as [link-out, cycle-out, cycle-in, link-in] clockwise. Link vertices:
  // [in_b, out_a, in_a, out_b] over the two sides' cycle arcs.
  std::vector<std::vector<DartId>> rot(n_h);
  for (int v = 0; v < s.n(); ++v) {
    for (int i = 0; i < static_cast<int>(layout[v].size()); ++i) {
      const Slot& slot = layout[v][i];
      if (slot.half_edge != -1) continue;  // link vertices handled once below
      int gv = slot.vertex;
      int cyc_in = in_arc[v][i], cyc_out = out_arc[v][i];
      if (link_out_at[gv] != -1) rot[gv].push_back(tail_dart(link_out_at[gv]));
      rot[gv].push_back(tail_dart(cyc_out));
      rot[gv].push_back(head_dart(cyc_in));
      if (link_in_at[gv] != -1) rot[gv].push_back(head_dart(link_in_at[gv]));
    }
  }
  for (int e = 0; e < s.m(); ++e) {
    SlotRef sa = slot_of_he[e][0], sb = slot_of_he[e][1];
    int gv = c.link_vertex[e];
    rot[gv] = {head_dart(in_arc[sb.v][sb.pos]), tail_dart(out_arc[sa.v][sa.pos]),
               head_dart(in_arc[sa.v][sa.pos]), tail_dart(out_arc[sb.v][sb.pos])};
  }

  // Outer face: the H-face that lives inside the skeleton's outer face. The
  // last vertex of any corner incident to it points there with its
  // clockwise-left side (cycle arc if the corner holds >= 2 vertices,
  // otherwise its outgoing link arc).
  std::optional<std::pair<int, Side>> outer;
  if (s.has_outer_face()) {
    int fext = s.outer_face();
    for (int corner : s.corners_of_face(fext)) {
      const auto& cc = s.corners()[corner];
      int v = cc.vertex;
      // Last plain slot of this corner: its outgoing link arc (or the cycle
      // arc entering it from a sibling corner vertex) has the skeleton face on
      // its clockwise-left side.
      for (int i = 0; i < static_cast<int>(layout[v].size()); ++i) {
        const Slot& slot = layout[v][i];
        if (slot.corner == corner && slot.corner_pos == h[corner] - 1) {
          int gv = slot.vertex;
          if (link_out_at[gv] != -1)
            outer = {link_out_at[gv], Side::Left};
          else if (slot.corner_pos > 0)
            outer = {in_arc[v][i], Side::Left};
          break;
        }
      }
      if (outer) break;
    }
  }

  c.graph = PlaneDigraph(std::move(arcs), std::move(rot), outer);

  // Face cycles per skeleton face: walk the face's corners in boundary order;
  // each corner contributes its run, then the link arc hops over the next
  // link vertex.
  c.face_cycles.assign(s.walks(), {});
  for (int face = 0; face < s.walks(); ++face) {
    std::vector<char> corner_done(s.corners().size(), 0);
    for (int corner0 : s.corners_of_face(face)) {
      if (corner_done[corner0]) continue;
      std::vector<int> cycle_arcs;
      int corner = corner0;
      do {
        corner_done[corner] = 1;
        const auto& cc = s.corners()[corner];
        int v = cc.vertex;
        // Intra-corner cycle arcs between consecutive run vertices.
        for (int i = 0; i < static_cast<int>(layout[v].size()); ++i)
          if (layout[v][i].corner == corner && layout[v][i].corner_pos < h[corner] - 1)
            cycle_arcs.push_back(out_arc[v][i]);
        if (cc.pos == -1) break;  // isolated vertex: C_v itself, no link hops
        // Hop across the next half-edge (clockwise) into the adjacent corner.
        int next_pos = (cc.pos + 1) % s.degree(v);
        HalfEdge crossing_he = s.rotation(v)[next_pos];
        int e = he_edge(crossing_he);
        // The link arc leaving this corner's last vertex.
        int last_vertex = c.corner_run[corner].back();
        int hop = link_out_at[last_vertex];
        require(hop != -1, Errc::Internal, "corner without outgoing link arc");
        cycle_arcs.push_back(hop);
        // The corner after the mate half-edge at the other endpoint.
        HalfEdge mate = he_mate(crossing_he);
        int w = s.he_vertex(mate);
        int mate_pos = -1;
        for (int i = 0; i < s.degree(w); ++i)
          if (s.rotation(w)[i] == mate) mate_pos = i;
        corner = s.corner_after(w, mate_pos);
        (void)e;
      } while (corner != corner0);
      c.face_cycles[face].push_back(std::move(cycle_arcs));
    }
  }
  // Isolated skeleton vertices: the whole vertex cycle doubles as the face
  // cycle of the surrounding face (the outer one when designated).
  int ambient = s.has_outer_face() ? s.outer_face() : 0;
  for (int v = 0; v < s.n(); ++v)
    if (s.degree(v) == 0 && ambient < static_cast<int>(c.face_cycles.size()))
      c.face_cycles[ambient].push_back(out_arc[v]);
  return c;
}

std::vector<CoatingAuditItem> coating_stats_audit(const Coating& c) {
  std::vector<CoatingAuditItem> items;
  auto push = [&](const std::string& name, long long expected, long long actual) {
    items.push_back({name, expected == actual, std::to_string(expected), std::to_string(actual)});
  };
  const Skeleton& s = c.skeleton;
  long long n_h = c.graph.n(), m_g = s.m(), n_g = s.n(), f_g = s.f();
  push("f_H = f_G + n_G + 2 m_G", f_g + n_g + 2 * m_g, c.graph.f());
  long long sum_cv = 0;
  for (int v = 0; v < s.n(); ++v) sum_cv += c.cv_len(v);
  push("n_H = sum |C_v| - m_G", sum_cv - m_g, n_h);
  long long sum_cf = 0;
  for (int face = 0; face < s.walks(); ++face) sum_cf += c.cf_len(face);
  push("n_H = sum |C_f| + m_G", sum_cf + m_g, n_h);
  long long sum_h = std::accumulate(c.h.begin(), c.h.end(), 0LL);
  push("sum h = n_H - m_G", n_h - m_g, sum_h);
  int g = 0;
  if (c.is_g_coating(&g)) {
    push("g-coating: n_H = g n_G - m_G", g * n_g - m_g, n_h);
    items.push_back({"g >= 2*maxdeg(G)", g >= 2 * s.max_degree(), ">= " + std::to_string(2 * s.max_degree()),
                     std::to_string(g)});
  }
  // fvs(H) >= f_G: the face cycles are vertex-disjoint directed cycles.
  long long disjoint = 0;
  std::vector<char> seen(c.graph.n(), 0);
  bool really_disjoint = true;
  for (int face = 0; face < s.walks(); ++face) {
    disjoint += c.face_cycles[face].size();
    for (const auto& cyc : c.face_cycles[face]) {
      if (!is_valid_dicycle(c.graph, DiCycle(cyc))) really_disjoint = false;
      for (int a : cyc) {
        if (seen[c.graph.tail(a)]) really_disjoint = false;
        seen[c.graph.tail(a)] = 1;
      }
    }
  }
  items.push_back({"face cycles vertex-disjoint (count >= f_G)",
                   really_disjoint && disjoint >= f_g, ">= " + std::to_string(f_g),
                   std::to_string(disjoint)});
  return items;
}

std::vector<int> strip_link_vertices_from_fvs(const Coating& c, std::vector<int> fvs) {
  const PlaneDigraph& g = c.graph;
  auto is_fvs = [&](const std::vector<int>& set) {
    std::vector<char> kill(g.n(), 0);
    for (int v : set) kill[v] = 1;
    return is_acyclic(g.delete_vertices(kill));
  };
  require(is_fvs(fvs), Errc::NotFeedbackSet, "input is not a feedback vertex set");
  for (;;) {
    int link = -1;
    for (int v : fvs)
      if (c.is_link_vertex[v]) link = v;
    if (link == -1) break;
    // In-neighbors of the link vertex; swapping one of them in keeps a
    // minimum feedback vertex set.
    std::vector<int> in_nb;
    for (int a = 0; a < g.m(); ++a)
      if (g.head(a) == link) in_nb.push_back(g.tail(a));
    std::sort(in_nb.begin(), in_nb.end());
    bool swapped = false;
    for (int candidate : in_nb) {
      std::vector<int> next;
      for (int v : fvs)
        if (v != link) next.push_back(v);
      next.push_back(candidate);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.size() == fvs.size() && is_fvs(next)) {
        fvs = std::move(next);
        swapped = true;
        break;
      }
    }
    require(swapped, Errc::NotFeedbackSet, "no in-neighbor swap preserves the feedback set");
  }
  std::sort(fvs.begin(), fvs.end());
  return fvs;
}

Coating delete_link_vertex(const Coating& c, int skeleton_edge) {
  const Skeleton& s = c.skeleton;
  require(skeleton_edge >= 0 && skeleton_edge < s.m(), Errc::UnknownArc, "skeleton edge");
  int u = s.edge(skeleton_edge).u, v = s.edge(skeleton_edge).v;
  Skeleton derived = u == v ? s.split_at_loop(skeleton_edge) : s.contract_edge(skeleton_edge);
  // Each derived corner absorbs a clockwise run of old corners: starting at
  // the corner after the same half-edge, and whenever the following old
  // half-edge is the deleted edge, the run hops over it to the mate side and
  // keeps absorbing. No extra vertices appear (the link vertex is deleted,
  // the link arcs become cycle arcs).
  std::map<int, int> old_edge_by_label;
  for (int e = 0; e < s.m(); ++e) old_edge_by_label[s.edge_label(e)] = e;
  auto rotation_pos = [&](int vertex, HalfEdge he) {
    const auto& rot = s.rotation(vertex);
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
      if (rot[i] == he) return i;
    fail(Errc::Internal, "half-edge not in rotation");
  };
  auto absorb_from = [&](HalfEdge old_he) {
    int total = 0;
    int cur_v = s.he_vertex(old_he);
    int cur_pos = rotation_pos(cur_v, old_he);
    for (;;) {
      total += c.h[s.corner_after(cur_v, cur_pos)];
      HalfEdge next = s.rotation(cur_v)[(cur_pos + 1) % s.degree(cur_v)];
      if (he_edge(next) != skeleton_edge) break;
      HalfEdge mate = he_mate(next);
      cur_v = s.he_vertex(mate);
      cur_pos = rotation_pos(cur_v, mate);
    }
    return total;
  };
  CoatingFunction h(derived.corners().size(), 0);
  for (size_t corner = 0; corner < derived.corners().size(); ++corner) {
    const auto& cc = derived.corners()[corner];
    if (cc.pos == -1) {
      // The deletion isolated this vertex. A contracted edge melts both old
      // vertex cycles into the single corner; a split loop hands each lobe
      // the corners on its side of the loop.
      int total = 0;
      if (u != v) {
        for (int old_corner : s.corners_of_vertex(u)) total += c.h[old_corner];
        for (int old_corner : s.corners_of_vertex(v)) total += c.h[old_corner];
      } else {
        int p1 = -1, p2 = -1;
        for (int i = 0; i < s.degree(u); ++i)
          if (he_edge(s.rotation(u)[i]) == skeleton_edge) (p1 == -1 ? p1 : p2) = i;
        bool outside_lobe = derived.vertex_label(cc.vertex) == s.vertex_label(u);
        for (int old_corner : s.corners_of_vertex(u)) {
          int pos = s.corners()[old_corner].pos;
          bool inside = pos >= p1 && pos < p2;
          if (inside != outside_lobe) total += c.h[old_corner];
        }
      }
      h[corner] = total;
      continue;
    }
    HalfEdge dhe = derived.rotation(cc.vertex)[cc.pos];
    int old_edge = old_edge_by_label.at(derived.edge_label(he_edge(dhe)));
    HalfEdge old_he = 2 * old_edge + (dhe & 1);
    h[corner] = absorb_from(old_he);
  }
  return build_coating(derived, h);
}

Coating coating_delete_skeleton_edge(const Coating& c, int skeleton_edge) {
  const Skeleton& s = c.skeleton;
  Skeleton derived = s.delete_edge(skeleton_edge);
  // The link vertex splits into two plain vertices: each side's flanking
  // corners fuse with one extra vertex between them.
  std::map<std::pair<int, std::string>, int> old_h;
  for (size_t corner = 0; corner < s.corners().size(); ++corner)
    old_h[{s.vertex_label(s.corners()[corner].vertex), corner_token(s, corner)}] = c.h[corner];
  CoatingFunction h(derived.corners().size(), 0);
  for (size_t corner = 0; corner < derived.corners().size(); ++corner) {
    const auto& cc = derived.corners()[corner];
    int vlab = derived.vertex_label(cc.vertex);
    std::string token = corner_token(derived, corner);
    auto it = old_h.find({vlab, token});
    if (it != old_h.end()) {
      h[corner] = it->second;
      // If the old clockwise successor was the deleted edge, this corner now
      // also holds the old link slot (one vertex) and the corner that
      // followed the deleted half-edge.
      int old_v = -1;
      for (int x = 0; x < s.n(); ++x)
        if (s.vertex_label(x) == vlab) old_v = x;
      for (int old_corner : s.corners_of_vertex(old_v)) {
        if (corner_token(s, old_corner) != token) continue;
        const auto& oc = s.corners()[old_corner];
        int next_pos = (oc.pos + 1) % s.degree(old_v);
        if (he_edge(s.rotation(old_v)[next_pos]) == skeleton_edge)
          h[corner] += 1 + c.h[s.corner_after(old_v, next_pos)];
      }
    } else if (cc.pos == -1) {
      // The vertex became isolated: its single corner holds the whole old
      // cycle minus nothing (both old corners plus the split link vertex).
      int old_v = -1;
      for (int x = 0; x < s.n(); ++x)
        if (s.vertex_label(x) == vlab) old_v = x;
      int total = 1;  // the split link vertex
      for (int old_corner : s.corners_of_vertex(old_v)) total += c.h[old_corner];
      h[corner] = total;
    }
  }
  return build_coating(derived, h);
}

Coating coating_delete_skeleton_vertex(const Coating& c, int skeleton_vertex) {
  const Skeleton& s = c.skeleton;
  Skeleton derived = s.delete_vertex(skeleton_vertex);
  std::map<std::pair<int, std::string>, int> old_h;
  for (size_t corner = 0; corner < s.corners().size(); ++corner)
    old_h[{s.vertex_label(s.corners()[corner].vertex), corner_token(s, corner)}] = c.h[corner];
  CoatingFunction h(derived.corners().size(), 0);
  for (size_t corner = 0; corner < derived.corners().size(); ++corner) {
    const auto& cc = derived.corners()[corner];
    int vlab = derived.vertex_label(cc.vertex);
    std::string token = corner_token(derived, corner);
    auto it = old_h.find({vlab, token});
    if (it != old_h.end()) {
      h[corner] = it->second;
      // Corners whose clockwise successor half-edge pointed at the deleted
      // vertex absorb the link vertex (now plain) and the following corner,
      // repeatedly while the successor keeps pointing there.
      int old_v = -1;
      for (int x = 0; x < s.n(); ++x)
        if (s.vertex_label(x) == vlab) old_v = x;
      for (int old_corner : s.corners_of_vertex(old_v)) {
        if (corner_token(s, old_corner) != token) continue;
        int pos = s.corners()[old_corner].pos;
        for (;;) {
          int next_pos = (pos + 1) % s.degree(old_v);
          HalfEdge next_he = s.rotation(old_v)[next_pos];
          int other = s.he_vertex(he_mate(next_he));
          if (other != skeleton_vertex) break;
          h[corner] += 1 + c.h[s.corner_after(old_v, next_pos)];
          pos = next_pos;
        }
      }
    } else if (cc.pos == -1 && old_h.count({vlab, "-"}) == 0) {
      // Vertex isolated by the deletion: whole old cycle melts into one corner.
      int old_v = -1;
      for (int x = 0; x < s.n(); ++x)
        if (s.vertex_label(x) == vlab) old_v = x;
      int total = 0;
      for (int old_corner : s.corners_of_vertex(old_v)) total += c.h[old_corner];
      total += s.degree(old_v);  // all link vertices turn plain
      h[corner] = total;
    } else if (it == old_h.end()) {
      h[corner] = old_h[{vlab, "-"}];
    }
  }
  return build_coating(derived, h);
}

CoatingFvsAudit audit_coating_fvs(const Coating& c, bool run_exact, const FvsOptions& opts) {
  CoatingFvsAudit audit;
  auto girth = digirth(c.graph);
  require(girth.has_value(), Errc::Internal, "a coating always has directed cycles");
  audit.g = *girth;
  int g = 0;
  audit.g_coating = c.is_g_coating(&g);
  audit.digirth_equals_g = audit.g_coating && g == audit.g;
  long long n_h = c.graph.n(), m_g = c.skeleton.m(), n_g = c.skeleton.n();
  if (run_exact) {
    try {
      audit.fvs = fvs_exact(c.graph, opts).size;
      audit.fvs_computed = true;
    } catch (const Error& e) {
      if (e.code() != Errc::ResourceLimit) throw;
      audit.detail = "exact solver hit the node budget; ";
    }
  }
  if (audit.digirth_equals_g) {
    // Thm: fvs(H) = n_G.
    if (audit.fvs_computed && audit.fvs != n_g) {
      audit.pass = false;
      audit.detail += "fvs != n_G";
    }
  } else if (audit.fvs_computed) {
    if (static_cast<long long>(audit.g) * audit.fvs > n_h + m_g) {
      audit.pass = false;
      audit.detail += "g*fvs > n_H + m_G";
    }
    if (audit.fvs < n_g) {
      audit.pass = false;
      audit.detail += "fvs < n_G";
    }
  }
  return audit;
}

Rat compute_fvs_formula(const Coating& c, const Rat& alpha, const Rat& beta) {
  int g = 0;
  require(c.is_g_coating(&g), Errc::NotGCoating, "formula needs a g-coating");
  require(Rat(c.skeleton.m()) == alpha * Rat(c.skeleton.n()) - beta, Errc::HypothesisViolated,
          "m_G != alpha*n_G - beta");
  require(Rat(g) != alpha, Errc::HypothesisViolated, "alpha = g");
  Rat result = (Rat(c.graph.n()) - beta) / (Rat(g) - alpha);
  return result;
}

Coating extend_digirth(const Coating& c, int r, const FvsOptions& opts) {
  int g = 0;
  require(c.is_g_coating(&g), Errc::NotGCoating, "extend_digirth needs a g-coating");
  auto girth = digirth(c.graph);
  require(girth && *girth == g, Errc::NotGCoating, "extend_digirth needs digirth g");
  if (r == 0) return c;
  auto fvs = strip_link_vertices_from_fvs(c, fvs_exact(c.graph, opts).witness);
  // Corner of each selected vertex.
  std::vector<char> selected_corner(c.skeleton.corners().size(), 0);
  for (int v : fvs) {
    bool found = false;
    for (size_t corner = 0; corner < c.corner_run.size() && !found; ++corner)
      for (int x : c.corner_run[corner])
        if (x == v) {
          selected_corner[corner] = 1;
          found = true;
          break;
        }
    require(found, Errc::Internal, "feedback vertex not in any corner");
  }
  CoatingFunction h = c.h;
  for (size_t corner = 0; corner < h.size(); ++corner)
    if (selected_corner[corner]) h[corner] += r;
  Coating out = build_coating(c.skeleton, h);
  auto new_girth = digirth(out.graph);
  require(new_girth && *new_girth == g + r, Errc::Internal,
          "extension did not reach digirth g+r");
  return out;
}

// ---------------------------------------------------------------------------
// CF format

CoatingFunction parse_cf(std::istream& in, const Skeleton& s) {
  std::string line;
  int lineno = 0;
  bool header = false;
  CoatingFunction h(s.corners().size(), -1);
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string kw;
    if (!(ss >> kw) || kw[0] == '#') continue;
    if (kw == "cf") {
      int version;
      if (!(ss >> version) || version != 1)
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'cf 1'");
      header = true;
    } else if (kw == "h") {
      int vlab, value;
      std::string token;
      if (!(ss >> vlab >> token >> value))
        fail(Errc::ParseError,
             "line " + std::to_string(lineno) + ": expected 'h <vertex> <corner-token> <value>'");
      int corner = corner_by_token(s, vlab, token);
      require(h[corner] == -1, Errc::ParseError, "corner valued twice");
      h[corner] = value;
    } else {
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": unknown directive '" + kw + "'");
    }
  }
  require(header, Errc::ParseError, "missing 'cf 1' header");
  for (size_t corner = 0; corner < h.size(); ++corner)
    require(h[corner] != -1, Errc::ParseError,
            "corner " + corner_token(s, static_cast<int>(corner)) + " of vertex " +
                std::to_string(s.vertex_label(s.corners()[corner].vertex)) + " missing");
  return h;
}

CoatingFunction parse_cf_string(const std::string& text, const Skeleton& s) {
  std::istringstream ss(text);
  return parse_cf(ss, s);
}

CoatingFunction load_cf(const std::string& path, const Skeleton& s) {
  std::ifstream in(path);
  require(in.good(), Errc::ParseError, "cannot open " + path);
  return parse_cf(in, s);
}

std::string print_cf(const Skeleton& s, const CoatingFunction& h) {
  std::ostringstream out;
  out << "cf 1\n";
  for (size_t corner = 0; corner < h.size(); ++corner)
    out << "h " << s.vertex_label(s.corners()[corner].vertex) << " "
        << corner_token(s, static_cast<int>(corner)) << " " << h[corner] << "\n";
  return out.str();
}

}  // namespace fvslab
