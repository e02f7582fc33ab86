#include "fvslab/recursive.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fvslab/cycles.hpp"

namespace fvslab {

ChainTemplate chain_template_for(int base_g) {
  using End = ChainTemplate::End;
  ChainTemplate t;
  t.base_g = base_g;
  // A theta doubling a single edge makes a 3-corner face whose length tops
  // out at g-1 when both neighbors sit at degree 4 with forced corner values,
  // so the denser templates double 2-edge paths instead (4-corner faces).
  switch (base_g) {
    case 6:
      break;
    case 8:
      t.thetas = {{End::RingBelow, 0, End::Mid, 1, true}, {End::RingBelow, 2, End::Mid, 3, true}};
      break;
    case 9:
      t.thetas = {{End::RingBelow, 0, End::Mid, 1, true},
                  {End::RingBelow, 2, End::Mid, 3, true},
                  {End::Mid, 0, End::RingAbove, 1, true}};
      break;
    case 10:
      t.thetas = {{End::RingBelow, 0, End::Mid, 1, true},
                  {End::RingBelow, 2, End::Mid, 3, true},
                  {End::Mid, 0, End::RingAbove, 1, true},
                  {End::Mid, 2, End::RingAbove, 3, true}};
      break;
    case 11:
      t.thetas = {{End::RingBelow, 0, End::Mid, 1, true},
                  {End::RingBelow, 2, End::Mid, 3, true},
                  {End::Mid, 0, End::RingAbove, 1, true},
                  {End::Mid, 2, End::RingAbove, 3, true},
                  {End::RingBelow, 0, End::Mid, 3, false}};
      break;
    default:
      fail(Errc::HypothesisViolated, "no chain template for g=" + std::to_string(base_g));
  }
  return t;
}

namespace {

// Interior slot list of one vertex role: the half-edge roles around it in
// clockwise order. Slots are tagged so boundary construction can melt the
// missing ones. Corner roles are registered per (vertex role, preceding slot).
struct RoleRegistry {
  std::map<std::string, int> corner_role_of;
  std::vector<std::string> names;
  int get(const std::string& key) {
    auto it = corner_role_of.find(key);
    if (it != corner_role_of.end()) return it->second;
    int id = static_cast<int>(names.size());
    corner_role_of[key] = id;
    names.push_back(key);
    return id;
  }
};

enum class SlotKind { RingPrev, RingNext, DownSpoke, DownTheta, UpSpoke, UpTheta, MidPrev, MidNext };

struct Slot {
  std::string name;  // stable within the vertex role
  bool up = false;   // belongs to the copy above (melted at the top ring)
  bool down = false; // belongs to the copy below (melted at the bottom ring)
};

// A theta's flank side at either endpoint follows from the ring positions of
// its two ends: the far end one position clockwise (p+1) puts the arc on the
// east flank, one position counterclockwise on the west flank.
bool far_end_east(int here_pos, int far_pos) { return far_pos == (here_pos + 1) % 4; }

// Clockwise interior slot lists, outward = toward lower ring index.
std::vector<Slot> ring_slots(const ChainTemplate& tmpl, int p) {
  using End = ChainTemplate::End;
  std::vector<Slot> slots;
  // N side: the copy below's attachments (its out-spokes / RingAbove thetas),
  // ordered west->east.
  std::vector<Slot> north, south;
  if (p % 2 == 1) north.push_back({"outspoke", false, true});
  for (size_t t = 0; t < tmpl.thetas.size(); ++t) {
    const auto& th = tmpl.thetas[t];
    int far = -1;
    if (th.end1 == End::RingAbove && th.pos1 == p) far = th.pos2;
    if (th.end2 == End::RingAbove && th.pos2 == p) far = th.pos1;
    if (far == -1) continue;
    Slot s{"uptheta" + std::to_string(t), false, true};
    if (far_end_east(p, far))
      north.push_back(s);  // east flank: last in the W->E order
    else
      north.insert(north.begin(), s);
  }
  // S side: the copy above's attachments, ordered east->west.
  if (p % 2 == 0) south.push_back({"inspoke", true, false});
  for (size_t t = 0; t < tmpl.thetas.size(); ++t) {
    const auto& th = tmpl.thetas[t];
    int far = -1;
    if (th.end1 == End::RingBelow && th.pos1 == p) far = th.pos2;
    if (th.end2 == End::RingBelow && th.pos2 == p) far = th.pos1;
    if (far == -1) continue;
    Slot s{"downtheta" + std::to_string(t), true, false};
    if (far_end_east(p, far))
      south.insert(south.begin(), s);  // east flank first going E->W
    else
      south.push_back(s);
  }
  for (auto& s : north) slots.push_back(s);
  slots.push_back({"ringnext", false, false});
  for (auto& s : south) slots.push_back(s);
  slots.push_back({"ringprev", false, false});
  return slots;
}

std::vector<Slot> mid_slots(const ChainTemplate& tmpl, int p) {
  using End = ChainTemplate::End;
  std::vector<Slot> north, south, slots;
  if (p % 2 == 0) north.push_back({"inspoke", false, false});
  for (size_t t = 0; t < tmpl.thetas.size(); ++t) {
    const auto& th = tmpl.thetas[t];
    int far = -1;
    if (th.end1 == End::Mid && th.pos1 == p && th.end2 == End::RingBelow) far = th.pos2;
    if (th.end2 == End::Mid && th.pos2 == p && th.end1 == End::RingBelow) far = th.pos1;
    if (far == -1) continue;
    Slot s{"uptheta" + std::to_string(t), false, false};
    if (far_end_east(p, far))
      north.push_back(s);
    else
      north.insert(north.begin(), s);
  }
  if (p % 2 == 1) south.push_back({"outspoke", false, false});
  for (size_t t = 0; t < tmpl.thetas.size(); ++t) {
    const auto& th = tmpl.thetas[t];
    int far = -1;
    if (th.end1 == End::Mid && th.pos1 == p && th.end2 == End::RingAbove) far = th.pos2;
    if (th.end2 == End::Mid && th.pos2 == p && th.end1 == End::RingAbove) far = th.pos1;
    if (far == -1) continue;
    Slot s{"downtheta" + std::to_string(t), false, false};
    if (far_end_east(p, far))
      south.insert(south.begin(), s);
    else
      south.push_back(s);
  }
  for (auto& s : north) slots.push_back(s);
  slots.push_back({"midnext", false, false});
  for (auto& s : south) slots.push_back(s);
  slots.push_back({"midprev", false, false});
  return slots;
}

}  // namespace

ChainSkeleton build_chain_skeleton(const ChainTemplate& tmpl, int k) {
  using End = ChainTemplate::End;
  ChainSkeleton chain;
  chain.copies = k;

  // Vertex ids.
  std::vector<std::vector<int>> ring(k + 1, std::vector<int>(4));
  std::vector<std::vector<int>> mid(k + 1, std::vector<int>(4, -1));
  std::vector<std::vector<int>> theta(k + 1, std::vector<int>(tmpl.thetas.size(), -1));
  int next = 0;
  for (int i = 0; i <= k; ++i)
    for (int p = 0; p < 4; ++p) ring[i][p] = next++;
  for (int i = 1; i <= k; ++i) {
    for (int p = 0; p < 4; ++p) mid[i][p] = next++;
    for (size_t t = 0; t < tmpl.thetas.size(); ++t) theta[i][t] = next++;
  }
  int n = next;

  // Edges, keyed so rotations can reference them.
  std::vector<Skeleton::Edge> edges;
  std::map<std::pair<int, int>, int> edge_id;  // (min,max) only for simple pairs
  auto add_edge = [&](int u, int v) {
    edges.push_back({u, v});
    return static_cast<int>(edges.size()) - 1;
  };
  std::vector<std::vector<int>> ring_edge(k + 1, std::vector<int>(4));
  std::vector<std::vector<int>> mid_edge(k + 1, std::vector<int>(4, -1));
  std::vector<std::vector<int>> in_spoke(k + 1, std::vector<int>(4, -1));
  std::vector<std::vector<int>> out_spoke(k + 1, std::vector<int>(4, -1));
  std::vector<std::vector<std::array<int, 2>>> theta_edge(
      k + 1, std::vector<std::array<int, 2>>(tmpl.thetas.size(), {-1, -1}));
  for (int i = 0; i <= k; ++i)
    for (int p = 0; p < 4; ++p) ring_edge[i][p] = add_edge(ring[i][p], ring[i][(p + 1) % 4]);
  for (int i = 1; i <= k; ++i) {
    for (int p = 0; p < 4; ++p) mid_edge[i][p] = add_edge(mid[i][p], mid[i][(p + 1) % 4]);
    for (int p = 0; p < 4; p += 2) in_spoke[i][p] = add_edge(ring[i - 1][p], mid[i][p]);
    for (int p = 1; p < 4; p += 2) out_spoke[i][p] = add_edge(mid[i][p], ring[i][p]);
    for (size_t t = 0; t < tmpl.thetas.size(); ++t) {
      auto endpoint = [&](End end, int pos) {
        switch (end) {
          case End::RingBelow: return ring[i - 1][pos];
          case End::Mid: return mid[i][pos];
          case End::RingAbove: return ring[i][pos];
        }
        return -1;
      };
      theta_edge[i][t] = {add_edge(theta[i][t], endpoint(tmpl.thetas[t].end1, tmpl.thetas[t].pos1)),
                          add_edge(theta[i][t], endpoint(tmpl.thetas[t].end2, tmpl.thetas[t].pos2))};
    }
  }
  (void)edge_id;

  // Half-edge of an edge at a given vertex.
  auto he_at = [&](int e, int v) {
    if (edges[e].u == v) return he_a(e);
    require(edges[e].v == v, Errc::Internal, "edge not at vertex");
    return he_b(e);
  };

  // Resolve a slot name to a concrete half-edge for ring vertex (i,p):
  // "down" structures live in copy i, "up" in copy i+1.
  auto ring_slot_he = [&](int i, int p, const std::string& name) -> int {
    int v = ring[i][p];
    if (name == "ringnext") return he_at(ring_edge[i][p], v);
    if (name == "ringprev") return he_at(ring_edge[i][(p + 3) % 4], v);
    if (name == "outspoke") return i >= 1 ? he_at(out_spoke[i][p], v) : -1;
    if (name == "inspoke") return i + 1 <= k ? he_at(in_spoke[i + 1][p], v) : -1;
    if (name.rfind("uptheta", 0) == 0) {
      int t = std::stoi(name.substr(7));
      if (i < 1) return -1;
      const auto& th = tmpl.thetas[t];
      int which = (th.end1 == End::RingAbove && th.pos1 == p) ? 0 : 1;
      return he_at(theta_edge[i][t][which], v);
    }
    if (name.rfind("downtheta", 0) == 0) {
      int t = std::stoi(name.substr(9));
      if (i + 1 > k) return -1;
      const auto& th = tmpl.thetas[t];
      int which = (th.end1 == End::RingBelow && th.pos1 == p) ? 0 : 1;
      return he_at(theta_edge[i + 1][t][which], v);
    }
    fail(Errc::Internal, "bad ring slot " + name);
  };
  auto mid_slot_he = [&](int i, int p, const std::string& name) -> int {
    int v = mid[i][p];
    if (name == "midnext") return he_at(mid_edge[i][p], v);
    if (name == "midprev") return he_at(mid_edge[i][(p + 3) % 4], v);
    if (name == "inspoke") return he_at(in_spoke[i][p], v);
    if (name == "outspoke") return he_at(out_spoke[i][p], v);
    if (name.rfind("uptheta", 0) == 0 || name.rfind("downtheta", 0) == 0) {
      int t = std::stoi(name.substr(name[0] == 'u' ? 7 : 9));
      const auto& th = tmpl.thetas[t];
      int which = (th.end1 == End::Mid && th.pos1 == p) ? 0 : 1;
      return he_at(theta_edge[i][t][which], v);
    }
    fail(Errc::Internal, "bad mid slot " + name);
  };

  RoleRegistry registry;
  std::vector<std::vector<HalfEdge>> rot(n);
  // corner bookkeeping must match Skeleton::build_corners order: corners are
  // emitted per vertex in rotation order (corner after rot[pos]); isolated
  // vertices never occur here.
  struct PendingCorner {
    std::vector<int> roles;
    int bonus = 0;
  };
  std::vector<std::vector<PendingCorner>> pending(n);

  auto lay_vertex = [&](int v, const std::string& vertex_role, const std::vector<Slot>& slots,
                        auto&& resolve) {
    // Gather present half-edges and melt absent slots into the preceding
    // corner. Corner after slot s gets role key vertex_role + "/" + s.name.
    int deg = 0;
    std::vector<std::pair<int, PendingCorner>> entries;  // (half-edge, corner after it)
    for (const auto& slot : slots) {
      int he = resolve(slot.name);
      if (he != -1) {
        ++deg;
        entries.push_back({he, PendingCorner{{registry.get(vertex_role + "/" + slot.name)}, 0}});
      } else {
        // Melt: the slot's corner role and one extra vertex flow into the
        // previous present corner (circularly; defer if none yet).
        if (!entries.empty()) {
          entries.back().second.roles.push_back(registry.get(vertex_role + "/" + slot.name));
          entries.back().second.bonus += 1;
        } else {
          entries.push_back({-1, PendingCorner{{registry.get(vertex_role + "/" + slot.name)}, 1}});
        }
      }
    }
    // Fold any leading melted pseudo-entry into the last corner.
    require(!entries.empty(), Errc::Internal, "vertex without slots");
    if (entries.front().first == -1) {
      auto lead = entries.front();
      entries.erase(entries.begin());
      require(!entries.empty(), Errc::Internal, "vertex lost all slots");
      for (int r : lead.second.roles) entries.back().second.roles.push_back(r);
      entries.back().second.bonus += lead.second.bonus;
    }
    for (auto& [he, corner] : entries) {
      rot[v].push_back(he);
      pending[v].push_back(corner);
    }
    (void)deg;
  };

  for (int i = 0; i <= k; ++i)
    for (int p = 0; p < 4; ++p)
      lay_vertex(ring[i][p], "R" + std::to_string(p), ring_slots(tmpl, p),
                 [&](const std::string& nm) { return ring_slot_he(i, p, nm); });
  for (int i = 1; i <= k; ++i) {
    for (int p = 0; p < 4; ++p)
      lay_vertex(mid[i][p], "M" + std::to_string(p), mid_slots(tmpl, p),
                 [&](const std::string& nm) { return mid_slot_he(i, p, nm); });
    for (size_t t = 0; t < tmpl.thetas.size(); ++t) {
      // Theta rotation: [edge to end1, edge to end2].
      int v = theta[i][t];
      rot[v] = {he_at(theta_edge[i][t][0], v), he_at(theta_edge[i][t][1], v)};
      pending[v].push_back({{registry.get("T" + std::to_string(t) + "/a")}, 0});
      pending[v].push_back({{registry.get("T" + std::to_string(t) + "/b")}, 0});
    }
  }

  Skeleton bare(edges, rot);
  // Outer face: the boundary walk made of ring-0 edges only.
  int outer_walk = -1;
  for (int w = 0; w < bare.walks() && outer_walk == -1; ++w) {
    bool only_ring0 = true;
    for (HalfEdge hh : bare.face_darts(w)) {
      int e = he_edge(hh);
      if (e != ring_edge[0][0] && e != ring_edge[0][1] && e != ring_edge[0][2] &&
          e != ring_edge[0][3])
        only_ring0 = false;
    }
    if (only_ring0 && bare.face_len(w) == 4) outer_walk = w;
  }
  require(outer_walk != -1, Errc::NonFacialRing, "ring 0 does not bound a face");
  HalfEdge anchor = bare.face_darts(outer_walk).front();
  chain.skeleton = Skeleton(edges, rot,
                            std::make_pair(he_edge(anchor), (anchor & 1) ? Side::Right : Side::Left));

  chain.ring_vertices = ring;
  chain.ring0_edges = {ring_edge[0][0], ring_edge[0][1], ring_edge[0][2], ring_edge[0][3]};
  chain.n_roles = static_cast<int>(registry.names.size());

  // Corner composition arrays aligned with the Skeleton's corner order.
  const auto& corners = chain.skeleton.corners();
  chain.corner_roles.assign(corners.size(), {});
  chain.corner_bonus.assign(corners.size(), 0);
  for (size_t corner = 0; corner < corners.size(); ++corner) {
    int v = corners[corner].vertex;
    int pos = corners[corner].pos;
    require(pos >= 0 && pos < static_cast<int>(pending[v].size()), Errc::Internal, "corner order");
    chain.corner_roles[corner] = pending[v][pos].roles;
    chain.corner_bonus[corner] = pending[v][pos].bonus;
  }

  // Role groups: per vertex role, the corner roles and interior degree.
  std::map<std::string, std::pair<std::vector<int>, int>> groups;
  auto register_group = [&](const std::string& vertex_role, const std::vector<Slot>& slots) {
    if (groups.count(vertex_role)) return;
    std::vector<int> roles;
    for (const auto& slot : slots) roles.push_back(registry.get(vertex_role + "/" + slot.name));
    groups[vertex_role] = {roles, static_cast<int>(slots.size())};
  };
  for (int p = 0; p < 4; ++p) {
    register_group("R" + std::to_string(p), ring_slots(tmpl, p));
    register_group("M" + std::to_string(p), mid_slots(tmpl, p));
  }
  for (size_t t = 0; t < tmpl.thetas.size(); ++t) {
    std::string key = "T" + std::to_string(t);
    if (!groups.count(key))
      groups[key] = {{registry.get(key + "/a"), registry.get(key + "/b")}, 2};
  }
  for (auto& [key, val] : groups) {
    chain.role_groups.push_back(val.first);
    chain.group_deg.push_back(val.second);
  }
  return chain;
}

CoatingFunction chain_coating_function(const ChainSkeleton& chain, const ChainClassValues& values) {
  CoatingFunction h(chain.corner_roles.size(), 0);
  for (size_t corner = 0; corner < chain.corner_roles.size(); ++corner) {
    int total = chain.corner_bonus[corner];
    for (int role : chain.corner_roles[corner]) total += values[role];
    h[corner] = total;
  }
  return h;
}

std::vector<std::vector<int>> link_distance_table(const Coating& c,
                                                  const std::vector<int>& ring_edges) {
  int k = static_cast<int>(ring_edges.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto d = shortest_dipath_len(c.graph, c.link_vertex[ring_edges[i]],
                                   c.link_vertex[ring_edges[j]]);
      table[i][j] = d.value_or(-1);
    }
  return table;
}

RecursiveCertificate verify_recursive_digirth(const RecursiveFamily& family, int g) {
  RecursiveCertificate cert;
  cert.digirth_h0 = digirth(family.h0.graph).value_or(0);
  cert.digirth_h1 = digirth(family.h1.graph).value_or(0);
  cert.table_h0 = link_distance_table(family.h0, family.ring0_edges_g0);
  cert.table_h1 = link_distance_table(family.h1, family.ring0_edges_g1);
  cert.ok = true;
  if (cert.digirth_h0 != g || cert.digirth_h1 != g) {
    cert.ok = false;
    cert.detail = "base digirth check failed";
    return cert;
  }
  for (size_t i = 0; i < cert.table_h0.size(); ++i)
    for (size_t j = 0; j < cert.table_h0.size(); ++j) {
      int d0 = cert.table_h0[i][j], d1 = cert.table_h1[i][j];
      if (d0 == -1 || d1 == -1 || d1 < d0) {
        cert.ok = false;
        cert.detail = "link distance decreased";
        return cert;
      }
    }
  return cert;
}

RecursiveFamily search_recursive_family(const ChainTemplate& tmpl, long long budget) {
  int g = tmpl.base_g;
  ChainSkeleton chain0 = build_chain_skeleton(tmpl, 0);
  ChainSkeleton chain1 = build_chain_skeleton(tmpl, 1);

  // Enumerate compositions of g - deg into the group's corner roles, all >= 1.
  int nroles = chain1.n_roles;
  std::vector<int> values(nroles, 1);
  const auto& groups = chain1.role_groups;
  std::vector<std::vector<std::vector<int>>> comps(groups.size());
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    int parts = static_cast<int>(groups[gi].size());
    int total = g - chain1.group_deg[gi];
    if (total < parts)
      fail(Errc::SearchFailed, "vertex role cannot reach length g");
    std::vector<int> cur(parts, 1);
    cur[parts - 1] = total - (parts - 1);
    // All compositions, lexicographic.
    std::function<void(int, int)> rec = [&](int idx, int left) {
      if (idx == parts - 1) {
        cur[idx] = left;
        comps[gi].push_back(cur);
        return;
      }
      for (int v = 1; v + (parts - idx - 1) <= left; ++v) {
        cur[idx] = v;
        rec(idx + 1, left - v);
      }
    };
    rec(0, total);
  }

  // Necessary condition driving the search: every face cycle of H_0 and H_1
  // needs length >= g, and lengths are linear in the class values. The DFS
  // over class groups prunes any partial assignment whose optimistic face
  // sums fall short.
  struct FaceSum {
    std::vector<int> role_count;  // per role, multiplicity in this face
    int bonus = 0;
  };
  std::vector<FaceSum> face_sums;
  for (const ChainSkeleton* chain : {&chain0, &chain1}) {
    for (int w = 0; w < chain->skeleton.walks(); ++w) {
      FaceSum fs;
      fs.role_count.assign(nroles, 0);
      for (int corner : chain->skeleton.corners_of_face(w)) {
        fs.bonus += chain->corner_bonus[corner];
        for (int role : chain->corner_roles[corner]) ++fs.role_count[role];
      }
      face_sums.push_back(std::move(fs));
    }
  }
  std::vector<int> role_max(nroles, 0);
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    int parts = static_cast<int>(groups[gi].size());
    int total = g - chain1.group_deg[gi];
    for (int role : groups[gi]) role_max[role] = total - (parts - 1);
  }

  long long nodes = 0;
  std::vector<char> assigned(nroles, 0);
  RecursiveFamily found;
  bool have = false;

  std::function<void(size_t)> dfs = [&](size_t gi) {
    if (have) return;
    if (++nodes > budget) fail(Errc::BudgetExhausted, "recursive family search budget exhausted");
    if (gi == groups.size()) {
      try {
        Coating h0 = build_coating(chain0.skeleton, chain_coating_function(chain0, values));
        if (digirth(h0.graph) != std::optional<int>(g)) return;
        Coating h1 = build_coating(chain1.skeleton, chain_coating_function(chain1, values));
        if (digirth(h1.graph) != std::optional<int>(g)) return;
        RecursiveFamily family;
        family.tmpl = tmpl;
        family.values = values;
        family.h0 = std::move(h0);
        family.h1 = std::move(h1);
        family.ring0_edges_g0 = chain0.ring0_edges;
        family.ring0_edges_g1 = chain1.ring0_edges;
        if (verify_recursive_digirth(family, g).ok) {
          found = std::move(family);
          have = true;
        }
      } catch (const Error&) {
      }
      return;
    }
    for (const auto& comp : comps[gi]) {
      for (size_t j = 0; j < groups[gi].size(); ++j) {
        values[groups[gi][j]] = comp[j];
        assigned[groups[gi][j]] = 1;
      }
      bool ok = true;
      for (const auto& fs : face_sums) {
        long long sum = fs.bonus;
        for (int role = 0; role < nroles && sum < g; ++role)
          if (fs.role_count[role] > 0)
            sum += static_cast<long long>(fs.role_count[role]) *
                   (assigned[role] ? values[role] : role_max[role]);
        if (sum < g) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(gi + 1);
      if (have) break;
    }
    for (size_t j = 0; j < groups[gi].size(); ++j) assigned[groups[gi][j]] = 0;
  };
  dfs(0);
  if (!have)
    fail(Errc::SearchFailed,
         "no periodic coating function certifies digirth " + std::to_string(g));
  return found;
}

std::pair<ChainSkeleton, Coating> build_recursive_member(const RecursiveFamily& family, int k) {
  ChainSkeleton chain = build_chain_skeleton(family.tmpl, k);
  Coating c = build_coating(chain.skeleton, chain_coating_function(chain, family.values));
  return {std::move(chain), std::move(c)};
}

}  // namespace fvslab
