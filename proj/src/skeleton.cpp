#include "fvslab/skeleton.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fvslab {

Skeleton::Skeleton(std::vector<Edge> edges, std::vector<std::vector<HalfEdge>> rotation,
                   std::optional<std::pair<int, Side>> outer)
    : edges_(std::move(edges)), rot_(std::move(rotation)) {
  const int nn = n(), mm = m();
  rot_index_.assign(2 * mm, -1);
  for (int v = 0; v < nn; ++v) {
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
      HalfEdge h = rot_[v][i];
      require(h >= 0 && h < 2 * mm, Errc::UnknownArc, "bad half-edge in rotation");
      require(he_vertex(h) == v, Errc::DanglingHalfArc,
              "half-edge listed at the wrong vertex " + std::to_string(v));
      require(rot_index_[h] == -1, Errc::DuplicateHalfArc, "half-edge appears twice");
      rot_index_[h] = i;
    }
  }
  for (int h = 0; h < 2 * mm; ++h)
    require(rot_index_[h] != -1, Errc::DanglingHalfArc, "half-edge missing from rotations");

  comp_of_.assign(nn, -1);
  std::vector<int> stack;
  for (int s = 0; s < nn; ++s) {
    if (comp_of_[s] != -1) continue;
    comp_of_[s] = n_comp_;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (HalfEdge h : rot_[v]) {
        int w = he_vertex(he_mate(h));
        if (comp_of_[w] == -1) {
          comp_of_[w] = n_comp_;
          stack.push_back(w);
        }
      }
    }
    ++n_comp_;
  }

  trace_faces();
  if (mm > 0) {
    std::vector<long long> cn(n_comp_, 0), cm(n_comp_, 0), cf(n_comp_, 0);
    for (int v = 0; v < nn; ++v) ++cn[comp_of_[v]];
    for (int e = 0; e < mm; ++e) ++cm[comp_of_[edges_[e].u]];
    for (int w = 0; w < walks(); ++w)
      ++cf[comp_of_[he_vertex(face_darts_[w].front())]];
    for (int c = 0; c < n_comp_; ++c)
      if (cm[c] > 0 && cn[c] - cm[c] + cf[c] != 2)
        fail(Errc::EulerViolation, "skeleton component is not a sphere embedding");
  }
  if (outer) {
    require(outer->first >= 0 && outer->first < mm, Errc::UnknownArc, "outer edge out of range");
    HalfEdge h = outer->second == Side::Left ? he_a(outer->first) : he_b(outer->first);
    outer_face_ = face_of_[h];
  }
  build_corners();
  vertex_labels_.resize(nn);
  edge_labels_.resize(mm);
  for (int v = 0; v < nn; ++v) vertex_labels_[v] = v;
  for (int e = 0; e < mm; ++e) edge_labels_[e] = e;
}

void Skeleton::trace_faces() {
  const int darts = 2 * m();
  face_of_.assign(darts, -1);
  face_darts_.clear();
  auto sigma_next = [&](HalfEdge h) {
    int v = he_vertex(h);
    const auto& r = rot_[v];
    return r[(rot_index_[h] + 1) % r.size()];
  };
  for (int d0 = 0; d0 < darts; ++d0) {
    if (face_of_[d0] != -1) continue;
    int id = static_cast<int>(face_darts_.size());
    face_darts_.emplace_back();
    HalfEdge d = d0;
    do {
      face_of_[d] = id;
      face_darts_[id].push_back(d);
      d = sigma_next(he_mate(d));
    } while (d != d0);
  }
  if (face_darts_.empty()) face_darts_.emplace_back();
}

int Skeleton::f() const {
  if (m() == 0) return 1;
  std::vector<char> seen(n_comp_, 0);
  int arc_components = 0;
  for (int e = 0; e < m(); ++e) {
    int c = comp_of_[edges_[e].u];
    if (!seen[c]) {
      seen[c] = 1;
      ++arc_components;
    }
  }
  return walks() - (arc_components - 1);
}

void Skeleton::build_corners() {
  corners_.clear();
  vertex_corners_.assign(n(), {});
  face_corners_.assign(walks(), {});
  for (int v = 0; v < n(); ++v) {
    if (rot_[v].empty()) {
      vertex_corners_[v].push_back(static_cast<int>(corners_.size()));
      corners_.push_back(Corner{v, -1, -1});
      continue;
    }
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
      Corner c;
      c.vertex = v;
      c.pos = i;
      c.face = face_of_[he_mate(rot_[v][i])];
      vertex_corners_[v].push_back(static_cast<int>(corners_.size()));
      face_corners_[c.face].push_back(static_cast<int>(corners_.size()));
      corners_.push_back(c);
    }
  }
}

int Skeleton::corner_after(int v, int pos) const {
  for (int c : vertex_corners_[v])
    if (corners_[c].pos == pos) return c;
  fail(Errc::Internal, "no corner at position");
}

int Skeleton::max_degree() const {
  int d = 0;
  for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
  return d;
}

bool Skeleton::has_loops() const {
  for (const auto& e : edges_)
    if (e.u == e.v) return true;
  return false;
}

int Skeleton::outer_face() const {
  require(outer_face_.has_value(), Errc::NoOuterFace, "no outer face designated");
  return *outer_face_;
}

void Skeleton::set_labels(std::vector<int> vlab, std::vector<int> elab) {
  require(static_cast<int>(vlab.size()) == n() && static_cast<int>(elab.size()) == m(),
          Errc::Internal, "label vectors sized wrong");
  vertex_labels_ = std::move(vlab);
  edge_labels_ = std::move(elab);
}

namespace {

Skeleton rebuild(const Skeleton& s, const std::vector<int>& vmap, int new_n,
                 const std::vector<int>& keep_edges,
                 const std::vector<std::vector<HalfEdge>>& new_rot_raw,
                 std::optional<std::pair<int, Side>> outer_hint) {
  // keep_edges: old edge ids in new order; new_rot_raw references old half-edges.
  std::vector<int> new_edge(s.m(), -1);
  std::vector<Skeleton::Edge> edges;
  std::vector<int> elab;
  for (int old_e : keep_edges) {
    new_edge[old_e] = static_cast<int>(edges.size());
    edges.push_back({vmap[s.edge(old_e).u], vmap[s.edge(old_e).v]});
    elab.push_back(s.edge_label(old_e));
  }
  std::vector<std::vector<HalfEdge>> rot(new_n);
  for (int v = 0; v < static_cast<int>(new_rot_raw.size()); ++v)
    for (HalfEdge h : new_rot_raw[v]) rot[v].push_back(2 * new_edge[he_edge(h)] + (h & 1));
  std::optional<std::pair<int, Side>> outer;
  if (outer_hint && new_edge[outer_hint->first] != -1)
    outer = {new_edge[outer_hint->first], outer_hint->second};
  Skeleton out(std::move(edges), std::move(rot), outer);
  std::vector<int> vlab(new_n, -1);
  for (int v = 0; v < s.n(); ++v)
    if (vmap[v] != -1 && vlab[vmap[v]] == -1) vlab[vmap[v]] = s.vertex_label(v);
  out.set_labels(std::move(vlab), std::move(elab));
  return out;
}

std::optional<std::pair<int, Side>> outer_anchor(const Skeleton& s, int avoid_edge) {
  if (!s.has_outer_face()) return std::nullopt;
  for (HalfEdge h : s.face_darts(s.outer_face())) {
    if (he_edge(h) == avoid_edge) continue;
    return std::make_pair(he_edge(h), (h & 1) ? Side::Right : Side::Left);
  }
  return std::nullopt;
}

}  // namespace

Skeleton Skeleton::contract_edge(int e) const {
  require(e >= 0 && e < m(), Errc::UnknownArc, "contract_edge");
  int u = edges_[e].u, v = edges_[e].v;
  require(u != v, Errc::Internal, "cannot contract a loop");
  // Merge v's rotation into u's at the position of e (standard planar
  // contraction: splice the mate's neighborhood in place).
  std::vector<int> vmap(n());
  int new_n = 0;
  for (int x = 0; x < n(); ++x) vmap[x] = (x == v) ? -1 : new_n++;
  vmap[v] = vmap[u];

  std::vector<std::vector<HalfEdge>> rot(new_n);
  for (int x = 0; x < n(); ++x) {
    if (x == u || x == v) continue;
    rot[vmap[x]] = rot_[x];
  }
  std::vector<HalfEdge> merged;
  HalfEdge hu = he_vertex(he_a(e)) == u ? he_a(e) : he_b(e);
  HalfEdge hv = he_mate(hu);
  int pu = rot_index_[hu];
  int pv = rot_index_[hv];
  const auto& ru = rot_[u];
  const auto& rv = rot_[v];
  for (int i = 1; i < static_cast<int>(ru.size()); ++i) merged.push_back(ru[(pu + i) % ru.size()]);
  for (int i = 1; i < static_cast<int>(rv.size()); ++i) merged.push_back(rv[(pv + i) % rv.size()]);
  rot[vmap[u]] = merged;

  std::vector<int> keep;
  for (int x = 0; x < m(); ++x)
    if (x != e) keep.push_back(x);
  return rebuild(*this, vmap, new_n, keep, rot, outer_anchor(*this, e));
}

Skeleton Skeleton::delete_edge(int e) const {
  std::vector<int> vmap(n());
  for (int x = 0; x < n(); ++x) vmap[x] = x;
  std::vector<std::vector<HalfEdge>> rot = rot_;
  for (auto& r : rot) std::erase_if(r, [&](HalfEdge h) { return he_edge(h) == e; });
  std::vector<int> keep;
  for (int x = 0; x < m(); ++x)
    if (x != e) keep.push_back(x);
  return rebuild(*this, vmap, n(), keep, rot, outer_anchor(*this, e));
}

Skeleton Skeleton::delete_vertex(int v) const {
  std::vector<int> vmap(n());
  int new_n = 0;
  for (int x = 0; x < n(); ++x) vmap[x] = (x == v) ? -1 : new_n++;
  std::vector<std::vector<HalfEdge>> rot(new_n);
  std::vector<char> dead(m(), 0);
  for (int e = 0; e < m(); ++e)
    if (edges_[e].u == v || edges_[e].v == v) dead[e] = 1;
  for (int x = 0; x < n(); ++x) {
    if (x == v) continue;
    for (HalfEdge h : rot_[x])
      if (!dead[he_edge(h)]) rot[vmap[x]].push_back(h);
  }
  std::vector<int> keep;
  for (int e = 0; e < m(); ++e)
    if (!dead[e]) keep.push_back(e);
  std::optional<std::pair<int, Side>> hint;
  if (has_outer_face()) {
    for (HalfEdge h : face_darts_[*outer_face_])
      if (!dead[he_edge(h)]) {
        hint = std::make_pair(he_edge(h), (h & 1) ? Side::Right : Side::Left);
        break;
      }
  }
  return rebuild(*this, vmap, new_n, keep, rot, hint);
}

Skeleton Skeleton::split_at_loop(int loop_edge) const {
  int u = edges_[loop_edge].u;
  require(u == edges_[loop_edge].v, Errc::Internal, "split_at_loop needs a loop");
  // Half-edges strictly between the two loop darts go to the new vertex
  // (interior side); the rest stay.
  const auto& r = rot_[u];
  int p1 = rot_index_[he_a(loop_edge)], p2 = rot_index_[he_b(loop_edge)];
  if (p1 > p2) std::swap(p1, p2);
  std::vector<HalfEdge> inside, outside;
  for (int i = 0; i < static_cast<int>(r.size()); ++i) {
    if (i == p1 || i == p2) continue;
    (i > p1 && i < p2 ? inside : outside).push_back(r[i]);
  }
  std::vector<int> vmap(n());
  for (int x = 0; x < n(); ++x) vmap[x] = x;
  int new_vertex = n();
  std::vector<std::vector<HalfEdge>> rot = rot_;
  rot[u] = outside;
  rot.push_back(inside);
  // Edges caught inside move their endpoint to the new vertex.
  std::vector<int> keep;
  for (int e = 0; e < m(); ++e)
    if (e != loop_edge) keep.push_back(e);
  std::vector<Edge> edges;
  std::vector<int> elab;
  std::vector<int> new_edge(m(), -1);
  auto endpoint_moves = [&](HalfEdge h) {
    return he_vertex(h) == u &&
           std::find(inside.begin(), inside.end(), h) != inside.end();
  };
  for (int e : keep) {
    new_edge[e] = static_cast<int>(edges.size());
    Edge ne{edges_[e].u, edges_[e].v};
    if (endpoint_moves(he_a(e))) ne.u = new_vertex;
    if (endpoint_moves(he_b(e))) ne.v = new_vertex;
    edges.push_back(ne);
    elab.push_back(edge_labels_[e]);
  }
  std::vector<std::vector<HalfEdge>> rot2(n() + 1);
  for (int x = 0; x <= n(); ++x)
    for (HalfEdge h : (x < static_cast<int>(rot.size()) ? rot[x] : std::vector<HalfEdge>{}))
      if (he_edge(h) != loop_edge) rot2[x].push_back(2 * new_edge[he_edge(h)] + (h & 1));
  std::optional<std::pair<int, Side>> hint = outer_anchor(*this, loop_edge);
  std::optional<std::pair<int, Side>> outer;
  if (hint && new_edge[hint->first] != -1) outer = {new_edge[hint->first], hint->second};
  Skeleton out(std::move(edges), std::move(rot2), outer);
  std::vector<int> vlab = vertex_labels_;
  int next = 0;
  for (int x : vlab) next = std::max(next, x + 1);
  vlab.push_back(next);
  out.set_labels(std::move(vlab), std::move(elab));
  return out;
}

Skeleton skeleton_of(const PlaneDigraph& g) {
  std::vector<Skeleton::Edge> edges(g.m());
  for (int a = 0; a < g.m(); ++a) edges[a] = {g.tail(a), g.head(a)};
  std::vector<std::vector<HalfEdge>> rot(g.n());
  for (int v = 0; v < g.n(); ++v)
    for (DartId d : g.rotation(v)) rot[v].push_back(d);  // same encoding
  std::optional<std::pair<int, Side>> outer;
  if (g.has_outer_face()) {
    DartId d = g.face_darts(g.outer_face()).front();
    outer = {dart_arc(d), dart_at_head(d) ? Side::Right : Side::Left};
  }
  Skeleton s(std::move(edges), std::move(rot), outer);
  std::vector<int> vlab(g.n()), elab(g.m());
  for (int v = 0; v < g.n(); ++v) vlab[v] = g.vertex_label(v);
  for (int a = 0; a < g.m(); ++a) elab[a] = g.arc_label(a);
  s.set_labels(std::move(vlab), std::move(elab));
  return s;
}

// ---------------------------------------------------------------------------
// PSK format

Skeleton parse_psk(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool header = false;
  std::vector<std::array<int, 3>> raw_edges;  // label, u, v
  std::map<int, int> edge_index, vertex_index;
  std::vector<std::pair<int, std::vector<std::string>>> raw_rot;
  std::optional<std::pair<int, Side>> outer_raw;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string kw;
    if (!(ss >> kw) || kw[0] == '#') continue;
    if (kw == "psk") {
      int version;
      if (!(ss >> version) || version != 1)
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'psk 1'");
      header = true;
    } else if (kw == "e") {
      int id, u, v;
      if (!(ss >> id >> u >> v))
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'e <id> <u> <v>'");
      if (edge_index.count(id))
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": duplicate edge id");
      edge_index[id] = static_cast<int>(raw_edges.size());
      raw_edges.push_back({id, u, v});
    } else if (kw == "v") {
      int id;
      std::string colon;
      if (!(ss >> id >> colon) || colon != ":")
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'v <id> : ...'");
      if (vertex_index.count(id))
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": duplicate vertex id");
      vertex_index[id] = static_cast<int>(raw_rot.size());
      std::vector<std::string> toks;
      std::string t;
      while (ss >> t) toks.push_back(t);
      raw_rot.emplace_back(id, std::move(toks));
    } else if (kw == "outer") {
      int id;
      std::string side;
      if (!(ss >> id >> side) || (side != "L" && side != "R"))
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'outer <eid> <L|R>'");
      outer_raw = {id, side == "L" ? Side::Left : Side::Right};
    } else {
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": unknown directive '" + kw + "'");
    }
  }
  require(header, Errc::ParseError, "missing 'psk 1' header");
  std::vector<Skeleton::Edge> edges(raw_edges.size());
  for (size_t i = 0; i < raw_edges.size(); ++i) {
    auto u = vertex_index.find(raw_edges[i][1]);
    auto v = vertex_index.find(raw_edges[i][2]);
    require(u != vertex_index.end() && v != vertex_index.end(), Errc::ParseError,
            "edge references undeclared vertex");
    edges[i] = {u->second, v->second};
  }
  std::vector<std::vector<HalfEdge>> rot(raw_rot.size());
  for (size_t v = 0; v < raw_rot.size(); ++v) {
    for (const auto& tok : raw_rot[v].second) {
      if (tok.size() < 2 || (tok.back() != 'a' && tok.back() != 'b'))
        fail(Errc::ParseError, "bad half-edge token '" + tok + "'");
      int id;
      try {
        id = std::stoi(tok.substr(0, tok.size() - 1));
      } catch (const std::exception&) {
        fail(Errc::ParseError, "bad half-edge token '" + tok + "'");
      }
      auto it = edge_index.find(id);
      require(it != edge_index.end(), Errc::ParseError, "token references undeclared edge");
      rot[v].push_back(tok.back() == 'a' ? he_a(it->second) : he_b(it->second));
    }
  }
  std::optional<std::pair<int, Side>> outer;
  if (outer_raw) {
    auto it = edge_index.find(outer_raw->first);
    require(it != edge_index.end(), Errc::ParseError, "outer references undeclared edge");
    outer = {it->second, outer_raw->second};
  }
  Skeleton s(std::move(edges), std::move(rot), outer);
  std::vector<int> vlab(raw_rot.size()), elab(raw_edges.size());
  for (auto& [label, idx] : vertex_index) vlab[idx] = label;
  for (auto& [label, idx] : edge_index) elab[idx] = label;
  s.set_labels(std::move(vlab), std::move(elab));
  return s;
}

Skeleton parse_psk_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_psk(ss);
}

Skeleton load_psk(const std::string& path) {
  if (path == "-") return parse_psk(std::cin);
  std::ifstream in(path);
  require(in.good(), Errc::ParseError, "cannot open " + path);
  return parse_psk(in);
}

std::string print_psk(const Skeleton& s) {
  std::ostringstream out;
  out << "psk 1\n";
  for (int e = 0; e < s.m(); ++e)
    out << "e " << s.edge_label(e) << " " << s.vertex_label(s.edge(e).u) << " "
        << s.vertex_label(s.edge(e).v) << "\n";
  for (int v = 0; v < s.n(); ++v) {
    out << "v " << s.vertex_label(v) << " :";
    for (HalfEdge h : s.rotation(v))
      out << " " << s.edge_label(he_edge(h)) << ((h & 1) ? 'b' : 'a');
    out << "\n";
  }
  if (s.has_outer_face()) {
    HalfEdge h = s.face_darts(s.outer_face()).front();
    out << "outer " << s.edge_label(he_edge(h)) << " " << ((h & 1) ? 'R' : 'L') << "\n";
  }
  return out.str();
}

std::string corner_token(const Skeleton& s, int corner) {
  const auto& c = s.corners()[corner];
  if (c.pos == -1) return "-";
  HalfEdge h = s.rotation(c.vertex)[c.pos];
  return std::to_string(s.edge_label(he_edge(h))) + ((h & 1) ? 'b' : 'a');
}

int corner_by_token(const Skeleton& s, int vertex_label, const std::string& token) {
  int v = -1;
  for (int x = 0; x < s.n(); ++x)
    if (s.vertex_label(x) == vertex_label) v = x;
  require(v != -1, Errc::UnknownVertex, "vertex label " + std::to_string(vertex_label));
  for (int c : s.corners_of_vertex(v))
    if (corner_token(s, c) == token) return c;
  fail(Errc::ParseError, "no corner '" + token + "' at vertex " + std::to_string(vertex_label));
}

}  // namespace fvslab
