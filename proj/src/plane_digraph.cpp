#include "fvslab/plane_digraph.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fvslab {

PlaneDigraph::PlaneDigraph(std::vector<Arc> arcs, std::vector<std::vector<DartId>> rotation,
                           std::optional<std::pair<int, Side>> outer)
    : arcs_(std::move(arcs)), rot_(std::move(rotation)) {
  const int nn = n();
  const int mm = m();
  rot_index_.assign(2 * mm, -1);
  for (int v = 0; v < nn; ++v) {
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
      DartId d = rot_[v][i];
      require(d >= 0 && d < 2 * mm, Errc::UnknownArc,
              "rotation of vertex " + std::to_string(v) + " references dart " + std::to_string(d));
      require(vertex_of(d) == v, Errc::DanglingHalfArc,
              "half-arc " + std::to_string(dart_arc(d)) + (dart_at_head(d) ? "-" : "+") +
                  " listed at vertex " + std::to_string(v) + " but belongs to vertex " +
                  std::to_string(vertex_of(d)));
      require(rot_index_[d] == -1, Errc::DuplicateHalfArc,
              "half-arc " + std::to_string(dart_arc(d)) + (dart_at_head(d) ? "-" : "+") +
                  " appears twice");
      rot_index_[d] = i;
    }
  }
  for (int d = 0; d < 2 * mm; ++d)
    require(rot_index_[d] != -1, Errc::DanglingHalfArc,
            "half-arc " + std::to_string(dart_arc(d)) + (dart_at_head(d) ? "-" : "+") +
                " missing from every rotation");
  for (int a = 0; a < mm; ++a)
    require(arcs_[a].tail >= 0 && arcs_[a].tail < nn && arcs_[a].head >= 0 && arcs_[a].head < nn,
            Errc::UnknownVertex, "arc " + std::to_string(a) + " endpoint out of range");

  // Weak components.
  comp_of_.assign(nn, -1);
  n_comp_ = 0;
  std::vector<int> stack;
  for (int s = 0; s < nn; ++s) {
    if (comp_of_[s] != -1) continue;
    comp_of_[s] = n_comp_;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (DartId d : rot_[v]) {
        int w = vertex_of(dart_reverse(d));
        if (comp_of_[w] == -1) {
          comp_of_[w] = n_comp_;
          stack.push_back(w);
        }
      }
    }
    ++n_comp_;
  }

  trace_faces();
  check_euler();

  if (outer) {
    require(outer->first >= 0 && outer->first < mm, Errc::UnknownArc, "outer arc out of range");
    outer_face_ = outer->second == Side::Left ? face_left(outer->first) : face_right(outer->first);
  }

  vertex_labels_.resize(nn);
  arc_labels_.resize(mm);
  for (int v = 0; v < nn; ++v) vertex_labels_[v] = v;
  for (int a = 0; a < mm; ++a) arc_labels_[a] = a;
}

DartId PlaneDigraph::sigma_next(DartId d) const {
  int v = vertex_of(d);
  int i = rot_index_[d];
  const auto& r = rot_[v];
  return r[(i + 1) % r.size()];
}

DartId PlaneDigraph::sigma_prev(DartId d) const {
  int v = vertex_of(d);
  int i = rot_index_[d];
  const auto& r = rot_[v];
  return r[(i + r.size() - 1) % r.size()];
}

void PlaneDigraph::trace_faces() {
  const int darts = 2 * m();
  face_of_.assign(darts, -1);
  face_darts_.clear();
  for (int d0 = 0; d0 < darts; ++d0) {
    if (face_of_[d0] != -1) continue;
    int id = static_cast<int>(face_darts_.size());
    face_darts_.emplace_back();
    DartId d = d0;
    do {
      face_of_[d] = id;
      face_darts_[id].push_back(d);
      d = phi_next(d);
    } while (d != d0);
  }
  if (face_darts_.empty()) face_darts_.emplace_back();  // arcless graph: one face
}

int PlaneDigraph::f() const {
  if (m() == 0) return 1;
  int arc_components = 0;
  std::vector<char> seen(n_comp_, 0);
  for (int a = 0; a < m(); ++a) {
    int c = comp_of_[arcs_[a].tail];
    if (!seen[c]) {
      seen[c] = 1;
      ++arc_components;
    }
  }
  return walks() - (arc_components - 1);
}

void PlaneDigraph::check_euler() const {
  // Each component carrying arcs must be a sphere map: n_i - m_i + walks_i = 2.
  if (m() == 0) return;
  std::vector<long long> nn(n_comp_, 0), mm(n_comp_, 0), ff(n_comp_, 0);
  for (int v = 0; v < n(); ++v) ++nn[comp_of_[v]];
  for (int a = 0; a < m(); ++a) ++mm[comp_of_[arcs_[a].tail]];
  for (int w = 0; w < walks(); ++w)
    ++ff[comp_of_[vertex_of(face_darts_[w].front())]];
  for (int c = 0; c < n_comp_; ++c) {
    if (mm[c] == 0) continue;
    if (nn[c] - mm[c] + ff[c] != 2)
      fail(Errc::EulerViolation,
           "component with n=" + std::to_string(nn[c]) + " m=" + std::to_string(mm[c]) + " f=" +
               std::to_string(ff[c]) + " is not a sphere embedding (n-m+f=2 fails)");
  }
}

int PlaneDigraph::outer_face() const {
  require(outer_face_.has_value(), Errc::NoOuterFace, "no outer face designated");
  return *outer_face_;
}

void PlaneDigraph::set_labels(std::vector<int> vlab, std::vector<int> alab) {
  require(static_cast<int>(vlab.size()) == n() && static_cast<int>(alab.size()) == m(),
          Errc::Internal, "label vectors sized wrong");
  vertex_labels_ = std::move(vlab);
  arc_labels_ = std::move(alab);
}

int PlaneDigraph::vertex_by_label(int label) const {
  for (int v = 0; v < n(); ++v)
    if (vertex_labels_[v] == label) return v;
  fail(Errc::UnknownVertex, "no vertex labeled " + std::to_string(label));
}

bool PlaneDigraph::is_simple() const {
  std::map<std::pair<int, int>, int> seen;
  for (int a = 0; a < m(); ++a) {
    if (arcs_[a].tail == arcs_[a].head) return false;
    if (++seen[{arcs_[a].tail, arcs_[a].head}] > 1) return false;
  }
  return true;
}

PlaneDigraph PlaneDigraph::subdivide_arc(int a, int t) const {
  require(a >= 0 && a < m(), Errc::UnknownArc, "subdivide_arc: arc " + std::to_string(a));
  if (t == 0) return *this;
  std::vector<Arc> arcs = arcs_;
  std::vector<std::vector<DartId>> rot = rot_;
  int u = arcs[a].tail, w = arcs[a].head;
  // Path u -> x1 -> ... -> xt -> w. Arc a becomes u -> x1; new arcs continue.
  std::vector<int> path_arcs{a};
  for (int i = 0; i < t; ++i) {
    arcs.push_back(Arc{});
    path_arcs.push_back(static_cast<int>(arcs.size()) - 1);
  }
  int first_new_vertex = n();
  for (int i = 0; i <= t; ++i) {
    arcs[path_arcs[i]].tail = i == 0 ? u : first_new_vertex + i - 1;
    arcs[path_arcs[i]].head = i == t ? w : first_new_vertex + i;
  }
  for (int i = 0; i < t; ++i)
    rot.push_back({head_dart(path_arcs[i]), tail_dart(path_arcs[i + 1])});
  // Tail dart of a stays in u's rotation; w's slot now holds the last arc's head.
  for (auto& d : rot[w])
    if (d == head_dart(a)) d = head_dart(path_arcs[t]);

  std::optional<std::pair<int, Side>> outer;
  if (outer_face_) {
    // Re-anchor on an arc of the old outer face; half-arc sides survive for
    // any arc other than a, and for a itself the tail dart's face is unchanged.
    for (DartId d : face_darts_[*outer_face_]) {
      if (dart_arc(d) == a && dart_at_head(d)) continue;
      outer = {dart_arc(d), dart_at_head(d) ? Side::Right : Side::Left};
      break;
    }
  }
  PlaneDigraph out(std::move(arcs), std::move(rot), outer);
  std::vector<int> vlab = vertex_labels_, alab = arc_labels_;
  int next_vlab = 0, next_alab = 0;
  for (int x : vlab) next_vlab = std::max(next_vlab, x + 1);
  for (int x : alab) next_alab = std::max(next_alab, x + 1);
  for (int i = 0; i < t; ++i) vlab.push_back(next_vlab + i);
  for (int i = 0; i < t; ++i) alab.push_back(next_alab + i);
  out.set_labels(std::move(vlab), std::move(alab));
  return out;
}

InducedSubgraph PlaneDigraph::induced_by_arcs(const std::vector<char>& arc_used) const {
  std::vector<int> new_vertex(n(), -1), new_arc(m(), -1);
  std::vector<int> vertex_map, arc_map;
  for (int a = 0; a < m(); ++a) {
    if (!arc_used[a]) continue;
    for (int v : {arcs_[a].tail, arcs_[a].head}) {
      if (new_vertex[v] == -1) {
        new_vertex[v] = static_cast<int>(vertex_map.size());
        vertex_map.push_back(v);
      }
    }
    new_arc[a] = static_cast<int>(arc_map.size());
    arc_map.push_back(a);
  }
  std::vector<Arc> arcs(arc_map.size());
  for (int a = 0; a < m(); ++a)
    if (new_arc[a] != -1) arcs[new_arc[a]] = Arc{new_vertex[arcs_[a].tail], new_vertex[arcs_[a].head]};
  std::vector<std::vector<DartId>> rot(vertex_map.size());
  for (int v = 0; v < n(); ++v) {
    if (new_vertex[v] == -1) continue;
    for (DartId d : rot_[v]) {
      int a = dart_arc(d);
      if (new_arc[a] != -1) rot[new_vertex[v]].push_back(2 * new_arc[a] + (d & 1));
    }
  }
  PlaneDigraph g(std::move(arcs), std::move(rot));
  std::vector<int> vlab(vertex_map.size()), alab(arc_map.size());
  for (size_t i = 0; i < vertex_map.size(); ++i) vlab[i] = vertex_labels_[vertex_map[i]];
  for (size_t i = 0; i < arc_map.size(); ++i) alab[i] = arc_labels_[arc_map[i]];
  g.set_labels(std::move(vlab), std::move(alab));
  return InducedSubgraph{std::move(g), std::move(vertex_map), std::move(arc_map)};
}

PlaneDigraph PlaneDigraph::delete_vertices(const std::vector<char>& kill) const {
  std::vector<int> new_vertex(n(), -1), new_arc(m(), -1);
  int nv = 0;
  for (int v = 0; v < n(); ++v)
    if (!kill[v]) new_vertex[v] = nv++;
  std::vector<Arc> arcs;
  std::vector<int> alab;
  for (int a = 0; a < m(); ++a) {
    if (kill[arcs_[a].tail] || kill[arcs_[a].head]) continue;
    new_arc[a] = static_cast<int>(arcs.size());
    arcs.push_back(Arc{new_vertex[arcs_[a].tail], new_vertex[arcs_[a].head]});
    alab.push_back(arc_labels_[a]);
  }
  std::vector<std::vector<DartId>> rot(nv);
  std::vector<int> vlab(nv);
  for (int v = 0; v < n(); ++v) {
    if (kill[v]) continue;
    vlab[new_vertex[v]] = vertex_labels_[v];
    for (DartId d : rot_[v]) {
      int a = dart_arc(d);
      if (new_arc[a] != -1) rot[new_vertex[v]].push_back(2 * new_arc[a] + (d & 1));
    }
  }
  std::optional<std::pair<int, Side>> outer;
  if (outer_face_) {
    for (DartId d : face_darts_[*outer_face_]) {
      int a = dart_arc(d);
      if (new_arc[a] != -1) {
        outer = {new_arc[a], dart_at_head(d) ? Side::Right : Side::Left};
        break;
      }
    }
  }
  PlaneDigraph g(std::move(arcs), std::move(rot), outer);
  g.set_labels(std::move(vlab), std::move(alab));
  return g;
}

// ---------------------------------------------------------------------------
// PDG format

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

PlaneDigraph parse_pdg(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool header = false;
  struct RawArc {
    int label, tail_label, head_label;
  };
  std::vector<RawArc> raw_arcs;
  std::map<int, int> arc_index;             // label -> dense
  std::vector<std::pair<int, std::vector<std::string>>> raw_rot;  // vertex label -> tokens
  std::map<int, int> vertex_index;
  std::optional<std::pair<int, Side>> outer_raw;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string kw;
    if (!(ss >> kw) || kw[0] == '#') continue;
    if (kw == "pdg") {
      int version = 0;
      if (!(ss >> version) || version != 1) parse_fail(lineno, "expected 'pdg 1'");
      header = true;
    } else if (kw == "a") {
      int id, t, h;
      if (!(ss >> id >> t >> h)) parse_fail(lineno, "expected 'a <id> <tail> <head>'");
      if (arc_index.count(id)) parse_fail(lineno, "duplicate arc id " + std::to_string(id));
      arc_index[id] = static_cast<int>(raw_arcs.size());
      raw_arcs.push_back({id, t, h});
    } else if (kw == "v") {
      int id;
      std::string colon;
      if (!(ss >> id >> colon) || colon != ":") parse_fail(lineno, "expected 'v <id> : <tok>...'");
      if (vertex_index.count(id)) parse_fail(lineno, "duplicate vertex id " + std::to_string(id));
      vertex_index[id] = static_cast<int>(raw_rot.size());
      std::vector<std::string> toks;
      std::string t;
      while (ss >> t) toks.push_back(t);
      raw_rot.emplace_back(id, std::move(toks));
    } else if (kw == "outer") {
      int id;
      std::string side;
      if (!(ss >> id >> side) || (side != "L" && side != "R"))
        parse_fail(lineno, "expected 'outer <arcid> <L|R>'");
      outer_raw = {id, side == "L" ? Side::Left : Side::Right};
    } else {
      parse_fail(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (!header) fail(Errc::ParseError, "missing 'pdg 1' header");

  std::vector<PlaneDigraph::Arc> arcs(raw_arcs.size());
  for (size_t i = 0; i < raw_arcs.size(); ++i) {
    auto t = vertex_index.find(raw_arcs[i].tail_label);
    auto h = vertex_index.find(raw_arcs[i].head_label);
    if (t == vertex_index.end() || h == vertex_index.end())
      fail(Errc::ParseError, "arc " + std::to_string(raw_arcs[i].label) + " references undeclared vertex");
    arcs[i] = {t->second, h->second};
  }
  std::vector<std::vector<DartId>> rot(raw_rot.size());
  for (size_t v = 0; v < raw_rot.size(); ++v) {
    for (const std::string& tok : raw_rot[v].second) {
      if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
        fail(Errc::ParseError, "bad half-arc token '" + tok + "'");
      int id;
      try {
        id = std::stoi(tok.substr(0, tok.size() - 1));
      } catch (const std::exception&) {
        fail(Errc::ParseError, "bad half-arc token '" + tok + "'");
      }
      auto it = arc_index.find(id);
      if (it == arc_index.end()) fail(Errc::ParseError, "token '" + tok + "' references undeclared arc");
      rot[v].push_back(tok.back() == '+' ? tail_dart(it->second) : head_dart(it->second));
    }
  }
  std::optional<std::pair<int, Side>> outer;
  if (outer_raw) {
    auto it = arc_index.find(outer_raw->first);
    if (it == arc_index.end()) fail(Errc::ParseError, "outer references undeclared arc");
    outer = {it->second, outer_raw->second};
  }
  PlaneDigraph g(std::move(arcs), std::move(rot), outer);
  std::vector<int> vlab(raw_rot.size()), alab(raw_arcs.size());
  for (auto& [label, idx] : vertex_index) vlab[idx] = label;
  for (auto& [label, idx] : arc_index) alab[idx] = label;
  g.set_labels(std::move(vlab), std::move(alab));
  return g;
}

PlaneDigraph parse_pdg_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_pdg(ss);
}

PlaneDigraph load_pdg(const std::string& path) {
  if (path == "-") return parse_pdg(std::cin);
  std::ifstream in(path);
  require(in.good(), Errc::ParseError, "cannot open " + path);
  return parse_pdg(in);
}

std::string print_pdg(const PlaneDigraph& g) {
  std::ostringstream out;
  out << "pdg 1\n";
  for (int a = 0; a < g.m(); ++a)
    out << "a " << g.arc_label(a) << " " << g.vertex_label(g.tail(a)) << " "
        << g.vertex_label(g.head(a)) << "\n";
  for (int v = 0; v < g.n(); ++v) {
    out << "v " << g.vertex_label(v) << " :";
    for (DartId d : g.rotation(v))
      out << " " << g.arc_label(dart_arc(d)) << (dart_at_head(d) ? '-' : '+');
    out << "\n";
  }
  if (g.has_outer_face()) {
    int face = g.outer_face();
    DartId d = g.face_darts(face).front();
    out << "outer " << g.arc_label(dart_arc(d)) << " " << (dart_at_head(d) ? 'R' : 'L') << "\n";
  }
  return out.str();
}

bool structurally_equal(const PlaneDigraph& a, const PlaneDigraph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  for (int i = 0; i < a.m(); ++i)
    if (a.tail(i) != b.tail(i) || a.head(i) != b.head(i) || a.arc_label(i) != b.arc_label(i))
      return false;
  for (int v = 0; v < a.n(); ++v) {
    if (a.vertex_label(v) != b.vertex_label(v)) return false;
    const auto &ra = a.rotation(v), &rb = b.rotation(v);
    if (ra.size() != rb.size()) return false;
    if (ra.empty()) continue;
    // Same cyclic order.
    auto it = std::find(rb.begin(), rb.end(), ra[0]);
    if (it == rb.end()) return false;
    size_t off = it - rb.begin();
    for (size_t i = 0; i < ra.size(); ++i)
      if (ra[i] != rb[(off + i) % rb.size()]) return false;
  }
  if (a.has_outer_face() != b.has_outer_face()) return false;
  if (a.has_outer_face()) {
    // Compare by membership of a common dart.
    DartId d = a.face_darts(a.outer_face()).front();
    if (b.face_of(d) != b.outer_face()) return false;
  }
  return true;
}

}  // namespace fvslab
