#include "tricurv/domain.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_set>

namespace tricurv {

namespace {

EdgeC norm_edge(Coord a, Coord b) { return b < a ? EdgeC{b, a} : EdgeC{a, b}; }

bool edge_less(const EdgeC& a, const EdgeC& b) {
  if (!(a.first == b.first)) return a.first < b.first;
  return a.second < b.second;
}

std::string coord_text(Coord p) {
  return "(" + std::to_string(p.k) + "," + std::to_string(p.l) + ")";
}

}  // namespace

void LatticeSubgraph::finish_construction() {
  index_.clear();
  index_.reserve(verts_.size());
  for (std::size_t i = 0; i < verts_.size(); ++i) index_.emplace(verts_[i], static_cast<int>(i));
  adj_.assign(verts_.size(), {});
  for (const auto& [a, b] : edges_) {
    adj_[index_.at(a)].push_back(index_.at(b));
    adj_[index_.at(b)].push_back(index_.at(a));
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

LatticeSubgraph LatticeSubgraph::induced(const Background& bg, std::vector<Coord> vertices) {
  LatticeSubgraph g(bg);
  for (Coord& p : vertices) p = bg.canonical(p);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  g.verts_ = std::move(vertices);
  std::unordered_set<Coord, CoordHash> present(g.verts_.begin(), g.verts_.end());
  for (Coord p : g.verts_) {
    for (Coord q : bg.neighbors(p)) {
      if (p < q && present.count(q)) g.edges_.push_back({p, q});
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end(), edge_less);
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.finish_construction();
  return g;
}

LatticeSubgraph LatticeSubgraph::with_edges(const Background& bg, std::vector<Coord> vertices,
                                            std::vector<EdgeC> edges) {
  LatticeSubgraph g(bg);
  for (Coord& p : vertices) p = bg.canonical(p);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  g.verts_ = std::move(vertices);
  std::unordered_set<Coord, CoordHash> present(g.verts_.begin(), g.verts_.end());
  for (EdgeC& e : edges) {
    Coord a = bg.canonical(e.first);
    Coord b = bg.canonical(e.second);
    if (!present.count(a) || !present.count(b))
      throw std::invalid_argument("edge endpoint " + coord_text(!present.count(a) ? a : b) +
                                  " is not a listed vertex");
    if (bg.x_distance(a, b) != 1)
      throw std::invalid_argument("edge " + coord_text(a) + "-" + coord_text(b) +
                                  " does not join points at distance 1");
    e = norm_edge(a, b);
  }
  std::sort(edges.begin(), edges.end(), edge_less);
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  g.edges_ = std::move(edges);
  g.finish_construction();
  return g;
}

int LatticeSubgraph::index_of(Coord p) const {
  auto it = index_.find(bg_.canonical(p));
  return it == index_.end() ? -1 : it->second;
}

bool LatticeSubgraph::has_edge(Coord a, Coord b) const {
  int i = index_of(a);
  int j = index_of(b);
  if (i < 0 || j < 0) return false;
  return std::binary_search(adj_[i].begin(), adj_[i].end(), j);
}

std::vector<Coord> LatticeSubgraph::graph_neighbors(Coord p) const {
  int i = index_of(p);
  if (i < 0) throw std::invalid_argument("point " + coord_text(p) + " is not a vertex");
  std::vector<Coord> out;
  out.reserve(adj_[i].size());
  for (int j : adj_[i]) out.push_back(verts_[j]);
  return out;
}

bool LatticeSubgraph::edges_are_induced() const {
  // Edges can only join unit-distance vertex pairs, so induced-ness is a
  // matter of nothing missing.
  for (Coord p : verts_) {
    for (Coord q : bg_.neighbors(p)) {
      if (p < q && index_.count(q) && !has_edge(p, q)) return false;
    }
  }
  return true;
}

Graph LatticeSubgraph::to_graph() const {
  Graph g(vertex_count());
  for (const auto& [a, b] : edges_) g.add_edge(index_.at(a), index_.at(b));
  return g;
}

namespace {

bool is_interior_point(const LatticeSubgraph& g, Coord p) {
  const Background& bg = g.background();
  std::array<Coord, 6> hex = bg.neighbors(p);
  for (Coord q : hex) {
    if (!g.contains(q) || !g.has_edge(p, q)) return false;
  }
  for (std::size_t i = 0; i < 6; ++i) {
    if (!g.has_edge(hex[i], hex[(i + 1) % 6])) return false;
  }
  return true;
}

}  // namespace

PointClass classify_point(const LatticeSubgraph& g, Coord p) {
  if (!g.contains(p)) throw std::invalid_argument("point " + coord_text(p) + " is not a vertex");
  if (is_interior_point(g, p)) return PointClass::Interior;
  for (Coord q : g.graph_neighbors(p)) {
    if (is_interior_point(g, q)) return PointClass::Boundary;
  }
  return PointClass::Other;
}

std::vector<Coord> interior_set(const LatticeSubgraph& g) {
  std::vector<Coord> out;
  for (Coord p : g.vertices()) {
    if (is_interior_point(g, p)) out.push_back(p);
  }
  return out;
}

std::vector<Coord> boundary_set(const LatticeSubgraph& g) {
  std::vector<Coord> out;
  for (Coord p : g.vertices()) {
    if (classify_point(g, p) == PointClass::Boundary) out.push_back(p);
  }
  return out;
}

LatticeSubgraph reconstruct_from_interior(const Background& bg,
                                          const std::vector<Coord>& interior) {
  std::vector<Coord> verts;
  verts.reserve(interior.size() * 7);
  for (Coord p : interior) {
    verts.push_back(bg.canonical(p));
    for (Coord q : bg.neighbors(p)) verts.push_back(q);
  }
  return LatticeSubgraph::induced(bg, std::move(verts));
}

namespace {

// The unit sphere of p as a tiny standalone graph, from an arbitrary
// membership predicate. Membership of p itself is not consulted.
template <typename Member>
Graph local_sphere_graph(const Background& bg, Coord p, Member in) {
  std::array<Coord, 6> hex = bg.neighbors(p);
  std::array<bool, 6> present;
  std::array<int, 6> id;
  Graph s;
  for (std::size_t i = 0; i < 6; ++i) {
    present[i] = in(hex[i]);
    id[i] = present[i] ? s.add_vertex() : -1;
  }
  for (std::size_t i = 0; i < 6; ++i) {
    std::size_t j = (i + 1) % 6;
    if (present[i] && present[j] && !s.has_edge(id[i], id[j])) s.add_edge(id[i], id[j]);
  }
  return s;
}

}  // namespace

Dimension point_dimension(const LatticeSubgraph& g, Coord p) {
  int i = g.index_of(p);
  if (i < 0) throw std::invalid_argument("point " + coord_text(p) + " is not a vertex");
  // The unit sphere within g, honoring the explicit edge set.
  std::vector<Coord> nbrs = g.graph_neighbors(p);
  Graph s(static_cast<int>(nbrs.size()));
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
      if (g.has_edge(nbrs[a], nbrs[b])) s.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  }
  Dimension d = graph_dimension(s);
  if (!d.defined()) return Dimension::undefined();
  return Dimension(1 + d.value());
}

DomainReport check_domain(const LatticeSubgraph& g) {
  const Background& bg = g.background();
  DomainReport r;

  std::vector<char> interior_flag(g.vertex_count(), 0);
  for (int i = 0; i < g.vertex_count(); ++i) {
    interior_flag[i] = is_interior_point(g, g.vertices()[i]);
    if (interior_flag[i]) r.interior.push_back(g.vertices()[i]);
  }
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (interior_flag[i]) continue;
    Coord p = g.vertices()[i];
    bool touches_interior = false;
    for (Coord q : g.graph_neighbors(p)) {
      if (interior_flag[g.index_of(q)]) {
        touches_interior = true;
        break;
      }
    }
    if (touches_interior) {
      r.boundary.push_back(p);
    } else if (r.cond_ii) {
      r.cond_ii = false;
      r.witness_ii = p;
    }
  }

  for (Coord p : g.vertices()) {
    if (point_dimension(g, p) != Dimension(2)) {
      r.cond_i = false;
      r.witness_i = p;
      break;
    }
  }

  if (!r.boundary.empty()) {
    std::vector<int> bidx;
    for (Coord p : r.boundary) bidx.push_back(g.index_of(p));
    Graph b = g.to_graph().induced(bidx);
    for (int i = 0; i < b.vertex_count(); ++i) {
      if (point_dimension(b, i) != Dimension(1)) {
        r.cond_iii = false;
        r.witness_iii = r.boundary[i];
        break;
      }
    }
  }

  for (Coord p : g.vertices()) {
    if (!r.cond_iv) break;
    for (Coord q : bg.neighbors(p)) {
      if (p < q && g.contains(q) && !g.has_edge(p, q)) {
        r.cond_iv = false;
        r.witness_iv = EdgeC{p, q};
        break;
      }
    }
  }

  for (Coord b : r.boundary) {
    if (!r.cond_v) break;
    std::vector<Coord> ins;
    for (Coord q : g.graph_neighbors(b)) {
      if (interior_flag[g.index_of(q)]) ins.push_back(q);
    }
    for (std::size_t a = 0; a < ins.size() && r.cond_v; ++a) {
      for (std::size_t c = a + 1; c < ins.size(); ++c) {
        Coord p = ins[a], q = ins[c];
        if (bg.x_distance(p, q) == 1) continue;
        bool mediated = false;
        for (Coord m : bg.neighbors(p)) {
          if (bg.x_distance(m, q) != 1) continue;
          int mi = g.index_of(m);
          if (mi >= 0 && interior_flag[mi] && g.has_edge(m, p) && g.has_edge(m, q)) {
            mediated = true;
            break;
          }
        }
        if (!mediated) {
          r.cond_v = false;
          r.witness_v = EdgeC{p, q};
          break;
        }
      }
    }
  }

  r.is_domain = r.cond_i && r.cond_ii && r.cond_iii && r.cond_iv && r.cond_v;
  r.is_smooth = r.is_domain && complement_domain_check(g);
  return r;
}

bool complement_domain_check(const LatticeSubgraph& g) {
  const Background& bg = g.background();
  std::unordered_set<Coord, CoordHash> interior;
  for (Coord p : interior_set(g)) interior.insert(p);
  auto in_comp = [&](Coord q) { return interior.count(bg.canonical(q)) == 0; };
  auto comp_interior = [&](Coord q) {
    if (!in_comp(q)) return false;
    for (Coord r : bg.neighbors(q)) {
      if (!in_comp(r)) return false;
    }
    return true;
  };

  // Complement points that need individual inspection. On the plane, any
  // point farther than 2 from V(G) sits inside a full flat hexagon of
  // complement points and passes every condition automatically.
  std::vector<Coord> window;
  if (bg.is_plane()) {
    std::unordered_set<Coord, CoordHash> reach(g.vertices().begin(), g.vertices().end());
    std::vector<Coord> frontier = g.vertices();
    for (int step = 0; step < 2; ++step) {
      std::vector<Coord> next;
      for (Coord p : frontier) {
        for (Coord q : bg.neighbors(p)) {
          if (reach.insert(q).second) next.push_back(q);
        }
      }
      frontier = std::move(next);
    }
    for (Coord p : reach) {
      if (in_comp(p)) window.push_back(p);
    }
  } else {
    for (Coord p : bg.all_vertices()) {
      if (in_comp(p)) window.push_back(p);
    }
  }
  std::sort(window.begin(), window.end());

  std::vector<Coord> comp_boundary;
  for (Coord q : window) {
    // (i): 2-dimensional within the complement
    Graph s = local_sphere_graph(bg, q, in_comp);
    if (graph_dimension(s) != Dimension(1)) return false;
    if (comp_interior(q)) continue;
    // (ii): non-interior needs an interior complement neighbor
    bool touches = false;
    for (Coord r : bg.neighbors(q)) {
      if (in_comp(r) && comp_interior(r)) {
        touches = true;
        break;
      }
    }
    if (!touches) return false;
    comp_boundary.push_back(q);
  }

  // (iii): complement boundary is empty or a one-dimensional graph
  if (!comp_boundary.empty()) {
    std::unordered_set<Coord, CoordHash> bset(comp_boundary.begin(), comp_boundary.end());
    Graph b(static_cast<int>(comp_boundary.size()));
    std::unordered_map<Coord, int, CoordHash> bid;
    for (std::size_t i = 0; i < comp_boundary.size(); ++i)
      bid.emplace(comp_boundary[i], static_cast<int>(i));
    for (std::size_t i = 0; i < comp_boundary.size(); ++i) {
      for (Coord q : bg.neighbors(comp_boundary[i])) {
        auto it = bid.find(q);
        if (it != bid.end() && static_cast<int>(i) < it->second)
          b.add_edge(static_cast<int>(i), it->second);
      }
    }
    if (graph_dimension(b) != Dimension(1)) return false;
  }

  // (iv) holds by construction: the complement is induced.

  // (v): interior pairs of the complement sharing a boundary neighbor
  for (Coord b : comp_boundary) {
    std::vector<Coord> ins;
    for (Coord q : bg.neighbors(b)) {
      if (comp_interior(q)) ins.push_back(q);
    }
    for (std::size_t a = 0; a < ins.size(); ++a) {
      for (std::size_t c = a + 1; c < ins.size(); ++c) {
        Coord p = ins[a], q = ins[c];
        if (bg.x_distance(p, q) == 1) continue;
        bool mediated = false;
        for (Coord m : bg.neighbors(p)) {
          if (bg.x_distance(m, q) == 1 && comp_interior(m)) {
            mediated = true;
            break;
          }
        }
        if (!mediated) return false;
      }
    }
  }
  return true;
}

XSphere sphere_in_domain(const LatticeSubgraph& g, Coord p, int r, SphereSemantics sem) {
  const Background& bg = g.background();
  if (g.index_of(p) < 0) throw std::invalid_argument("point " + coord_text(p) + " is not a vertex");
  XSphere s;
  if (sem == SphereSemantics::GeodesicInG) {
    std::unordered_map<Coord, int, CoordHash> dist;
    std::queue<Coord> queue;
    Coord start = bg.canonical(p);
    dist.emplace(start, 0);
    queue.push(start);
    while (!queue.empty()) {
      Coord a = queue.front();
      queue.pop();
      int d = dist.at(a);
      if (d == r) continue;
      for (Coord b : g.graph_neighbors(a)) {
        if (dist.emplace(b, d + 1).second) queue.push(b);
      }
    }
    for (const auto& [q, d] : dist) {
      if (d == r) s.vertices.push_back(q);
    }
  } else {
    for (Coord q : bg.sphere(p, r).vertices) {
      if (g.contains(q)) s.vertices.push_back(q);
    }
  }
  std::sort(s.vertices.begin(), s.vertices.end());
  std::unordered_set<Coord, CoordHash> shell(s.vertices.begin(), s.vertices.end());
  for (Coord a : s.vertices) {
    for (Coord b : g.graph_neighbors(a)) {
      if (a < b && shell.count(b)) s.edges.push_back({a, b});
    }
  }
  std::sort(s.edges.begin(), s.edges.end(), edge_less);
  return s;
}

NotBoundaryPointError::NotBoundaryPointError(Coord p)
    : std::runtime_error("curvature is defined at boundary points; " + coord_text(p) +
                         " is not one"),
      point(p) {}

int curvature_K_unchecked(const LatticeSubgraph& g, Coord p, SphereSemantics sem) {
  int s1 = static_cast<int>(sphere_in_domain(g, p, 1, sem).edges.size());
  int s2 = static_cast<int>(sphere_in_domain(g, p, 2, sem).edges.size());
  return 2 * s1 - s2;
}

int curvature_K(const LatticeSubgraph& g, Coord p, SphereSemantics sem) {
  if (classify_point(g, p) != PointClass::Boundary) throw NotBoundaryPointError(p);
  return curvature_K_unchecked(g, p, sem);
}

int total_boundary_curvature(const LatticeSubgraph& g, SphereSemantics sem) {
  int total = 0;
  for (Coord p : boundary_set(g)) total += curvature_K_unchecked(g, p, sem);
  return total;
}

int k1_curvature(const LatticeSubgraph& g, Coord p) {
  int i = g.index_of(p);
  if (i < 0) throw std::invalid_argument("point " + coord_text(p) + " is not a vertex");
  return k1_curvature(g.to_graph(), i);
}

int k1_total(const LatticeSubgraph& g) { return k1_total(g.to_graph()); }

int k2_curvature(const LatticeSubgraph& g, Coord p, SphereSemantics sem) {
  if (classify_point(g, p) != PointClass::Boundary) throw NotBoundaryPointError(p);
  return 12 - static_cast<int>(sphere_in_domain(g, p, 2, sem).edges.size());
}

int k2_total(const LatticeSubgraph& g, SphereSemantics sem) {
  int total = 0;
  for (Coord p : boundary_set(g)) total += k2_curvature(g, p, sem);
  return total;
}

int euler_characteristic(const LatticeSubgraph& g) { return euler_characteristic(g.to_graph()); }

bool is_simply_connected(const LatticeSubgraph& g) {
  if (g.vertex_count() == 0) return false;
  return g.to_graph().connected() && euler_characteristic(g) == 1;
}

NotAHoleError::NotAHoleError()
    : std::runtime_error("component closure is not a bounded simply connected smooth region") {}

std::vector<Hole> find_holes(const LatticeSubgraph& g) {
  const Background& bg = g.background();
  if (!bg.is_plane()) throw std::logic_error("holes are defined on the plane background");
  std::vector<Hole> holes;
  if (g.vertex_count() == 0) return holes;

  int klo = g.vertices()[0].k, khi = klo, llo = g.vertices()[0].l, lhi = llo;
  for (Coord p : g.vertices()) {
    klo = std::min(klo, p.k);
    khi = std::max(khi, p.k);
    llo = std::min(llo, p.l);
    lhi = std::max(lhi, p.l);
  }
  klo -= 2;
  khi += 2;
  llo -= 2;
  lhi += 2;
  auto in_box = [&](Coord p) { return p.k >= klo && p.k <= khi && p.l >= llo && p.l <= lhi; };

  // Flood from the box border through complement cells; whatever the flood
  // misses is trapped by G and forms the bounded components.
  std::unordered_set<Coord, CoordHash> outside;
  std::queue<Coord> queue;
  for (int k = klo; k <= khi; ++k) {
    for (int l = llo; l <= lhi; ++l) {
      Coord p{k, l};
      bool border = (k == klo || k == khi || l == llo || l == lhi);
      if (border && !g.contains(p) && outside.insert(p).second) queue.push(p);
    }
  }
  while (!queue.empty()) {
    Coord p = queue.front();
    queue.pop();
    for (Coord q : bg.neighbors(p)) {
      if (in_box(q) && !g.contains(q) && outside.insert(q).second) queue.push(q);
    }
  }

  std::unordered_set<Coord, CoordHash> assigned;
  for (int l = llo; l <= lhi; ++l) {
    for (int k = klo; k <= khi; ++k) {
      Coord seed{k, l};
      if (g.contains(seed) || outside.count(seed) || assigned.count(seed)) continue;
      std::vector<Coord> comp;
      std::queue<Coord> bfs;
      assigned.insert(seed);
      bfs.push(seed);
      while (!bfs.empty()) {
        Coord p = bfs.front();
        bfs.pop();
        comp.push_back(p);
        for (Coord q : bg.neighbors(p)) {
          if (in_box(q) && !g.contains(q) && !outside.count(q) && assigned.insert(q).second)
            bfs.push(q);
        }
      }
      std::sort(comp.begin(), comp.end());

      Hole h;
      std::unordered_set<Coord, CoordHash> cset(comp.begin(), comp.end());
      std::vector<Coord> closure_verts = comp;
      for (Coord p : comp) {
        for (Coord q : bg.neighbors(p)) {
          if (g.contains(q)) closure_verts.push_back(q);
        }
      }
      h.component = std::move(comp);
      h.closure = LatticeSubgraph::induced(bg, std::move(closure_verts));
      DomainReport rep = check_domain(h.closure);
      h.closure_is_region = rep.is_smooth && is_simply_connected(h.closure);
      h.interior_matches = interior_set(h.closure) == h.component;
      h.valid = h.closure_is_region && h.interior_matches;
      holes.push_back(std::move(h));
    }
  }
  return holes;
}

LatticeSubgraph fill_hole(const LatticeSubgraph& g, const Hole& hole) {
  if (!hole.valid) throw NotAHoleError();
  std::vector<Coord> verts = g.vertices();
  verts.insert(verts.end(), hole.component.begin(), hole.component.end());
  return LatticeSubgraph::induced(g.background(), std::move(verts));
}

}  // namespace tricurv
