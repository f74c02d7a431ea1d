#include "tricurv/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace tricurv {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

int Graph::add_vertex() {
  adj_.emplace_back();
  return static_cast<int>(adj_.size()) - 1;
}

void Graph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  if (a == b) throw std::invalid_argument("self loop");
  if (has_edge(a, b)) throw std::invalid_argument("duplicate edge");
  adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
  adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
  ++edge_count_;
}

bool Graph::has_edge(int a, int b) const {
  const auto& na = adj_.at(a);
  return std::binary_search(na.begin(), na.end(), b);
}

std::vector<int> Graph::distances_from(int v) const {
  std::vector<int> dist(vertex_count(), -1);
  std::queue<int> queue;
  dist.at(v) = 0;
  queue.push(v);
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop();
    for (int q : adj_[p]) {
      if (dist[q] < 0) {
        dist[q] = dist[p] + 1;
        queue.push(q);
      }
    }
  }
  return dist;
}

Graph Graph::induced(const std::vector<int>& verts, std::vector<int>* old_ids) const {
  std::vector<int> label(vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (label.at(verts[i]) != -1) throw std::invalid_argument("duplicate vertex in induced set");
    label[verts[i]] = static_cast<int>(i);
  }
  Graph g(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (int q : adj_[verts[i]]) {
      if (label[q] > static_cast<int>(i)) g.add_edge(static_cast<int>(i), label[q]);
    }
  }
  if (old_ids) *old_ids = verts;
  return g;
}

std::vector<std::vector<int>> Graph::connected_components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(vertex_count(), 0);
  for (int v = 0; v < vertex_count(); ++v) {
    if (seen[v]) continue;
    std::vector<int> comp;
    std::queue<int> queue;
    seen[v] = 1;
    queue.push(v);
    while (!queue.empty()) {
      int p = queue.front();
      queue.pop();
      comp.push_back(p);
      for (int q : adj_[p]) {
        if (!seen[q]) {
          seen[q] = 1;
          queue.push(q);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const {
  return vertex_count() == 0 || connected_components().size() == 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int v = 0; v < vertex_count(); ++v) {
    for (int q : adj_[v]) {
      if (v < q) out.emplace_back(v, q);
    }
  }
  return out;
}

std::vector<int> sphere_vertices(const Graph& g, int p, int r) {
  std::vector<int> dist = g.distances_from(p);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] == r) out.push_back(v);
  }
  return out;
}

Graph sphere_in_graph(const Graph& g, int p, int r) {
  return g.induced(sphere_vertices(g, p, r));
}

Dimension point_dimension(const Graph& g, int p) {
  Dimension s = graph_dimension(sphere_in_graph(g, p, 1));
  if (!s.defined()) return Dimension::undefined();
  return Dimension(1 + s.value());
}

Dimension graph_dimension(const Graph& g) {
  if (g.vertex_count() == 0) return Dimension(-1);
  Dimension common = point_dimension(g, 0);
  if (!common.defined()) return Dimension::undefined();
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (point_dimension(g, v) != common) return Dimension::undefined();
  }
  return common;
}

std::vector<std::array<int, 3>> faces(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      for (int c : g.neighbors(b)) {
        if (c <= b) continue;
        if (g.has_edge(a, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

int euler_characteristic(const Graph& g) {
  return g.vertex_count() - g.edge_count() + static_cast<int>(faces(g).size());
}

namespace {

bool is_single_cycle(const Graph& s) {
  if (s.vertex_count() < 3 || !s.connected()) return false;
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (s.degree(v) != 2) return false;
  }
  return true;
}

}  // namespace

GenericClass classify_point_generic(const Graph& g, int p) {
  Graph s = sphere_in_graph(g, p, 1);
  if (is_single_cycle(s)) return GenericClass::Interior;
  if (graph_dimension(s) == Dimension(1)) return GenericClass::Boundary;
  return GenericClass::Neither;
}

NotTwoDimensionalPointError::NotTwoDimensionalPointError(int vertex_)
    : std::runtime_error("vertex " + std::to_string(vertex_) +
                         " is neither an interior nor a boundary point"),
      vertex(vertex_) {}

BadBoundaryError::BadBoundaryError()
    : std::runtime_error("boundary set is nonempty and not one-dimensional") {}

BoundaryNotCyclesError::BoundaryNotCyclesError()
    : std::runtime_error("boundary is not a disjoint union of simple cycles") {}

int k1_curvature(const Graph& g, int p) {
  GenericClass c = classify_point_generic(g, p);
  if (c == GenericClass::Neither) throw NotTwoDimensionalPointError(p);
  int arc = sphere_in_graph(g, p, 1).edge_count();
  return (c == GenericClass::Interior ? 6 : 3) - arc;
}

int k1_total(const Graph& g) {
  std::vector<int> boundary;
  int total = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    GenericClass c = classify_point_generic(g, v);
    if (c == GenericClass::Neither) throw NotTwoDimensionalPointError(v);
    if (c == GenericClass::Boundary) boundary.push_back(v);
    total += k1_curvature(g, v);
  }
  if (!boundary.empty() && graph_dimension(g.induced(boundary)) != Dimension(1))
    throw BadBoundaryError();
  return total;
}

std::vector<std::vector<int>> boundary_cycles(const Graph& g) {
  std::vector<int> boundary;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (classify_point_generic(g, v) == GenericClass::Boundary) boundary.push_back(v);
  }
  Graph b = g.induced(boundary);
  std::vector<std::vector<int>> cycles;
  for (const auto& comp : b.connected_components()) {
    if (comp.size() < 3) throw BoundaryNotCyclesError();
    for (int v : comp) {
      if (b.degree(v) != 2) throw BoundaryNotCyclesError();
    }
    // Walk the cycle from its smallest vertex toward its smaller neighbor so
    // the listing is deterministic.
    std::vector<int> cycle;
    int start = comp.front();
    int prev = -1;
    int cur = start;
    do {
      cycle.push_back(boundary[cur]);
      const auto& nb = b.neighbors(cur);
      int next = (nb[0] != prev) ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    } while (cur != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Graph cone_boundary_cycles(const Graph& g) {
  Graph h = g;
  for (const auto& cycle : boundary_cycles(g)) {
    int apex = h.add_vertex();
    for (int v : cycle) h.add_edge(apex, v);
  }
  return h;
}

}  // namespace tricurv
