#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tricurv {

// Finite simple graph on vertex ids 0..n-1. Adjacency lists are kept sorted
// so that every traversal is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  int add_vertex();
  // Rejects self loops and duplicates: the graph stays simple by invariant.
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  // BFS hop distances from v; -1 marks unreachable vertices.
  std::vector<int> distances_from(int v) const;

  // Subgraph induced on the given vertices, relabeled 0..k-1 in the order
  // given. When old_ids is non-null it receives the reverse mapping.
  Graph induced(const std::vector<int>& verts, std::vector<int>* old_ids = nullptr) const;

  std::vector<std::vector<int>> connected_components() const;
  // The empty graph counts as connected.
  bool connected() const;

  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

// Inductive dimension value: an integer >= -1, or undefined when a sphere
// mixes components of different dimensions.
class Dimension {
 public:
  static Dimension undefined() { return Dimension{}; }
  explicit Dimension(int v) : defined_(true), value_(v) {}
  bool defined() const { return defined_; }
  int value() const {
    if (!defined_) throw std::logic_error("dimension is undefined");
    return value_;
  }
  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  Dimension() = default;
  bool defined_ = false;
  int value_ = 0;
};

// Subgraph on the vertices at hop distance exactly r from p, with all edges
// of G among them. Vertex identity is relabeled; use sphere_vertices when the
// original ids matter.
Graph sphere_in_graph(const Graph& g, int p, int r);
std::vector<int> sphere_vertices(const Graph& g, int p, int r);

// dim(p) = 1 + dim(S1(p)); the empty graph has dimension -1, so isolated
// vertices are 0-dimensional. A graph has dimension d when every vertex does;
// disagreement or any undefined vertex makes the graph dimension undefined.
Dimension point_dimension(const Graph& g, int p);
Dimension graph_dimension(const Graph& g);

// All 3-cliques, as ordered triples a < b < c.
std::vector<std::array<int, 3>> faces(const Graph& g);
// v - e + f with f the triangle count.
int euler_characteristic(const Graph& g);

enum class GenericClass { Interior, Boundary, Neither };

// Interior: the unit sphere is a single cycle (connected, all degrees 2,
// at least 3 vertices). Boundary: the unit sphere is one-dimensional but not
// such a cycle. Neither: anything else.
GenericClass classify_point_generic(const Graph& g, int p);

class NotTwoDimensionalPointError : public std::runtime_error {
 public:
  explicit NotTwoDimensionalPointError(int vertex);
  int vertex;
};

class BadBoundaryError : public std::runtime_error {
 public:
  BadBoundaryError();
};

class BoundaryNotCyclesError : public std::runtime_error {
 public:
  BoundaryNotCyclesError();
};

// First order curvature: 6 - |S1| at interior points, 3 - |S1| at boundary
// points, where |S1| is the EDGE count of the unit sphere. Throws
// NotTwoDimensionalPointError when the point classifies as Neither.
int k1_curvature(const Graph& g, int p);

// Sum of k1_curvature over all vertices. Requires every vertex to classify
// as Interior or Boundary and the boundary set to be empty or a
// one-dimensional graph (BadBoundaryError otherwise).
int k1_total(const Graph& g);

// The boundary vertices grouped into disjoint simple cycles, each listed in
// traversal order starting from its smallest id. Throws BoundaryNotCyclesError
// when the induced boundary graph is not a disjoint union of cycles.
std::vector<std::vector<int>> boundary_cycles(const Graph& g);

// G plus one apex per boundary cycle, joined to every vertex of its cycle.
// Closes the boundary off, so the result has no boundary points along the
// former cycles; chi grows by the number of cycles.
Graph cone_boundary_cycles(const Graph& g);

}  // namespace tricurv
