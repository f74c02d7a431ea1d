#pragma once

#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tricurv/graph.hpp"
#include "tricurv/lattice.hpp"

namespace tricurv {

using EdgeC = std::pair<Coord, Coord>;  // normalized: first < second

// A finite set of lattice points together with a subset of the unit-distance
// edges among them. Vertices are canonical and sorted by (l, k); edges are
// normalized pairs in the same order.
class LatticeSubgraph {
 public:
  LatticeSubgraph() : bg_(Background::plane()) {}
  explicit LatticeSubgraph(Background bg) : bg_(std::move(bg)) {}

  // All unit-distance edges among the vertices.
  static LatticeSubgraph induced(const Background& bg, std::vector<Coord> vertices);
  // Explicit edge list; every edge must join two listed vertices at
  // x-distance 1 (std::invalid_argument otherwise).
  static LatticeSubgraph with_edges(const Background& bg, std::vector<Coord> vertices,
                                    std::vector<EdgeC> edges);

  const Background& background() const { return bg_; }
  const std::vector<Coord>& vertices() const { return verts_; }
  const std::vector<EdgeC>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(verts_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool contains(Coord p) const { return index_.count(bg_.canonical(p)) > 0; }
  int index_of(Coord p) const;  // -1 when absent
  bool has_edge(Coord a, Coord b) const;
  // Vertices joined to p by an edge of the subgraph, sorted.
  std::vector<Coord> graph_neighbors(Coord p) const;

  bool edges_are_induced() const;

  // Same vertex order as vertices(): graph vertex i = vertices()[i].
  Graph to_graph() const;

  friend bool operator==(const LatticeSubgraph& a, const LatticeSubgraph& b) {
    return a.bg_ == b.bg_ && a.verts_ == b.verts_ && a.edges_ == b.edges_;
  }

 private:
  Background bg_;
  std::vector<Coord> verts_;
  std::vector<EdgeC> edges_;
  std::unordered_map<Coord, int, CoordHash> index_;
  std::vector<std::vector<int>> adj_;  // by vertex index, sorted

  void finish_construction();
};

enum class PointClass { Interior, Boundary, Other };

// Interior: the unit sphere of p inside G is the full hexagon of X (all six
// neighbors present, all six spokes and all six rim edges). Boundary: not
// interior, but joined by an edge to an interior point. Other: the rest.
PointClass classify_point(const LatticeSubgraph& g, Coord p);

std::vector<Coord> interior_set(const LatticeSubgraph& g);
std::vector<Coord> boundary_set(const LatticeSubgraph& g);

// The union of the closed unit balls around the interior points, with all
// induced edges. For well-formed domains this inverts interior_set.
LatticeSubgraph reconstruct_from_interior(const Background& bg, const std::vector<Coord>& interior);

// Inductive dimension of p measured inside the subgraph.
Dimension point_dimension(const LatticeSubgraph& g, Coord p);

struct DomainReport {
  // The five conditions a subgraph must meet to be a domain:
  //   i    every point is 2-dimensional in G
  //   ii   every point is interior or boundary
  //   iii  the boundary points induce a one-dimensional graph (or none exist)
  //   iv   every unit-distance pair of vertices is an edge
  //   v    interior points sharing a boundary neighbor are adjacent or share
  //        an interior neighbor
  bool cond_i = true, cond_ii = true, cond_iii = true, cond_iv = true, cond_v = true;
  std::optional<Coord> witness_i, witness_ii, witness_iii;
  std::optional<EdgeC> witness_iv;
  std::optional<EdgeC> witness_v;
  bool is_domain = false;
  bool is_smooth = false;
  std::vector<Coord> interior;
  std::vector<Coord> boundary;
};

// Evaluates all five conditions (failures are reported, never thrown) and,
// when they all hold, the complement check for smoothness.
DomainReport check_domain(const LatticeSubgraph& g);

// True iff the complement of int(G) in X is itself a domain. On the plane
// only points within x-distance 2 of V(G) need checking: everything farther
// out sits in a flat full-hexagon neighborhood where all conditions hold.
bool complement_domain_check(const LatticeSubgraph& g);

// The sphere of radius 2 around a boundary point can be read two ways; the
// source definitions conflict, so both are implemented and cross-checked.
//   GeodesicInG        vertices at hop-distance r within G
//   XDistanceRestricted vertices of G at x-distance r in the background
// Radius-1 spheres agree on induced subgraphs either way.
enum class SphereSemantics { GeodesicInG, XDistanceRestricted };

inline constexpr SphereSemantics kDefaultSemantics = SphereSemantics::GeodesicInG;

XSphere sphere_in_domain(const LatticeSubgraph& g, Coord p, int r,
                         SphereSemantics sem = kDefaultSemantics);

class NotBoundaryPointError : public std::runtime_error {
 public:
  explicit NotBoundaryPointError(Coord p);
  Coord point;
};

// Second order curvature 2|S1| - |S2| at a boundary point (edge counts).
int curvature_K(const LatticeSubgraph& g, Coord p, SphereSemantics sem = kDefaultSemantics);
// Same number without the boundary-point check; defined at any vertex, and
// zero wherever a full flat B2 neighborhood is present.
int curvature_K_unchecked(const LatticeSubgraph& g, Coord p,
                          SphereSemantics sem = kDefaultSemantics);

// Sum of curvature_K over the boundary points of a smooth domain.
int total_boundary_curvature(const LatticeSubgraph& g, SphereSemantics sem = kDefaultSemantics);

// First order curvature at a point of the subgraph (6-|S1| interior,
// 3-|S1| boundary) and its total over all vertices.
int k1_curvature(const LatticeSubgraph& g, Coord p);
int k1_total(const LatticeSubgraph& g);

// Radius-2 first order curvature 12 - |S2| at a boundary point; the total
// sums boundary points only. Its relation to the Euler characteristic is
// measured, not assumed (see enumerate::verify_theorems).
int k2_curvature(const LatticeSubgraph& g, Coord p, SphereSemantics sem = kDefaultSemantics);
int k2_total(const LatticeSubgraph& g, SphereSemantics sem = kDefaultSemantics);

// v - e + f with f the number of unit triangles whose three edges are all
// present.
int euler_characteristic(const LatticeSubgraph& g);

// Connected with Euler characteristic 1. The homotopy module provides the
// deformation-based oracle this is cross-checked against.
bool is_simply_connected(const LatticeSubgraph& g);

struct Hole {
  std::vector<Coord> component;  // bounded complement component, sorted
  LatticeSubgraph closure;       // component plus its neighbors inside G
  bool closure_is_region = false;   // closure is a smooth simply connected domain
  bool interior_matches = false;    // interior of the closure is exactly the component
  bool valid = false;               // both of the above
};

class NotAHoleError : public std::runtime_error {
 public:
  NotAHoleError();
};

// Bounded components of X minus V(G), each packaged with its closure and
// validity diagnostics. Plane backgrounds only.
std::vector<Hole> find_holes(const LatticeSubgraph& g);

// G with the hole's component added (induced edges). Throws NotAHoleError
// unless the hole is valid.
LatticeSubgraph fill_hole(const LatticeSubgraph& g, const Hole& hole);

}  // namespace tricurv
