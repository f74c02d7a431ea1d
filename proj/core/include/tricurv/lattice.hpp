#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tricurv {

// Axial coordinates on the triangular lattice. The point (k, l) embeds into
// the plane as k*(1, 0) + l*(1/2, sqrt(3)/2). All six neighbors of a point
// are at unit euclidean distance in that embedding.
struct Coord {
  int k = 0;
  int l = 0;

  friend bool operator==(const Coord&, const Coord&) = default;
};

// Row-major order: by l first, then k. Every sorted container and every
// deterministic scan in the library uses this order.
inline bool operator<(Coord a, Coord b) {
  if (a.l != b.l) return a.l < b.l;
  return a.k < b.k;
}
inline bool operator>(Coord a, Coord b) { return b < a; }
inline bool operator<=(Coord a, Coord b) { return !(b < a); }
inline bool operator>=(Coord a, Coord b) { return !(a < b); }

inline Coord operator+(Coord a, Coord b) { return {a.k + b.k, a.l + b.l}; }
inline Coord operator-(Coord a, Coord b) { return {a.k - b.k, a.l - b.l}; }

struct CoordHash {
  std::size_t operator()(Coord c) const noexcept {
    // splitmix-style mix of the two 32-bit halves
    std::uint64_t x = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.k)) << 32) |
                      static_cast<std::uint32_t>(c.l);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

// The six unit directions in counterclockwise cyclic order. Consecutive
// directions are themselves at unit distance, which is what makes S1 of a
// lattice point a 6-cycle.
inline constexpr std::array<Coord, 6> kUnitDirections = {{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
}};

// Graph distance from the origin in the full lattice, in closed form.
int hex_norm(Coord c);

// Lattice symmetries fixing the origin: rotation by 60 degrees and the
// reflection that fixes the k-axis. They generate the full point group of
// order 12.
inline Coord rotate60(Coord c) { return {-c.l, c.k + c.l}; }
inline Coord reflect(Coord c) { return {c.k + c.l, -c.l}; }

// A sphere S_r(p) as a subgraph of the ambient space: its vertices plus the
// edges of X joining two of them. "Length" of a sphere always means its edge
// count, not its vertex count.
struct XSphere {
  std::vector<Coord> vertices;
  std::vector<std::pair<Coord, Coord>> edges;
};

class TorusTooSmallError : public std::runtime_error {
 public:
  explicit TorusTooSmallError(int shortest);
  // Length of the shortest nonzero identification vector. Values below 6
  // distort the radius-2 spheres, so the quotient no longer looks locally
  // like the plane.
  int shortest;
};

// The ambient space X: either the full plane lattice or a quotient torus.
// The torus with shape (m, n, t) identifies (k, l) with (k + m, l) and with
// (k + t, l + n). Construction validates that every point of the quotient
// still has a 6-cycle S1 and a 12-cycle S2; shapes that fail throw
// TorusTooSmallError.
class Background {
 public:
  static Background plane();
  static Background torus(int m, int n, int t);

  bool is_plane() const { return kind_ == Kind::Plane; }
  bool is_torus() const { return kind_ == Kind::Torus; }
  int m() const { return m_; }
  int n() const { return n_; }
  int twist() const { return t_; }

  // Canonical representative: l in [0, n), k in [0, m). Identity on the plane.
  Coord canonical(Coord c) const;

  // Neighbors in cyclic order, canonicalized.
  std::array<Coord, 6> neighbors(Coord c) const;

  bool adjacent(Coord a, Coord b) const;

  // Graph distance in X.
  int x_distance(Coord a, Coord b) const;

  // Ball and sphere around a point, by radius in the X metric. Results are
  // sorted by (l, k); sphere edges are sorted pairs.
  std::vector<Coord> ball(Coord center, int radius) const;
  XSphere sphere(Coord center, int radius) const;

  // All canonical vertices of a torus, sorted. Throws on the plane.
  std::vector<Coord> all_vertices() const;
  long long vertex_count() const;

  friend bool operator==(const Background&, const Background&) = default;

 private:
  enum class Kind { Plane, Torus };
  Kind kind_ = Kind::Plane;
  int m_ = 0, n_ = 0, t_ = 0;
};

}  // namespace tricurv
