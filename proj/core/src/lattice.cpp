#include "tricurv/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace tricurv {

namespace {

// Floor division and remainder for possibly negative numerators, b > 0.
int floordiv(int a, int b) {
  int q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

int floormod(int a, int b) { return a - floordiv(a, b) * b; }

// Shortest nonzero vector of the identification lattice spanned by (m, 0)
// and (t, n), measured in hops. For fixed l = b*n > 0 the norm of (x, l) is
// flat at l on x in [-l, 0] and grows with slope one outside, so scanning x
// one period past each end of that interval finds the minimum in the residue
// class of b*t mod m.
int shortest_identification(int m, int n, int t) {
  int best = m;  // the (m, 0) generator; b = 0 offers nothing shorter
  for (int b = 1; b * n <= best; ++b) {
    int l = b * n;
    int lo = floordiv(-l - b * t, m) - 1;
    int hi = floordiv(-b * t, m) + 1;
    for (int a = lo; a <= hi; ++a) {
      best = std::min(best, hex_norm({a * m + b * t, l}));
    }
  }
  return best;
}

}  // namespace

int hex_norm(Coord c) {
  return (std::abs(c.k) + std::abs(c.l) + std::abs(c.k + c.l)) / 2;
}

TorusTooSmallError::TorusTooSmallError(int shortest_)
    : std::runtime_error("torus too small: shortest identification has length " +
                         std::to_string(shortest_) + ", need at least 6"),
      shortest(shortest_) {}

Background Background::plane() { return Background{}; }

Background Background::torus(int m, int n, int t) {
  if (m <= 0 || n <= 0) throw std::invalid_argument("torus shape needs m >= 1 and n >= 1");
  Background bg;
  bg.kind_ = Kind::Torus;
  bg.m_ = m;
  bg.n_ = n;
  bg.t_ = floormod(t, m);
  int shortest = shortest_identification(bg.m_, bg.n_, bg.t_);
  if (shortest < 6) throw TorusTooSmallError(shortest);
  // Defensive: the radius 1 and 2 spheres of the quotient must match the
  // plane exactly. Identifications shrink the vertex count, chords grow the
  // edge count, so the counts pin the structure.
  XSphere s1 = bg.sphere({0, 0}, 1);
  XSphere s2 = bg.sphere({0, 0}, 2);
  if (s1.vertices.size() != 6 || s1.edges.size() != 6 || s2.vertices.size() != 12 ||
      s2.edges.size() != 12) {
    throw TorusTooSmallError(shortest);
  }
  return bg;
}

Coord Background::canonical(Coord c) const {
  if (kind_ == Kind::Plane) return c;
  int b = floordiv(c.l, n_);
  int l = c.l - b * n_;
  int k = floormod(c.k - b * t_, m_);
  return {k, l};
}

std::array<Coord, 6> Background::neighbors(Coord c) const {
  std::array<Coord, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = canonical(c + kUnitDirections[i]);
  return out;
}

bool Background::adjacent(Coord a, Coord b) const { return x_distance(a, b) == 1; }

int Background::x_distance(Coord a, Coord b) const {
  if (kind_ == Kind::Plane) return hex_norm(b - a);
  Coord d = canonical(b - a);
  // Upper bound from one representative; every shorter representative has
  // both coordinates within that bound, so the scan below is exhaustive.
  const int u = hex_norm(d);
  int best = u;
  for (int bb = floordiv(-u - d.l, n_); d.l + bb * n_ <= u; ++bb) {
    int l = d.l + bb * n_;
    int base = d.k + bb * t_;
    for (int aa = floordiv(-u - base, m_); base + aa * m_ <= u; ++aa) {
      best = std::min(best, hex_norm({base + aa * m_, l}));
    }
  }
  return best;
}

std::vector<Coord> Background::ball(Coord center, int radius) const {
  std::unordered_map<Coord, int, CoordHash> dist;
  std::queue<Coord> queue;
  Coord start = canonical(center);
  dist.emplace(start, 0);
  queue.push(start);
  while (!queue.empty()) {
    Coord p = queue.front();
    queue.pop();
    int d = dist.at(p);
    if (d == radius) continue;
    for (Coord q : neighbors(p)) {
      if (dist.emplace(q, d + 1).second) queue.push(q);
    }
  }
  std::vector<Coord> out;
  out.reserve(dist.size());
  for (const auto& [p, d] : dist) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

XSphere Background::sphere(Coord center, int radius) const {
  std::unordered_map<Coord, int, CoordHash> dist;
  std::queue<Coord> queue;
  Coord start = canonical(center);
  dist.emplace(start, 0);
  queue.push(start);
  while (!queue.empty()) {
    Coord p = queue.front();
    queue.pop();
    int d = dist.at(p);
    if (d == radius) continue;
    for (Coord q : neighbors(p)) {
      if (dist.emplace(q, d + 1).second) queue.push(q);
    }
  }
  XSphere s;
  std::unordered_set<Coord, CoordHash> shell;
  for (const auto& [p, d] : dist) {
    if (d == radius) {
      s.vertices.push_back(p);
      shell.insert(p);
    }
  }
  std::sort(s.vertices.begin(), s.vertices.end());
  for (Coord p : s.vertices) {
    for (Coord q : neighbors(p)) {
      if (p < q && shell.count(q)) s.edges.emplace_back(p, q);
    }
  }
  std::sort(s.edges.begin(), s.edges.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
  return s;
}

std::vector<Coord> Background::all_vertices() const {
  if (kind_ == Kind::Plane) throw std::logic_error("the plane has no finite vertex list");
  std::vector<Coord> out;
  out.reserve(static_cast<std::size_t>(m_) * n_);
  for (int l = 0; l < n_; ++l) {
    for (int k = 0; k < m_; ++k) out.push_back({k, l});
  }
  return out;
}

long long Background::vertex_count() const {
  if (kind_ == Kind::Plane) throw std::logic_error("the plane has no finite vertex count");
  return static_cast<long long>(m_) * n_;
}

}  // namespace tricurv
