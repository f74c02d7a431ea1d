#include "tricurv/homotopy.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tricurv {

namespace {

// Closed curves are handled cyclically: the stored seam x_0 = x_n is one
// point. Returns the cyclic point list.
std::vector<Coord> cyclic_form(const Curve& c) {
  if (c.points.empty()) throw std::invalid_argument("empty curve");
  if (c.points.size() == 1) return c.points;
  if (!(c.points.front() == c.points.back())) throw std::invalid_argument("curve is not closed");
  return {c.points.begin(), c.points.end() - 1};
}

Curve stored_form(const std::vector<Coord>& cyc) {
  Curve c;
  c.points = cyc;
  if (cyc.size() > 1) c.points.push_back(cyc.front());
  return c;
}

}  // namespace

bool is_closed(const Curve& c) {
  if (c.points.empty()) return false;
  return c.points.front() == c.points.back();
}

bool is_simple(const Curve& c) {
  if (!is_closed(c)) return false;
  std::vector<Coord> body(c.points.begin(), c.points.end() - (c.points.size() > 1 ? 1 : 0));
  std::sort(body.begin(), body.end());
  return std::adjacent_find(body.begin(), body.end()) == body.end();
}

bool is_valid_curve(const LatticeSubgraph& g, const Curve& c) {
  if (c.points.empty()) return false;
  for (Coord p : c.points) {
    if (!g.contains(p) || classify_point(g, p) != PointClass::Interior) return false;
  }
  const Background& bg = g.background();
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
    if (bg.x_distance(c.points[i], c.points[i + 1]) > 1) return false;
  }
  return true;
}

std::vector<Curve> elementary_deformations(const LatticeSubgraph& g, const Curve& c) {
  if (!is_closed(c) || !is_valid_curve(g, c))
    throw std::invalid_argument("deformations need a closed curve in the interior");
  const Background& bg = g.background();
  std::unordered_set<Coord, CoordHash> interior;
  for (Coord p : interior_set(g)) interior.insert(p);

  std::vector<Coord> cyc = cyclic_form(c);
  std::size_t n = cyc.size();
  std::vector<Curve> out;
  for (std::size_t i = 0; i < n; ++i) {
    Coord prev = cyc[(i + n - 1) % n];
    Coord next = cyc[(i + 1) % n];
    for (Coord y : bg.neighbors(cyc[i])) {
      if (!interior.count(y)) continue;
      if (bg.x_distance(prev, y) > 1 || bg.x_distance(y, next) > 1) continue;
      std::vector<Coord> moved = cyc;
      moved[i] = y;
      out.push_back(stored_form(moved));
    }
  }
  return out;
}

Contractibility is_contractible(const LatticeSubgraph& g, const Curve& c, std::size_t max_states) {
  if (!is_closed(c) || !is_valid_curve(g, c))
    throw std::invalid_argument("contractibility needs a closed curve in the interior");
  const Background& bg = g.background();
  std::vector<Coord> interior = interior_set(g);
  std::unordered_map<Coord, int, CoordHash> id;
  for (std::size_t i = 0; i < interior.size(); ++i) id.emplace(interior[i], static_cast<int>(i));

  std::vector<Coord> cyc = cyclic_form(c);
  const std::size_t n = cyc.size();

  auto constant = [](const std::vector<int>& s) {
    for (int v : s) {
      if (v != s[0]) return false;
    }
    return true;
  };

  // States are index tuples, canonicalized up to rotation (moves commute
  // with rotation, so the quotient search is sound). Packing one byte per
  // point keeps the visited set compact; coarser problems fall back to a
  // byte-string key.
  const bool packable = n <= 8 && interior.size() <= 255;
  auto pack = [&](const std::vector<int>& s) {
    std::uint64_t best = ~0ULL;
    for (std::size_t r = 0; r < n; ++r) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < n; ++i)
        key = (key << 8) | static_cast<std::uint64_t>(s[(r + i) % n] + 1);
      best = std::min(best, key);
    }
    return best;
  };
  auto pack_str = [&](const std::vector<int>& s) {
    std::string best;
    for (std::size_t r = 0; r < n; ++r) {
      std::string key(n, '\0');
      for (std::size_t i = 0; i < n; ++i) key[i] = static_cast<char>(s[(r + i) % n] & 0xff);
      if (best.empty() || key < best) best = std::move(key);
    }
    return best;
  };

  std::vector<int> start(n);
  for (std::size_t i = 0; i < n; ++i) start[i] = id.at(bg.canonical(cyc[i]));
  if (constant(start)) return Contractibility::Yes;

  std::unordered_set<std::uint64_t> seen64;
  std::unordered_set<std::string> seenstr;
  auto visit = [&](const std::vector<int>& s) {
    return packable ? seen64.insert(pack(s)).second : seenstr.insert(pack_str(s)).second;
  };
  std::size_t visited = 1;
  visit(start);
  std::deque<std::vector<int>> queue;
  queue.push_back(std::move(start));

  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Coord prev = interior[cur[(i + n - 1) % n]];
      Coord next = interior[cur[(i + 1) % n]];
      for (Coord y : bg.neighbors(interior[cur[i]])) {
        auto it = id.find(y);
        if (it == id.end()) continue;
        if (bg.x_distance(prev, y) > 1 || bg.x_distance(y, next) > 1) continue;
        std::vector<int> moved = cur;
        moved[i] = it->second;
        if (constant(moved)) return Contractibility::Yes;
        if (visit(moved)) {
          if (++visited > max_states) return Contractibility::BudgetExceeded;
          queue.push_back(std::move(moved));
        }
      }
    }
  }
  return Contractibility::No;
}

std::vector<Curve> simple_closed_interior_curves(const LatticeSubgraph& g, int max_len) {
  std::vector<Curve> out;
  std::vector<Coord> interior = interior_set(g);
  if (interior.empty() || max_len < 2) return out;
  const Background& bg = g.background();
  std::unordered_map<Coord, int, CoordHash> id;
  for (std::size_t i = 0; i < interior.size(); ++i) id.emplace(interior[i], static_cast<int>(i));
  std::vector<std::vector<int>> adj(interior.size());
  for (std::size_t i = 0; i < interior.size(); ++i) {
    for (Coord q : bg.neighbors(interior[i])) {
      auto it = id.find(q);
      if (it != id.end()) adj[i].push_back(it->second);
    }
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  // Cycles are rooted at their smallest vertex; only larger vertices may
  // appear later, and the traversal direction is fixed by requiring the
  // second vertex to be smaller than the last, so each cycle appears once.
  std::vector<int> path;
  std::vector<char> used(interior.size(), 0);
  auto emit = [&]() {
    Curve c;
    for (int v : path) c.points.push_back(interior[v]);
    c.points.push_back(interior[path[0]]);
    out.push_back(std::move(c));
  };
  std::function<void(int)> extend = [&](int v) {
    for (int w : adj[v]) {
      if (w == path[0]) {
        if (path.size() >= 2 && (path.size() == 2 || path[1] < path.back())) emit();
        continue;
      }
      if (w < path[0] || used[w]) continue;
      if (path.size() + 1 > static_cast<std::size_t>(max_len)) continue;
      used[w] = 1;
      path.push_back(w);
      extend(w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (std::size_t s = 0; s < interior.size(); ++s) {
    path = {static_cast<int>(s)};
    used[s] = 1;
    extend(static_cast<int>(s));
    used[s] = 0;
  }
  return out;
}

}  // namespace tricurv
