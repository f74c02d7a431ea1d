#pragma once

#include <cstddef>
#include <vector>

#include "tricurv/domain.hpp"
#include "tricurv/lattice.hpp"

namespace tricurv {

// A curve is a point sequence x_0..x_n inside the interior of a domain.
// Curves are authored with consecutive points at distance exactly 1; during
// deformation the constraint is relaxed to distance <= 1 so that a curve can
// actually collapse to a constant one (under the strict reading no closed
// curve could ever become trivial).
struct Curve {
  std::vector<Coord> points;
};

bool is_closed(const Curve& c);
// Closed with x_0..x_{n-1} pairwise distinct.
bool is_simple(const Curve& c);

// All points interior, consecutive points at x-distance <= 1.
bool is_valid_curve(const LatticeSubgraph& g, const Curve& c);

// Every curve reachable by moving exactly one point of c to an adjacent
// interior point while keeping both neighboring gaps at distance <= 1.
// For closed curves the seam point x_0 = x_n moves as a single point.
std::vector<Curve> elementary_deformations(const LatticeSubgraph& g, const Curve& c);

enum class Contractibility { Yes, No, BudgetExceeded };

// Breadth-first search over the deformation graph of curves with the point
// count of c, looking for any constant curve. No means the whole reachable
// set was exhausted; the budget caps the number of distinct curves visited.
Contractibility is_contractible(const LatticeSubgraph& g, const Curve& c,
                                std::size_t max_states = 2'000'000);

// All simple closed curves in the interior with step distance exactly 1 and
// 2..max_len points, one representative per cycle up to rotation, reversal
// and starting point. Deterministic order.
std::vector<Curve> simple_closed_interior_curves(const LatticeSubgraph& g, int max_len);

}  // namespace tricurv
