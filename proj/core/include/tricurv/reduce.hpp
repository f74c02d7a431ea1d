#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tricurv/domain.hpp"
#include "tricurv/graph.hpp"

namespace tricurv {

// Structure of the interior, computed within the induced subgraph on int(G).
// h1/h2 hold the 1- and 2-dimensional points; `other` holds the rest
// (isolated points and points with mixed spheres). A component of h1 is a
// branch when some point of it has exactly one interior neighbour, else a
// bridge. Components of h2 are ridges. Bridges attach to the ridges they can
// reach through `other` points; ridge_bridge_graph has one vertex per ridge
// and an edge for every bridge joining two distinct ridges.
struct InteriorDecomposition {
  std::vector<Coord> interior;
  std::vector<Coord> h1;
  std::vector<Coord> h2;
  std::vector<Coord> other;
  std::vector<std::vector<Coord>> branches;
  std::vector<std::vector<Coord>> bridges;
  std::vector<std::vector<Coord>> ridges;
  std::vector<std::vector<int>> bridge_ridges;
  Graph ridge_bridge_graph;
};

// Number of bridges touching the given ridge (each bridge counted once).
int ridge_incident_bridges(const InteriorDecomposition& d, int ridge_index);

InteriorDecomposition decompose_interior(const LatticeSubgraph& g);

enum class StepKind { Prune, Etch };
enum class ReductionOutcome { ReducedToDisc, Stuck };

struct ReductionStep {
  Coord removed;
  StepKind kind;
  int total_curvature;  // after the removal
  int chi;              // after the removal
  int interior_size;    // after the removal
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  ReductionOutcome outcome;
  LatticeSubgraph final_graph;
};

struct ReduceOptions {
  bool validate_input = true;
  SphereSemantics semantics = kDefaultSemantics;
};

class InputNotSmoothError : public std::runtime_error {
 public:
  InputNotSmoothError() : std::runtime_error("input is not a smooth domain") {}
};

class InputNotSimplyConnectedError : public std::runtime_error {
 public:
  InputNotSimplyConnectedError() : std::runtime_error("input is not simply connected") {}
};

// One removal step. A candidate is accepted only if rebuilding the domain
// from the shrunken interior gives back exactly that interior and the result
// is still a smooth simply connected domain with the same total curvature
// and Euler characteristic. Candidates are tried in (l, k) order; empty
// result means no candidate was accepted.
std::optional<std::pair<LatticeSubgraph, Coord>> prune_step(
    const LatticeSubgraph& g, SphereSemantics semantics = kDefaultSemantics);
std::optional<std::pair<LatticeSubgraph, Coord>> etch_step(
    const LatticeSubgraph& g, SphereSemantics semantics = kDefaultSemantics);

// Alternates prune (preferred) and etch until one interior point remains.
ReductionTrace reduce_to_disc(const LatticeSubgraph& g, const ReduceOptions& options = {});

// One line per step: "step=<n> kind=<prune|etch> removed=<k>,<l> K=<int> chi=<int> interior=<int>".
std::string trace_to_text(const ReductionTrace& trace);

}  // namespace tricurv
