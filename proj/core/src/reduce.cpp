#include "tricurv/reduce.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace tricurv {

namespace {

// Adjacency of the induced subgraph on int(G), indices into `interior`.
std::vector<std::vector<int>> interior_adjacency(const LatticeSubgraph& g,
                                                 const std::vector<Coord>& interior) {
  std::unordered_map<Coord, int, CoordHash> id;
  for (std::size_t i = 0; i < interior.size(); ++i) id.emplace(interior[i], static_cast<int>(i));
  std::vector<std::vector<int>> adj(interior.size());
  for (std::size_t i = 0; i < interior.size(); ++i) {
    for (Coord q : g.graph_neighbors(interior[i])) {
      auto it = id.find(q);
      if (it != id.end()) adj[i].push_back(it->second);
    }
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<std::vector<int>> components_within(const std::vector<int>& members,
                                                const std::vector<std::vector<int>>& adj,
                                                const std::vector<char>& in_set) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(adj.size(), 0);
  for (int s : members) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int w : adj[v]) {
        if (in_set[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<LatticeSubgraph> try_remove(const LatticeSubgraph& g, Coord p, int want_curvature,
                                          int want_chi, SphereSemantics semantics) {
  std::vector<Coord> shrunk;
  for (Coord q : interior_set(g)) {
    if (!(q == p)) shrunk.push_back(q);
  }
  LatticeSubgraph next = reconstruct_from_interior(g.background(), shrunk);
  if (interior_set(next) != shrunk) return std::nullopt;
  DomainReport report = check_domain(next);
  if (!report.is_smooth) return std::nullopt;
  if (!is_simply_connected(next)) return std::nullopt;
  if (euler_characteristic(next) != want_chi) return std::nullopt;
  if (total_boundary_curvature(next, semantics) != want_curvature) return std::nullopt;
  return next;
}

}  // namespace

int ridge_incident_bridges(const InteriorDecomposition& d, int ridge_index) {
  int count = 0;
  for (const auto& touched : d.bridge_ridges) {
    if (std::find(touched.begin(), touched.end(), ridge_index) != touched.end()) ++count;
  }
  return count;
}

InteriorDecomposition decompose_interior(const LatticeSubgraph& g) {
  InteriorDecomposition d;
  d.interior = interior_set(g);
  const std::size_t n = d.interior.size();
  auto adj = interior_adjacency(g, d.interior);

  Graph inner(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (int j : adj[i]) {
      if (static_cast<int>(i) < j) inner.add_edge(static_cast<int>(i), j);
    }
  }

  std::vector<char> in_h1(n, 0), in_h2(n, 0);
  std::vector<int> h1_ids, h2_ids;
  for (std::size_t i = 0; i < n; ++i) {
    Dimension dim = point_dimension(inner, static_cast<int>(i));
    if (dim.defined() && dim.value() == 1) {
      in_h1[i] = 1;
      h1_ids.push_back(static_cast<int>(i));
      d.h1.push_back(d.interior[i]);
    } else if (dim.defined() && dim.value() == 2) {
      in_h2[i] = 1;
      h2_ids.push_back(static_cast<int>(i));
      d.h2.push_back(d.interior[i]);
    } else {
      d.other.push_back(d.interior[i]);
    }
  }

  auto coords_of = [&](const std::vector<int>& ids) {
    std::vector<Coord> out;
    out.reserve(ids.size());
    for (int v : ids) out.push_back(d.interior[v]);
    return out;
  };

  std::vector<int> ridge_of(n, -1);
  for (const auto& comp : components_within(h2_ids, adj, in_h2)) {
    for (int v : comp) ridge_of[v] = static_cast<int>(d.ridges.size());
    d.ridges.push_back(coords_of(comp));
  }

  std::vector<std::vector<int>> bridge_comps;
  for (const auto& comp : components_within(h1_ids, adj, in_h1)) {
    bool has_endpoint = false;
    for (int v : comp) has_endpoint |= adj[v].size() == 1;
    if (has_endpoint) {
      d.branches.push_back(coords_of(comp));
    } else {
      bridge_comps.push_back(comp);
      d.bridges.push_back(coords_of(comp));
    }
  }

  // A bridge reaches a ridge through points of undetermined type only;
  // 1-dimensional points are never directly adjacent to 2-dimensional ones.
  d.ridge_bridge_graph = Graph(static_cast<int>(d.ridges.size()));
  for (const auto& comp : bridge_comps) {
    std::vector<char> seen(n, 0);
    std::deque<int> queue;
    for (int v : comp) {
      seen[v] = 1;
      queue.push_back(v);
    }
    std::vector<int> touched;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[v]) {
        if (seen[w]) continue;
        seen[w] = 1;
        if (in_h2[w]) {
          touched.push_back(ridge_of[w]);
        } else if (!in_h1[w]) {
          queue.push_back(w);
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t a = 0; a < touched.size(); ++a) {
      for (std::size_t b = a + 1; b < touched.size(); ++b) {
        if (!d.ridge_bridge_graph.has_edge(touched[a], touched[b]))
          d.ridge_bridge_graph.add_edge(touched[a], touched[b]);
      }
    }
    d.bridge_ridges.push_back(std::move(touched));
  }
  return d;
}

std::optional<std::pair<LatticeSubgraph, Coord>> prune_step(const LatticeSubgraph& g,
                                                            SphereSemantics semantics) {
  InteriorDecomposition d = decompose_interior(g);
  if (d.interior.size() <= 1) return std::nullopt;
  auto adj = interior_adjacency(g, d.interior);
  std::unordered_map<Coord, int, CoordHash> id;
  for (std::size_t i = 0; i < d.interior.size(); ++i) id.emplace(d.interior[i], static_cast<int>(i));

  std::vector<Coord> candidates;
  for (const auto& branch : d.branches) {
    for (Coord p : branch) {
      if (adj[id.at(p)].size() == 1) candidates.push_back(p);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  const int want_k = total_boundary_curvature(g, semantics);
  const int want_chi = euler_characteristic(g);
  for (Coord p : candidates) {
    if (auto next = try_remove(g, p, want_k, want_chi, semantics)) return std::make_pair(*next, p);
  }
  return std::nullopt;
}

std::optional<std::pair<LatticeSubgraph, Coord>> etch_step(const LatticeSubgraph& g,
                                                           SphereSemantics semantics) {
  InteriorDecomposition d = decompose_interior(g);
  if (d.interior.size() <= 1) return std::nullopt;

  const int want_k = total_boundary_curvature(g, semantics);
  const int want_chi = euler_characteristic(g);
  for (std::size_t r = 0; r < d.ridges.size(); ++r) {
    if (ridge_incident_bridges(d, static_cast<int>(r)) > 1) continue;
    for (Coord p : d.ridges[r]) {  // ridge points are already (l, k)-sorted
      if (auto next = try_remove(g, p, want_k, want_chi, semantics))
        return std::make_pair(*next, p);
    }
  }
  return std::nullopt;
}

ReductionTrace reduce_to_disc(const LatticeSubgraph& g, const ReduceOptions& options) {
  if (options.validate_input) {
    if (!check_domain(g).is_smooth) throw InputNotSmoothError();
    if (!is_simply_connected(g)) throw InputNotSimplyConnectedError();
  }
  LatticeSubgraph current = g;
  std::vector<ReductionStep> steps;
  while (interior_set(current).size() > 1) {
    StepKind kind = StepKind::Prune;
    auto step = prune_step(current, options.semantics);
    if (!step) {
      kind = StepKind::Etch;
      step = etch_step(current, options.semantics);
    }
    if (!step) break;
    current = std::move(step->first);
    steps.push_back({step->second, kind, total_boundary_curvature(current, options.semantics),
                     euler_characteristic(current),
                     static_cast<int>(interior_set(current).size())});
  }
  ReductionOutcome outcome = interior_set(current).size() == 1 ? ReductionOutcome::ReducedToDisc
                                                               : ReductionOutcome::Stuck;
  return ReductionTrace{std::move(steps), outcome, std::move(current)};
}

std::string trace_to_text(const ReductionTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReductionStep& s = trace.steps[i];
    out << "step=" << (i + 1) << " kind=" << (s.kind == StepKind::Prune ? "prune" : "etch")
        << " removed=" << s.removed.k << "," << s.removed.l << " K=" << s.total_curvature
        << " chi=" << s.chi << " interior=" << s.interior_size << "\n";
  }
  return out.str();
}

}  // namespace tricurv
