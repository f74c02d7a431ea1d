#include "tricurv/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tricurv/reduce.hpp"

namespace tricurv {

namespace {

std::string coord_list(const std::vector<Coord>& points) {
  std::ostringstream out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out << ";";
    out << points[i].k << "," << points[i].l;
  }
  return out.str();
}

Coord transform_by(Coord p, int which) {
  // 0..5 rotations, 6..11 rotations of the reflection.
  if (which >= 6) {
    p = reflect(p);
    which -= 6;
  }
  for (int i = 0; i < which; ++i) p = rotate60(p);
  return p;
}

std::vector<Coord> translate_to_origin(std::vector<Coord> points) {
  std::sort(points.begin(), points.end());
  Coord base = points.front();
  for (Coord& p : points) p = p - base;
  return points;
}

int component_count(const std::vector<Coord>& points, const Background& bg) {
  std::unordered_set<Coord, CoordHash> pending(points.begin(), points.end());
  int count = 0;
  while (!pending.empty()) {
    ++count;
    std::deque<Coord> queue{*pending.begin()};
    pending.erase(pending.begin());
    while (!queue.empty()) {
      Coord p = queue.front();
      queue.pop_front();
      for (Coord q : bg.neighbors(p)) {
        auto it = pending.find(q);
        if (it != pending.end()) {
          pending.erase(it);
          queue.push_back(q);
        }
      }
    }
  }
  return count;
}

}  // namespace

BoundsTooLargeError::BoundsTooLargeError(int requested_bound, int bound_limit)
    : std::runtime_error("bound " + std::to_string(requested_bound) + " exceeds the limit " +
                         std::to_string(bound_limit)),
      requested(requested_bound),
      limit(bound_limit) {}

std::vector<Coord> canonical_interior_form(const std::vector<Coord>& points,
                                           bool symmetry_reduction) {
  if (points.empty()) throw std::invalid_argument("canonical form of an empty set");
  std::vector<Coord> best = translate_to_origin(points);
  if (!symmetry_reduction) return best;
  for (int t = 1; t < 12; ++t) {
    std::vector<Coord> image;
    image.reserve(points.size());
    for (Coord p : points) image.push_back(transform_by(p, t));
    image = translate_to_origin(std::move(image));
    if (image < best) best = std::move(image);
  }
  return best;
}

std::vector<std::vector<Coord>> enumerate_interior_sets(const EnumerationSpec& spec) {
  if (!spec.background.is_plane())
    throw std::invalid_argument("enumeration is implemented for the plane background");
  if (spec.max_interior < 1) throw std::invalid_argument("max_interior must be positive");
  if (spec.max_interior > kMaxEnumerationInterior)
    throw BoundsTooLargeError(spec.max_interior, kMaxEnumerationInterior);

  // Level growth: every connected (n+1)-set is some connected n-set plus one
  // neighbour, so extending each representative by one adjacent point and
  // re-canonicalizing reaches every class exactly once.
  std::vector<std::vector<Coord>> out;
  std::set<std::vector<Coord>> level;
  level.insert({Coord{0, 0}});
  for (int size = 1; size <= spec.max_interior; ++size) {
    out.insert(out.end(), level.begin(), level.end());
    if (size == spec.max_interior) break;
    std::set<std::vector<Coord>> next;
    for (const auto& rep : level) {
      for (Coord p : rep) {
        for (Coord d : kUnitDirections) {
          Coord q = p + d;
          if (std::find(rep.begin(), rep.end(), q) != rep.end()) continue;
          std::vector<Coord> grown = rep;
          grown.push_back(q);
          next.insert(canonical_interior_form(grown, spec.symmetry_reduction));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<LatticeSubgraph> enumerate_smooth_domains(const EnumerationSpec& spec) {
  std::vector<LatticeSubgraph> out;
  for (const auto& interior : enumerate_interior_sets(spec)) {
    LatticeSubgraph g = reconstruct_from_interior(spec.background, interior);
    if (interior_set(g) != interior) continue;
    if (!check_domain(g).is_smooth) continue;
    out.push_back(std::move(g));
  }
  return out;
}

int VerificationReport::checks_passed() const {
  return gauss_bonnet.passed + umlaufsatz.passed + k1_identity.passed + interior_count.passed +
         reconstruction.passed + reduction.passed + audit.passed;
}

int VerificationReport::checks_failed() const {
  return gauss_bonnet.failed + umlaufsatz.failed + k1_identity.failed + interior_count.failed +
         reconstruction.failed + reduction.failed + audit.failed;
}

VerificationReport verify_theorems(const std::vector<LatticeSubgraph>& domains,
                                   SphereSemantics semantics) {
  VerificationReport report;
  for (const LatticeSubgraph& g : domains) {
    ++report.total;
    std::vector<Coord> interior = interior_set(g);
    const std::string tag = "interior={" + coord_list(interior) + "}";

    DomainReport dom = check_domain(g);
    if (dom.is_smooth) ++report.smooth;
    if (!dom.is_smooth) {
      report.failures.push_back("not-smooth: " + tag);
      continue;
    }
    const int chi = euler_characteristic(g);
    const bool sc = is_simply_connected(g);
    if (sc) ++report.simply_connected;

    const int k_total = total_boundary_curvature(g, semantics);
    auto check = [&](CheckCounter& counter, bool ok, const std::string& what) {
      if (ok) {
        ++counter.passed;
      } else {
        ++counter.failed;
        report.failures.push_back(what + ": " + tag);
      }
    };

    check(report.gauss_bonnet, k_total == 12 * chi,
          "gauss-bonnet K=" + std::to_string(k_total) + " chi=" + std::to_string(chi));
    if (sc) check(report.umlaufsatz, k_total == 12, "umlaufsatz K=" + std::to_string(k_total));

    int k1 = 0;
    bool k1_ok = false;
    try {
      k1 = k1_total(g);
      k1_ok = k1 == 6 * chi;
    } catch (const BadBoundaryError&) {
    }
    check(report.k1_identity, k1_ok, "k1-identity K1=" + std::to_string(k1));

    Graph plain = g.to_graph();
    const int f = static_cast<int>(faces(plain).size());
    const int e = g.edge_count();
    check(report.interior_count, static_cast<int>(interior.size()) == 2 * f - e + chi,
          "interior-count 2f-e+chi=" + std::to_string(2 * f - e + chi));

    check(report.reconstruction, reconstruct_from_interior(g.background(), interior) == g,
          "reconstruction");

    bool agree = true;
    Coord where{0, 0};
    for (Coord b : boundary_set(g)) {
      if (curvature_K(g, b, SphereSemantics::GeodesicInG) !=
          curvature_K(g, b, SphereSemantics::XDistanceRestricted)) {
        agree = false;
        where = b;
        break;
      }
    }
    if (agree) {
      ++report.semantics_agreement.passed;
    } else {
      ++report.semantics_agreement.failed;
      report.notes.push_back("semantics-disagree at " + std::to_string(where.k) + "," +
                             std::to_string(where.l) + ": " + tag);
    }

    if (sc) {
      ReduceOptions options;
      options.validate_input = false;  // smoothness and chi were just checked
      options.semantics = semantics;
      ReductionTrace trace = reduce_to_disc(g, options);
      bool reduced = trace.outcome == ReductionOutcome::ReducedToDisc;
      for (const ReductionStep& s : trace.steps) reduced &= s.total_curvature == 12 && s.chi == 1;
      check(report.reduction, reduced, "reduction-stuck");
    }

    const int k2 = k2_total(g, semantics);
    const int b = static_cast<int>(boundary_set(g).size());
    (k2 == 24 * chi ? report.k2_equal_24chi : report.k2_off_24chi)++;
    (k2 == 24 * chi + 6 * b ? report.k2_equal_24chi_plus_6b : report.k2_off_24chi_plus_6b)++;

    DomainRecord rec;
    rec.interior = interior;
    rec.chi = chi;
    rec.k_total = k_total;
    rec.k1_total = k1;
    rec.k2_total = k2;
    rec.boundary_size = b;
    rec.smooth = true;
    rec.simply_connected = sc;
    report.records.push_back(std::move(rec));
  }
  report.notes.push_back(
      "k2 vs 24chi: equal=" + std::to_string(report.k2_equal_24chi) +
      " off=" + std::to_string(report.k2_off_24chi) +
      "; vs 24chi+6b: equal=" + std::to_string(report.k2_equal_24chi_plus_6b) +
      " off=" + std::to_string(report.k2_off_24chi_plus_6b));
  return report;
}

VerificationReport audit_local_removals(int window_radius) {
  if (window_radius < 1) throw std::invalid_argument("window radius must be positive");
  if (window_radius > kMaxAuditRadius) throw BoundsTooLargeError(window_radius, kMaxAuditRadius);

  const Background bg = Background::plane();
  const Coord center{0, 0};
  std::vector<Coord> cells = bg.ball(center, window_radius);
  cells.erase(std::remove(cells.begin(), cells.end(), center), cells.end());
  const int m = static_cast<int>(cells.size());
  std::unordered_map<Coord, int, CoordHash> bit_of;
  for (int i = 0; i < m; ++i) bit_of.emplace(cells[i], i);

  // The 12 point symmetries fix the center and permute the window, so masks
  // are examined once per orbit.
  auto canonical_mask = [&](std::uint32_t mask) {
    std::uint32_t best = mask;
    for (int t = 1; t < 12; ++t) {
      std::uint32_t image = 0;
      for (int i = 0; i < m; ++i) {
        if (mask >> i & 1) image |= 1u << bit_of.at(transform_by(cells[i], t));
      }
      best = std::min(best, image);
    }
    return best;
  };

  VerificationReport report;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (canonical_mask(mask) != mask) continue;
    ++report.total;
    std::vector<Coord> interior{center};
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) interior.push_back(cells[i]);
    }
    std::sort(interior.begin(), interior.end());

    LatticeSubgraph g = reconstruct_from_interior(bg, interior);
    if (interior_set(g) != interior) continue;
    if (!check_domain(g).is_smooth) continue;
    ++report.smooth;

    std::vector<Coord> shrunk;
    for (Coord p : interior) {
      if (!(p == center)) shrunk.push_back(p);
    }
    if (shrunk.empty()) {
      ++report.audit.passed;  // the interior vanished: component count 1 -> 0
      continue;
    }
    LatticeSubgraph after = reconstruct_from_interior(bg, shrunk);
    const bool still_smooth =
        interior_set(after) == shrunk && check_domain(after).is_smooth;
    if (!still_smooth) {
      ++report.audit.passed;
      continue;
    }
    const int delta =
        total_boundary_curvature(after) - total_boundary_curvature(g);
    if (delta == 0 || component_count(shrunk, bg) != component_count(interior, bg)) {
      ++report.audit.passed;
    } else {
      ++report.audit.failed;
      report.failures.push_back("audit-violation dK=" + std::to_string(delta) + ": interior={" +
                                coord_list(interior) + "}");
    }
  }
  report.notes.push_back("audit radius=" + std::to_string(window_radius) +
                         " windows=" + std::to_string(report.total) +
                         " eligible=" + std::to_string(report.smooth) +
                         " violations=" + std::to_string(report.audit.failed));
  return report;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "domains=" << report.total << " smooth=" << report.smooth
      << " simply_connected=" << report.simply_connected << "\n";
  auto line = [&](const char* name, const CheckCounter& counter) {
    if (counter.passed || counter.failed)
      out << name << " passed=" << counter.passed << " failed=" << counter.failed << "\n";
  };
  line("gauss_bonnet", report.gauss_bonnet);
  line("umlaufsatz", report.umlaufsatz);
  line("k1_identity", report.k1_identity);
  line("interior_count", report.interior_count);
  line("reconstruction", report.reconstruction);
  line("semantics_agreement", report.semantics_agreement);
  line("reduction", report.reduction);
  line("audit", report.audit);
  for (const std::string& note : report.notes) out << "note: " << note << "\n";
  for (const std::string& failure : report.failures) out << "failure: " << failure << "\n";
  out << "checks passed=" << report.checks_passed() << " failed=" << report.checks_failed()
      << "\n";
  return out.str();
}

}  // namespace tricurv
