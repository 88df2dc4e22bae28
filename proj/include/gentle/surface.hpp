#pragma once

// Ribbon-graph model of a gentle presentation.  Each forbidden thread is a
// dot-vertex whose fan lists the half-edges it passes through; each quiver
// vertex is an edge joining the two fans that contain its half-edges.
// Boundary walks alternate between fans (far-side corridors, one per arrow
// of the fan's thread) and permitted threads (marked-side corridors, one per
// stop).

#include <gentle/algebra.hpp>
#include <gentle/invariants.hpp>

#include <string>
#include <utility>
#include <vector>

namespace gentle {

enum class CorridorSide { Marked, Far };

struct Corridor {
  CorridorSide side = CorridorSide::Marked;
  /// Quiver vertices (edges of the ribbon graph) at both ends.
  std::pair<int, int> edges;
  /// Connecting path; empty for a trivial permitted thread.
  std::vector<int> sigma;
};

struct BoundaryWalk {
  int id = 0;
  std::vector<Corridor> corridors;

  bool fully_stopped() const;
  int marked_count() const;
  int far_count() const;
};

struct DotVertex {
  std::vector<HalfEdge> fan;
  std::vector<int> arrows;
  bool cyclic = false;
};

struct DissectedSurface {
  int edge_count = 0;
  std::vector<DotVertex> dot_vertices;
  std::vector<BoundaryWalk> walks;
  ThreadDecomposition threads;

  int euler_characteristic() const { return static_cast<int>(dot_vertices.size()) - edge_count; }
};

/// Throws Error(UnstoppedComponent) when a permitted thread closes up, i.e.
/// the algebra is infinite dimensional and the surface has an unstopped
/// boundary component.
DissectedSurface build_surface(const GentleAlgebra& alg);
const std::vector<BoundaryWalk>& boundary_walks(const DissectedSurface& s);
int winding_number(const BoundaryWalk& w, const std::vector<int>& degrees);
SurfaceInvariants surface_invariants(const GentleAlgebra& alg);
/// Sorted pairs (m, m - w) over mixed components.
std::vector<std::pair<int, int>> ag_pairs(const GentleAlgebra& alg);
/// Vertices whose dual arc cuts off a boundary segment.
std::vector<bool> boundary_parallel(const GentleAlgebra& alg);

/// Invariants JSON extended with a "walks" array.
std::string surface_report_json(const GentleAlgebra& alg);

}  // namespace gentle
