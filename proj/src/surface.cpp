#include <gentle/error.hpp>
#include <gentle/surface.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>

namespace gentle {

bool BoundaryWalk::fully_stopped() const { return marked_count() == 0; }

int BoundaryWalk::marked_count() const {
  return static_cast<int>(std::count_if(corridors.begin(), corridors.end(),
                                        [](const Corridor& c) { return c.side == CorridorSide::Marked; }));
}

int BoundaryWalk::far_count() const { return static_cast<int>(corridors.size()) - marked_count(); }

namespace {

// Side of a permitted thread that begins at the half-edge h with an empty
// incoming slot: the side holding h's incoming slot.
int side_through(const HalfEdge& h) { return h.end == 0 ? 1 : 0; }

// Half-edge holding the empty outgoing slot of a side: side A pairs with
// the outgoing slot of end 0, side B with end 1.
HalfEdge missing_out(int vertex, int side) { return {vertex, side == 0 ? 0 : 1}; }

void far_corridors(const GentleAlgebra& alg, const Thread& t, std::vector<Corridor>& out) {
  for (auto it = t.arrows.rbegin(); it != t.arrows.rend(); ++it) {
    const Arrow& a = alg.arrow(*it);
    out.push_back(Corridor{CorridorSide::Far, {a.target, a.source}, {*it}});
  }
}

}  // namespace

DissectedSurface build_surface(const GentleAlgebra& alg) {
  DissectedSurface s;
  s.edge_count = alg.vertex_count();
  s.threads = threads(alg);
  for (const auto& t : s.threads.permitted)
    if (t.cyclic)
      throw Error(ErrorKind::UnstoppedComponent,
                  "relation-free cycle through vertex '" + alg.vertex_names()[static_cast<std::size_t>(t.anchor())] +
                      "' leaves a boundary component without stops");

  std::map<HalfEdge, int> by_last;
  for (std::size_t i = 0; i < s.threads.forbidden.size(); ++i) {
    const Thread& t = s.threads.forbidden[i];
    DotVertex dot;
    for (std::size_t k = 0; k < t.vertices.size(); ++k) dot.fan.push_back({t.vertices[k], t.slots[k]});
    dot.arrows = t.arrows;
    dot.cyclic = t.cyclic;
    if (!t.cyclic) by_last[dot.fan.back()] = static_cast<int>(i);
    s.dot_vertices.push_back(std::move(dot));
  }
  std::map<std::pair<int, int>, int> permitted_from;
  for (std::size_t i = 0; i < s.threads.permitted.size(); ++i) {
    const Thread& t = s.threads.permitted[i];
    permitted_from[{t.vertices.front(), t.slots.front()}] = static_cast<int>(i);
  }

  std::vector<bool> used(s.threads.forbidden.size(), false);
  for (std::size_t start = 0; start < s.threads.forbidden.size(); ++start) {
    if (used[start] || s.threads.forbidden[start].cyclic) continue;
    BoundaryWalk walk;
    walk.id = static_cast<int>(s.walks.size());
    std::size_t cur = start;
    do {
      used[cur] = true;
      const Thread& f = s.threads.forbidden[cur];
      far_corridors(alg, f, walk.corridors);
      const HalfEdge h{f.vertices.front(), f.slots.front()};
      const Thread& p = s.threads.permitted[static_cast<std::size_t>(permitted_from.at({h.vertex, side_through(h)}))];
      walk.corridors.push_back(Corridor{CorridorSide::Marked, {p.vertices.front(), p.vertices.back()}, p.arrows});
      cur = static_cast<std::size_t>(by_last.at(missing_out(p.vertices.back(), p.slots.back())));
    } while (cur != start);
    s.walks.push_back(std::move(walk));
  }
  for (std::size_t i = 0; i < s.threads.forbidden.size(); ++i) {
    if (!s.threads.forbidden[i].cyclic) continue;
    BoundaryWalk walk;
    walk.id = static_cast<int>(s.walks.size());
    far_corridors(alg, s.threads.forbidden[i], walk.corridors);
    s.walks.push_back(std::move(walk));
  }
  return s;
}

const std::vector<BoundaryWalk>& boundary_walks(const DissectedSurface& s) { return s.walks; }

int winding_number(const BoundaryWalk& w, const std::vector<int>& degrees) {
  int total = 0;
  for (const auto& c : w.corridors) {
    int len = 0;
    for (int a : c.sigma) len += degrees[static_cast<std::size_t>(a)];
    total += (c.side == CorridorSide::Marked ? 1 : -1) * (1 - len);
  }
  return total;
}

namespace {

std::vector<int> degrees_of(const GentleAlgebra& alg) {
  std::vector<int> d;
  for (const auto& a : alg.arrows()) d.push_back(a.degree);
  return d;
}

SurfaceInvariants invariants_of(const GentleAlgebra& alg, const DissectedSurface& s) {
  SurfaceInvariants inv;
  const std::vector<int> degrees = degrees_of(alg);
  for (const auto& w : s.walks) {
    const int omega = winding_number(w, degrees);
    inv.components.push_back(w.fully_stopped() ? BoundaryComponent::fully_stopped(omega)
                                               : BoundaryComponent::mixed(w.marked_count(), omega));
  }
  const int b = inv.mixed_count();
  const int twice_genus = 2 - b - s.euler_characteristic();
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw Error(ErrorKind::GenusNotIntegral, "Euler characteristic " + std::to_string(s.euler_characteristic()) +
                                                 " with " + std::to_string(b) + " boundary components");
  inv.genus = twice_genus / 2;
  return inv;
}

}  // namespace

SurfaceInvariants surface_invariants(const GentleAlgebra& alg) { return invariants_of(alg, build_surface(alg)); }

std::vector<std::pair<int, int>> ag_pairs(const GentleAlgebra& alg) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : surface_invariants(alg).components)
    if (c.kind == ComponentKind::Mixed) out.emplace_back(c.stops, c.stops - *c.winding);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> boundary_parallel(const GentleAlgebra& alg) {
  const DissectedSurface s = build_surface(alg);
  std::vector<bool> out(static_cast<std::size_t>(alg.vertex_count()), false);
  if (invariants_of(alg, s).is_disc()) {
    std::fill(out.begin(), out.end(), true);
    return out;
  }
  for (const auto& t : s.threads.forbidden)
    if (t.trivial() && !t.cyclic) out[static_cast<std::size_t>(t.anchor())] = true;
  return out;
}

std::string surface_report_json(const GentleAlgebra& alg) {
  const DissectedSurface s = build_surface(alg);
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(invariants_to_json(invariants_of(alg, s)));
  const auto& names = alg.vertex_names();
  doc["walks"] = nlohmann::ordered_json::array();
  for (const auto& w : s.walks) {
    nlohmann::ordered_json jw = nlohmann::ordered_json::array();
    for (const auto& c : w.corridors) {
      nlohmann::ordered_json jc;
      jc["edges"] = {names[static_cast<std::size_t>(c.edges.first)], names[static_cast<std::size_t>(c.edges.second)]};
      nlohmann::ordered_json sigma = nlohmann::ordered_json::array();
      for (int a : c.sigma) sigma.push_back(alg.arrow(a).id);
      jc["sigma"] = sigma;
      jc["side"] = c.side == CorridorSide::Marked ? "marked" : "far";
      jw.push_back(jc);
    }
    doc["walks"].push_back(jw);
  }
  return doc.dump();
}

}  // namespace gentle
