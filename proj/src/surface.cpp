#include "sp2/surface.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace sp2 {

void validate(const SurfaceDescriptor& d) {
  if (d.genus < 0 || d.internal_punctures < 0 || d.boundary_components < 0 || d.external_punctures < 0) {
    throw Error(ErrorCode::InvalidSurface, "surface counts must be non-negative");
  }
  if (d.external_punctures < d.boundary_components) {
    throw Error(ErrorCode::InvalidSurface, "every boundary component needs at least one puncture");
  }
  if (d.boundary_components == 0 && d.external_punctures != 0) {
    throw Error(ErrorCode::InvalidSurface, "external punctures require a boundary");
  }
  if (d.internal_punctures + d.external_punctures == 0) {
    throw Error(ErrorCode::InvalidSurface, "a punctured surface needs at least one puncture");
  }
  const bool disc = d.genus == 0 && d.boundary_components == 1 && d.internal_punctures == 0;
  if (disc) {
    if (d.external_punctures < 3) throw Error(ErrorCode::InvalidSurface, "a polygon needs at least three punctures");
    return;
  }
  if (d.euler_characteristic() >= 0) {
    throw Error(ErrorCode::InvalidSurface, "Euler characteristic must be negative");
  }
}

SurfaceStats surface_stats(const SurfaceDescriptor& d) {
  validate(d);
  const int chi = d.euler_characteristic();
  const int triangles = 4 * d.genus - 4 + 2 * d.internal_punctures + 2 * d.boundary_components + d.external_punctures;
  return {chi, triangles, d.external_punctures - 3 * chi, 1 - chi};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void check_side(const PolygonInput& in, SideRef s) {
  if (s.triangle < 0 || s.triangle >= static_cast<int>(in.triangles.size()) || s.side < 0 || s.side > 2) {
    throw Error(ErrorCode::BadPairing, "pairing refers to a missing side");
  }
}

}  // namespace

FundamentalPolygon FundamentalPolygon::build(const PolygonInput& input) {
  FundamentalPolygon p;
  p.input_ = input;
  p.triangles_ = input.triangles;
  const int nt = p.triangle_count();
  if (nt == 0) throw Error(ErrorCode::DisconnectedDomain, "polygon has no triangles");
  p.sides_.assign(nt, {});

  for (const auto& tri : p.triangles_) {
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      throw Error(ErrorCode::EulerMismatch, "triangle repeats a polygon corner");
    }
  }

  // Diagonals: sides whose corner ids appear reversed in another triangle.
  std::map<std::pair<int, int>, std::vector<SideRef>> by_corners;
  for (int t = 0; t < nt; ++t) {
    for (int s = 0; s < 3; ++s) by_corners[{p.corner(t, s), p.corner(t, s + 1)}].push_back({t, s});
  }
  std::vector<std::array<SideRef, 2>> diagonals;
  for (const auto& [key, list] : by_corners) {
    if (list.size() > 1) throw Error(ErrorCode::BadPairing, "a polygon side is listed twice with one orientation");
    auto it = by_corners.find({key.second, key.first});
    if (it == by_corners.end() || key.first > key.second) continue;
    const SideRef a = list.front();
    const SideRef b = it->second.front();
    if (a.triangle == b.triangle) throw Error(ErrorCode::BadPairing, "triangle shares a side with itself");
    diagonals.push_back(a.triangle < b.triangle ? std::array<SideRef, 2>{a, b} : std::array<SideRef, 2>{b, a});
  }
  std::sort(diagonals.begin(), diagonals.end());
  for (const auto& [lo, hi] : diagonals) {
    const int index = static_cast<int>(p.edges_.size());
    p.edges_.push_back({InternalEdge::Kind::Diagonal, "d" + std::to_string(index), lo, hi});
    p.sides_[lo.triangle][lo.side] = {SideKind::Diagonal, hi, index};
    p.sides_[hi.triangle][hi.side] = {SideKind::Diagonal, lo, index};
  }
  p.diagonal_count_ = static_cast<int>(diagonals.size());

  for (std::size_t k = 0; k < input.pairings.size(); ++k) {
    const auto [first, second] = input.pairings[k];
    check_side(input, first);
    check_side(input, second);
    if (first == second) throw Error(ErrorCode::BadPairing, "a side cannot be paired with itself");
    for (SideRef s : {first, second}) {
      if (p.side(s).kind != SideKind::External) {
        throw Error(ErrorCode::BadPairing, "side already belongs to a diagonal or another pairing");
      }
    }
    const int index = static_cast<int>(p.edges_.size());
    p.edges_.push_back({InternalEdge::Kind::Pairing, "p" + std::to_string(k), first, second});
    p.sides_[first.triangle][first.side] = {SideKind::Paired, second, index};
    p.sides_[second.triangle][second.side] = {SideKind::Paired, first, index};
  }

  // The diagonals must make the triangles a tree: a triangulated disc.
  UnionFind tri_components(nt);
  for (const auto& [lo, hi] : diagonals) tri_components.unite(lo.triangle, hi.triangle);
  for (int t = 0; t < nt; ++t) {
    if (tri_components.find(t) != 0) throw Error(ErrorCode::DisconnectedDomain, "triangles are not connected by diagonals");
  }
  if (p.diagonal_count_ != nt - 1) throw Error(ErrorCode::EulerMismatch, "polygon is not simply connected");

  std::set<int> ids;
  for (const auto& tri : p.triangles_) ids.insert(tri.begin(), tri.end());
  p.corner_ids_.assign(ids.begin(), ids.end());
  const int nv = static_cast<int>(p.corner_ids_.size());
  const int boundary_sides = 3 * nt - 2 * p.diagonal_count_;
  if (nv - (p.diagonal_count_ + boundary_sides) + nt != 1) {
    throw Error(ErrorCode::EulerMismatch, "polygon corners do not bound a disc");
  }

  auto local = [&](int corner_id) {
    return static_cast<int>(std::lower_bound(p.corner_ids_.begin(), p.corner_ids_.end(), corner_id) - p.corner_ids_.begin());
  };

  // Gluing reverses orientation: the start of one side meets the end of the other.
  UnionFind glue(nv);
  for (const auto& e : p.edges_) {
    if (e.kind != InternalEdge::Kind::Pairing) continue;
    glue.unite(local(p.corner(e.from.triangle, e.from.side)), local(p.corner(e.to.triangle, e.to.side + 1)));
    glue.unite(local(p.corner(e.from.triangle, e.from.side + 1)), local(p.corner(e.to.triangle, e.to.side)));
  }
  std::map<int, int> class_index;
  p.corner_puncture_.resize(nv);
  for (int i = 0; i < nv; ++i) {
    auto [it, inserted] = class_index.emplace(glue.find(i), static_cast<int>(class_index.size()));
    p.corner_puncture_[i] = it->second;
  }
  p.puncture_count_ = static_cast<int>(class_index.size());

  // Boundary of the glued surface: external sides between punctures.
  std::vector<int> external_degree(p.puncture_count_, 0);
  UnionFind boundary(p.puncture_count_);
  int external_sides = 0;
  for (int t = 0; t < nt; ++t) {
    for (int s = 0; s < 3; ++s) {
      if (p.sides_[t][s].kind != SideKind::External) continue;
      ++external_sides;
      const int a = p.corner_puncture_[local(p.corner(t, s))];
      const int b = p.corner_puncture_[local(p.corner(t, s + 1))];
      ++external_degree[a];
      ++external_degree[b];
      boundary.unite(a, b);
    }
  }
  std::set<int> boundary_components;
  int external_punctures = 0;
  for (int q = 0; q < p.puncture_count_; ++q) {
    if (external_degree[q] == 0) continue;
    if (external_degree[q] != 2) throw Error(ErrorCode::EulerMismatch, "glued boundary is not a union of circles");
    ++external_punctures;
    boundary_components.insert(boundary.find(q));
  }

  const int closed_euler = p.puncture_count_ - (static_cast<int>(p.edges_.size()) + external_sides) + nt;
  const int m = static_cast<int>(boundary_components.size());
  const int twice_genus = 2 - m - closed_euler;
  if (twice_genus < 0 || twice_genus % 2 != 0) throw Error(ErrorCode::EulerMismatch, "gluing does not give an orientable surface");
  p.descriptor_ = {twice_genus / 2, p.puncture_count_ - external_punctures, m, external_punctures};

  SurfaceStats stats;
  try {
    stats = surface_stats(p.descriptor_);
  } catch (const Error& e) {
    throw Error(ErrorCode::EulerMismatch, std::string("glued surface is not admissible: ") + e.what());
  }
  if (stats.triangles != nt || stats.internal_edges != static_cast<int>(p.edges_.size()) ||
      stats.pairings != p.pairing_count()) {
    throw Error(ErrorCode::EulerMismatch, "polygon counts disagree with the glued surface");
  }
  return p;
}

std::vector<int> FundamentalPolygon::diagonal_indices() const {
  std::vector<int> out(diagonal_count_);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<int> FundamentalPolygon::pairing_indices() const {
  std::vector<int> out(pairing_count());
  std::iota(out.begin(), out.end(), diagonal_count_);
  return out;
}

std::optional<int> FundamentalPolygon::find_edge(const std::string& id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id == id) return static_cast<int>(i);
  }
  return std::nullopt;
}

int FundamentalPolygon::puncture_of(int corner_id) const {
  auto it = std::lower_bound(corner_ids_.begin(), corner_ids_.end(), corner_id);
  if (it == corner_ids_.end() || *it != corner_id) throw Error(ErrorCode::DomainMismatch, "unknown polygon corner");
  return corner_puncture_[it - corner_ids_.begin()];
}

GammaGraph::GammaGraph(const FundamentalPolygon& polygon) {
  const int nt = polygon.triangle_count();
  const int nv = 3 * nt;
  top_.resize(nv);
  bottom_.resize(nv);
  right_.resize(nv);
  left_.resize(nv);
  adjacency_.resize(nv);
  for (int t = 0; t < nt; ++t) {
    for (int s = 0; s < 3; ++s) {
      const GammaVertex v = gamma_vertex(t, s);
      top_[v] = polygon.corner(t, s);
      bottom_[v] = polygon.corner(t, s + 1);
      right_[v] = polygon.corner(t, s + 2);
      const auto& info = polygon.side({t, s});
      if (info.partner) left_[v] = polygon.corner(info.partner->triangle, info.partner->side + 2);
    }
  }
  // Inside a triangle v -> v' whenever v^b = v'^t, i.e. side s -> side s + 1.
  for (int t = 0; t < nt; ++t) {
    for (int s = 0; s < 3; ++s) {
      edges_.push_back({GammaEdge::Kind::Turn, gamma_vertex(t, s), gamma_vertex(t, (s + 1) % 3)});
    }
  }
  for (int i : polygon.diagonal_indices()) {
    const auto& e = polygon.edges()[i];
    edges_.push_back({GammaEdge::Kind::Crossing, gamma_vertex(e.from.triangle, e.from.side),
                      gamma_vertex(e.to.triangle, e.to.side), i});
  }
  for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
    const auto& e = edges_[k];
    adjacency_[e.from].push_back({e.from, e.to, k, true});
    adjacency_[e.to].push_back({e.to, e.from, k, false});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(), [](const GammaStep& a, const GammaStep& b) { return a.to < b.to; });
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].to == list[i - 1].to) throw Error(ErrorCode::BadPairing, "graph has a multiple edge or two-cycle");
    }
  }
}

bool GammaGraph::is_connected() const {
  if (vertex_count() == 0) return true;
  return static_cast<int>(spanning_tree(*this, 0).order.size()) == vertex_count();
}

GammaGraph build_gamma(const FundamentalPolygon& polygon) { return GammaGraph(polygon); }

SpanningTree spanning_tree(const GammaGraph& graph, GammaVertex root) {
  SpanningTree tree;
  tree.parent_step.assign(graph.vertex_count(), std::nullopt);
  std::vector<bool> seen(graph.vertex_count(), false);
  std::deque<GammaVertex> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const GammaVertex v = queue.front();
    queue.pop_front();
    tree.order.push_back(v);
    for (const auto& step : graph.steps_from(v)) {
      if (seen[step.to]) continue;
      seen[step.to] = true;
      tree.parent_step[step.to] = step;
      queue.push_back(step.to);
    }
  }
  return tree;
}

std::vector<GammaStep> path_between(const GammaGraph& graph, GammaVertex from, GammaVertex to) {
  const int nv = graph.vertex_count();
  if (from < 0 || from >= nv || to < 0 || to >= nv) throw Error(ErrorCode::Unreachable, "vertex out of range");
  const auto tree = spanning_tree(graph, from);
  if (to != from && !tree.parent_step[to]) throw Error(ErrorCode::Unreachable, "vertices are not connected");
  std::vector<GammaStep> path;
  for (GammaVertex v = to; v != from; v = tree.parent_step[v]->from) path.push_back(*tree.parent_step[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace surfaces {

PolygonInput triangle() { return {{{0, 1, 2}}, {}}; }

PolygonInput quadrilateral() { return {{{0, 1, 2}, {0, 2, 3}}, {}}; }

PolygonInput punctured_torus() {
  // Square 0-1-2-3 with opposite sides identified by translations.
  return {{{0, 1, 2}, {0, 2, 3}}, {{SideRef{0, 0}, SideRef{1, 1}}, {SideRef{0, 1}, SideRef{1, 2}}}};
}

PolygonInput four_punctured_sphere() {
  // Faces ABC, ACD, ADB, BDC of a tetrahedron unfolded around ABC; the three
  // copies of D are corners 3, 4 and 5.
  return {{{0, 1, 2}, {0, 2, 3}, {0, 4, 1}, {1, 5, 2}},
          {{SideRef{1, 1}, SideRef{3, 1}}, {SideRef{1, 2}, SideRef{2, 0}}, {SideRef{2, 1}, SideRef{3, 0}}}};
}

PolygonInput genus_two_one_puncture() {
  PolygonInput in;
  for (int k = 0; k < 6; ++k) in.triangles.push_back({0, k + 1, k + 2});
  // Octagon side i joins corners i and i + 1; side 0 is (0, 0), sides 1..6
  // are side 1 of the fan triangles and side 7 is side 2 of the last one.
  in.pairings = {{SideRef{0, 0}, SideRef{1, 1}},
                 {SideRef{0, 1}, SideRef{2, 1}},
                 {SideRef{3, 1}, SideRef{5, 1}},
                 {SideRef{4, 1}, SideRef{5, 2}}};
  return in;
}

PolygonInput twice_punctured_monogon() {
  // Pentagon e a a^-1 b b^-1 with e external; the last triangle is self-folded.
  return {{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}, {{SideRef{0, 1}, SideRef{1, 1}}, {SideRef{2, 1}, SideRef{2, 2}}}};
}

}  // namespace surfaces

}  // namespace sp2
