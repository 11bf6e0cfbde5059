#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sp2/error.hpp"

namespace sp2 {

/// Topological type of a punctured surface.
struct SurfaceDescriptor {
  int genus = 0;
  int internal_punctures = 0;
  int boundary_components = 0;
  int external_punctures = 0;

  int euler_characteristic() const { return 2 - 2 * genus - internal_punctures - boundary_components; }
  bool operator==(const SurfaceDescriptor&) const = default;
};

struct SurfaceStats {
  int euler_characteristic;
  int triangles;
  int internal_edges;
  int pairings;

  bool operator==(const SurfaceStats&) const = default;
};

/// Throws InvalidSurface unless the descriptor names a punctured surface.
void validate(const SurfaceDescriptor& d);

/// chi, #T = p_e - 2 chi, internal edges p_e - 3 chi and pairings 1 - chi.
SurfaceStats surface_stats(const SurfaceDescriptor& d);

/// Side s of triangle t joins corners s and s + 1 (mod 3).
struct SideRef {
  int triangle = 0;
  int side = 0;

  bool operator==(const SideRef&) const = default;
  auto operator<=>(const SideRef&) const = default;
};

enum class SideKind { Diagonal, Paired, External };

/// Internal edge of the glued surface: a diagonal of the polygon or a pair
/// of boundary sides glued together.
struct InternalEdge {
  enum class Kind { Diagonal, Pairing };
  Kind kind;
  std::string id;  ///< "d<k>" for diagonals, "p<k>" for pairings
  /// For diagonals the side in the earlier triangle; for pairings the first
  /// listed side. Crossing edges of the graph leave from this side.
  SideRef from;
  SideRef to;
};

struct SideInfo {
  SideKind kind = SideKind::External;
  std::optional<SideRef> partner;
  int edge = -1;  ///< index into FundamentalPolygon::edges(), -1 for external
};

struct PolygonInput {
  std::vector<std::array<int, 3>> triangles;           ///< counterclockwise corner ids
  std::vector<std::array<SideRef, 2>> pairings;
};

/// Triangulated fundamental domain with its boundary pairings, validated
/// against the topology of the glued surface.
class FundamentalPolygon {
 public:
  /// Throws DisconnectedDomain, BadPairing or EulerMismatch.
  static FundamentalPolygon build(const PolygonInput& input);

  int triangle_count() const { return static_cast<int>(triangles_.size()); }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const SideInfo& side(SideRef s) const { return sides_[s.triangle][s.side]; }
  int corner(int triangle, int index) const { return triangles_[triangle][((index % 3) + 3) % 3]; }

  /// Diagonals first (ordered by their earlier side), then pairings in input order.
  const std::vector<InternalEdge>& edges() const { return edges_; }
  std::vector<int> diagonal_indices() const;
  std::vector<int> pairing_indices() const;
  int diagonal_count() const { return diagonal_count_; }
  int pairing_count() const { return static_cast<int>(edges_.size()) - diagonal_count_; }
  std::optional<int> find_edge(const std::string& id) const;

  /// Distinct corner ids of the polygon, ascending.
  const std::vector<int>& corner_ids() const { return corner_ids_; }
  /// Puncture of the glued surface that a polygon corner maps to.
  int puncture_of(int corner_id) const;
  int puncture_count() const { return puncture_count_; }

  const SurfaceDescriptor& descriptor() const { return descriptor_; }
  SurfaceStats stats() const { return surface_stats(descriptor_); }
  const PolygonInput& input() const { return input_; }

 private:
  PolygonInput input_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::array<SideInfo, 3>> sides_;
  std::vector<InternalEdge> edges_;
  int diagonal_count_ = 0;
  std::vector<int> corner_ids_;
  std::vector<int> corner_puncture_;  // parallel to corner_ids_
  int puncture_count_ = 0;
  SurfaceDescriptor descriptor_;
};

/// Vertex (tau, r) of the graph Gamma_0: a point of triangle tau near side r.
using GammaVertex = int;

inline GammaVertex gamma_vertex(int triangle, int side) { return 3 * triangle + side; }
inline SideRef gamma_side(GammaVertex v) { return {v / 3, v % 3}; }

struct GammaEdge {
  enum class Kind { Turn, Crossing };
  Kind kind;
  GammaVertex from;
  GammaVertex to;
  int internal_edge = -1;  ///< polygon edge index for crossings
};

/// One step of a path; forward steps follow an oriented edge, backward steps
/// traverse it against its orientation.
struct GammaStep {
  GammaVertex from;
  GammaVertex to;
  int edge;
  bool forward;
};

class GammaGraph {
 public:
  explicit GammaGraph(const FundamentalPolygon& polygon);

  int vertex_count() const { return static_cast<int>(top_.size()); }
  const std::vector<GammaEdge>& edges() const { return edges_; }

  /// Corner ids: v^t, v^b, v^r and, for sides that are not external, v^l.
  int top(GammaVertex v) const { return top_[v]; }
  int bottom(GammaVertex v) const { return bottom_[v]; }
  int right(GammaVertex v) const { return right_[v]; }
  std::optional<int> left(GammaVertex v) const { return left_[v]; }

  /// Incident steps of v ordered by neighbour index.
  const std::vector<GammaStep>& steps_from(GammaVertex v) const { return adjacency_[v]; }

  bool is_connected() const;

 private:
  std::vector<GammaEdge> edges_;
  std::vector<int> top_, bottom_, right_;
  std::vector<std::optional<int>> left_;
  std::vector<std::vector<GammaStep>> adjacency_;
};

GammaGraph build_gamma(const FundamentalPolygon& polygon);

/// Breadth-first shortest path using edges in either direction; ties broken
/// by vertex index. Throws Unreachable.
std::vector<GammaStep> path_between(const GammaGraph& graph, GammaVertex from, GammaVertex to);

/// Breadth-first spanning tree from the root: for every other vertex, the step
/// through which it was first reached. Order of discovery is returned.
struct SpanningTree {
  std::vector<GammaVertex> order;
  std::vector<std::optional<GammaStep>> parent_step;
};
SpanningTree spanning_tree(const GammaGraph& graph, GammaVertex root);

namespace surfaces {

PolygonInput triangle();
PolygonInput quadrilateral();
PolygonInput punctured_torus();
/// Four-punctured sphere from the boundary of a tetrahedron.
PolygonInput four_punctured_sphere();
/// Fan-triangulated octagon with the a b a^-1 b^-1 c d c^-1 d^-1 gluing.
PolygonInput genus_two_one_puncture();
/// Disc with two internal punctures and one boundary puncture.
PolygonInput twice_punctured_monogon();

}  // namespace surfaces

}  // namespace sp2
