#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sp2/surface.hpp"

using namespace sp2;

namespace {

ErrorCode build_error(const PolygonInput& in) {
  try {
    FundamentalPolygon::build(in);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("polygon was accepted");
  return ErrorCode::VerificationFailed;
}

int count_kind(const GammaGraph& g, GammaEdge::Kind kind) {
  int n = 0;
  for (const auto& e : g.edges()) n += e.kind == kind;
  return n;
}

}  // namespace

TEST_CASE("surface_stats examples") {
  CHECK(surface_stats({1, 1, 0, 0}) == SurfaceStats{-1, 2, 3, 2});
  CHECK(surface_stats({0, 0, 1, 3}) == SurfaceStats{1, 1, 0, 0});
  CHECK(surface_stats({0, 0, 1, 4}) == SurfaceStats{1, 2, 1, 0});
}

TEST_CASE("triangle count agrees with 4g - 4 + 2p_i + 2m + p_e") {
  for (int g = 0; g <= 3; ++g) {
    for (int pi = 0; pi <= 4; ++pi) {
      for (int m = 0; m <= 2; ++m) {
        for (int pe = m; pe <= m + 3; ++pe) {
          if (m == 0 && pe > 0) continue;
          const SurfaceDescriptor d{g, pi, m, pe};
          bool valid = true;
          try {
            validate(d);
          } catch (const Error&) {
            valid = false;
          }
          if (!valid) continue;
          const auto s = surface_stats(d);
          CHECK(s.triangles == 4 * g - 4 + 2 * pi + 2 * m + pe);
          CHECK(s.internal_edges == pe - 3 * s.euler_characteristic);
          CHECK(s.pairings == 1 - s.euler_characteristic);
          // Edges of a triangulation: 3T = 2 E_in + p_e.
          CHECK(3 * s.triangles == 2 * s.internal_edges + pe);
        }
      }
    }
  }
}

TEST_CASE("invalid descriptors") {
  CHECK_THROWS_AS(validate({0, 0, 0, 0}), Error);   // sphere
  CHECK_THROWS_AS(validate({0, 2, 0, 0}), Error);   // annulus-like sphere, chi = 0
  CHECK_THROWS_AS(validate({0, 0, 1, 2}), Error);   // bigon
  CHECK_THROWS_AS(validate({1, 0, 0, 0}), Error);   // closed torus
  CHECK_THROWS_AS(validate({0, 1, 2, 1}), Error);   // boundary component without puncture
  CHECK_THROWS_AS(validate({-1, 3, 0, 0}), Error);
  CHECK_NOTHROW(validate({0, 3, 0, 0}));
}

TEST_CASE("bundled polygons") {
  struct Case {
    PolygonInput input;
    SurfaceDescriptor expected;
  };
  const std::vector<Case> cases{{surfaces::triangle(), {0, 0, 1, 3}},
                                {surfaces::quadrilateral(), {0, 0, 1, 4}},
                                {surfaces::punctured_torus(), {1, 1, 0, 0}},
                                {surfaces::four_punctured_sphere(), {0, 4, 0, 0}},
                                {surfaces::genus_two_one_puncture(), {2, 1, 0, 0}},
                                {surfaces::twice_punctured_monogon(), {0, 2, 1, 1}}};
  for (const auto& c : cases) {
    const auto p = FundamentalPolygon::build(c.input);
    CHECK(p.descriptor() == c.expected);
    CHECK(p.triangle_count() == p.stats().triangles);
    CHECK(p.diagonal_count() + p.pairing_count() == p.stats().internal_edges);
    CHECK(p.pairing_count() == p.stats().pairings);
    CHECK(p.puncture_count() == c.expected.internal_punctures + c.expected.external_punctures);
  }
}

TEST_CASE("punctured torus polygon") {
  const auto p = FundamentalPolygon::build(surfaces::punctured_torus());
  REQUIRE(p.edges().size() == 3);
  CHECK(p.edges()[0].id == "d0");
  CHECK(p.edges()[1].id == "p0");
  CHECK(p.edges()[2].id == "p1");
  // All four polygon corners become the one puncture.
  std::set<int> punctures;
  for (int c : p.corner_ids()) punctures.insert(p.puncture_of(c));
  CHECK(punctures.size() == 1);
  CHECK(p.side({0, 2}).kind == SideKind::Diagonal);
  CHECK(p.side({0, 0}).kind == SideKind::Paired);
  CHECK(p.find_edge("p1").value() == 2);
  CHECK_FALSE(p.find_edge("p7").has_value());
}

TEST_CASE("build errors") {
  // Two triangles without a shared side.
  CHECK(build_error({{{0, 1, 2}, {3, 4, 5}}, {}}) == ErrorCode::DisconnectedDomain);
  CHECK(build_error({{}, {}}) == ErrorCode::DisconnectedDomain);
  // Pairing a missing side, a diagonal side, or one side twice.
  CHECK(build_error({{{0, 1, 2}, {0, 2, 3}}, {{SideRef{0, 3}, SideRef{1, 1}}}}) == ErrorCode::BadPairing);
  CHECK(build_error({{{0, 1, 2}, {0, 2, 3}}, {{SideRef{0, 2}, SideRef{1, 1}}}}) == ErrorCode::BadPairing);
  CHECK(build_error({{{0, 1, 2}, {0, 2, 3}}, {{SideRef{0, 0}, SideRef{1, 1}}, {SideRef{0, 0}, SideRef{1, 2}}}}) ==
        ErrorCode::BadPairing);
  CHECK(build_error({{{0, 1, 2}}, {{SideRef{0, 0}, SideRef{0, 0}}}}) == ErrorCode::BadPairing);
  // Corners repeated inside the disc.
  CHECK(build_error({{{0, 1, 0}}, {}}) == ErrorCode::EulerMismatch);
  // Gluing adjacent sides of a triangle gives a sphere with too few punctures.
  CHECK(build_error({{{0, 1, 2}}, {{SideRef{0, 0}, SideRef{0, 1}}}}) == ErrorCode::EulerMismatch);
  // Quadrilateral with one pair of opposite sides glued: an annulus with
  // chi = 0 is not admissible.
  CHECK(build_error({{{0, 1, 2}, {0, 2, 3}}, {{SideRef{0, 0}, SideRef{1, 1}}}}) == ErrorCode::EulerMismatch);
}

TEST_CASE("gamma graph counts") {
  const auto check = [](const PolygonInput& in, int vertices, int turns, int crossings) {
    const auto p = FundamentalPolygon::build(in);
    const auto g = build_gamma(p);
    CHECK(g.vertex_count() == vertices);
    CHECK(count_kind(g, GammaEdge::Kind::Turn) == turns);
    CHECK(count_kind(g, GammaEdge::Kind::Crossing) == crossings);
    CHECK(crossings == p.diagonal_count());
    CHECK(g.is_connected());
  };
  check(surfaces::triangle(), 3, 3, 0);
  check(surfaces::quadrilateral(), 6, 6, 1);
  check(surfaces::punctured_torus(), 6, 6, 1);
  check(surfaces::genus_two_one_puncture(), 18, 18, 5);
}

TEST_CASE("gamma graph structure") {
  for (const auto& in : {surfaces::triangle(), surfaces::quadrilateral(), surfaces::punctured_torus(),
                         surfaces::four_punctured_sphere(), surfaces::genus_two_one_puncture(),
                         surfaces::twice_punctured_monogon()}) {
    const auto p = FundamentalPolygon::build(in);
    const auto g = build_gamma(p);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edges()) {
      // No multiple edges and no two-cycles.
      CHECK(seen.insert({std::min(e.from, e.to), std::max(e.from, e.to)}).second);
      if (e.kind == GammaEdge::Kind::Turn) {
        CHECK(e.from / 3 == e.to / 3);
        CHECK(g.top(e.to) == g.bottom(e.from));
        CHECK(g.bottom(e.to) == g.right(e.from));
        CHECK(g.right(e.to) == g.top(e.from));
      } else {
        CHECK(e.from / 3 < e.to / 3);
        CHECK(g.top(e.to) == g.bottom(e.from));
        CHECK(g.bottom(e.to) == g.top(e.from));
        CHECK(g.right(e.to) == g.left(e.from).value());
        CHECK(g.left(e.to).value() == g.right(e.from));
      }
    }
    for (int t = 0; t < p.triangle_count(); ++t) {
      // Each triangle carries one directed 3-cycle through its vertices.
      int inside = 0;
      for (const auto& e : g.edges()) inside += e.kind == GammaEdge::Kind::Turn && e.from / 3 == t;
      CHECK(inside == 3);
      for (int s = 0; s < 3; ++s) {
        const GammaVertex v = gamma_vertex(t, s);
        CHECK(g.top(v) == p.corner(t, s));
        CHECK(g.bottom(v) == p.corner(t, s + 1));
        CHECK(g.right(v) == p.corner(t, s + 2));
        CHECK(g.left(v).has_value() == (p.side({t, s}).kind != SideKind::External));
      }
    }
  }
}

TEST_CASE("paths") {
  const auto p = FundamentalPolygon::build(surfaces::quadrilateral());
  const auto g = build_gamma(p);
  CHECK(path_between(g, 2, 2).empty());
  const auto one = path_between(g, 0, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].forward);
  // Two steps forward around the cycle are one step backward.
  const auto back = path_between(g, 0, 2);
  REQUIRE(back.size() == 1);
  CHECK_FALSE(back[0].forward);
  CHECK_THROWS_AS(path_between(g, 0, 99), Error);
  for (GammaVertex a = 0; a < g.vertex_count(); ++a) {
    for (GammaVertex b = 0; b < g.vertex_count(); ++b) {
      const auto path = path_between(g, a, b);
      GammaVertex at = a;
      for (const auto& step : path) {
        CHECK(step.from == at);
        at = step.to;
      }
      CHECK(at == b);
    }
  }
}

TEST_CASE("spanning tree reaches everything") {
  const auto p = FundamentalPolygon::build(surfaces::genus_two_one_puncture());
  const auto g = build_gamma(p);
  const auto tree = spanning_tree(g, 4);
  CHECK(tree.order.size() == 18);
  CHECK(tree.order.front() == 4);
  CHECK_FALSE(tree.parent_step[4].has_value());
  for (GammaVertex v = 0; v < 18; ++v) {
    if (v != 4) CHECK(tree.parent_step[v].has_value());
  }
}
