#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sp2/isotropic.hpp"
#include "support.hpp"

using namespace sp2;
using namespace sp2::test;

namespace {

// Random Lagrangian: image of l+ under a random group element.
IsotropicLine random_line(const AlgebraDescriptor& d, Rng& rng) {
  return act(sample_sp2(d, 4, rng), IsotropicLine::plus(d));
}

// Triple in normal form (l+, l-, (b, 1)) moved by a random g.
std::array<IsotropicLine, 3> maximal_triple(const AlgebraDescriptor& d, Rng& rng) {
  const auto g = sample_sp2(d, 4, rng);
  const auto b = sample(d, SampleKind::Positive, rng);
  return {act(g, IsotropicLine::plus(d)), act(g, IsotropicLine::minus(d)), act(g, IsotropicLine::graph(b))};
}

double det2(double a1, double a2, double b1, double b2) { return a1 * b2 - a2 * b1; }

}  // namespace

TEST_CASE("line construction") {
  const auto d = real(2);
  CHECK_THROWS_AS(IsotropicLine(AlgebraElement::zero(d), AlgebraElement::zero(d)), Error);
  // (1, y) is isotropic exactly when y is symmetric.
  CHECK_THROWS_AS(IsotropicLine(AlgebraElement::identity(d), rmat(2, {0, 1, 0, 0})), Error);
  CHECK_NOTHROW(IsotropicLine(AlgebraElement::identity(d), rmat(2, {0, 1, 1, 0})));
  // Rank one representative is not regular.
  CHECK_THROWS_AS(IsotropicLine(rmat(2, {1, 0, 0, 0}), AlgebraElement::zero(d)), Error);
}

TEST_CASE("lines are invariant under right scaling") {
  Rng rng(1);
  for (const auto& d : all_kinds(3)) {
    const auto l = random_line(d, rng);
    const auto r = sample(d, SampleKind::Invertible, rng);
    const IsotropicLine scaled(l.representative() * r);
    CHECK(same_line(l, scaled));
    CHECK(line_distance(l, scaled) < 1e-12);
    CHECK_FALSE(same_line(IsotropicLine::plus(d), IsotropicLine::minus(d)));
  }
}

TEST_CASE("is_transverse examples") {
  Rng rng(2);
  for (const auto& d : all_kinds(2)) {
    CHECK(is_transverse(IsotropicLine::plus(d), IsotropicLine::minus(d)));
    CHECK_FALSE(is_transverse(IsotropicLine::plus(d), IsotropicLine::plus(d)));
    CHECK(is_transverse(IsotropicLine::minus(d), IsotropicLine::ell(sample(d, SampleKind::Positive, rng))));
    // Transversality is invariant under the action.
    const auto l = random_line(d, rng);
    const auto m = random_line(d, rng);
    const auto g = sample_sp2(d, 4, rng);
    CHECK(is_transverse(act(g, l), act(g, m)) == is_transverse(l, m));
    CHECK_FALSE(is_transverse(act(g, l), act(g, l)));
  }
}

TEST_CASE("act examples") {
  Rng rng(3);
  for (const auto& d : all_kinds(2)) {
    const auto l = random_line(d, rng);
    CHECK(same_line(act(SymplecticElement::identity(d), l), l));
    CHECK(same_line(act(SymplecticElement::omega(d), IsotropicLine::plus(d)), IsotropicLine::minus(d)));
    CHECK(same_line(act(SymplecticElement::turn(d), IsotropicLine::minus(d)), IsotropicLine::plus(d)));
    const auto g = sample_sp2(d, 4, rng);
    const auto h = sample_sp2(d, 4, rng);
    CHECK(same_line(act(g * h, l), act(g, act(h, l))));
  }
}

TEST_CASE("normalize_pair") {
  Rng rng(4);
  for (const auto& d : all_kinds(3)) {
    const auto plus = IsotropicLine::plus(d);
    const auto minus = IsotropicLine::minus(d);
    auto g = normalize_pair(plus, minus);
    CHECK(same_line(act(g, plus), plus));
    CHECK(same_line(act(g, minus), minus));
    g = normalize_pair(minus, plus);
    CHECK(same_line(act(g, minus), plus));
    CHECK(same_line(act(g, plus), minus));
    const auto g0 = sample_sp2(d, 5, rng);
    g = normalize_pair(act(g0, plus), act(g0, minus));
    CHECK(same_line(act(g, act(g0, plus)), plus));
    CHECK(same_line(act(g, act(g0, minus)), minus));
    CHECK_THROWS_AS(normalize_pair(plus, plus), Error);
  }
}

TEST_CASE("triple_invariant examples") {
  Rng rng(5);
  for (const auto& d : all_kinds(2)) {
    const auto one = AlgebraElement::identity(d);
    const auto b = triple_invariant(IsotropicLine::plus(d), IsotropicLine::minus(d), IsotropicLine::one(d));
    CHECK(relative_distance(b, one) < 1e-14);
    const auto neg = triple_invariant(IsotropicLine::plus(d), IsotropicLine::minus(d), IsotropicLine::graph(-one));
    CHECK(relative_distance(neg, -one) < 1e-14);
    CHECK_THROWS_AS(triple_invariant(IsotropicLine::plus(d), IsotropicLine::minus(d), IsotropicLine::plus(d)), Error);
  }
}

TEST_CASE("maximality examples and invariance") {
  Rng rng(6);
  for (const auto& d : all_kinds(3)) {
    const auto plus = IsotropicLine::plus(d);
    const auto minus = IsotropicLine::minus(d);
    CHECK(is_maximal_triple(plus, minus, IsotropicLine::one(d)));
    CHECK_FALSE(is_maximal_triple(plus, minus, IsotropicLine::graph(-AlgebraElement::identity(d))));
    for (int k = 0; k < 20; ++k) {
      const auto [l1, l2, l3] = maximal_triple(d, rng);
      const auto g = sample_sp2(d, 4, rng);
      CHECK(is_maximal_triple(l1, l2, l3));
      CHECK(is_maximal_triple(act(g, l1), act(g, l2), act(g, l3)));
      // Cyclic rotations keep maximality; swapping two lines reverses it.
      CHECK(is_maximal_triple(l2, l3, l1));
      CHECK(is_maximal_triple(l3, l1, l2));
      CHECK_FALSE(is_maximal_triple(l2, l1, l3));
    }
  }
}

TEST_CASE("maximality on Mat(1,R) is cyclic orientation of RP^1") {
  Rng rng(7);
  std::uniform_real_distribution<double> angle(0.0, 3.14159265358979);
  int checked = 0;
  while (checked < 100) {
    double x[3][2];
    for (auto& v : x) {
      const double t = angle(rng);
      v[0] = std::cos(t);
      v[1] = std::sin(t);
    }
    // Orientation sign invariant under rescaling of each representative.
    const double s = det2(x[0][0], x[0][1], x[1][0], x[1][1]) * det2(x[1][0], x[1][1], x[2][0], x[2][1]) *
                     det2(x[2][0], x[2][1], x[0][0], x[0][1]);
    if (std::abs(s) < 1e-6) continue;
    std::array<IsotropicLine, 3> lines{IsotropicLine(rmat(1, {x[0][0]}), rmat(1, {x[0][1]})),
                                       IsotropicLine(rmat(1, {x[1][0]}), rmat(1, {x[1][1]})),
                                       IsotropicLine(rmat(1, {x[2][0]}), rmat(1, {x[2][1]}))};
    CHECK(is_maximal_triple(lines[0], lines[1], lines[2]) == (s > 0));
    ++checked;
  }
}

TEST_CASE("normalize_triple") {
  Rng rng(8);
  for (const auto& d : all_kinds(3)) {
    const auto plus = IsotropicLine::plus(d);
    const auto minus = IsotropicLine::minus(d);
    const auto one = IsotropicLine::one(d);
    auto check_images = [&](const IsotropicLine& a, const IsotropicLine& b, const IsotropicLine& c) {
      const auto g = normalize_triple(a, b, c);
      CHECK(same_line(act(g, a), plus));
      CHECK(same_line(act(g, b), minus));
      CHECK(same_line(act(g, c), one));
    };
    check_images(plus, minus, one);
    check_images(plus, minus, IsotropicLine::graph(sample(d, SampleKind::Positive, rng)));
    for (int k = 0; k < 10; ++k) {
      const auto [l1, l2, l3] = maximal_triple(d, rng);
      check_images(l1, l2, l3);
    }
    CHECK_THROWS_AS(normalize_triple(plus, minus, IsotropicLine::graph(-AlgebraElement::identity(d))), Error);
  }
}

TEST_CASE("quadruple_invariant") {
  Rng rng(9);
  for (const auto& d : all_kinds(3)) {
    const auto plus = IsotropicLine::plus(d);
    const auto minus = IsotropicLine::minus(d);
    const auto one = IsotropicLine::one(d);
    const auto id = AlgebraElement::identity(d);
    const auto ones = canonical_spectrum(quadruple_invariant(plus, IsotropicLine::ell(id), minus, one));
    for (int k = 0; k < ones.size(); ++k) CHECK(ones(k) == doctest::Approx(1.0));
    for (int k = 0; k < 10; ++k) {
      const auto a0 = sample(d, SampleKind::Positive, rng);
      const auto a = quadruple_invariant(plus, IsotropicLine::ell(a0), minus, one);
      // The normal form fixes the gauge completely here, so a equals a0.
      CHECK(relative_distance(a, a0) < 1e-10);
      const auto g = sample_sp2(d, 4, rng);
      const auto moved = quadruple_invariant(act(g, plus), act(g, IsotropicLine::ell(a0)), act(g, minus), act(g, one));
      CHECK((canonical_spectrum(moved) - canonical_spectrum(a0)).norm() < 1e-8 * canonical_spectrum(a0).norm());
    }
    CHECK_THROWS_AS(quadruple_invariant(plus, IsotropicLine::ell(-id), minus, one), Error);
  }
}
