#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sp2/symplectic.hpp"
#include "support.hpp"

using namespace sp2;
using namespace sp2::test;

namespace {

Mat2 real2(double a, double b, double c, double d) {
  return Mat2{rmat(1, {a}), rmat(1, {b}), rmat(1, {c}), rmat(1, {d})};
}

Vec2 random_vec(const AlgebraDescriptor& d, Rng& rng) {
  return {sample(d, SampleKind::General, rng), sample(d, SampleKind::General, rng)};
}

}  // namespace

TEST_CASE("is_sp2 examples") {
  for (const auto& d : all_kinds(2)) {
    CHECK(is_sp2(Mat2::identity(d)));
    CHECK(is_sp2(Mat2::omega(d)));
    const auto one = AlgebraElement::identity(d);
    const auto zero = AlgebraElement::zero(d);
    CHECK(is_sp2(Mat2{-one, one, -one, zero}));
    CHECK_FALSE(is_sp2(Mat2::identity(d) * 2.0));
    CHECK_THROWS_AS(SymplecticElement(Mat2::identity(d) * 2.0), Error);
  }
  CHECK_THROWS_AS(is_sp2(Mat2{rmat(1, {1}), rmat(1, {0}), rmat(1, {0}), AlgebraElement::identity(cplx(1))}), Error);
}

TEST_CASE("Sp2 over Mat(1,R) is SL(2,R)") {
  Rng rng(1);
  std::normal_distribution<double> g;
  for (int k = 0; k < 200; ++k) {
    const double a = g(rng), b = g(rng), c = g(rng);
    if (std::abs(a) < 0.1) continue;
    const double d = (1 + b * c) / a;
    CHECK(is_sp2(real2(a, b, c, d)));
    CHECK_FALSE(is_sp2(real2(a, b, c, d * 1.01 + 0.01)));
  }
}

TEST_CASE("is_sp2_lie examples") {
  Rng rng(2);
  for (const auto& d : all_kinds(3)) {
    const auto zero = AlgebraElement::zero(d);
    CHECK(is_sp2_lie(Mat2::zero(d)));
    const auto x = sample(d, SampleKind::General, rng);
    CHECK(is_sp2_lie(Mat2{x, zero, zero, -sigma(x)}));
    CHECK_FALSE(is_sp2_lie(Mat2{zero, sample(d, SampleKind::General, rng), zero, zero}));
    const Mat2 lie{x, sample(d, SampleKind::Symmetric, rng), sample(d, SampleKind::Symmetric, rng), -sigma(x)};
    CHECK(is_sp2_lie(lie));
    CHECK(lie_form_defect(lie) < 1e-13);
    // The truncated exponential satisfies the group equations to O(t^2).
    for (double t : {1e-2, 1e-3}) {
      const Mat2 approx = Mat2::identity(d) + lie * t;
      const Mat2 defect = approx.sigma_transpose() * Mat2::omega(d) * approx - Mat2::omega(d);
      CHECK(defect.norm() < 10 * t * t * lie.norm() * lie.norm());
    }
  }
}

TEST_CASE("is_ksp2 examples") {
  for (const auto& d : all_kinds(2)) {
    CHECK(is_ksp2(SymplecticElement::identity(d)));
    CHECK(is_ksp2(SymplecticElement::omega(d)));
  }
  CHECK_FALSE(is_ksp2(SymplecticElement(real2(1, 1, 0, 1))));
  Rng rng(3);
  for (const auto& d : all_kinds(3)) CHECK(is_ksp2(sample_ksp2(d, 10, rng)));
}

TEST_CASE("group operations") {
  Rng rng(4);
  for (const auto& d : all_kinds(3)) {
    const auto om = SymplecticElement::omega(d);
    CHECK(relative_distance((om * om).matrix(), Mat2::identity(d) * -1.0) == 0.0);
    const auto turn = SymplecticElement::turn(d);
    CHECK(relative_distance(inverse(turn).matrix(), (turn * turn).matrix()) < 1e-15);
    CHECK(relative_distance((turn * turn * turn).matrix(), Mat2::identity(d)) < 1e-15);
    for (int k = 0; k < 20; ++k) {
      const auto g = sample_sp2(d, 6, rng);
      CHECK(is_sp2(g.matrix()));
      CHECK(relative_distance((inverse(g) * g).matrix(), Mat2::identity(d)) < 1e-10);
      // Explicit inverse against a generic linear solve on the embedding.
      const CMatrix inv = g.matrix().embedded().inverse();
      CHECK((inverse(g).matrix().embedded() - inv).norm() < 1e-9 * inv.norm());
    }
  }
}

TEST_CASE("form preservation") {
  Rng rng(5);
  for (const auto& d : all_kinds(2)) {
    for (int k = 0; k < 30; ++k) {
      const auto g = sample_sp2(d, 5, rng);
      const auto x = random_vec(d, rng);
      const auto y = random_vec(d, rng);
      const auto before = omega(x, y);
      const auto after = omega(g * x, g * y);
      CHECK(relative_distance(before, after) < 1e-9 * std::max(1.0, g.matrix().norm() * g.matrix().norm()));
    }
  }
}

TEST_CASE("generators") {
  Rng rng(6);
  for (const auto& d : all_kinds(2)) {
    CHECK(is_sp2(SymplecticElement::levi(sample(d, SampleKind::Invertible, rng)).matrix()));
    CHECK(is_sp2(SymplecticElement::upper_unipotent(sample(d, SampleKind::Symmetric, rng)).matrix()));
    CHECK(is_sp2(SymplecticElement::lower_unipotent(sample(d, SampleKind::Symmetric, rng)).matrix()));
    CHECK_THROWS_AS(SymplecticElement::upper_unipotent(sample(d, SampleKind::General, rng)), Error);
  }
}

TEST_CASE("mobius action examples") {
  Rng rng(7);
  for (const auto& d : all_kinds(2)) {
    const TubePoint z(sample(d, SampleKind::Symmetric, rng), sample(d, SampleKind::Positive, rng));
    const auto same = mobius_act(SymplecticElement::identity(d), z);
    CHECK(relative_distance(same.real_part(), z.real_part()) < 1e-14);
    CHECK(relative_distance(same.imag_part(), z.imag_part()) < 1e-14);

    const auto i = mobius_act(SymplecticElement::omega(d), TubePoint::i(d));
    CHECK(i.real_part().norm() < 1e-14);
    CHECK(relative_distance(i.imag_part(), AlgebraElement::identity(d)) < 1e-14);

    const auto y = sample(d, SampleKind::Symmetric, rng);
    const auto shifted = mobius_act(SymplecticElement::upper_unipotent(y), z);
    CHECK(relative_distance(shifted.real_part(), z.real_part() + y) < 1e-13);
    CHECK(relative_distance(shifted.imag_part(), z.imag_part()) < 1e-13);
  }
  CHECK_THROWS_AS(TubePoint(rmat(1, {0}), rmat(1, {-1})), Error);
}

TEST_CASE("mobius action on Mat(1,R) matches the upper half plane") {
  Rng rng(8);
  std::normal_distribution<double> g;
  for (int k = 0; k < 100; ++k) {
    const auto m = sample_sp2(real(1), 4, rng);
    const double a = m.matrix().a.embedded()(0, 0).real(), b = m.matrix().b.embedded()(0, 0).real();
    const double c = m.matrix().c.embedded()(0, 0).real(), dd = m.matrix().d.embedded()(0, 0).real();
    const Complex z(g(rng), std::abs(g(rng)) + 0.1);
    const Complex want = (a * z + b) / (c * z + dd);
    const auto got = mobius_act(m, TubePoint(rmat(1, {z.real()}), rmat(1, {z.imag()})));
    CHECK(got.real_part().embedded()(0, 0).real() == doctest::Approx(want.real()).epsilon(1e-9));
    CHECK(got.imag_part().embedded()(0, 0).real() == doctest::Approx(want.imag()).epsilon(1e-9));
  }
}

TEST_CASE("mobius action preserves the tube and is associative") {
  Rng rng(9);
  const auto kinds = all_kinds(2);
  for (int k = 0; k < 1000; ++k) {
    const auto& d = kinds[k % 3];
    const auto g = sample_sp2(d, 3, rng);
    const auto h = sample_sp2(d, 3, rng);
    const TubePoint z(sample(d, SampleKind::Symmetric, rng), sample(d, SampleKind::Positive, rng));
    CHECK(is_positive(mobius_act(g, z).imag_part()));
    const auto lhs = mobius_act(g * h, z);
    const auto rhs = mobius_act(g, mobius_act(h, z));
    const double scale = std::max(1.0, lhs.real_part().norm() + lhs.imag_part().norm());
    CHECK((lhs.real_part() - rhs.real_part()).norm() < 1e-7 * scale);
    CHECK((lhs.imag_part() - rhs.imag_part()).norm() < 1e-7 * scale);
  }
}

TEST_CASE("complexified inverse") {
  Rng rng(10);
  for (const auto& d : all_kinds(2)) {
    const ComplexifiedElement z{sample(d, SampleKind::General, rng), sample(d, SampleKind::Positive, rng)};
    const auto w = z * inverse(z);
    CHECK(relative_distance(w.re, AlgebraElement::identity(d)) < 1e-12);
    CHECK(w.im.norm() < 1e-12);
    CHECK_THROWS_AS(inverse(ComplexifiedElement{AlgebraElement::zero(d), AlgebraElement::zero(d)}), Error);
  }
}

TEST_CASE("embedded block layout") {
  const auto d = cplx(2);
  const auto m = Mat2::omega(d).embedded();
  CHECK(m.rows() == 4);
  CHECK(m(0, 2) == Complex(1, 0));
  CHECK(m(2, 0) == Complex(-1, 0));
  CHECK(relative_distance(Mat2::from_embedded(d, m), Mat2::omega(d)) == 0.0);
}
