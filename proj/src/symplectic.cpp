#include "sp2/symplectic.hpp"

#include <algorithm>
#include <cmath>

namespace sp2 {

AlgebraElement omega(const Vec2& x, const Vec2& y) {
  return sigma(x.x1) * y.x2 - sigma(x.x2) * y.x1;
}

Mat2 Mat2::identity(const AlgebraDescriptor& desc) {
  auto one = AlgebraElement::identity(desc);
  auto zero = AlgebraElement::zero(desc);
  return {one, zero, zero, one};
}

Mat2 Mat2::zero(const AlgebraDescriptor& desc) {
  auto zero = AlgebraElement::zero(desc);
  return {zero, zero, zero, zero};
}

Mat2 Mat2::omega(const AlgebraDescriptor& desc) {
  auto one = AlgebraElement::identity(desc);
  auto zero = AlgebraElement::zero(desc);
  return {zero, one, -one, zero};
}

Mat2 Mat2::from_embedded(const AlgebraDescriptor& desc, const CMatrix& m) {
  const int s = desc.embedded_size();
  if (m.rows() != 2 * s || m.cols() != 2 * s) throw Error(ErrorCode::SizeMismatch, "block matrix has wrong size");
  return {AlgebraElement::from_embedded(desc, m.topLeftCorner(s, s)),
          AlgebraElement::from_embedded(desc, m.topRightCorner(s, s)),
          AlgebraElement::from_embedded(desc, m.bottomLeftCorner(s, s)),
          AlgebraElement::from_embedded(desc, m.bottomRightCorner(s, s))};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Vec2 Mat2::operator*(const Vec2& v) const { return {a * v.x1 + b * v.x2, c * v.x1 + d * v.x2}; }

Mat2 Mat2::operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
Mat2 Mat2::operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
Mat2 Mat2::operator*(double s) const { return {a * s, b * s, c * s, d * s}; }

Mat2 Mat2::sigma_transpose() const { return {sigma(a), sigma(c), sigma(b), sigma(d)}; }

CMatrix Mat2::embedded() const {
  const int s = descriptor().embedded_size();
  CMatrix m(2 * s, 2 * s);
  m << a.embedded(), b.embedded(), c.embedded(), d.embedded();
  return m;
}

double relative_distance(const Mat2& x, const Mat2& y) {
  const CMatrix ex = x.embedded();
  const CMatrix ey = y.embedded();
  const double scale = std::max(ex.norm(), ey.norm());
  const double diff = (ex - ey).norm();
  return scale == 0.0 ? diff : diff / scale;
}

namespace {

// Absolute defects of the three Sp_2 conditions.
double sp2_raw_defect(const Mat2& m) {
  auto skew = [](const AlgebraElement& x) { return (x.embedded() - x.embedded().adjoint()).norm(); };
  const auto one = AlgebraElement::identity(m.descriptor());
  const double d1 = skew(sigma(m.a) * m.c);
  const double d2 = skew(sigma(m.b) * m.d);
  const double d3 = (sigma(m.a) * m.d - sigma(m.c) * m.b - one).norm();
  return std::max({d1, d2, d3});
}

// The conditions are quadratic in the entries, so the defect is measured
// against |M|^2.
double sp2_defect(const Mat2& m) { return sp2_raw_defect(m) / std::max(1.0, m.norm() * m.norm()); }

void check_blocks(const Mat2& m) {
  const auto& d = m.a.descriptor();
  if (!d.same_algebra(m.b.descriptor()) || !d.same_algebra(m.c.descriptor()) ||
      !d.same_algebra(m.d.descriptor())) {
    throw Error(ErrorCode::DescriptorMismatch, "blocks belong to different algebras");
  }
}

}  // namespace

bool is_sp2(const Mat2& m) {
  check_blocks(m);
  return sp2_defect(m) <= m.descriptor().tol;
}

bool is_sp2_lie(const Mat2& x) {
  const double tol = x.descriptor().tol;
  const double scale = std::max(1.0, x.norm());
  auto skew = [](const AlgebraElement& e) { return (e.embedded() - e.embedded().adjoint()).norm(); };
  const double d1 = (x.d + sigma(x.a)).norm();
  return d1 <= tol * scale && skew(x.b) <= tol * scale && skew(x.c) <= tol * scale;
}

double lie_form_defect(const Mat2& x) {
  const auto om = Mat2::omega(x.descriptor());
  return (x.sigma_transpose() * om + om * x).norm();
}

SymplecticElement::SymplecticElement(Mat2 m) : m_(std::move(m)) {
  if (!is_sp2(m_)) throw Error(ErrorCode::MembershipDrift, "matrix is not in Sp_2(A, sigma)");
}

SymplecticElement SymplecticElement::identity(const AlgebraDescriptor& d) {
  return SymplecticElement(Mat2::identity(d), Unchecked{});
}

SymplecticElement SymplecticElement::omega(const AlgebraDescriptor& d) {
  return SymplecticElement(Mat2::omega(d), Unchecked{});
}

SymplecticElement SymplecticElement::turn(const AlgebraDescriptor& d) {
  auto one = AlgebraElement::identity(d);
  return SymplecticElement(Mat2{-one, one, -one, AlgebraElement::zero(d)}, Unchecked{});
}

SymplecticElement SymplecticElement::levi(const AlgebraElement& x) {
  auto zero = AlgebraElement::zero(x.descriptor());
  return SymplecticElement(Mat2{x, zero, zero, inverse(sigma(x))});
}

SymplecticElement SymplecticElement::upper_unipotent(const AlgebraElement& y) {
  const auto& d = y.descriptor();
  return SymplecticElement(Mat2{AlgebraElement::identity(d), y, AlgebraElement::zero(d), AlgebraElement::identity(d)});
}

SymplecticElement SymplecticElement::lower_unipotent(const AlgebraElement& z) {
  const auto& d = z.descriptor();
  return SymplecticElement(Mat2{AlgebraElement::identity(d), AlgebraElement::zero(d), z, AlgebraElement::identity(d)});
}

SymplecticElement compose(const SymplecticElement& g, const SymplecticElement& h) {
  return SymplecticElement(g.m_ * h.m_);
}

SymplecticElement inverse(const SymplecticElement& g) {
  const Mat2& m = g.m_;
  Mat2 inv{sigma(m.d), -sigma(m.b), -sigma(m.c), sigma(m.a)};
  return SymplecticElement(std::move(inv));
}

bool is_ksp2(const SymplecticElement& g) {
  const Mat2& m = g.matrix();
  const CMatrix e = m.embedded();
  const auto s = e.rows();
  return (e.adjoint() * e - CMatrix::Identity(s, s)).norm() <= g.descriptor().tol;
}

ComplexifiedElement ComplexifiedElement::operator*(const ComplexifiedElement& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re};
}

ComplexifiedElement operator*(const AlgebraElement& a, const ComplexifiedElement& z) {
  return {a * z.re, a * z.im};
}

ComplexifiedElement inverse(const ComplexifiedElement& z) {
  // x + iy acts on A^2 = A (x)_R C as the real-linear block [[x, -y], [y, x]];
  // its inverse has the same shape.
  const auto& d = z.re.descriptor();
  const int s = d.embedded_size();
  CMatrix block(2 * s, 2 * s);
  block << z.re.embedded(), -z.im.embedded(), z.im.embedded(), z.re.embedded();
  Eigen::JacobiSVD<CMatrix> svd(block);
  const double smin = svd.singularValues().minCoeff();
  if (!(smin > d.tol * block.norm())) {
    throw Error(ErrorCode::SingularDenominator, "complexified element is not invertible");
  }
  CMatrix inv = block.partialPivLu().inverse();
  CMatrix p = 0.5 * (inv.topLeftCorner(s, s) + inv.bottomRightCorner(s, s));
  CMatrix q = 0.5 * (inv.bottomLeftCorner(s, s) - inv.topRightCorner(s, s));
  return {AlgebraElement::from_embedded(d, p), AlgebraElement::from_embedded(d, q)};
}

TubePoint::TubePoint(AlgebraElement real_part, AlgebraElement imag_part)
    : z_{std::move(real_part), std::move(imag_part)} {
  if (!z_.re.descriptor().same_algebra(z_.im.descriptor())) {
    throw Error(ErrorCode::DescriptorMismatch, "tube point parts belong to different algebras");
  }
  if (!is_positive(z_.im)) throw Error(ErrorCode::NotPositive, "imaginary part of a tube point must be positive");
  const double scale = std::max(1.0, z_.re.norm());
  if ((z_.re.embedded() - z_.re.embedded().adjoint()).norm() > z_.re.tol() * scale) {
    throw Error(ErrorCode::NotPositive, "real part of a tube point must be symmetric");
  }
}

TubePoint TubePoint::i(const AlgebraDescriptor& d) {
  return TubePoint(AlgebraElement::zero(d), AlgebraElement::identity(d));
}

TubePoint mobius_act(const SymplecticElement& g, const TubePoint& z) {
  const Mat2& m = g.matrix();
  const auto& d = m.descriptor();
  const auto zero = AlgebraElement::zero(d);
  ComplexifiedElement num = m.a * z.value() + ComplexifiedElement{m.b, zero};
  ComplexifiedElement den = m.c * z.value() + ComplexifiedElement{m.d, zero};
  ComplexifiedElement w = num * inverse(den);
  // The image is symmetric in exact arithmetic; drop the rounding residue.
  auto sym = [&](const AlgebraElement& x) {
    return AlgebraElement::from_embedded(d, 0.5 * (x.embedded() + x.embedded().adjoint()));
  };
  return TubePoint(sym(w.re), sym(w.im));
}

SymplecticElement sample_sp2(const AlgebraDescriptor& d, int length, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  auto g = SymplecticElement::identity(d);
  for (int i = 0; i < length; ++i) {
    switch (pick(rng)) {
      case 0: g = g * SymplecticElement::levi(sample(d, SampleKind::Invertible, rng)); break;
      case 1: g = g * SymplecticElement::upper_unipotent(sample(d, SampleKind::Symmetric, rng)); break;
      default: g = g * SymplecticElement::omega(d); break;
    }
  }
  return g;
}

SymplecticElement sample_ksp2(const AlgebraDescriptor& d, int length, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 1);
  auto g = SymplecticElement::identity(d);
  for (int i = 0; i < length; ++i) {
    if (pick(rng) == 0) {
      g = g * SymplecticElement::levi(sample(d, SampleKind::Unitary, rng));
    } else {
      g = g * SymplecticElement::omega(d);
    }
  }
  return g;
}

}  // namespace sp2
