#pragma once

#include <cmath>
#include <vector>

#include "sp2/algebra.hpp"

namespace sp2 {

/// Column vector (x1, x2) in A^2, viewed as a right A-module.
struct Vec2 {
  AlgebraElement x1;
  AlgebraElement x2;

  Vec2 operator*(const AlgebraElement& r) const { return {x1 * r, x2 * r}; }
  Vec2 operator+(const Vec2& o) const { return {x1 + o.x1, x2 + o.x2}; }
  double norm() const { return std::hypot(x1.norm(), x2.norm()); }
};

/// Standard symplectic form omega(x, y) = sigma(x)^T Omega y.
AlgebraElement omega(const Vec2& x, const Vec2& y);

/// A 2x2 matrix [[a, b], [c, d]] over A with no membership guarantee.
struct Mat2 {
  AlgebraElement a, b, c, d;

  static Mat2 identity(const AlgebraDescriptor& desc);
  static Mat2 zero(const AlgebraDescriptor& desc);
  /// Omega = [[0, 1], [-1, 0]].
  static Mat2 omega(const AlgebraDescriptor& desc);
  static Mat2 from_embedded(const AlgebraDescriptor& desc, const CMatrix& m);

  const AlgebraDescriptor& descriptor() const { return a.descriptor(); }

  Mat2 operator*(const Mat2& o) const;
  Vec2 operator*(const Vec2& v) const;
  Mat2 operator+(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  Mat2 operator*(double s) const;

  /// sigma applied entrywise, then transposed.
  Mat2 sigma_transpose() const;
  /// The 2N x 2N complex block matrix of the complex representations.
  CMatrix embedded() const;
  double norm() const { return embedded().norm(); }
};

bool is_sp2(const Mat2& m);
bool is_sp2_lie(const Mat2& x);
/// First-order Lie condition sigma(X)^T Omega + Omega X = 0.
double lie_form_defect(const Mat2& x);

/// Element of Sp_2(A, sigma); membership is verified on construction.
class SymplecticElement {
 public:
  /// Throws MembershipDrift when m fails the Sp_2 conditions.
  explicit SymplecticElement(Mat2 m);

  static SymplecticElement identity(const AlgebraDescriptor& d);
  static SymplecticElement omega(const AlgebraDescriptor& d);
  /// [[-1, 1], [-1, 0]]; rotates (l+, l-, l1) cyclically.
  static SymplecticElement turn(const AlgebraDescriptor& d);
  /// diag(x, sigma(x)^{-1}), x invertible.
  static SymplecticElement levi(const AlgebraElement& x);
  /// [[1, y], [0, 1]], y symmetric.
  static SymplecticElement upper_unipotent(const AlgebraElement& y);
  /// [[1, 0], [z, 1]], z symmetric.
  static SymplecticElement lower_unipotent(const AlgebraElement& z);

  const Mat2& matrix() const { return m_; }
  const AlgebraDescriptor& descriptor() const { return m_.descriptor(); }

  SymplecticElement operator*(const SymplecticElement& o) const { return compose(*this, o); }
  Vec2 operator*(const Vec2& v) const { return m_ * v; }

  friend SymplecticElement compose(const SymplecticElement& g, const SymplecticElement& h);
  friend SymplecticElement inverse(const SymplecticElement& g);

 private:
  struct Unchecked {};
  SymplecticElement(Mat2 m, Unchecked) : m_(std::move(m)) {}

  Mat2 m_;
};

SymplecticElement compose(const SymplecticElement& g, const SymplecticElement& h);
/// Omega^{-1} sigma(g)^T Omega.
SymplecticElement inverse(const SymplecticElement& g);

bool is_ksp2(const SymplecticElement& g);
double relative_distance(const Mat2& x, const Mat2& y);

/// Element a1 + i a2 of the complexification A (x)_R C.
struct ComplexifiedElement {
  AlgebraElement re;
  AlgebraElement im;

  ComplexifiedElement operator+(const ComplexifiedElement& o) const { return {re + o.re, im + o.im}; }
  ComplexifiedElement operator*(const ComplexifiedElement& o) const;
};

ComplexifiedElement operator*(const AlgebraElement& a, const ComplexifiedElement& z);
ComplexifiedElement inverse(const ComplexifiedElement& z);

/// Point z1 + i z2 of the tube A^sigma + i A^sigma_+.
class TubePoint {
 public:
  /// Throws NotPositive if z2 is not positive or z1 not symmetric.
  TubePoint(AlgebraElement real_part, AlgebraElement imag_part);

  static TubePoint i(const AlgebraDescriptor& d);

  const AlgebraElement& real_part() const { return z_.re; }
  const AlgebraElement& imag_part() const { return z_.im; }
  const ComplexifiedElement& value() const { return z_; }

 private:
  ComplexifiedElement z_;
};

/// Generalized Moebius transformation (a z + b)(c z + d)^{-1}.
TubePoint mobius_act(const SymplecticElement& g, const TubePoint& z);

/// Random word of the given length in levi, upper_unipotent and Omega
/// generators.
SymplecticElement sample_sp2(const AlgebraDescriptor& d, int length, Rng& rng);
/// Random element of KSp_2: a word in diag(u, u) and Omega.
SymplecticElement sample_ksp2(const AlgebraDescriptor& d, int length, Rng& rng);

}  // namespace sp2
