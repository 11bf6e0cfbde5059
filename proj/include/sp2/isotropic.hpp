#pragma once

#include "sp2/symplectic.hpp"

namespace sp2 {

/// Regular isotropic line xA in A^2.
///
/// The stored representative satisfies sigma(x)^T x = 1, which removes the
/// right A^x gauge up to a unitary factor; equality compares the orthogonal
/// projectors x sigma(x)^T.
class IsotropicLine {
 public:
  /// Throws DegenerateLine for non-regular or non-isotropic x.
  IsotropicLine(AlgebraElement x1, AlgebraElement x2);
  explicit IsotropicLine(const Vec2& x) : IsotropicLine(x.x1, x.x2) {}

  /// l+ = (1, 0)^T A
  static IsotropicLine plus(const AlgebraDescriptor& d);
  /// l- = (0, 1)^T A
  static IsotropicLine minus(const AlgebraDescriptor& d);
  /// l1 = (1, 1)^T A
  static IsotropicLine one(const AlgebraDescriptor& d);
  /// l(b) = (1, -b)^T A for symmetric b.
  static IsotropicLine ell(const AlgebraElement& b);
  /// (b, 1)^T A for symmetric b.
  static IsotropicLine graph(const AlgebraElement& b);

  const Vec2& representative() const { return x_; }
  const AlgebraDescriptor& descriptor() const { return x_.x1.descriptor(); }

  /// Orthogonal projector onto the line as a complex 2N x 2N matrix.
  CMatrix projector() const;

 private:
  Vec2 x_;
};

/// Projector distance |P_l - P_m|_F.
double line_distance(const IsotropicLine& l, const IsotropicLine& m);
bool same_line(const IsotropicLine& l, const IsotropicLine& m, double tol);
bool same_line(const IsotropicLine& l, const IsotropicLine& m);

bool is_transverse(const IsotropicLine& l, const IsotropicLine& m);
IsotropicLine act(const SymplecticElement& g, const IsotropicLine& l);

/// g with g(l1, l2) = (l+, l-).
SymplecticElement normalize_pair(const IsotropicLine& l1, const IsotropicLine& l2);

/// b with normalize_pair(l1, l2) l3 = (b, 1)^T A.
AlgebraElement triple_invariant(const IsotropicLine& l1, const IsotropicLine& l2, const IsotropicLine& l3);
bool is_maximal_triple(const IsotropicLine& l1, const IsotropicLine& l2, const IsotropicLine& l3);

/// g with g(l1, l2, l3) = (l+, l-, l1); unique up to diag(u, u).
SymplecticElement normalize_triple(const IsotropicLine& l1, const IsotropicLine& l2, const IsotropicLine& l3);

/// b in A^sigma_+ with g(l1, l2, l3, l4) = (l+, l(b), l-, l1), where
/// g = normalize_triple(l1, l3, l4).
AlgebraElement quadruple_invariant(const IsotropicLine& l1, const IsotropicLine& l2, const IsotropicLine& l3,
                                   const IsotropicLine& l4);

/// Sorted eigenvalues of a positive element; invariant under unitary
/// conjugation.
RVector canonical_spectrum(const AlgebraElement& b);

}  // namespace sp2
