#include "sp2/isotropic.hpp"

#include <algorithm>
#include <cmath>

namespace sp2 {

namespace {

CMatrix stacked(const Vec2& x) {
  const int s = x.x1.descriptor().embedded_size();
  CMatrix m(2 * s, s);
  m << x.x1.embedded(), x.x2.embedded();
  return m;
}

double smallest_singular(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().minCoeff();
}

AlgebraElement symmetrized(const AlgebraElement& x) {
  return AlgebraElement::from_embedded(x.descriptor(), 0.5 * (x.embedded() + x.embedded().adjoint()));
}

// Block matrix with columns x and y.
Mat2 columns(const Vec2& x, const Vec2& y) { return {x.x1, y.x1, x.x2, y.x2}; }

}  // namespace

IsotropicLine::IsotropicLine(AlgebraElement x1, AlgebraElement x2) : x_{std::move(x1), std::move(x2)} {
  const auto& d = x_.x1.descriptor();
  if (!d.same_algebra(x_.x2.descriptor())) {
    throw Error(ErrorCode::DescriptorMismatch, "line coordinates belong to different algebras");
  }
  const double scale = x_.norm();
  if (!(scale > 0.0) || smallest_singular(stacked(x_)) <= d.tol * scale) {
    throw Error(ErrorCode::DegenerateLine, "line representative is not regular");
  }
  if (omega(x_, x_).norm() > d.tol * scale * scale) {
    throw Error(ErrorCode::DegenerateLine, "line representative is not isotropic");
  }
  // x <- x (sigma(x)^T x)^{-1/2}
  const auto gram = symmetrized(sigma(x_.x1) * x_.x1 + sigma(x_.x2) * x_.x2);
  x_ = x_ * inverse(sqrt_positive(gram));
}

IsotropicLine IsotropicLine::plus(const AlgebraDescriptor& d) {
  return {AlgebraElement::identity(d), AlgebraElement::zero(d)};
}

IsotropicLine IsotropicLine::minus(const AlgebraDescriptor& d) {
  return {AlgebraElement::zero(d), AlgebraElement::identity(d)};
}

IsotropicLine IsotropicLine::one(const AlgebraDescriptor& d) {
  return {AlgebraElement::identity(d), AlgebraElement::identity(d)};
}

IsotropicLine IsotropicLine::ell(const AlgebraElement& b) { return {AlgebraElement::identity(b.descriptor()), -b}; }

IsotropicLine IsotropicLine::graph(const AlgebraElement& b) { return {b, AlgebraElement::identity(b.descriptor())}; }

CMatrix IsotropicLine::projector() const {
  const CMatrix x = stacked(x_);
  return x * x.adjoint();
}

double line_distance(const IsotropicLine& l, const IsotropicLine& m) {
  return (l.projector() - m.projector()).norm();
}

bool same_line(const IsotropicLine& l, const IsotropicLine& m, double tol) { return line_distance(l, m) <= tol; }

bool same_line(const IsotropicLine& l, const IsotropicLine& m) {
  // Projectors of orthonormal representatives have unit scale.
  return same_line(l, m, std::sqrt(l.descriptor().tol));
}

bool is_transverse(const IsotropicLine& l, const IsotropicLine& m) {
  const CMatrix block = columns(l.representative(), m.representative()).embedded();
  return smallest_singular(block) > l.descriptor().tol * block.norm();
}

IsotropicLine act(const SymplecticElement& g, const IsotropicLine& l) { return IsotropicLine(g * l.representative()); }

SymplecticElement normalize_pair(const IsotropicLine& l1, const IsotropicLine& l2) {
  if (!is_transverse(l1, l2)) throw Error(ErrorCode::NotTransverse, "normalize_pair: lines are not transverse");
  const Vec2& x = l1.representative();
  const Vec2 y = l2.representative() * inverse(omega(x, l2.representative()));
  // M = [x y] satisfies sigma(M)^T Omega M = Omega, so M^{-1} sends x, y to the
  // standard basis.
  return inverse(SymplecticElement(columns(x, y)));
}

AlgebraElement triple_invariant(const IsotropicLine& l1, const IsotropicLine& l2, const IsotropicLine& l3) {
  if (!is_transverse(l1, l3) || !is_transverse(l2, l3)) {
    throw Error(ErrorCode::NotTransverse, "triple_invariant: lines are not pairwise transverse");
  }
  const Vec2 z = normalize_pair(l1, l2) * l3.representative();
  return symmetrized(z.x1 * inverse(z.x2));
}

bool is_maximal_triple(const IsotropicLine& l1, const IsotropicLine& l2, const IsotropicLine& l3) {
  return is_positive(triple_invariant(l1, l2, l3));
}

SymplecticElement normalize_triple(const IsotropicLine& l1, const IsotropicLine& l2, const IsotropicLine& l3) {
  const auto g = normalize_pair(l1, l2);
  const Vec2 z = g * l3.representative();
  const auto b = symmetrized(z.x1 * inverse(z.x2));
  if (!is_positive(b)) throw Error(ErrorCode::NotMaximal, "normalize_triple: triple is not maximal");
  const auto root = sqrt_positive(b);
  return SymplecticElement::levi(inverse(root)) * g;
}

AlgebraElement quadruple_invariant(const IsotropicLine& l1, const IsotropicLine& l2, const IsotropicLine& l3,
                                   const IsotropicLine& l4) {
  try {
    if (!is_maximal_triple(l1, l2, l3) || !is_maximal_triple(l1, l3, l4)) {
      throw Error(ErrorCode::NotPositiveQuadruple, "quadruple is not positive");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPositiveQuadruple) throw;
    throw Error(ErrorCode::NotPositiveQuadruple, std::string("quadruple is not positive: ") + e.what());
  }
  const Vec2 z = normalize_triple(l1, l3, l4) * l2.representative();
  return symmetrized(-(z.x2 * inverse(z.x1)));
}

RVector canonical_spectrum(const AlgebraElement& b) { return self_adjoint_spectrum(b); }

}  // namespace sp2
