#include "sp2/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sp2 {

namespace {

AlgebraElement quaternion_unit_i(const AlgebraDescriptor& d) {
  return AlgebraElement::from_quaternion_parts(d, Complex(0, 1) * CMatrix::Identity(d.n, d.n), CMatrix::Zero(d.n, d.n));
}

AlgebraElement quaternion_unit_j(const AlgebraDescriptor& d) {
  return AlgebraElement::from_quaternion_parts(d, CMatrix::Zero(d.n, d.n), CMatrix::Identity(d.n, d.n));
}

Mat2 quaternionic_cayley(const AlgebraDescriptor& d) {
  const auto one = AlgebraElement::identity(d);
  const auto j = quaternion_unit_j(d);
  return Mat2{one, -j, -j, one} * (1.0 / std::sqrt(2.0));
}

}  // namespace

FormKind form_kind_for(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Real: return FormKind::SymplecticReal;
    case AlgebraKind::Complex: return FormKind::HermitianSplit;
    case AlgebraKind::Quaternionic: return FormKind::QuaternionicSkew;
  }
  return FormKind::SymplecticReal;
}

ClassicalForm classical_form(const AlgebraDescriptor& d) {
  const auto one = AlgebraElement::identity(d);
  const auto zero = AlgebraElement::zero(d);
  switch (d.kind) {
    case AlgebraKind::Real:
      return {FormKind::SymplecticReal, d, Mat2::omega(d).embedded(), Mat2::identity(d).embedded()};
    case AlgebraKind::Complex: {
      // h(x, y) = i omega(Tx, Ty) with T = diag(1, -i) has Gram [[0, 1], [1, 0]].
      const auto minus_i = AlgebraElement::from_complex(d, Complex(0, -1) * CMatrix::Identity(d.n, d.n));
      return {FormKind::HermitianSplit, d, Mat2{zero, one, one, zero}.embedded(), Mat2{one, zero, zero, minus_i}.embedded()};
    }
    case AlgebraKind::Quaternionic: {
      // beta(x, y) = sum conj(x_k) j y_k. The Cayley-type transform is
      // followed by diag(i, 1) so that sigma(T) Omega T = Id j exactly.
      const auto j = quaternion_unit_j(d);
      const Mat2 t = quaternionic_cayley(d) * Mat2{quaternion_unit_i(d), zero, zero, one};
      return {FormKind::QuaternionicSkew, d, Mat2{j, zero, zero, j}.embedded(), t.embedded()};
    }
  }
  throw Error(ErrorCode::DescriptorMismatch, "unknown algebra kind");
}

CMatrix uncorrected_quaternionic_transform(const AlgebraDescriptor& d) {
  if (d.kind != AlgebraKind::Quaternionic) throw Error(ErrorCode::DescriptorMismatch, "quaternionic algebra required");
  return quaternionic_cayley(d).embedded();
}

ClassicalMatrix embed(const Mat2& m) { return {m.descriptor(), m.embedded()}; }
ClassicalMatrix embed(const SymplecticElement& m) { return embed(m.matrix()); }

ClassicalMatrix operator*(const ClassicalMatrix& x, const ClassicalMatrix& y) {
  if (x.matrix.cols() != y.matrix.rows()) throw Error(ErrorCode::SizeMismatch, "classical matrices do not compose");
  return {x.algebra, x.matrix * y.matrix};
}

ClassicalMatrix to_classical_basis(const ClassicalMatrix& m, const ClassicalForm& f) {
  if (!m.algebra.same_algebra(f.algebra) || m.matrix.rows() != f.gram.rows()) {
    throw Error(ErrorCode::SizeMismatch, "matrix and form have different sizes");
  }
  return {m.algebra, f.transform.partialPivLu().solve(m.matrix * f.transform)};
}

double form_defect(const ClassicalMatrix& m, const ClassicalForm& f) {
  const CMatrix mc = to_classical_basis(m, f).matrix;
  return (mc.adjoint() * f.gram * mc - f.gram).norm() / f.gram.norm();
}

bool preserves_form(const ClassicalMatrix& m, const ClassicalForm& f) { return form_defect(m, f) <= f.algebra.tol; }

bool is_compact_element(const ClassicalMatrix& m) {
  const auto s = m.matrix.rows();
  return (m.matrix.adjoint() * m.matrix - CMatrix::Identity(s, s)).norm() <= m.algebra.tol;
}

RealizationCensus realization_census(const AlgebraDescriptor& d, int samples, int word_length, Rng& rng) {
  const auto form = classical_form(d);
  RealizationCensus census;
  census.samples = samples;
  census.best_nonmember_defect = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const auto g = sample_sp2(d, word_length, rng);
    const double defect = form_defect(embed(g), form);
    census.worst_member_defect = std::max(census.worst_member_defect, defect);
    if (defect <= d.tol) ++census.members_preserving;

    const Mat2 e{sample(d, SampleKind::General, rng), sample(d, SampleKind::General, rng),
                 sample(d, SampleKind::General, rng), sample(d, SampleKind::General, rng)};
    const auto perturbed = embed(g.matrix() * (Mat2::identity(d) + e * 0.1));
    const double off = form_defect(perturbed, form);
    census.best_nonmember_defect = std::min(census.best_nonmember_defect, off);
    if (!preserves_form(perturbed, form)) ++census.nonmembers_rejected;

    const auto h = embed(sample_ksp2(d, word_length, rng));
    if (preserves_form(h, form) && is_compact_element(h)) ++census.compact_passing;
  }
  return census;
}

}  // namespace sp2
