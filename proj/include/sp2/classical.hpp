#pragma once

#include "sp2/symplectic.hpp"

namespace sp2 {

enum class FormKind { SymplecticReal, HermitianSplit, QuaternionicSkew };

/// Sp(2n, R), U(n, n) and SO*(4n) as isometry groups of classical forms.
///
/// `gram` is the form to preserve and `transform` the change of basis T: an
/// element M of Sp_2(A, sigma) corresponds to T^{-1} M T. Both are stored as
/// complex block matrices in the same basis as Mat2::embedded().
struct ClassicalForm {
  FormKind kind;
  AlgebraDescriptor algebra;
  CMatrix gram;
  CMatrix transform;
};

FormKind form_kind_for(AlgebraKind kind);
ClassicalForm classical_form(const AlgebraDescriptor& d);

/// Ground-field matrix of size 2n over R, C or H.
struct ClassicalMatrix {
  AlgebraDescriptor algebra;
  CMatrix matrix;
};

ClassicalMatrix embed(const SymplecticElement& m);
ClassicalMatrix embed(const Mat2& m);
ClassicalMatrix operator*(const ClassicalMatrix& x, const ClassicalMatrix& y);

/// T^{-1} M T.
ClassicalMatrix to_classical_basis(const ClassicalMatrix& m, const ClassicalForm& f);

/// conj-transpose(M') G M' = G for M' = T^{-1} M T. Throws SizeMismatch.
bool preserves_form(const ClassicalMatrix& m, const ClassicalForm& f);
/// |M'^* G M' - G| / |G|.
double form_defect(const ClassicalMatrix& m, const ClassicalForm& f);

/// conj-transpose(M) M = Id.
bool is_compact_element(const ClassicalMatrix& m);

struct RealizationCensus {
  int samples = 0;
  int members_preserving = 0;     ///< random words in Sp_2 passing preserves_form
  int nonmembers_rejected = 0;    ///< perturbed words failing it
  int compact_passing = 0;        ///< KSp_2 words preserving the form and unitary
  double worst_member_defect = 0;
  double best_nonmember_defect = 0;
};

/// Random words of the given length, each also perturbed by a factor
/// Id + 0.1 E with E a random 2x2 matrix over A.
RealizationCensus realization_census(const AlgebraDescriptor& d, int samples, int word_length, Rng& rng);

/// (1/sqrt 2)[[1, -j], [-j, 1]] without the diag(i, 1) factor;
/// sigma(T) Omega T = diag(-j, j) for it.
CMatrix uncorrected_quaternionic_transform(const AlgebraDescriptor& d);

}  // namespace sp2
