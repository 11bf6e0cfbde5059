#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sp2/error.hpp"

namespace sp2 {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-8;

enum class AlgebraKind { Real, Complex, Quaternionic };

char kind_letter(AlgebraKind kind);
AlgebraKind kind_from_letter(char letter);

/// Matrix algebra Mat(n, K) for K = R, C or H with sigma = conjugate transpose.
struct AlgebraDescriptor {
  AlgebraKind kind = AlgebraKind::Real;
  int n = 1;
  double tol = kDefaultTol;

  AlgebraDescriptor() = default;
  AlgebraDescriptor(AlgebraKind kind, int n, double tol = kDefaultTol);

  /// Size of the complex matrix that carries an element: n, or 2n for H.
  int embedded_size() const { return kind == AlgebraKind::Quaternionic ? 2 * n : n; }

  bool same_algebra(const AlgebraDescriptor& other) const {
    return kind == other.kind && n == other.n;
  }
};

/// Element of (A, sigma).
///
/// Every element is stored through its complex representation: the matrix
/// itself for R and C, and the 2n x 2n block matrix [[X1, X2], [-conj X2,
/// conj X1]] of X1 + X2 j for H. This is a *-homomorphism, so products,
/// sigma, inverses and spectral functions all commute with it. Constructors
/// project back onto the structured subspace, which keeps real elements real
/// and quaternionic elements quaternionic after rounding.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement zero(const AlgebraDescriptor& d);
  static AlgebraElement identity(const AlgebraDescriptor& d);
  static AlgebraElement scalar(const AlgebraDescriptor& d, double s);
  /// Wraps a complex matrix of size d.embedded_size().
  static AlgebraElement from_embedded(const AlgebraDescriptor& d, CMatrix m);
  static AlgebraElement from_real(const AlgebraDescriptor& d, const Eigen::MatrixXd& m);
  static AlgebraElement from_complex(const AlgebraDescriptor& d, const CMatrix& m);
  /// X1 + X2 j with X1, X2 complex n x n.
  static AlgebraElement from_quaternion_parts(const AlgebraDescriptor& d, const CMatrix& x1,
                                              const CMatrix& x2);

  const AlgebraDescriptor& descriptor() const { return desc_; }
  const CMatrix& embedded() const { return m_; }
  double tol() const { return desc_.tol; }

  /// Frobenius norm of the complex representation.
  double norm() const { return m_.norm(); }

  /// Quaternion parts (X1, X2) for H; for R and C returns (matrix, 0).
  std::pair<CMatrix, CMatrix> quaternion_parts() const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator*(double s) const;

  bool is_finite() const { return m_.allFinite(); }

 private:
  AlgebraElement(AlgebraDescriptor d, CMatrix m);
  void check_same(const AlgebraElement& o) const;

  AlgebraDescriptor desc_;
  CMatrix m_;
};

inline AlgebraElement operator*(double s, const AlgebraElement& a) { return a * s; }

/// Conjugate transpose (entrywise conjugation includes quaternionic conjugation).
AlgebraElement sigma(const AlgebraElement& a);

/// Raises NotInvertible when the smallest singular value is below tol * |a|.
AlgebraElement inverse(const AlgebraElement& a);

/// Smallest singular value of the complex representation.
double smallest_singular_value(const AlgebraElement& a);

bool is_symmetric(const AlgebraElement& a);
bool is_positive(const AlgebraElement& a);
bool is_unitary(const AlgebraElement& a);
bool is_invertible(const AlgebraElement& a);

/// Sorted eigenvalues of the self-adjoint part (a + sigma(a)) / 2. For H every
/// right eigenvalue appears twice.
RVector self_adjoint_spectrum(const AlgebraElement& a);

/// The unique q in A^sigma_+ with q * q = a.
AlgebraElement sqrt_positive(const AlgebraElement& a);

struct PolarDecomposition {
  AlgebraElement unitary;
  AlgebraElement positive;
};

/// a = unitary * positive with positive = sqrt(sigma(a) a).
PolarDecomposition polar_decompose(const AlgebraElement& a);

/// +1/-1 (sign of the determinant) for R; 0 for C and H whose unitary groups
/// are connected.
int unitary_component_label(const AlgebraElement& u);

/// Number of connected components of the unitary group of the algebra.
int unitary_component_count(AlgebraKind kind);

/// Relative distance |a - b| / max(|a|, |b|), or the absolute distance when
/// both vanish.
double relative_distance(const AlgebraElement& a, const AlgebraElement& b);
bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double tol);

enum class SampleKind { Positive, Unitary, Invertible, Symmetric, General };

using Rng = std::mt19937_64;

AlgebraElement sample(const AlgebraDescriptor& d, SampleKind which, Rng& rng);
AlgebraElement sample(const AlgebraDescriptor& d, SampleKind which, std::uint64_t seed);

}  // namespace sp2
