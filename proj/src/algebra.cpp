#include "sp2/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sp2 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::MembershipDrift: return "MembershipDrift";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::NotTransverse: return "NotTransverse";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::NotPositiveQuadruple: return "NotPositiveQuadruple";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::InvalidSurface: return "InvalidSurface";
    case ErrorCode::DisconnectedDomain: return "DisconnectedDomain";
    case ErrorCode::BadPairing: return "BadPairing";
    case ErrorCode::EulerMismatch: return "EulerMismatch";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::CycleClosureFailure: return "CycleClosureFailure";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

char kind_letter(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Real: return 'R';
    case AlgebraKind::Complex: return 'C';
    case AlgebraKind::Quaternionic: return 'H';
  }
  return '?';
}

AlgebraKind kind_from_letter(char letter) {
  switch (letter) {
    case 'R': return AlgebraKind::Real;
    case 'C': return AlgebraKind::Complex;
    case 'H': return AlgebraKind::Quaternionic;
    default:
      throw Error(ErrorCode::ParseError, std::string("unknown algebra kind '") + letter + "'");
  }
}

AlgebraDescriptor::AlgebraDescriptor(AlgebraKind k, int size, double t) : kind(k), n(size), tol(t) {
  if (n < 1) throw Error(ErrorCode::DescriptorMismatch, "algebra size must be >= 1");
  if (!(tol > 0.0)) throw Error(ErrorCode::DescriptorMismatch, "tolerance must be > 0");
}

namespace {

// Orthogonal projection of a complex matrix onto the image of the algebra.
CMatrix project(const AlgebraDescriptor& d, CMatrix m) {
  switch (d.kind) {
    case AlgebraKind::Real:
      return m.real().cast<Complex>();
    case AlgebraKind::Complex:
      return m;
    case AlgebraKind::Quaternionic: {
      const int n = d.n;
      CMatrix x1 = 0.5 * (m.topLeftCorner(n, n) + m.bottomRightCorner(n, n).conjugate());
      CMatrix x2 = 0.5 * (m.topRightCorner(n, n) - m.bottomLeftCorner(n, n).conjugate());
      CMatrix out(2 * n, 2 * n);
      out << x1, x2, -x2.conjugate(), x1.conjugate();
      return out;
    }
  }
  return m;
}

Eigen::SelfAdjointEigenSolver<CMatrix> hermitian_eigen(const AlgebraElement& a) {
  CMatrix h = 0.5 * (a.embedded() + a.embedded().adjoint());
  return Eigen::SelfAdjointEigenSolver<CMatrix>(h);
}

}  // namespace

AlgebraElement::AlgebraElement(AlgebraDescriptor d, CMatrix m) : desc_(d), m_(std::move(m)) {}

AlgebraElement AlgebraElement::zero(const AlgebraDescriptor& d) {
  const int s = d.embedded_size();
  return AlgebraElement(d, CMatrix::Zero(s, s));
}

AlgebraElement AlgebraElement::identity(const AlgebraDescriptor& d) {
  const int s = d.embedded_size();
  return AlgebraElement(d, CMatrix::Identity(s, s));
}

AlgebraElement AlgebraElement::scalar(const AlgebraDescriptor& d, double s) {
  return identity(d) * s;
}

AlgebraElement AlgebraElement::from_embedded(const AlgebraDescriptor& d, CMatrix m) {
  const int s = d.embedded_size();
  if (m.rows() != s || m.cols() != s) {
    throw Error(ErrorCode::SizeMismatch, "embedded matrix has wrong size");
  }
  if (!m.allFinite()) throw Error(ErrorCode::ParseError, "non-finite algebra entry");
  return AlgebraElement(d, project(d, std::move(m)));
}

AlgebraElement AlgebraElement::from_real(const AlgebraDescriptor& d, const Eigen::MatrixXd& m) {
  if (d.kind == AlgebraKind::Quaternionic) {
    return from_quaternion_parts(d, m.cast<Complex>(), CMatrix::Zero(d.n, d.n));
  }
  return from_embedded(d, m.cast<Complex>());
}

AlgebraElement AlgebraElement::from_complex(const AlgebraDescriptor& d, const CMatrix& m) {
  if (d.kind == AlgebraKind::Quaternionic) {
    return from_quaternion_parts(d, m, CMatrix::Zero(d.n, d.n));
  }
  return from_embedded(d, m);
}

AlgebraElement AlgebraElement::from_quaternion_parts(const AlgebraDescriptor& d, const CMatrix& x1,
                                                     const CMatrix& x2) {
  if (d.kind != AlgebraKind::Quaternionic) {
    throw Error(ErrorCode::DescriptorMismatch, "quaternion parts given for a non-quaternionic algebra");
  }
  if (x1.rows() != d.n || x1.cols() != d.n || x2.rows() != d.n || x2.cols() != d.n) {
    throw Error(ErrorCode::SizeMismatch, "quaternion parts have wrong size");
  }
  CMatrix out(2 * d.n, 2 * d.n);
  out << x1, x2, -x2.conjugate(), x1.conjugate();
  return from_embedded(d, out);
}

std::pair<CMatrix, CMatrix> AlgebraElement::quaternion_parts() const {
  if (desc_.kind != AlgebraKind::Quaternionic) {
    return {m_, CMatrix::Zero(desc_.n, desc_.n)};
  }
  const int n = desc_.n;
  return {m_.topLeftCorner(n, n), m_.topRightCorner(n, n)};
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (!desc_.same_algebra(o.desc_)) {
    throw Error(ErrorCode::DescriptorMismatch, "operands belong to different algebras");
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_same(o);
  return AlgebraElement(desc_, m_ + o.m_);
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  check_same(o);
  return AlgebraElement(desc_, m_ - o.m_);
}

AlgebraElement AlgebraElement::operator-() const { return AlgebraElement(desc_, -m_); }

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_same(o);
  return AlgebraElement(desc_, project(desc_, m_ * o.m_));
}

AlgebraElement AlgebraElement::operator*(double s) const { return AlgebraElement(desc_, m_ * s); }

AlgebraElement sigma(const AlgebraElement& a) {
  return AlgebraElement::from_embedded(a.descriptor(), a.embedded().adjoint());
}

double smallest_singular_value(const AlgebraElement& a) {
  Eigen::JacobiSVD<CMatrix> svd(a.embedded());
  return svd.singularValues().minCoeff();
}

bool is_invertible(const AlgebraElement& a) {
  const double scale = a.norm();
  return scale > 0.0 && smallest_singular_value(a) > a.tol() * scale;
}

AlgebraElement inverse(const AlgebraElement& a) {
  if (!is_invertible(a)) throw Error(ErrorCode::NotInvertible, "algebra element is not invertible");
  return AlgebraElement::from_embedded(a.descriptor(), a.embedded().partialPivLu().inverse());
}

bool is_symmetric(const AlgebraElement& a) {
  const double scale = a.norm();
  if (scale == 0.0) return true;
  return (a.embedded() - a.embedded().adjoint()).norm() <= a.tol() * scale;
}

RVector self_adjoint_spectrum(const AlgebraElement& a) { return hermitian_eigen(a).eigenvalues(); }

bool is_positive(const AlgebraElement& a) {
  if (!a.is_finite() || !is_symmetric(a)) return false;
  const double scale = a.norm();
  if (scale == 0.0) return false;
  return self_adjoint_spectrum(a).minCoeff() > a.tol() * scale;
}

bool is_unitary(const AlgebraElement& a) {
  const int s = a.descriptor().embedded_size();
  return (a.embedded().adjoint() * a.embedded() - CMatrix::Identity(s, s)).norm() <= a.tol();
}

AlgebraElement sqrt_positive(const AlgebraElement& a) {
  if (!is_positive(a)) throw Error(ErrorCode::NotPositive, "sqrt_positive: element is not positive");
  auto eig = hermitian_eigen(a);
  const CMatrix& v = eig.eigenvectors();
  RVector roots = eig.eigenvalues().cwiseSqrt();
  CMatrix q = v * roots.cast<Complex>().asDiagonal() * v.adjoint();
  return AlgebraElement::from_embedded(a.descriptor(), 0.5 * (q + q.adjoint()));
}

PolarDecomposition polar_decompose(const AlgebraElement& a) {
  if (!is_invertible(a)) throw Error(ErrorCode::NotInvertible, "polar_decompose: element is not invertible");
  // a = W S V^*  =>  u = W V^*, b = V S V^*; identical to u = a b^{-1} with
  // b = sqrt(sigma(a) a) but without squaring the condition number.
  Eigen::JacobiSVD<CMatrix> svd(a.embedded(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const CMatrix& w = svd.matrixU();
  const CMatrix& v = svd.matrixV();
  CMatrix u = w * v.adjoint();
  CMatrix b = v * svd.singularValues().cast<Complex>().asDiagonal() * v.adjoint();
  const auto& d = a.descriptor();
  return {AlgebraElement::from_embedded(d, u), AlgebraElement::from_embedded(d, 0.5 * (b + b.adjoint()))};
}

int unitary_component_label(const AlgebraElement& u) {
  if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "unitary_component_label: element is not unitary");
  if (u.descriptor().kind != AlgebraKind::Real) return 0;
  const double det = u.embedded().real().determinant();
  return det > 0.0 ? 1 : -1;
}

int unitary_component_count(AlgebraKind kind) { return kind == AlgebraKind::Real ? 2 : 1; }

double relative_distance(const AlgebraElement& a, const AlgebraElement& b) {
  const double diff = (a.embedded() - b.embedded()).norm();
  const double scale = std::max(a.norm(), b.norm());
  return scale == 0.0 ? diff : diff / scale;
}

bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double tol) {
  const double diff = (a.embedded() - b.embedded()).norm();
  const double scale = std::max(a.norm(), b.norm());
  return scale == 0.0 ? diff <= tol : diff <= tol * scale;
}

namespace {

CMatrix gaussian(const AlgebraDescriptor& d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const int n = d.n;
  auto draw_complex = [&](double scale) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng)) * scale;
    return m;
  };
  switch (d.kind) {
    case AlgebraKind::Real: {
      CMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = normal(rng);
      return m / std::sqrt(double(n));
    }
    case AlgebraKind::Complex:
      return draw_complex(1.0 / std::sqrt(2.0 * n));
    case AlgebraKind::Quaternionic: {
      CMatrix x1 = draw_complex(1.0 / std::sqrt(4.0 * n));
      CMatrix x2 = draw_complex(1.0 / std::sqrt(4.0 * n));
      CMatrix out(2 * n, 2 * n);
      out << x1, x2, -x2.conjugate(), x1.conjugate();
      return out;
    }
  }
  return {};
}

// Keeps sampled invertible elements away from the singular locus so that
// long products stay well conditioned.
constexpr double kMinSingular = 0.2;
constexpr double kPositiveShift = 0.25;

}  // namespace

AlgebraElement sample(const AlgebraDescriptor& d, SampleKind which, Rng& rng) {
  switch (which) {
    case SampleKind::General:
      return AlgebraElement::from_embedded(d, gaussian(d, rng));
    case SampleKind::Symmetric: {
      CMatrix g = gaussian(d, rng);
      return AlgebraElement::from_embedded(d, 0.5 * (g + g.adjoint()));
    }
    case SampleKind::Positive: {
      CMatrix g = gaussian(d, rng);
      CMatrix p = g * g.adjoint();
      p += kPositiveShift * CMatrix::Identity(p.rows(), p.cols());
      return AlgebraElement::from_embedded(d, 0.5 * (p + p.adjoint()));
    }
    case SampleKind::Invertible: {
      for (;;) {
        auto a = AlgebraElement::from_embedded(d, gaussian(d, rng));
        if (smallest_singular_value(a) > kMinSingular / d.n) return a;
      }
    }
    case SampleKind::Unitary: {
      for (;;) {
        auto a = AlgebraElement::from_embedded(d, gaussian(d, rng));
        if (smallest_singular_value(a) > 1e-3) return polar_decompose(a).unitary;
      }
    }
  }
  return AlgebraElement::zero(d);
}

AlgebraElement sample(const AlgebraDescriptor& d, SampleKind which, std::uint64_t seed) {
  Rng rng(seed);
  return sample(d, which, rng);
}

}  // namespace sp2
