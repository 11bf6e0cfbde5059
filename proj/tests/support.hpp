#pragma once

#include <vector>

#include "sp2/algebra.hpp"

namespace sp2::test {

inline std::vector<AlgebraDescriptor> all_kinds(int n) {
  return {{AlgebraKind::Real, n}, {AlgebraKind::Complex, n}, {AlgebraKind::Quaternionic, n}};
}

inline AlgebraDescriptor real(int n) { return {AlgebraKind::Real, n}; }
inline AlgebraDescriptor cplx(int n) { return {AlgebraKind::Complex, n}; }
inline AlgebraDescriptor quat(int n) { return {AlgebraKind::Quaternionic, n}; }

inline AlgebraElement rmat(int n, std::initializer_list<double> rowmajor) {
  Eigen::MatrixXd m(n, n);
  auto it = rowmajor.begin();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = *it++;
  return AlgebraElement::from_real(real(n), m);
}

}  // namespace sp2::test
