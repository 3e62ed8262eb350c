#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <vector>

#include <Eigen/Eigenvalues>

#include "subangle/subspace.hpp"

namespace testing {

using subangle::FieldTag;
using subangle::Matrix;
using subangle::Scalar;
using subangle::Subspace;
using subangle::Vector;

inline constexpr double kDeg = M_PI / 180;
inline const Scalar kI{0.0, 1.0};

// One vector per inner list.
inline Matrix columns(std::initializer_list<std::initializer_list<Scalar>> vectors) {
  const auto n = static_cast<Eigen::Index>(vectors.begin()->size());
  Matrix m(n, static_cast<Eigen::Index>(vectors.size()));
  Eigen::Index j = 0;
  for (const auto& v : vectors) {
    Eigen::Index i = 0;
    for (Scalar x : v) m(i++, j) = x;
    ++j;
  }
  return m;
}

inline Subspace span(const Matrix& m, FieldTag field) { return Subspace::from_vectors(m, field); }

// Oracle independent of the SVD route: cos^2 of the principal angles are the
// eigenvalues of E^H P_W E, with E an orthonormal basis of V from Householder QR.
inline std::vector<double> oracle_principal_angles(const Matrix& v_cols, const Matrix& w_cols) {
  Eigen::HouseholderQR<Matrix> qv(v_cols);
  Eigen::HouseholderQR<Matrix> qw(w_cols);
  const Matrix e = qv.householderQ() * Matrix::Identity(v_cols.rows(), v_cols.cols());
  const Matrix f = qw.householderQ() * Matrix::Identity(w_cols.rows(), w_cols.cols());
  const Matrix m = e.adjoint() * f * f.adjoint() * e;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
  std::vector<double> out;
  for (Eigen::Index i = eig.eigenvalues().size() - 1; i >= 0; --i) {
    const double c2 = std::clamp(eig.eigenvalues()(i), 0.0, 1.0);
    out.push_back(std::acos(std::sqrt(c2)));
  }
  const auto m_count = static_cast<std::size_t>(std::min(v_cols.cols(), w_cols.cols()));
  out.resize(m_count);
  return out;
}

// Theta_{V,W} oracle: cos Theta = |det(E^H F')| where F' spans P_W(V), i.e.
// cos^2 Theta = det(E^H P_W E) for full-rank inputs with p <= q.
inline double oracle_theta(const Matrix& v_cols, const Matrix& w_cols) {
  if (v_cols.cols() == 0) return 0.0;
  if (v_cols.cols() > w_cols.cols()) return M_PI / 2;
  double c = 1.0;
  for (double t : oracle_principal_angles(v_cols, w_cols)) c *= std::cos(t);
  return std::acos(std::clamp(c, 0.0, 1.0));
}

// Orthogonal projector onto the column span, by least squares (pseudo-inverse).
inline Matrix oracle_projector(const Matrix& cols) {
  if (cols.cols() == 0) return Matrix::Zero(cols.rows(), cols.rows());
  const Matrix g = cols.adjoint() * cols;
  return cols * g.ldlt().solve(cols.adjoint());
}

}  // namespace testing
