#include "subangle/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace subangle {

std::string_view to_string(FieldTag field) {
  return field == FieldTag::Real ? "real" : "complex";
}

Scalar inner(const Vector& v, const Vector& w, FieldTag field) {
  if (v.size() != w.size()) {
    throw DimensionError("inner: vectors of length " + std::to_string(v.size()) +
                         " and " + std::to_string(w.size()));
  }
  Scalar sum{0.0, 0.0};
  for (Eigen::Index i = 0; i < v.size(); ++i) sum += conj(v(i), field) * w(i);
  return sum;
}

Matrix cross_gram(const Matrix& left, const Matrix& right, FieldTag field) {
  if (left.rows() != right.rows()) {
    throw DimensionError("cross_gram: ambient dimensions differ");
  }
  if (field == FieldTag::Complex) return left.adjoint() * right;
  return left.transpose() * right;
}

Matrix gram(const Matrix& columns, FieldTag field) {
  return cross_gram(columns, columns, field);
}

namespace {

template <typename Dense>
SvdResult jacobi_svd(const Dense& m) {
  Eigen::JacobiSVD<Dense> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("svd: Jacobi iteration did not converge");
  }
  SvdResult out;
  out.u = solver.matrixU().template cast<Scalar>();
  out.v = solver.matrixV().template cast<Scalar>();
  const auto& s = solver.singularValues();
  out.sigma.assign(s.data(), s.data() + s.size());
  return out;
}

}  // namespace

SvdResult svd(const Matrix& m, FieldTag field) {
  require_finite(m, "svd");
  if (m.rows() == 0 || m.cols() == 0) {
    return SvdResult{Matrix::Identity(m.rows(), m.rows()), {},
                     Matrix::Identity(m.cols(), m.cols())};
  }
  if (field == FieldTag::Real) return jacobi_svd(Eigen::MatrixXd(m.real()));
  return jacobi_svd(m);
}

std::vector<double> singular_values(const Matrix& m, FieldTag field) {
  require_finite(m, "singular_values");
  if (m.rows() == 0 || m.cols() == 0) return {};
  Eigen::VectorXd s;
  if (field == FieldTag::Real) {
    s = Eigen::JacobiSVD<Eigen::MatrixXd>(m.real()).singularValues();
  } else {
    s = Eigen::JacobiSVD<Matrix>(m).singularValues();
  }
  return {s.data(), s.data() + s.size()};
}

std::size_t numerical_rank(std::span<const double> sigma, double rank_tol) {
  if (sigma.empty()) return 0;
  const double smax = *std::max_element(sigma.begin(), sigma.end());
  const double cutoff = smax > 0.0 ? rank_tol * smax : rank_tol;
  if (smax <= 0.0) return 0;
  return static_cast<std::size_t>(
      std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s >= cutoff; }));
}

std::size_t numerical_rank(const Matrix& m, FieldTag field, double rank_tol) {
  const auto s = singular_values(m, field);
  return numerical_rank(s, rank_tol);
}

namespace {

// Removes the components along the accepted columns, twice.
void orthogonalize_against(Vector& v, const std::vector<Vector>& basis, FieldTag field) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : basis) v -= q * inner(q, v, field);
  }
}

// First component of magnitude above 1e-12 made real and positive.
void normalize_phase(Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      v *= std::abs(v(i)) / v(i);
      return;
    }
  }
}

Matrix stack(const std::vector<Vector>& cols, Eigen::Index rows) {
  Matrix out(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = cols[j];
  return out;
}

}  // namespace

Matrix orthonormalize(const Matrix& columns, FieldTag field, const Tolerance& tol) {
  require_finite(columns, "orthonormalize");
  const Eigen::Index rows = columns.rows();
  if (rows == 0 || columns.cols() == 0) return Matrix(rows, 0);

  const auto sigma = singular_values(columns, field);
  const std::size_t rank = numerical_rank(sigma, tol.rank_tol);
  if (rank == 0) return Matrix(rows, 0);
  const double cutoff = tol.rank_tol * sigma.front();

  std::vector<Vector> accepted;
  for (Eigen::Index j = 0; j < columns.cols() && accepted.size() < rank; ++j) {
    Vector v = columns.col(j);
    orthogonalize_against(v, accepted, field);
    const double norm = v.norm();
    if (norm > cutoff) accepted.push_back(v / norm);
  }
  if (accepted.size() == rank) return stack(accepted, rows);

  // Gram-Schmidt disagreed with the singular-value rank; take the dominant
  // left singular vectors instead.
  const auto full = svd(columns, field);
  std::vector<Vector> dominant;
  for (std::size_t j = 0; j < rank; ++j) {
    Vector u = full.u.col(static_cast<Eigen::Index>(j));
    normalize_phase(u);
    dominant.push_back(u);
  }
  return stack(dominant, rows);
}

Matrix complete_basis(const Matrix& orthonormal, FieldTag field) {
  const Eigen::Index n = orthonormal.rows();
  std::vector<Vector> basis;
  for (Eigen::Index j = 0; j < orthonormal.cols(); ++j) basis.emplace_back(orthonormal.col(j));
  while (static_cast<Eigen::Index>(basis.size()) < n) {
    Vector best;
    double best_norm = -1.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      Vector e = Vector::Unit(n, k);
      orthogonalize_against(e, basis, field);
      const double norm = e.norm();
      if (norm > best_norm) {
        best_norm = norm;
        best = e;
      }
    }
    basis.push_back(best / best_norm);
  }
  return stack(basis, n);
}

double clamp_unit(double c) {
  constexpr double kSlack = 1e-8;
  if (!(c <= 1.0 + kSlack && c >= -kSlack)) {
    throw NumericalError("cosine/sine value " + std::to_string(c) + " outside [0, 1]");
  }
  return std::clamp(c, 0.0, 1.0);
}

void require_finite(const Matrix& m, std::string_view what) {
  if (!m.allFinite()) {
    throw DomainError(std::string(what) + ": non-finite matrix entry");
  }
}

void require_field(const Matrix& m, FieldTag field, std::string_view what) {
  if (field == FieldTag::Real && m.size() > 0 && m.imag().cwiseAbs().maxCoeff() != 0.0) {
    throw DomainError(std::string(what) + ": complex entry in a real-field matrix");
  }
}

Matrix projector(const Matrix& orthonormal) {
  return orthonormal * orthonormal.adjoint();
}

double frobenius_norm(const Matrix& m) { return m.norm(); }

double operator_norm(const Matrix& m) {
  const auto s = singular_values(m, FieldTag::Complex);
  return s.empty() ? 0.0 : s.front();
}

double one_minus_det_unit_minus(const Matrix& k) {
  // Gaussian elimination on I - K that tracks each pivot's deviation from 1,
  // so log det(I - K) = sum log1p(deviation) keeps full relative accuracy
  // when K is small.
  const Eigen::Index n = k.rows();
  Matrix dev = -k;
  double log_det = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    const double delta = dev(c, c).real();
    if (1.0 + delta <= 1e-300) return 1.0;
    const Scalar pivot = 1.0 + dev(c, c);
    log_det += std::log1p(delta);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      const Scalar l = dev(i, c) / pivot;
      for (Eigen::Index j = c + 1; j < n; ++j) dev(i, j) -= l * dev(c, j);
    }
  }
  return std::clamp(0.0 - std::expm1(log_det), 0.0, 1.0);
}

Matrix solve_gram(const Matrix& a, const Matrix& b, FieldTag field, double rank_tol) {
  if (a.rows() == 0) return Matrix(0, b.cols());
  const auto s = singular_values(a, field);
  if (s.back() < rank_tol * s.front() || s.front() == 0.0) {
    throw DegenerateBasisError("Gram matrix is singular: basis is linearly dependent");
  }
  return a.llt().solve(b);
}

}  // namespace subangle
