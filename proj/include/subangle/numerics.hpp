#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "subangle/errors.hpp"

namespace subangle {

// Every matrix is stored complex. Over the real field imaginary parts are
// identically zero and conjugation is the identity.
using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class FieldTag { Real, Complex };

std::string_view to_string(FieldTag field);

inline Scalar conj(Scalar x, FieldTag field) {
  return field == FieldTag::Complex ? std::conj(x) : x;
}

struct Tolerance {
  double rank_tol = 1e-10;   // relative singular-value cutoff
  double angle_tol = 1e-9;   // radians
  double match_tol = 1e-9;   // golden-value comparisons
};

/// Inner product, conjugate-linear in the first argument.
Scalar inner(const Vector& v, const Vector& w, FieldTag field);

/// Entry (i, j) is inner(columns.col(i), columns.col(j)).
Matrix gram(const Matrix& columns, FieldTag field);

/// Entry (i, j) is inner(left.col(i), right.col(j)).
Matrix cross_gram(const Matrix& left, const Matrix& right, FieldTag field);

struct SvdResult {
  Matrix u;                    // rows x rows, unitary
  std::vector<double> sigma;   // min(rows, cols) values, nonincreasing
  Matrix v;                    // cols x cols, unitary
};

/// Full singular value decomposition m = u * diag(sigma) * v^H.
/// Throws NumericalError if the iteration does not converge.
SvdResult svd(const Matrix& m, FieldTag field);

/// Singular values only.
std::vector<double> singular_values(const Matrix& m, FieldTag field);

/// Count of sigma_i >= rank_tol * sigma_max (absolute rank_tol when sigma_max == 0).
std::size_t numerical_rank(std::span<const double> sigma, double rank_tol);
std::size_t numerical_rank(const Matrix& m, FieldTag field, double rank_tol);

/// Orthonormal basis of the column span. Modified Gram-Schmidt (two passes)
/// in column order; the column count equals the numerical rank.
Matrix orthonormalize(const Matrix& columns, FieldTag field, const Tolerance& tol);

/// Extends orthonormal columns to an orthonormal basis of the ambient space by
/// orthonormalizing canonical vectors against them. The appended vectors are
/// chosen greedily by largest residual, ties broken by lowest index.
Matrix complete_basis(const Matrix& orthonormal, FieldTag field);

/// Clamps a cosine/sine computed in floating point into [0, 1].
/// Values above 1 by more than 1e-8 (or below -1e-8) throw NumericalError.
double clamp_unit(double c);

/// Throws DomainError if any entry is NaN or infinite.
void require_finite(const Matrix& m, std::string_view what);

/// Throws DomainError if the field is real and some entry has an imaginary part.
void require_field(const Matrix& m, FieldTag field, std::string_view what);

/// Orthogonal projector onto the span of orthonormal columns.
Matrix projector(const Matrix& orthonormal);

double frobenius_norm(const Matrix& m);
double operator_norm(const Matrix& m);

/// 1 - det(I - K) for Hermitian K with spectrum in [0, 1], evaluated without
/// the cancellation of forming det(I - K) first. Result is clamped to [0, 1].
double one_minus_det_unit_minus(const Matrix& k);

/// Solves the Hermitian positive definite system a * x = b.
/// Throws DegenerateBasisError when a is singular relative to rank_tol.
Matrix solve_gram(const Matrix& a, const Matrix& b, FieldTag field, double rank_tol);

}  // namespace subangle
