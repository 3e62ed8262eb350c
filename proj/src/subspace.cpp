#include "subangle/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace subangle {

namespace {

Matrix take_columns(const Matrix& m, Eigen::Index first, Eigen::Index count) {
  return m.middleCols(first, count);
}

}  // namespace

Subspace Subspace::from_vectors(const Matrix& columns, FieldTag field, const Tolerance& tol) {
  require_finite(columns, "subspace");
  require_field(columns, field, "subspace");
  Matrix basis = orthonormalize(columns, field, tol);
  const bool deficient = basis.cols() < columns.cols();
  return Subspace(std::move(basis), field, deficient);
}

Subspace Subspace::from_orthonormal(Matrix basis, FieldTag field) {
  require_finite(basis, "subspace");
  require_field(basis, field, "subspace");
  const Matrix g = gram(basis, field);
  if (g.cols() > 0 && (g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() > 1e-10) {
    throw DomainError("subspace: columns are not orthonormal");
  }
  return Subspace(std::move(basis), field, false);
}

Subspace Subspace::zero(int ambient_dim, FieldTag field) {
  if (ambient_dim < 0) throw DomainError("negative ambient dimension");
  return Subspace(Matrix(ambient_dim, 0), field, false);
}

Subspace Subspace::full(int ambient_dim, FieldTag field) {
  if (ambient_dim < 0) throw DomainError("negative ambient dimension");
  return Subspace(Matrix::Identity(ambient_dim, ambient_dim), field, false);
}

void require_same_space(const Subspace& v, const Subspace& w, const char* what) {
  if (v.ambient_dim() != w.ambient_dim()) {
    throw DimensionError(std::string(what) + ": ambient dimensions " +
                         std::to_string(v.ambient_dim()) + " and " +
                         std::to_string(w.ambient_dim()));
  }
  if (v.field() != w.field()) {
    throw DomainError(std::string(what) + ": subspaces over different fields");
  }
}

PrincipalDecomposition principal_decomposition(const Subspace& v, const Subspace& w,
                                               const Tolerance& tol) {
  (void)tol;
  require_same_space(v, w, "principal_decomposition");
  if (v.is_zero() || w.is_zero()) {
    throw DomainError("principal_decomposition: zero subspace");
  }
  const FieldTag field = v.field();
  const Matrix& e0 = v.basis();
  const Matrix& f0 = w.basis();
  const Matrix m = cross_gram(e0, f0, field);
  const SvdResult s = svd(m, field);

  PrincipalDecomposition out;
  out.left_basis = e0 * s.u;
  out.right_basis = f0 * s.v;

  // Cosines lose the small angles; the residual of the smaller basis after
  // projecting onto the other subspace carries them as sines.
  const Matrix residual = v.dim() <= w.dim() ? Matrix(e0 - f0 * m.adjoint()) : Matrix(f0 - e0 * m);
  const std::vector<double> rs = singular_values(residual, field);
  const std::size_t count = s.sigma.size();
  for (std::size_t i = 0; i < count; ++i) {
    const double c = clamp_unit(s.sigma[i]);
    const double sn = clamp_unit(rs[count - 1 - i]);
    out.cosines.push_back(c);
    out.sines.push_back(sn);
    out.angles.push_back(std::atan2(sn, c));
  }
  // atan2 of independently computed pairs can break ties out of order.
  for (std::size_t i = 1; i < count; ++i) out.angles[i] = std::max(out.angles[i], out.angles[i - 1]);
  return out;
}

bool is_partially_orthogonal(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  require_same_space(v, w, "is_partially_orthogonal");
  if (v.is_zero()) return false;
  if (w.is_zero() || w.dim() < v.dim()) return true;
  const auto d = principal_decomposition(v, w, tol);
  return d.angles.back() >= M_PI / 2 - tol.angle_tol;
}

ProjectiveSplit projective_split(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  require_same_space(v, w, "projective_split");
  if (v.is_zero() || w.is_zero()) {
    return {Subspace::zero(w.ambient_dim(), w.field()), w};
  }
  const auto d = principal_decomposition(v, w, tol);
  const Eigen::Index m = std::min(v.dim(), w.dim());
  return {Subspace::from_orthonormal(take_columns(d.right_basis, 0, m), w.field()),
          Subspace::from_orthonormal(take_columns(d.right_basis, m, w.dim() - m), w.field())};
}

Subspace project_onto(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  require_same_space(v, w, "project_onto");
  if (v.is_zero() || w.is_zero()) return Subspace::zero(w.ambient_dim(), w.field());
  const auto d = principal_decomposition(v, w, tol);
  const auto k = std::count_if(d.angles.begin(), d.angles.end(),
                               [&](double t) { return t < M_PI / 2 - tol.angle_tol; });
  return Subspace::from_orthonormal(take_columns(d.right_basis, 0, k), w.field());
}

Subspace orthogonal_complement(const Subspace& v) {
  const Matrix full = complete_basis(v.basis(), v.field());
  return Subspace::from_orthonormal(take_columns(full, v.dim(), v.ambient_dim() - v.dim()),
                                    v.field());
}

Vector underlying_real_vector(const Vector& x) {
  Vector out(2 * x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    out(2 * k) = x(k).real();
    out(2 * k + 1) = x(k).imag();
  }
  return out;
}

Subspace underlying_real(const Subspace& v) {
  if (v.field() != FieldTag::Complex) {
    throw DomainError("underlying_real: subspace is already real");
  }
  Matrix basis(2 * v.ambient_dim(), 2 * v.dim());
  const Scalar i_unit{0.0, 1.0};
  for (int j = 0; j < v.dim(); ++j) {
    const Vector b = v.basis().col(j);
    basis.col(2 * j) = underlying_real_vector(b);
    basis.col(2 * j + 1) = underlying_real_vector(i_unit * b);
  }
  return Subspace::from_orthonormal(std::move(basis), FieldTag::Real);
}

Matrix random_gaussian(int rows, int cols, FieldTag field, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = field == FieldTag::Complex ? normal(rng) : 0.0;
      m(i, j) = Scalar{re, im};
    }
  }
  return m;
}

Subspace random_subspace(int ambient_dim, int dim, FieldTag field, std::mt19937_64& rng) {
  if (dim < 0 || dim > ambient_dim) {
    throw DomainError("random_subspace: dimension " + std::to_string(dim) +
                      " outside 0.." + std::to_string(ambient_dim));
  }
  if (dim == 0) return Subspace::zero(ambient_dim, field);
  // A Gaussian draw of full column rank; redraw in the measure-zero event it is not.
  for (;;) {
    Subspace s = Subspace::from_vectors(random_gaussian(ambient_dim, dim, field, rng), field);
    if (s.dim() == dim) return s;
  }
}

Subspace random_subspace(int ambient_dim, int dim, FieldTag field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_subspace(ambient_dim, dim, field, rng);
}

Matrix random_unitary(int n, FieldTag field, std::mt19937_64& rng) {
  return random_subspace(n, n, field, rng).basis();
}

Subspace transform(const Matrix& t, const Subspace& v) {
  return Subspace::from_orthonormal(t * v.basis(), v.field());
}

Subspace span_sum(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  require_same_space(v, w, "span_sum");
  Matrix stacked(v.ambient_dim(), v.dim() + w.dim());
  stacked << v.basis(), w.basis();
  const Subspace s = Subspace::from_vectors(stacked, v.field(), tol);
  return Subspace::from_orthonormal(s.basis(), v.field());
}

int intersection_dim_by_rank(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  require_same_space(v, w, "intersection_dim_by_rank");
  Matrix stacked(v.ambient_dim(), v.dim() + w.dim());
  stacked << v.basis(), w.basis();
  const auto rank = static_cast<int>(numerical_rank(stacked, v.field(), tol.rank_tol));
  return v.dim() + w.dim() - rank;
}

bool contains(const Subspace& outer, const Subspace& inner, double residual_tol) {
  require_same_space(outer, inner, "contains");
  if (inner.is_zero()) return true;
  const Matrix residual = inner.basis() - outer.projector() * inner.basis();
  return operator_norm(residual) < residual_tol;
}

double projector_distance(const Subspace& v, const Subspace& w) {
  require_same_space(v, w, "projector_distance");
  return operator_norm(v.projector() - w.projector());
}

}  // namespace subangle
