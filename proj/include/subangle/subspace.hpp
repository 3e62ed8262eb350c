#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "subangle/numerics.hpp"

namespace subangle {

/// A linear subspace of F^n held as orthonormal columns.
class Subspace {
 public:
  /// Orthonormalizes arbitrary spanning columns. Dependent columns are legal;
  /// they lower the dimension and set rank_deficient().
  static Subspace from_vectors(const Matrix& columns, FieldTag field, const Tolerance& tol = {});
  /// Trusts the columns to be orthonormal (checked to 1e-10).
  static Subspace from_orthonormal(Matrix basis, FieldTag field);
  static Subspace zero(int ambient_dim, FieldTag field);
  static Subspace full(int ambient_dim, FieldTag field);

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }
  FieldTag field() const { return field_; }
  const Matrix& basis() const { return basis_; }
  bool rank_deficient() const { return rank_deficient_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  Matrix projector() const { return subangle::projector(basis_); }

 private:
  Subspace(Matrix basis, FieldTag field, bool rank_deficient)
      : basis_(std::move(basis)), field_(field), rank_deficient_(rank_deficient) {}

  Matrix basis_;
  FieldTag field_;
  bool rank_deficient_ = false;
};

/// Throws unless both subspaces live in the same F^n.
void require_same_space(const Subspace& v, const Subspace& w, const char* what);

struct PrincipalDecomposition {
  std::vector<double> angles;   // nondecreasing, m = min(p, q) entries
  std::vector<double> cosines;  // singular values of the cross-Gram matrix
  std::vector<double> sines;    // singular values of the projection residual
  Matrix left_basis;            // e_1..e_p
  Matrix right_basis;           // f_1..f_q
};

/// Principal angles and associated principal bases. Both subspaces nonzero.
PrincipalDecomposition principal_decomposition(const Subspace& v, const Subspace& w,
                                               const Tolerance& tol = {});

/// V is partially orthogonal to W: some nonzero v in V is orthogonal to W.
bool is_partially_orthogonal(const Subspace& v, const Subspace& w, const Tolerance& tol = {});

struct ProjectiveSplit {
  Subspace w_p;
  Subspace w_perp;
};

/// W = W_P + W_perp along a principal basis of (V, W).
ProjectiveSplit projective_split(const Subspace& v, const Subspace& w, const Tolerance& tol = {});

/// The orthogonal projection P_W(V).
Subspace project_onto(const Subspace& v, const Subspace& w, const Tolerance& tol = {});

Subspace orthogonal_complement(const Subspace& v);

/// Coordinates (2k-1, 2k) of the result hold (Re, Im) of coordinate k.
Vector underlying_real_vector(const Vector& x);
/// V as a real subspace of R^{2n}, spanned by b and i*b for each basis column b.
Subspace underlying_real(const Subspace& v);

/// Gaussian draw, orthonormalized. Deterministic for a fixed seed.
Subspace random_subspace(int ambient_dim, int dim, FieldTag field, std::uint64_t seed);
Subspace random_subspace(int ambient_dim, int dim, FieldTag field, std::mt19937_64& rng);
/// Standard Gaussian matrix (complex entries have independent parts).
Matrix random_gaussian(int rows, int cols, FieldTag field, std::mt19937_64& rng);
/// Random orthogonal/unitary n x n matrix.
Matrix random_unitary(int n, FieldTag field, std::mt19937_64& rng);

/// T(V) for unitary T.
Subspace transform(const Matrix& t, const Subspace& v);
/// V + W.
Subspace span_sum(const Subspace& v, const Subspace& w, const Tolerance& tol = {});
/// dim(V cap W) = p + q - rank [E F].
int intersection_dim_by_rank(const Subspace& v, const Subspace& w, const Tolerance& tol = {});
/// inner is contained in outer: the projection residual has operator norm below residual_tol.
bool contains(const Subspace& outer, const Subspace& inner, double residual_tol = 1e-9);
/// Operator norm of P_V - P_W.
double projector_distance(const Subspace& v, const Subspace& w);

}  // namespace subangle
