#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subangle/numerics.hpp"

// Exterior (Grassmann) algebra over F^n for small n. Multivectors are sparse
// maps from multi-indices to coefficients in the canonical orthonormal basis
// e_1, ..., e_n. This is the determinant-free route to every angle, and the
// test oracle for the matrix routes.
namespace subangle::exterior {

inline constexpr int kMaxAmbient = 20;
inline constexpr double kPruneThreshold = 1e-14;

/// Strictly increasing list of 1-based indices, stored as a bit set.
class MultiIndex {
 public:
  MultiIndex() = default;

  /// Throws DomainError unless the indices are strictly increasing and in 1..20.
  static MultiIndex of(std::initializer_list<int> indices);
  static MultiIndex of(std::span<const int> indices);
  static MultiIndex from_mask(std::uint32_t mask) { return MultiIndex(mask); }
  /// The full index (1, ..., n).
  static MultiIndex full(int n);

  std::uint32_t mask() const { return mask_; }
  int grade() const;
  bool empty() const { return mask_ == 0; }
  std::vector<int> indices() const;
  int max_index() const;

  bool subset_of(MultiIndex other) const { return (mask_ & ~other.mask_) == 0; }
  bool disjoint(MultiIndex other) const { return (mask_ & other.mask_) == 0; }
  MultiIndex operator|(MultiIndex other) const { return MultiIndex(mask_ | other.mask_); }
  MultiIndex operator&(MultiIndex other) const { return MultiIndex(mask_ & other.mask_); }
  /// Indices of *this not in other.
  MultiIndex operator-(MultiIndex other) const { return MultiIndex(mask_ & ~other.mask_); }
  /// (1, ..., n) minus *this.
  MultiIndex complement(int n) const { return full(n) - *this; }

  bool operator==(const MultiIndex&) const = default;
  /// Orders by grade, then lexicographically by the index list.
  std::strong_ordering operator<=>(const MultiIndex& other) const;

  /// "12" style for single-digit indices, "(1,12)" otherwise; "" for the empty index.
  std::string to_string() const;

 private:
  explicit MultiIndex(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

/// All multi-indices of grade p with entries in 1..q, in lexicographic order.
std::vector<MultiIndex> multi_indices(int p, int q);

/// 0 if i and j share an index, otherwise the sign of the permutation sorting
/// the concatenation i j.
int perm_sign(MultiIndex i, MultiIndex j);

class Multivector {
 public:
  using Terms = std::map<MultiIndex, Scalar>;

  /// The zero multivector. Throws DomainError when ambient_dim is outside 0..20.
  Multivector(int ambient_dim, FieldTag field);

  static Multivector scalar(int ambient_dim, FieldTag field, Scalar value);
  static Multivector blade(int ambient_dim, FieldTag field, MultiIndex index,
                           Scalar coefficient = 1.0);
  static Multivector vector(const Vector& v, FieldTag field);

  int ambient_dim() const { return n_; }
  FieldTag field() const { return field_; }
  const Terms& terms() const { return terms_; }
  Scalar coefficient(MultiIndex index) const;
  bool is_zero() const { return terms_.empty(); }

  /// The single grade of a nonzero homogeneous multivector.
  std::optional<int> grade() const;
  Multivector grade_part(int p) const;

  double norm() const;

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(Scalar factor);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Scalar s, Multivector a) { return a *= s; }

  /// Adds c * e_index without pruning; call prune() once accumulation is done.
  void accumulate(MultiIndex index, Scalar c);
  /// Drops coefficients with magnitude below kPruneThreshold.
  void prune();

  /// Sum of terms like "2u12 - u23"; "0" when zero.
  std::string to_string() const;

 private:
  int n_;
  FieldTag field_;
  Terms terms_;
};

/// Unit top-grade blade of the canonical basis, e_1 ^ ... ^ e_n.
struct Orientation {
  int ambient_dim = 0;
  static Orientation canonical(int n) { return Orientation{n}; }
  Multivector top_blade(FieldTag field) const;
};

Multivector wedge(const Multivector& a, const Multivector& b);

/// Sesquilinear extension of det(<v_i, w_j>); conjugate-linear in a.
Scalar mv_inner(const Multivector& a, const Multivector& b);

/// Left contraction, the adjoint of wedging by a: <c, a _| b> = <a ^ c, b>.
Multivector contraction(const Multivector& a, const Multivector& b);

/// Hodge star a* = a _| Omega; conjugate-linear over the complex field.
Multivector star(const Multivector& a, const Orientation& orientation);

/// Inverse of star.
Multivector star_inverse(const Multivector& a, const Orientation& orientation);

/// Regressive product, (a v b)* = a* ^ b*.
Multivector regressive(const Multivector& a, const Multivector& b,
                       const Orientation& orientation);

/// Wedge of the columns in order; zero iff the columns are linearly dependent.
Multivector blade_from_basis(const Matrix& columns, FieldTag field);

/// Orthogonal projection of a onto the exterior algebra of the span of the
/// given orthonormal columns.
Multivector project(const Multivector& a, const Matrix& orthonormal);

}  // namespace subangle::exterior
