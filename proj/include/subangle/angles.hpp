#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "subangle/subspace.hpp"

namespace subangle {

enum class AngleRoute { PrincipalAngles, GramDeterminant, ExteriorAlgebra };

std::string_view to_string(AngleRoute route);
/// Accepts "principal", "gram", "exterior".
std::optional<AngleRoute> parse_route(std::string_view name);

struct AngleReport {
  double theta_vw = 0.0;
  double theta_wv = 0.0;
  double upsilon = 0.0;
  double psi = 0.0;
  bool psi_ill_conditioned = false;
  double projection_factor = 0.0;
  std::vector<double> principal_angles;
  int p = 0;
  int q = 0;
  int n = 0;
};

/// Asymmetric angle Theta_{V,W}: pi/2 when dim V > dim W, 0 when V = {0}.
double asymmetric_angle(const Subspace& v, const Subspace& w,
                        AngleRoute route = AngleRoute::PrincipalAngles, const Tolerance& tol = {});

/// Gram-determinant formulas on arbitrary (linearly independent) bases as columns.
/// Throws DegenerateBasisError when a Gram matrix is singular.
double asymmetric_angle_gram(const Matrix& v_basis, const Matrix& w_basis, FieldTag field,
                             const Tolerance& tol = {});
double disjointness_angle_gram(const Matrix& v_basis, const Matrix& w_basis, FieldTag field,
                               const Tolerance& tol = {});
/// w_orthonormal must have orthonormal columns.
double supplementation_angle_gram(const Matrix& v_basis, const Matrix& w_orthonormal,
                                  FieldTag field, const Tolerance& tol = {});

/// Volume contraction factor of the projection V -> W: cos Theta over R, cos^2 Theta over C.
double projection_factor(const Subspace& v, const Subspace& w, const Tolerance& tol = {});

/// (cos Theta of the underlying real pair, cos^2 Theta of the complex pair).
std::pair<double, double> real_complex_relation_check(const Subspace& v, const Subspace& w,
                                                      const Tolerance& tol = {});

/// Disjointness angle Upsilon_{V,W} = pi/2 - Theta_{V,W^perp}.
double disjointness_angle(const Subspace& v, const Subspace& w,
                          AngleRoute route = AngleRoute::PrincipalAngles,
                          const Tolerance& tol = {});

/// Supplementation angle Psi_{V,W} = pi/2 - Theta_{V^perp,W}.
/// The principal route throws NumericalError when the angle count and the
/// stacked-basis rank disagree on dim(V cap W).
double supplementation_angle(const Subspace& v, const Subspace& w,
                             AngleRoute route = AngleRoute::PrincipalAngles,
                             const Tolerance& tol = {});

/// True when V + W = X holds only barely: the smallest nonzero principal
/// angle is below 1e-6, so Psi changes discontinuously under perturbation.
bool psi_ill_conditioned(const Subspace& v, const Subspace& w, const Tolerance& tol = {});

/// Sum of cos^2 Theta_{V,[w_I]} over all coordinate p-subspaces of an
/// orthonormal basis of the ambient space (equals 1).
double pythagorean_sum(const Subspace& v, const Matrix& basis_vectors, const Tolerance& tol = {});

/// (sum of cos^2 Theta_{V,[f_I]} over I not inside 1..q, sin^2 Theta_{V,W}).
std::pair<double, double> sine_identity_sum(const Subspace& v, const Subspace& w,
                                            const Tolerance& tol = {});

/// (cos Theta_{V,W'}, cos Theta_{V,P_W(V)} * cos Theta_{P_W(V),W'}) for W' inside W.
std::pair<double, double> spherical_pythagorean_check(const Subspace& v, const Subspace& w,
                                                      const Subspace& w_sub,
                                                      const Tolerance& tol = {});

/// (cos Theta_{V1+V2,W}, cos Theta_{V1,W1} * cos Theta_{V2,W2}) where W1 = P_W(V1)
/// and W2 is its orthogonal complement in W. V1 and V2 must be orthogonal.
std::pair<double, double> orthogonal_partition_check(const Subspace& v1, const Subspace& v2,
                                                     const Subspace& w,
                                                     const Tolerance& tol = {});

AngleReport angle_report(const Subspace& v, const Subspace& w,
                         AngleRoute route = AngleRoute::PrincipalAngles, const Tolerance& tol = {});

/// Angle between the lines spanned by nonzero vectors.
double line_angle(const Vector& a, const Vector& b, FieldTag field);

}  // namespace subangle
