#include "subangle/angles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subangle/exterior.hpp"

namespace subangle {

namespace {

namespace ext = exterior;

constexpr double kHalfPi = M_PI / 2;

double angle_from(double sin2, double cos2) {
  return std::atan2(std::sqrt(std::clamp(sin2, 0.0, 1.0)), std::sqrt(std::clamp(cos2, 0.0, 1.0)));
}

double angle_from_unsquared(double s, double c) {
  return std::atan2(std::clamp(s, 0.0, 1.0), std::clamp(c, 0.0, 1.0));
}

// 1 - prod(1 - x_i) without cancellation.
double one_minus_prod_one_minus(const std::vector<double>& x, std::size_t first = 0) {
  double log_sum = 0.0;
  for (std::size_t i = first; i < x.size(); ++i) log_sum += std::log1p(-std::min(x[i], 1.0));
  return 0.0 - std::expm1(log_sum);  // not -expm1: avoids -0
}

std::vector<double> squares(const std::vector<double>& x) {
  std::vector<double> out;
  out.reserve(x.size());
  for (double v : x) out.push_back(v * v);
  return out;
}

double product(const std::vector<double>& x, std::size_t first = 0) {
  double p = 1.0;
  for (std::size_t i = first; i < x.size(); ++i) p *= x[i];
  return p;
}

double real_det(const Matrix& m) {
  if (m.rows() == 0) return 1.0;
  return m.determinant().real();
}

// Product of cosines via the principal route; 1 for V = {0}.
double cos_theta(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  if (v.is_zero()) return 1.0;
  if (w.is_zero() || v.dim() > w.dim()) return 0.0;
  return product(principal_decomposition(v, w, tol).cosines);
}

Matrix select_columns(const Matrix& m, const ext::MultiIndex& index) {
  Matrix out(m.rows(), index.grade());
  int c = 0;
  for (int i : index.indices()) out.col(c++) = m.col(i - 1);
  return out;
}

void require_orthonormal(const Matrix& m, FieldTag field, const char* what) {
  const Matrix g = gram(m, field);
  if (g.cols() > 0 && (g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() > 1e-10) {
    throw DomainError(std::string(what) + ": basis is not orthonormal");
  }
}

// The matrices of the Gram-determinant formulas for bases v (n x p), w (n x q):
// A = Gram(v), K = conj(C)^T B^-1 C, and G = A - K formed from the residual
// vectors v - P_W v rather than by subtraction.
struct GramPieces {
  Matrix a;
  Matrix k;
  Matrix g;
  Matrix l_inv;  // inverse Cholesky factor of A
  Matrix projected;  // P_W of each column of v
  Matrix residual;   // v - P_W v
  FieldTag field = FieldTag::Real;

  // L^-1 M L^-H, whose spectrum is relative to A.
  Matrix whiten(const Matrix& m) const {
    Matrix s = l_inv * m * l_inv.adjoint();
    return (s + s.adjoint()) / 2.0;
  }

  // det(cols^H cols) / det A from singular values, which keeps small
  // determinants accurate where forming the Gram matrix would not.
  double relative_gram_det(const Matrix& cols) const {
    double d = 1.0;
    for (double s : singular_values(cols * l_inv.adjoint(), field)) d *= s * s;
    return d;
  }
};

GramPieces gram_pieces(const Matrix& v, const Matrix& w, FieldTag field, const Tolerance& tol) {
  require_finite(v, "gram route");
  require_finite(w, "gram route");
  if (v.rows() != w.rows()) throw DimensionError("gram route: ambient dimensions differ");
  GramPieces out;
  out.a = gram(v, field);
  (void)solve_gram(out.a, Matrix::Identity(out.a.rows(), 0), field, tol.rank_tol);
  const Matrix b = gram(w, field);
  const Matrix c = cross_gram(w, v, field);
  const Matrix x = solve_gram(b, c, field, tol.rank_tol);
  out.k = c.adjoint() * x;
  out.projected = w * x;
  out.residual = v - out.projected;
  out.g = gram(out.residual, field);
  out.field = field;
  Eigen::LLT<Matrix> llt(out.a);
  out.l_inv = llt.matrixL().solve(Matrix::Identity(out.a.rows(), out.a.rows()));
  return out;
}

// Theta_{V,W} via exterior algebra: cos from the contraction, sin from the
// component of A outside the exterior algebra of W.
double theta_exterior(const ext::Multivector& a, const ext::Multivector& b,
                      const Matrix& w_orthonormal) {
  const double na = a.norm();
  const double cos = ext::contraction(a, b).norm() / (na * b.norm());
  const double sin = (a - ext::project(a, w_orthonormal)).norm() / na;
  return angle_from_unsquared(sin, cos);
}

double theta_principal(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  if (v.is_zero()) return 0.0;
  if (w.is_zero() || v.dim() > w.dim()) return kHalfPi;
  const auto d = principal_decomposition(v, w, tol);
  const double sin2 = one_minus_prod_one_minus(squares(d.sines));
  const double cos = product(d.cosines);
  return angle_from(sin2, cos * cos);
}

double upsilon_principal(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  if (v.is_zero() || w.is_zero()) return kHalfPi;
  const auto d = principal_decomposition(v, w, tol);
  const double sin = product(d.sines);
  const double cos2 = one_minus_prod_one_minus(squares(d.cosines));
  return angle_from(sin * sin, cos2);
}

struct PsiCase {
  double value;
  bool ill_conditioned;
};

PsiCase psi_principal(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  const int n = v.ambient_dim();
  if (v.is_full() || w.is_full()) return {kHalfPi, false};
  if (v.is_zero() || w.is_zero() || v.dim() + w.dim() < n) return {0.0, false};
  const auto d = principal_decomposition(v, w, tol);
  const auto r = static_cast<std::size_t>(
      std::count_if(d.angles.begin(), d.angles.end(), [&](double t) { return t < tol.angle_tol; }));
  const int r_rank = intersection_dim_by_rank(v, w, tol);
  if (static_cast<int>(r) != r_rank) {
    throw NumericalError("supplementation angle: dim(V cap W) is " + std::to_string(r) +
                         " by principal angles but " + std::to_string(r_rank) +
                         " by rank; the pair is numerically degenerate");
  }
  if (v.dim() + w.dim() - static_cast<int>(r) != n) return {0.0, false};
  const double sin = product(d.sines, r);
  const double cos2 = one_minus_prod_one_minus(squares(d.cosines), r);
  const bool ill = r < d.angles.size() && d.angles[r] < 1e-6;
  return {angle_from(sin * sin, cos2), ill};
}

ext::Multivector blade_of(const Subspace& s) {
  return ext::blade_from_basis(s.basis(), s.field());
}

}  // namespace

std::string_view to_string(AngleRoute route) {
  switch (route) {
    case AngleRoute::PrincipalAngles: return "principal";
    case AngleRoute::GramDeterminant: return "gram";
    case AngleRoute::ExteriorAlgebra: return "exterior";
  }
  return "principal";
}

std::optional<AngleRoute> parse_route(std::string_view name) {
  if (name == "principal") return AngleRoute::PrincipalAngles;
  if (name == "gram") return AngleRoute::GramDeterminant;
  if (name == "exterior") return AngleRoute::ExteriorAlgebra;
  return std::nullopt;
}

double asymmetric_angle_gram(const Matrix& v_basis, const Matrix& w_basis, FieldTag field,
                             const Tolerance& tol) {
  const auto p = v_basis.cols();
  const auto q = w_basis.cols();
  if (v_basis.rows() != w_basis.rows()) throw DimensionError("gram route: ambient dimensions differ");
  if (p == 0) return 0.0;
  if (q == 0 || p > q) return kHalfPi;
  const GramPieces g = gram_pieces(v_basis, w_basis, field, tol);
  const double cos2 = g.relative_gram_det(g.projected);
  const double sin2 = one_minus_det_unit_minus(g.whiten(g.g));
  return angle_from(sin2, cos2);
}

double disjointness_angle_gram(const Matrix& v_basis, const Matrix& w_basis, FieldTag field,
                               const Tolerance& tol) {
  if (v_basis.rows() != w_basis.rows()) throw DimensionError("gram route: ambient dimensions differ");
  if (v_basis.cols() == 0 || w_basis.cols() == 0) return kHalfPi;
  const GramPieces g = gram_pieces(v_basis, w_basis, field, tol);
  const double sin2 = g.relative_gram_det(g.residual);
  const double cos2 = one_minus_det_unit_minus(g.whiten(g.k));
  return angle_from(sin2, cos2);
}

double supplementation_angle_gram(const Matrix& v_basis, const Matrix& w_orthonormal,
                                  FieldTag field, const Tolerance& tol) {
  if (v_basis.rows() != w_orthonormal.rows()) {
    throw DimensionError("gram route: ambient dimensions differ");
  }
  require_orthonormal(w_orthonormal, field, "supplementation_angle_gram");
  const int n = static_cast<int>(v_basis.rows());
  const int p = static_cast<int>(v_basis.cols());
  const int q = static_cast<int>(w_orthonormal.cols());
  if (p + q < n) return 0.0;
  if (p == 0 || q == 0) return kHalfPi;  // the other one is all of X

  const Matrix a = gram(v_basis, field);
  (void)solve_gram(a, Matrix::Identity(p, 0), field, tol.rank_tol);
  double sum = 0.0;
  Matrix m(n, n);
  m.leftCols(p) = v_basis;
  for (const auto& index : ext::multi_indices(n - p, q)) {
    m.rightCols(n - p) = select_columns(w_orthonormal, index);
    sum += std::norm(m.determinant());
  }
  const double sin2 = sum / real_det(a);

  // cos^2 Psi = sin^2 Theta_{V^perp,W}, from the residual Gram matrix.
  double cos2 = 0.0;
  if (p < n) {
    const Subspace v_perp =
        orthogonal_complement(Subspace::from_vectors(v_basis, field, tol));
    const GramPieces g = gram_pieces(v_perp.basis(), w_orthonormal, field, tol);
    cos2 = one_minus_det_unit_minus(g.whiten(g.g));
  }
  return angle_from(sin2, cos2);
}

double asymmetric_angle(const Subspace& v, const Subspace& w, AngleRoute route,
                        const Tolerance& tol) {
  require_same_space(v, w, "asymmetric_angle");
  switch (route) {
    case AngleRoute::PrincipalAngles:
      return theta_principal(v, w, tol);
    case AngleRoute::GramDeterminant:
      return asymmetric_angle_gram(v.basis(), w.basis(), v.field(), tol);
    case AngleRoute::ExteriorAlgebra:
      return theta_exterior(blade_of(v), blade_of(w), w.basis());
  }
  return theta_principal(v, w, tol);
}

double projection_factor(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  require_same_space(v, w, "projection_factor");
  const double c = cos_theta(v, w, tol);
  return v.field() == FieldTag::Real ? c : c * c;
}

std::pair<double, double> real_complex_relation_check(const Subspace& v, const Subspace& w,
                                                      const Tolerance& tol) {
  require_same_space(v, w, "real_complex_relation_check");
  if (v.field() != FieldTag::Complex) {
    throw DomainError("real_complex_relation_check: needs complex subspaces");
  }
  const double lhs = cos_theta(underlying_real(v), underlying_real(w), tol);
  const double c = cos_theta(v, w, tol);
  return {lhs, c * c};
}

double disjointness_angle(const Subspace& v, const Subspace& w, AngleRoute route,
                          const Tolerance& tol) {
  require_same_space(v, w, "disjointness_angle");
  switch (route) {
    case AngleRoute::PrincipalAngles:
      return upsilon_principal(v, w, tol);
    case AngleRoute::GramDeterminant:
      return disjointness_angle_gram(v.basis(), w.basis(), v.field(), tol);
    case AngleRoute::ExteriorAlgebra: {
      const auto a = blade_of(v);
      const auto b = blade_of(w);
      const double na = a.norm();
      const double sin = ext::wedge(a, b).norm() / (na * b.norm());
      // cos Upsilon = sin Theta_{V,W^perp}
      const Matrix w_perp = orthogonal_complement(w).basis();
      const double cos = (a - ext::project(a, w_perp)).norm() / na;
      return angle_from_unsquared(sin, cos);
    }
  }
  return upsilon_principal(v, w, tol);
}

double supplementation_angle(const Subspace& v, const Subspace& w, AngleRoute route,
                             const Tolerance& tol) {
  require_same_space(v, w, "supplementation_angle");
  switch (route) {
    case AngleRoute::PrincipalAngles:
      return psi_principal(v, w, tol).value;
    case AngleRoute::GramDeterminant:
      return supplementation_angle_gram(v.basis(), w.basis(), v.field(), tol);
    case AngleRoute::ExteriorAlgebra: {
      const auto orientation = ext::Orientation::canonical(v.ambient_dim());
      const auto a = blade_of(v);
      const auto b = blade_of(w);
      const double sin = ext::regressive(a, b, orientation).norm() / (a.norm() * b.norm());
      // cos Psi = sin Theta_{V^perp,W}
      const auto a_star = ext::star(a, orientation);
      const double cos = (a_star - ext::project(a_star, w.basis())).norm() / a_star.norm();
      return angle_from_unsquared(sin, cos);
    }
  }
  return psi_principal(v, w, tol).value;
}

bool psi_ill_conditioned(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  require_same_space(v, w, "psi_ill_conditioned");
  return psi_principal(v, w, tol).ill_conditioned;
}

double pythagorean_sum(const Subspace& v, const Matrix& basis_vectors, const Tolerance& tol) {
  if (v.is_zero()) throw DomainError("pythagorean_sum: zero subspace");
  if (basis_vectors.rows() != v.ambient_dim() || basis_vectors.cols() != v.ambient_dim()) {
    throw DomainError("pythagorean_sum: basis must span the ambient space");
  }
  require_orthonormal(basis_vectors, v.field(), "pythagorean_sum");
  double sum = 0.0;
  for (const auto& index : ext::multi_indices(v.dim(), v.ambient_dim())) {
    const auto coord = Subspace::from_orthonormal(select_columns(basis_vectors, index), v.field());
    const double c = cos_theta(v, coord, tol);
    sum += c * c;
  }
  return sum;
}

std::pair<double, double> sine_identity_sum(const Subspace& v, const Subspace& w,
                                            const Tolerance& tol) {
  require_same_space(v, w, "sine_identity_sum");
  if (v.is_zero() || w.is_zero()) throw DomainError("sine_identity_sum: zero subspace");
  const auto d = principal_decomposition(v, w, tol);
  const Matrix full = complete_basis(d.right_basis, w.field());
  const auto block = ext::MultiIndex::full(w.dim());
  double sum = 0.0;
  for (const auto& index : ext::multi_indices(v.dim(), v.ambient_dim())) {
    if (index.subset_of(block)) continue;
    const auto coord = Subspace::from_orthonormal(select_columns(full, index), v.field());
    const double c = cos_theta(v, coord, tol);
    sum += c * c;
  }
  const double s = std::sin(theta_principal(v, w, tol));
  return {sum, s * s};
}

std::pair<double, double> spherical_pythagorean_check(const Subspace& v, const Subspace& w,
                                                      const Subspace& w_sub,
                                                      const Tolerance& tol) {
  require_same_space(v, w, "spherical_pythagorean_check");
  require_same_space(w, w_sub, "spherical_pythagorean_check");
  if (!contains(w, w_sub)) {
    throw DomainError("spherical_pythagorean_check: W' is not contained in W");
  }
  const Subspace pw = project_onto(v, w, tol);
  return {cos_theta(v, w_sub, tol), cos_theta(v, pw, tol) * cos_theta(pw, w_sub, tol)};
}

std::pair<double, double> orthogonal_partition_check(const Subspace& v1, const Subspace& v2,
                                                     const Subspace& w, const Tolerance& tol) {
  require_same_space(v1, v2, "orthogonal_partition_check");
  require_same_space(v1, w, "orthogonal_partition_check");
  if (v1.dim() > 0 && v2.dim() > 0 &&
      cross_gram(v1.basis(), v2.basis(), v1.field()).cwiseAbs().maxCoeff() > 1e-9) {
    throw DomainError("orthogonal_partition_check: V' and V'' are not orthogonal");
  }
  const Subspace v = span_sum(v1, v2, tol);
  const Subspace w1 = project_onto(v1, w, tol);
  const Matrix rest = w.basis() - w1.projector() * w.basis();
  const Subspace w2 = Subspace::from_vectors(rest, w.field(), tol);
  return {cos_theta(v, w, tol), cos_theta(v1, w1, tol) * cos_theta(v2, w2, tol)};
}

AngleReport angle_report(const Subspace& v, const Subspace& w, AngleRoute route,
                         const Tolerance& tol) {
  require_same_space(v, w, "angle_report");
  AngleReport out;
  out.p = v.dim();
  out.q = w.dim();
  out.n = v.ambient_dim();
  out.theta_vw = asymmetric_angle(v, w, route, tol);
  out.theta_wv = asymmetric_angle(w, v, route, tol);
  out.upsilon = disjointness_angle(v, w, route, tol);
  out.psi = supplementation_angle(v, w, route, tol);
  out.psi_ill_conditioned = psi_ill_conditioned(v, w, tol);
  out.projection_factor = projection_factor(v, w, tol);
  if (!v.is_zero() && !w.is_zero()) out.principal_angles = principal_decomposition(v, w, tol).angles;
  return out;
}

double line_angle(const Vector& a, const Vector& b, FieldTag field) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw DomainError("line_angle: zero vector");
  const Scalar ab = inner(a, b, field);
  const double cos = std::abs(ab) / (na * nb);
  const double sin = (b - a * (ab / (na * na))).norm() / nb;
  return angle_from_unsquared(sin, cos);
}

}  // namespace subangle
