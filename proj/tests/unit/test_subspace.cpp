#include <doctest.h>

#include <cmath>
#include <random>

#include "subangle/subspace.hpp"
#include "support.hpp"

using namespace subangle;
using testing::columns;
using testing::kDeg;
using testing::kI;
using testing::span;

namespace {

const double r2 = std::sqrt(2.0);
const double r3 = std::sqrt(3.0);

Subspace ex_real_v() { return span(columns({{1 / r2, 0, 1 / r2, 0, 0}, {0, 1 / r2, 0, 1 / r2, 0}}), FieldTag::Real); }
Subspace ex_real_w() { return span(columns({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}}), FieldTag::Real); }
Subspace ex_complex_v() { return span(columns({{r2 / 2, r2 / 2, 0, 0}, {0, 0, kI / 2.0, r3 / 2}}), FieldTag::Complex); }
Subspace ex_complex_w() {
  return span(columns({{Scalar(0.5, 0.5), Scalar(0.5, -0.5), 0, 0}, {0, 0, kI, 0}}), FieldTag::Complex);
}

bool same_space(const Subspace& a, const Subspace& b) {
  return a.dim() == b.dim() && projector_distance(a, b) < 1e-10;
}

}  // namespace

TEST_CASE("construction") {
  const auto s = Subspace::from_vectors(columns({{1, 1, 0}, {2, 2, 0}}), FieldTag::Real);
  CHECK(s.dim() == 1);
  CHECK(s.rank_deficient());
  CHECK(Subspace::zero(3, FieldTag::Real).is_zero());
  CHECK(Subspace::full(3, FieldTag::Real).is_full());
  CHECK_THROWS_AS(Subspace::from_orthonormal(columns({{1, 1, 0}}), FieldTag::Real), DomainError);
  const auto b = ex_complex_v().basis();
  CHECK((gram(b, FieldTag::Complex) - Matrix::Identity(2, 2)).norm() < 1e-10);
  CHECK_THROWS_AS(require_same_space(Subspace::zero(3, FieldTag::Real), Subspace::zero(4, FieldTag::Real), "t"),
                  DimensionError);
}

TEST_CASE("principal decomposition of worked examples") {
  const auto d = principal_decomposition(ex_real_v(), ex_real_w());
  CHECK(d.angles[0] == doctest::Approx(45 * kDeg).epsilon(1e-12));
  CHECK(d.angles[1] == doctest::Approx(45 * kDeg).epsilon(1e-12));
  const auto c = principal_decomposition(ex_complex_v(), ex_complex_w());
  CHECK(c.angles[0] == doctest::Approx(45 * kDeg).epsilon(1e-12));
  CHECK(c.angles[1] == doctest::Approx(60 * kDeg).epsilon(1e-12));
  const auto s = principal_decomposition(ex_real_w(), ex_real_w());
  for (double t : s.angles) CHECK(std::abs(t) < 1e-12);
  CHECK_THROWS_AS(principal_decomposition(Subspace::zero(5, FieldTag::Real), ex_real_w()), DomainError);
}

TEST_CASE("principal bases are biorthogonal and match an eigenvalue oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto field = trial % 2 ? FieldTag::Complex : FieldTag::Real;
    const Matrix vg = random_gaussian(6, 2 + trial % 3, field, rng);
    const Matrix wg = random_gaussian(6, 3, field, rng);
    const auto d = principal_decomposition(span(vg, field), span(wg, field));
    const Matrix m = cross_gram(d.left_basis, d.right_basis, field);
    const auto oracle = testing::oracle_principal_angles(vg, wg);
    REQUIRE(oracle.size() == d.angles.size());
    for (std::size_t i = 0; i < d.angles.size(); ++i) {
      CHECK(d.angles[i] == doctest::Approx(oracle[i]).epsilon(1e-7));
      CHECK(std::abs(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) - d.cosines[i]) < 1e-9);
      CHECK(d.cosines[i] * d.cosines[i] + d.sines[i] * d.sines[i] == doctest::Approx(1.0));
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (i != j) CHECK(std::abs(m(i, j)) < 1e-9);
      }
    }
    CHECK(std::is_sorted(d.angles.begin(), d.angles.end()));
  }
}

TEST_CASE("zero angles count the intersection") {
  std::mt19937_64 rng(22);
  const Matrix common = random_gaussian(6, 2, FieldTag::Real, rng);
  Matrix v(6, 3), w(6, 4);
  v << common, random_gaussian(6, 1, FieldTag::Real, rng);
  w << common, random_gaussian(6, 2, FieldTag::Real, rng);
  const auto a = span(v, FieldTag::Real);
  const auto b = span(w, FieldTag::Real);
  const auto d = principal_decomposition(a, b);
  const auto zeros = std::count_if(d.angles.begin(), d.angles.end(), [](double t) { return t < 1e-9; });
  CHECK(zeros == 2);
  CHECK(intersection_dim_by_rank(a, b) == 2);
}

TEST_CASE("partial orthogonality") {
  const auto plane = span(columns({{1, 0, 0}, {0, 1, 0}}), FieldTag::Real);
  const auto line = span(columns({{1, 1, 0}}), FieldTag::Real);
  CHECK(is_partially_orthogonal(plane, line));
  CHECK_FALSE(is_partially_orthogonal(line, plane));
  const auto c = span(columns({{0, 1, 0, 0, 1}, {0, 0, 1, -1, 0}, {0, 0, 0, 1, 0}}), FieldTag::Real);
  const auto d = span(columns({{2, -1, 0, 0, 0}, {2, 0, 1, 0, 0}, {0, 0, 1, 0, 0}}), FieldTag::Real);
  CHECK(is_partially_orthogonal(c, d));
}

TEST_CASE("projective split") {
  const auto line = span(columns({{1, 2, 3}}), FieldTag::Real);
  const auto all = Subspace::full(3, FieldTag::Real);
  const auto s = projective_split(line, all);
  CHECK(same_space(s.w_p, line));
  CHECK(same_space(s.w_perp, orthogonal_complement(line)));

  const auto t = projective_split(ex_real_v(), ex_real_w());
  CHECK(same_space(t.w_p, span(columns({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}), FieldTag::Real)));
  CHECK(same_space(t.w_perp, span(columns({{0, 0, 0, 0, 1}}), FieldTag::Real)));

  const auto z = projective_split(Subspace::zero(5, FieldTag::Real), ex_real_w());
  CHECK(z.w_p.is_zero());
  CHECK(same_space(z.w_perp, ex_real_w()));
}

TEST_CASE("projection onto a subspace") {
  const auto e1 = span(columns({{1, 0, 0}}), FieldTag::Real);
  const auto e23 = span(columns({{0, 1, 0}, {0, 0, 1}}), FieldTag::Real);
  CHECK(project_onto(e1, e23).is_zero());
  const auto inside = span(columns({{0, 1, 1}}), FieldTag::Real);
  CHECK(same_space(project_onto(inside, e23), inside));
  // least-squares oracle for P_W v
  const Matrix v = columns({{1, 0, 1, 0}});
  const Matrix w = columns({{0, 1, 1, 0}, {1, 2, 2, -1}});
  const Vector pv = testing::oracle_projector(w) * v.col(0);
  CHECK(same_space(project_onto(span(v, FieldTag::Real), span(w, FieldTag::Real)), span(pv, FieldTag::Real)));
}

TEST_CASE("orthogonal complement") {
  CHECK(orthogonal_complement(Subspace::zero(4, FieldTag::Complex)).is_full());
  const auto c = orthogonal_complement(span(columns({{1, 0, 0}}), FieldTag::Real));
  CHECK(same_space(c, span(columns({{0, 1, 0}, {0, 0, 1}}), FieldTag::Real)));
  const auto wp = orthogonal_complement(ex_real_w());
  CHECK(same_space(wp, span(columns({{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}}), FieldTag::Real)));
}

TEST_CASE("underlying real subspace") {
  const Vector r = underlying_real_vector(columns({{r2 / 2, r2 / 2, 0, 0}}).col(0));
  CHECK((r - columns({{r2 / 2, 0, r2 / 2, 0, 0, 0, 0, 0}}).col(0)).norm() < 1e-15);
  const auto vr = underlying_real(ex_complex_v());
  CHECK(vr.dim() == 4);
  CHECK(vr.field() == FieldTag::Real);
  const auto d = principal_decomposition(vr, underlying_real(ex_complex_w()));
  const double expect[] = {45, 45, 60, 60};
  for (int i = 0; i < 4; ++i) CHECK(d.angles[static_cast<std::size_t>(i)] == doctest::Approx(expect[i] * kDeg));
  CHECK(underlying_real(span(columns({{1, kI}}), FieldTag::Complex)).dim() == 2);
}

TEST_CASE("random subspaces") {
  CHECK(random_subspace(4, 0, FieldTag::Real, 1).is_zero());
  CHECK(random_subspace(4, 4, FieldTag::Complex, 1).is_full());
  const auto a = random_subspace(6, 3, FieldTag::Complex, 99);
  const auto b = random_subspace(6, 3, FieldTag::Complex, 99);
  CHECK((a.basis() - b.basis()).norm() == 0.0);
  std::mt19937_64 rng(5);
  const Matrix u = random_unitary(5, FieldTag::Complex, rng);
  CHECK((u.adjoint() * u - Matrix::Identity(5, 5)).norm() < 1e-12);
}

TEST_CASE("helpers: transform, span_sum, contains, projector_distance") {
  std::mt19937_64 rng(8);
  const auto v = random_subspace(5, 2, FieldTag::Real, rng);
  const auto w = random_subspace(5, 2, FieldTag::Real, rng);
  const auto s = span_sum(v, w);
  CHECK(s.dim() == 4);
  CHECK(contains(s, v));
  CHECK(contains(s, w));
  CHECK_FALSE(contains(v, w));
  const Matrix u = random_unitary(5, FieldTag::Real, rng);
  CHECK(projector_distance(transform(u, v), span(u * v.basis(), FieldTag::Real)) < 1e-12);
  const double oracle = (testing::oracle_projector(v.basis()) - testing::oracle_projector(w.basis()))
                            .jacobiSvd().singularValues()(0);
  CHECK(projector_distance(v, w) == doctest::Approx(oracle).epsilon(1e-10));
}
