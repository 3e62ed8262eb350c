#include <doctest.h>

#include <cmath>
#include <random>

#include "subangle/angles.hpp"
#include "subangle/metrics.hpp"
#include "support.hpp"

using namespace subangle;
using testing::columns;
using testing::kDeg;
using testing::span;

namespace {

const double r2 = std::sqrt(2.0);
const double kHalfPi = M_PI / 2;
const FieldTag kR = FieldTag::Real;

Subspace ex_real_v() { return span(columns({{1 / r2, 0, 1 / r2, 0, 0}, {0, 1 / r2, 0, 1 / r2, 0}}), kR); }
Subspace ex_real_w() { return span(columns({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}}), kR); }
Subspace ex_real_w2() { return span(columns({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}), kR); }

// Table 1 formulas written out independently of the library.
double oracle_metric(MetricName m, const std::vector<double>& t) {
  double s_t2 = 0, s_half = 0, s_sin2 = 0, pc = 1;
  for (double x : t) {
    s_t2 += x * x;
    s_half += std::pow(std::sin(x / 2), 2);
    s_sin2 += std::pow(std::sin(x), 2);
    pc *= std::cos(x);
  }
  const double tp = t.back();
  switch (m) {
    case MetricName::Geodesic: return std::sqrt(s_t2);
    case MetricName::ChordalFrobenius: return 2 * std::sqrt(s_half);
    case MetricName::ProjectionFrobenius: return std::sqrt(s_sin2);
    case MetricName::FubiniStudy: return std::acos(pc);
    case MetricName::ChordalWedge: return std::sqrt(2 - 2 * pc);
    case MetricName::BinetCauchy: return std::sqrt(1 - pc * pc);
    case MetricName::Asimov: return tp;
    case MetricName::Chordal2Norm: return 2 * std::sin(tp / 2);
    case MetricName::Projection2Norm: return std::sin(tp);
  }
  return 0;
}

}  // namespace

TEST_CASE("metric names round trip") {
  for (MetricName m : kAllMetrics) CHECK(parse_metric(to_string(m)) == m);
  CHECK_FALSE(parse_metric("euclid").has_value());
  CHECK(parse_symmetrization("max") == Symmetrization::Max);
  CHECK(parse_symmetrization("mean") == Symmetrization::Mean);
  CHECK(parse_symmetrization("none") == Symmetrization::None);
  CHECK_FALSE(parse_symmetrization("min").has_value());
}

TEST_CASE("descriptors: diameters match f at right angles") {
  const double expect[] = {kHalfPi * std::sqrt(3.0), std::sqrt(6.0), std::sqrt(3.0), kHalfPi, r2, 1, kHalfPi, r2, 1};
  int k = 0;
  for (MetricName m : kAllMetrics) {
    const auto& d = descriptor(m);
    CHECK(d.diam(3) == doctest::Approx(expect[k++]));
    CHECK(d.diam(0) == 0.0);
    for (int p = 1; p <= 6; ++p) CHECK(d.diam(p) == doctest::Approx(d.f(std::vector<double>(p, kHalfPi))));
  }
}

TEST_CASE("metric properties: monotone and prefix-zero consistent") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> ang(0, kHalfPi);
  for (MetricName m : kAllMetrics) {
    const auto& d = descriptor(m);
    for (int t = 0; t < 20; ++t) {
      std::vector<double> th = {ang(rng), ang(rng), ang(rng)};
      std::sort(th.begin(), th.end());
      std::vector<double> padded = {0.0, 0.0};
      padded.insert(padded.end(), th.begin(), th.end());
      CHECK(d.f(padded) == doctest::Approx(d.f(th)).epsilon(1e-12));
      auto bigger = th;
      bigger[1] = std::min(kHalfPi, bigger[1] + 0.1);
      std::sort(bigger.begin(), bigger.end());
      CHECK(d.f(bigger) >= d.f(th) - 1e-15);
      CHECK(d.f(th) == doctest::Approx(oracle_metric(m, th)).epsilon(1e-12));
    }
  }
}

TEST_CASE("equal-dimension distances") {
  const auto v = ex_real_v();
  const auto w = ex_real_w2();
  CHECK(equal_dim_distance(MetricName::FubiniStudy, v, w) == doctest::Approx(60 * kDeg));
  CHECK(equal_dim_distance(MetricName::Geodesic, v, w) == doctest::Approx(r2 * M_PI / 4));
  CHECK(equal_dim_distance(MetricName::Projection2Norm, v, w) == doctest::Approx(r2 / 2));
  for (MetricName m : kAllMetrics) CHECK(std::abs(equal_dim_distance(m, v, v)) < 1e-12);
  CHECK_THROWS_AS(equal_dim_distance(MetricName::Asimov, v, ex_real_w()), DomainError);
  std::mt19937_64 rng(72);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_subspace(6, 3, FieldTag::Complex, rng);
    const auto b = random_subspace(6, 3, FieldTag::Complex, rng);
    const double th = asymmetric_angle(a, b);
    CHECK(equal_dim_distance(MetricName::BinetCauchy, a, b) == doctest::Approx(std::sin(th)));
    CHECK(equal_dim_distance(MetricName::ChordalWedge, a, b) == doctest::Approx(2 * std::sin(th / 2)));
    const auto oracle = testing::oracle_principal_angles(a.basis(), b.basis());
    for (MetricName m : kAllMetrics) {
      CHECK(equal_dim_distance(m, a, b) == doctest::Approx(oracle_metric(m, oracle)).epsilon(1e-7));
    }
  }
}

TEST_CASE("asymmetric extension cases") {
  const auto& fs = descriptor(MetricName::FubiniStudy);
  CHECK(asymmetric_distance(fs, ex_real_v(), ex_real_w()).value == doctest::Approx(60 * kDeg));
  const auto back = asymmetric_distance(fs, ex_real_w(), ex_real_v());
  CHECK(back.value == kHalfPi);
  CHECK(back.extension_case == ExtensionCase::HighToLowDiameter);
  const auto line = span(columns({{1, 0, 0, 0, 0}}), kR);
  CHECK(asymmetric_distance(descriptor(MetricName::Projection2Norm), line, ex_real_w()).value == doctest::Approx(0.0));
  const auto g = asymmetric_distance(descriptor(MetricName::Geodesic), ex_real_w(), line);
  CHECK(g.value == kHalfPi * std::sqrt(3.0));
  const auto z = asymmetric_distance(fs, Subspace::zero(5, kR), line);
  CHECK(z.value == 0.0);
  CHECK(z.extension_case == ExtensionCase::ZeroFrom);
  CHECK(asymmetric_distance(fs, line, ex_real_w()).extension_case == ExtensionCase::LowToHigh);
}

TEST_CASE("extensions realize Theta, sin Theta and the containment gap") {
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<int> dim(0, 5);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_subspace(5, dim(rng), kR, rng);
    const auto b = random_subspace(5, dim(rng), kR, rng);
    const double th = asymmetric_angle(a, b);
    CHECK(asymmetric_distance(descriptor(MetricName::FubiniStudy), a, b).value == doctest::Approx(th));
    CHECK(asymmetric_distance(descriptor(MetricName::BinetCauchy), a, b).value == doctest::Approx(std::sin(th)));
    if (!a.is_zero()) {
      CHECK(asymmetric_distance(descriptor(MetricName::Projection2Norm), a, b).value ==
            doctest::Approx(containment_gap(a, b)));
    }
  }
}

TEST_CASE("gap family") {
  const auto line = span(columns({{1, 0, 0, 0, 0}}), kR);
  CHECK(containment_gap(line, ex_real_w()) == doctest::Approx(0.0));
  CHECK(containment_gap(ex_real_w(), line) == 1.0);
  const Matrix v = columns({{1, 0, 1, 0}});
  const Matrix w = columns({{0, 1, 1, 0}, {1, 2, 2, -1}});
  CHECK(containment_gap(span(v, kR), span(w, kR)) == doctest::Approx(r2 / 2));
  CHECK(gap(line, ex_real_w()) == 1.0);
  CHECK(gap(ex_real_w(), ex_real_w()) == doctest::Approx(0.0));
  std::mt19937_64 rng(74);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_subspace(5, 2, kR, rng);
    const auto b = random_subspace(5, 2, kR, rng);
    const double oracle = (testing::oracle_projector(a.basis()) - testing::oracle_projector(b.basis()))
                              .jacobiSvd().singularValues()(0);
    CHECK(gap(a, b) == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(gap(a, b) == doctest::Approx(std::sin(principal_decomposition(a, b).angles.back())));
  }
}

TEST_CASE("directional and symmetric distances") {
  const auto line = span(columns({{1, 0, 0, 0, 0}}), kR);
  CHECK(directional_distance(line, ex_real_w()) == doctest::Approx(0.0));
  CHECK(directional_distance(ex_real_w(), line) == doctest::Approx(r2));
  const auto plane = span(columns({{1, 0, 0}, {0, 1, 0}}), kR);
  const auto perp = span(columns({{0, 0, 1}}), kR);
  CHECK(directional_distance(plane, perp) == doctest::Approx(r2));
  CHECK_THROWS_AS(directional_distance(Subspace::zero(3, kR), perp), DomainError);
  CHECK(symmetric_distance(plane, plane) == doctest::Approx(0.0));
  const auto e1 = span(columns({{1, 0, 0}}), kR);
  CHECK(symmetric_distance(e1, plane) == doctest::Approx(1.0));
  std::mt19937_64 rng(75);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_subspace(5, dim(rng), FieldTag::Complex, rng);
    const auto b = random_subspace(5, dim(rng), FieldTag::Complex, rng);
    // oracle: sum ||e_i - P_W e_i||^2 over an orthonormal basis of V
    const Matrix res = a.basis() - testing::oracle_projector(b.basis()) * a.basis();
    CHECK(directional_distance(a, b) == doctest::Approx(res.norm()).epsilon(1e-9));
    const double ds = symmetric_distance(a, b);
    CHECK(ds == doctest::Approx(std::max(directional_distance(a, b), directional_distance(b, a))));
    const double frob = (a.projector() - b.projector()).norm();
    CHECK(ds * ds == doctest::Approx((frob * frob + std::abs(a.dim() - b.dim())) / 2));
  }
}

TEST_CASE("diagnostic quantities are flagged non-metric") {
  const auto v = ex_real_v();
  const auto d = diagnostic_quantities(v, v);
  CHECK(d.at("max_correlation").value == doctest::Approx(0.0));
  CHECK(d.at("martin").value == doctest::Approx(0.0));
  CHECK(d.at("martin").non_metric);
  const auto meet = span(columns({{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}}), kR);
  CHECK(diagnostic_quantities(meet, ex_real_w()).at("max_correlation").value == doctest::Approx(0.0));
  const auto far = span(columns({{0, 0, 1, 0, 0}, {1, 0, 0, 0, 0}}), kR);
  const auto other = span(columns({{0, 0, 0, 1, 0}, {0, 1, 0, 0, 0}}), kR);
  CHECK(diagnostic_quantities(far, other).at("martin").infinite);
}

TEST_CASE("symmetrize") {
  CHECK(symmetrize(60 * kDeg, 90 * kDeg, Symmetrization::Max) == doctest::Approx(90 * kDeg));
  CHECK(symmetrize(60 * kDeg, 90 * kDeg, Symmetrization::Mean) == doctest::Approx(75 * kDeg));
  CHECK(symmetrize(0.3, 0.3, Symmetrization::Max) == 0.3);
  CHECK(symmetrize(0.3, 0.3, Symmetrization::Mean) == 0.3);
  CHECK(symmetrize(0.1, 0.9, Symmetrization::None) == 0.1);
}

TEST_CASE("equality triples") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto field = seed % 2 ? kR : FieldTag::Complex;
    const auto t = make_equality_triple(7, field, static_cast<int>(seed % 3), 0.5 + seed * 0.1, 1.0, seed);
    const double uw = asymmetric_angle(t.u, t.w);
    const double uv = asymmetric_angle(t.u, t.v);
    const double vw = asymmetric_angle(t.v, t.w);
    CHECK(std::abs(uw - uv - vw) < 1e-9);
    CHECK(t.u.dim() <= t.v.dim());
    CHECK(t.v.dim() <= t.w.dim());
  }
  const auto lines = make_equality_triple(5, kR, 0, 1.0, 2.0, 3);
  CHECK(lines.u.dim() == 1);
  CHECK_THROWS_AS(make_equality_triple(5, kR, 0, 0.0, 1.0, 1), DomainError);
  CHECK_THROWS_AS(make_equality_triple(3, kR, 2, 1.0, 1.0, 1), DomainError);
}

TEST_CASE("inequality chains") {
  const std::vector<double> th = {0.2, 0.5, 0.9};
  CHECK(row_chains(th).ok());
  CHECK(column_chains(th, 0).ok());
  // dim(V cap W) = p - 1: strict comparisons become equalities
  const std::vector<double> eq = {0.0, 0.0, 0.7};
  const auto c = column_chains(eq, 2);
  CHECK(c.ok());
  for (const auto& x : c.comparisons) CHECK(x.verdict != Verdict::Fails);
  // a wrong intersection count is caught
  CHECK_FALSE(column_chains(th, 2).ok());
  // nearly equal strict sides are indeterminate rather than failing
  const auto tiny = row_chains({1e-9});
  for (const auto& x : tiny.comparisons) CHECK(x.verdict != Verdict::Fails);
}
