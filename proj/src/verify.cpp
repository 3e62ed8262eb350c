#include "subangle/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "subangle/exterior.hpp"

namespace subangle {

namespace {

namespace ext = exterior;

constexpr double kHalfPi = M_PI / 2;
constexpr double kDeg = M_PI / 180;
constexpr std::uint64_t kMaxEnumeration = 5000;  // coordinate subspaces per identity case
constexpr int kMaxExteriorAmbient = 10;

std::string num(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

// One vector per inner list.
Matrix columns(std::initializer_list<std::initializer_list<Scalar>> vectors) {
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

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Accumulates one pass/fail line per named suite, keeping the first failure.
class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  void expect_near(double got, double expected, double tol, const std::string& what) {
    expect(std::abs(got - expected) <= tol,
           what + ": got " + num(got) + ", expected " + num(expected) + " (tol " + num(tol) + ")");
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }

  void finish(VerifyReport& report) const {
    CheckResult r;
    r.name = name_;
    r.passed = failure_.empty();
    r.detail = r.passed ? std::to_string(cases_) + " cases" : failure_;
    if (!notes_.empty()) r.detail += " (" + notes_ + ")";
    report.checks.push_back(r);
  }

 private:
  std::string name_;
  std::string failure_;
  std::string notes_;
  int cases_ = 0;
};

struct Member {
  Subspace subspace;
  Matrix raw;  // spanning vectors as supplied
};

std::vector<Member> members_of(const std::vector<Subspace>& group) {
  std::vector<Member> out;
  for (const auto& s : group) out.push_back({s, s.basis()});
  return out;
}

void run_identity_suites(const std::vector<Member>& group, const std::string& label,
                         const Tolerance& tol, VerifyReport& report) {
  const double eps = tol.match_tol;
  if (group.empty()) return;
  const int n = group.front().subspace.ambient_dim();
  const FieldTag field = group.front().subspace.field();

  Suite routes("route_agreement [" + label + "]");
  Suite pythagorean("pythagorean_identity [" + label + "]");
  Suite sine("sine_identity [" + label + "]");
  Suite perp("perp_duality [" + label + "]");
  Suite symmetry("upsilon_psi_symmetry [" + label + "]");
  Suite projectors("gap_and_symmetric_distance_projectors [" + label + "]");
  Suite triangle("triangle_inequality [" + label + "]");

  const bool exterior_ok = n <= kMaxExteriorAmbient;
  if (!exterior_ok) routes.note("exterior route skipped for n > " + std::to_string(kMaxExteriorAmbient));
  const Matrix identity = Matrix::Identity(n, n);

  for (std::size_t i = 0; i < group.size(); ++i) {
    const Subspace& v = group[i].subspace;
    if (!v.is_zero()) {
      if (binomial(n, v.dim()) <= kMaxEnumeration) {
        pythagorean.expect_near(pythagorean_sum(v, identity, tol), 1.0, eps,
                                "subspace #" + std::to_string(i + 1));
      } else {
        pythagorean.note("skipped subspace #" + std::to_string(i + 1) + " (too many terms)");
      }
    }
    for (std::size_t j = 0; j < group.size(); ++j) {
      const Subspace& w = group[j].subspace;
      const std::string pair = "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";

      const double theta = asymmetric_angle(v, w, AngleRoute::PrincipalAngles, tol);
      const double upsilon = disjointness_angle(v, w, AngleRoute::PrincipalAngles, tol);
      const double psi = supplementation_angle(v, w, AngleRoute::PrincipalAngles, tol);
      if (exterior_ok) {
        routes.expect_near(asymmetric_angle(v, w, AngleRoute::ExteriorAlgebra, tol), theta, eps,
                           "Theta exterior vs principal, " + pair);
        routes.expect_near(disjointness_angle(v, w, AngleRoute::ExteriorAlgebra, tol), upsilon, eps,
                           "Upsilon exterior vs principal, " + pair);
        routes.expect_near(supplementation_angle(v, w, AngleRoute::ExteriorAlgebra, tol), psi, eps,
                           "Psi exterior vs principal, " + pair);
      }
      const bool raw_ok = !group[i].subspace.rank_deficient() && !group[j].subspace.rank_deficient();
      if (raw_ok) {
        try {
          routes.expect_near(asymmetric_angle_gram(group[i].raw, group[j].raw, field, tol), theta,
                             eps, "Theta gram vs principal, " + pair);
          routes.expect_near(disjointness_angle_gram(group[i].raw, group[j].raw, field, tol),
                             upsilon, eps, "Upsilon gram vs principal, " + pair);
          routes.expect_near(supplementation_angle_gram(group[i].raw, w.basis(), field, tol), psi,
                             eps, "Psi gram vs principal, " + pair);
        } catch (const DegenerateBasisError&) {
          routes.note("gram route skipped on a degenerate " + pair);
        }
      }

      perp.expect_near(asymmetric_angle(orthogonal_complement(v), orthogonal_complement(w), AngleRoute::PrincipalAngles, tol),
                       asymmetric_angle(w, v, AngleRoute::PrincipalAngles, tol), eps, pair);
      symmetry.expect_near(upsilon, disjointness_angle(w, v, AngleRoute::PrincipalAngles, tol), eps,
                           "Upsilon " + pair);
      symmetry.expect_near(psi, supplementation_angle(w, v, AngleRoute::PrincipalAngles, tol), eps,
                           "Psi " + pair);
      projectors.expect_near(gap(v, w, tol), projector_distance(v, w), eps, "gap " + pair);
      const double ds = symmetric_distance(v, w, tol);
      const double frob = frobenius_norm(v.projector() - w.projector());
      const double pq = std::abs(v.dim() - w.dim());
      projectors.expect_near(ds * ds, (frob * frob + pq) / 2, eps,
                             "symmetric distance vs projector Frobenius norm " + pair);
      const double fwd = v.is_zero() ? 0.0 : directional_distance(v, w, tol);
      const double bwd = w.is_zero() ? 0.0 : directional_distance(w, v, tol);
      projectors.expect_near(ds, std::max(fwd, bwd), eps,
                             "symmetric distance vs directional distances " + pair);

      if (!v.is_zero() && !w.is_zero()) {
        if (binomial(n, v.dim()) <= kMaxEnumeration) {
          const auto [sum, sin2] = sine_identity_sum(v, w, tol);
          sine.expect_near(sum, sin2, eps, pair);
        } else {
          sine.note("skipped " + pair + " (too many terms)");
        }
      }
    }
  }

  for (MetricName m : kAllMetrics) {
    const auto& desc = descriptor(m);
    const std::size_t k = group.size();
    std::vector<std::vector<double>> d(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        d[i][j] = asymmetric_distance(desc, group[i].subspace, group[j].subspace, tol).value;
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t c = 0; c < k; ++c) {
          triangle.expect(d[a][c] <= d[a][b] + d[b][c] + eps,
                          std::string(to_string(m)) + " triple (" + std::to_string(a + 1) + "," +
                              std::to_string(b + 1) + "," + std::to_string(c + 1) + ")");
        }
      }
    }
  }

  for (const Suite* s : {&routes, &pythagorean, &sine, &perp, &symmetry, &projectors, &triangle}) {
    s->finish(report);
  }
}

std::vector<Member> random_group(int n, FieldTag field, int count, std::mt19937_64& rng) {
  std::vector<Member> out;
  std::uniform_int_distribution<int> dims(0, n);
  for (int k = 0; k < count; ++k) {
    const int p = dims(rng);
    const Matrix raw = random_gaussian(n, p, field, rng);
    out.push_back({Subspace::from_vectors(raw, field), raw});
  }
  return out;
}

Subspace span(const Matrix& m, FieldTag field) { return Subspace::from_vectors(m, field); }

void golden_examples(const Tolerance& tol, VerifyReport& report) {
  const double eps = tol.match_tol;
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const Scalar i_unit{0.0, 1.0};
  const auto all_routes = {AngleRoute::PrincipalAngles, AngleRoute::GramDeterminant,
                           AngleRoute::ExteriorAlgebra};

  {
    Suite s("golden: real principal angles (R^5)");
    const auto v = span(columns({{1 / r2, 0, 1 / r2, 0, 0}, {0, 1 / r2, 0, 1 / r2, 0}}), FieldTag::Real);
    const auto w = span(columns({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}}), FieldTag::Real);
    const auto d = principal_decomposition(v, w, tol);
    s.expect_near(d.angles[0], 45 * kDeg, eps, "theta_1");
    s.expect_near(d.angles[1], 45 * kDeg, eps, "theta_2");
    for (AngleRoute r : all_routes) {
      s.expect_near(asymmetric_angle(v, w, r, tol), 60 * kDeg, eps,
                    "Theta_VW via " + std::string(to_string(r)));
      s.expect_near(asymmetric_angle(w, v, r, tol), 90 * kDeg, eps,
                    "Theta_WV via " + std::string(to_string(r)));
    }
    s.expect_near(projection_factor(v, w, tol), 0.5, eps, "projection factor");
    const auto w_perp = orthogonal_complement(w);
    const auto f34 = span(columns({{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}}), FieldTag::Real);
    s.expect_near(projector_distance(w_perp, f34), 0.0, eps, "W^perp = [f34]");
    const auto [sum, sin2] = sine_identity_sum(v, w, tol);
    s.expect_near(sum, 0.75, eps, "sine identity sum");
    s.expect_near(sin2, 0.75, eps, "sin^2 Theta");
    s.finish(report);
  }
  {
    Suite s("golden: complex principal angles (C^4)");
    const auto v = span(columns({{r2 / 2, r2 / 2, 0, 0}, {0, 0, i_unit / 2.0, r3 / 2}}), FieldTag::Complex);
    const auto w = span(columns({{Scalar(0.5, 0.5), Scalar(0.5, -0.5), 0, 0}, {0, 0, i_unit, 0}}),
                        FieldTag::Complex);
    const auto d = principal_decomposition(v, w, tol);
    s.expect_near(d.angles[0], 45 * kDeg, eps, "theta_1");
    s.expect_near(d.angles[1], 60 * kDeg, eps, "theta_2");
    for (AngleRoute r : all_routes) {
      s.expect_near(asymmetric_angle(v, w, r, tol), std::acos(r2 / 4), eps,
                    "Theta via " + std::string(to_string(r)));
    }
    s.expect_near(asymmetric_angle(v, w, AngleRoute::PrincipalAngles, tol), 69.295 * kDeg, 1e-3 * kDeg,
                  "Theta ~ 69.295 deg");
    const auto vr = underlying_real(v);
    const auto wr = underlying_real(w);
    s.expect_near(asymmetric_angle(vr, wr, AngleRoute::PrincipalAngles, tol), std::acos(0.125), eps,
                  "underlying real Theta");
    s.expect_near(asymmetric_angle(vr, wr, AngleRoute::PrincipalAngles, tol), 82.819 * kDeg, 1e-3 * kDeg,
                  "underlying real Theta ~ 82.819 deg");
    const auto [lhs, rhs] = real_complex_relation_check(v, w, tol);
    s.expect_near(lhs, 0.125, eps, "cos Theta_R");
    s.expect_near(rhs, 0.125, eps, "cos^2 Theta");
    s.expect_near(projection_factor(v, w, tol), 0.125, eps, "projection factor");
    const auto dr = principal_decomposition(vr, wr, tol);
    const double expected[] = {45, 45, 60, 60};
    for (int k = 0; k < 4; ++k) {
      s.expect_near(dr.angles[static_cast<std::size_t>(k)], expected[k] * kDeg, eps,
                    "underlying real theta_" + std::to_string(k + 1));
    }
    s.finish(report);
  }
  {
    Suite s("golden: contraction blades (R^5)");
    const Matrix a = columns({{2, -1, 0, 0, 0}, {2, 0, 1, 0, 0}});
    const Matrix b = columns({{0, 1, 0, 0, 1}, {0, 0, 1, -1, 0}});
    const Matrix c = columns({{0, 1, 0, 0, 1}, {0, 0, 1, -1, 0}, {0, 0, 0, 1, 0}});
    const Matrix dm = columns({{2, -1, 0, 0, 0}, {2, 0, 1, 0, 0}, {0, 0, 1, 0, 0}});
    const auto f = FieldTag::Real;
    const auto A = ext::blade_from_basis(a, f);
    const auto B = ext::blade_from_basis(b, f);
    const auto C = ext::blade_from_basis(c, f);
    const auto D = ext::blade_from_basis(dm, f);
    const auto omega = ext::Orientation::canonical(5);
    s.expect_near(A.norm(), 3, eps, "||A||");
    s.expect_near(B.norm(), 2, eps, "||B||");
    s.expect_near(C.norm(), r2, eps, "||C||");
    s.expect_near(ext::mv_inner(A, B).real(), -1, eps, "<A,B>");
    const auto u4 = ext::Multivector::blade(5, f, ext::MultiIndex::of({4}), -1.0);
    s.expect_near((ext::contraction(A, C) - u4).norm(), 0, eps, "A _| C = -u4");
    s.expect_near(ext::regressive(A, B, omega).norm(), 0, eps, "A v B = 0");
    s.expect_near((ext::regressive(A, C, omega) - ext::Multivector::scalar(5, f, 2.0)).norm(), 0,
                  eps, "A v C = 2");
    const auto two_u3 = ext::Multivector::blade(5, f, ext::MultiIndex::of({3}), 2.0);
    s.expect_near((ext::regressive(C, D, omega) - two_u3).norm(), 0, eps, "C v D = 2u3");

    struct Case {
      const Matrix* x;
      const Matrix* y;
      const char* name;
      double theta, upsilon, psi;
    };
    const Case cases[] = {
        {&a, &b, "A,B", std::acos(1.0 / 6), std::asin(std::sqrt(17.0) / 6), 0.0},
        {&a, &c, "A,C", std::acos(1 / (3 * r2)), std::asin(r2 / 3), std::asin(r2 / 3)},
        {&c, &dm, "C,D", kHalfPi, 0.0, std::asin(r2 / 2)},
    };
    for (const auto& cs : cases) {
      const auto x = span(*cs.x, f);
      const auto y = span(*cs.y, f);
      for (AngleRoute r : all_routes) {
        const std::string tag = std::string(cs.name) + " via " + std::string(to_string(r));
        if (r == AngleRoute::GramDeterminant) {
          s.expect_near(asymmetric_angle_gram(*cs.x, *cs.y, f, tol), cs.theta, eps, "Theta " + tag);
          s.expect_near(disjointness_angle_gram(*cs.x, *cs.y, f, tol), cs.upsilon, eps, "Upsilon " + tag);
          s.expect_near(supplementation_angle_gram(*cs.x, y.basis(), f, tol), cs.psi, eps, "Psi " + tag);
        } else {
          s.expect_near(asymmetric_angle(x, y, r, tol), cs.theta, eps, "Theta " + tag);
          s.expect_near(disjointness_angle(x, y, r, tol), cs.upsilon, eps, "Upsilon " + tag);
          s.expect_near(supplementation_angle(x, y, r, tol), cs.psi, eps, "Psi " + tag);
        }
      }
    }
    s.expect(is_partially_orthogonal(span(c, f), span(dm, f), tol), "[C] partially orthogonal to [D]");
    s.finish(report);
  }
  {
    Suite s("golden: formula with distinct dimensions (R^4)");
    const Matrix vm = columns({{1, 0, 1, 0}});
    const Matrix wm = columns({{0, 1, 1, 0}, {1, 2, 2, -1}});
    const auto f = FieldTag::Real;
    const Matrix bg = gram(wm, f);
    s.expect_near((bg - columns({{2, 4}, {4, 10}})).norm(), 0, eps, "B = (2 4; 4 10)");
    const auto v = span(vm, f);
    const auto w = span(wm, f);
    for (AngleRoute r : all_routes) {
      const std::string tag = " via " + std::string(to_string(r));
      const bool g = r == AngleRoute::GramDeterminant;
      s.expect_near(g ? asymmetric_angle_gram(vm, wm, f, tol) : asymmetric_angle(v, w, r, tol),
                    45 * kDeg, eps, "Theta_VW" + tag);
      s.expect_near(g ? asymmetric_angle_gram(wm, vm, f, tol) : asymmetric_angle(w, v, r, tol),
                    90 * kDeg, eps, "Theta_WV" + tag);
      s.expect_near(g ? disjointness_angle_gram(vm, wm, f, tol) : disjointness_angle(v, w, r, tol),
                    45 * kDeg, eps, "Upsilon_VW" + tag);
      s.expect_near(g ? disjointness_angle_gram(wm, vm, f, tol) : disjointness_angle(w, v, r, tol),
                    45 * kDeg, eps, "Upsilon_WV" + tag);
      s.expect_near(g ? supplementation_angle_gram(vm, w.basis(), f, tol)
                      : supplementation_angle(v, w, r, tol),
                    0.0, eps, "Psi" + tag);
    }
    s.finish(report);
  }
  {
    Suite s("golden: formula with arbitrary bases (C^3)");
    const Scalar xi = std::polar(1.0, 2 * M_PI / 3);
    const Matrix vm = columns({{1, -xi, 0}, {0, xi, -xi * xi}});
    const Matrix wm = columns({{1, 0, 0}, {0, xi, 0}});
    const auto f = FieldTag::Complex;
    s.expect_near((gram(vm, f) - columns({{2, -1}, {-1, 2}})).norm(), 0, eps, "A = (2 -1; -1 2)");
    const auto v = span(vm, f);
    const auto w = span(wm, f);
    for (AngleRoute r : all_routes) {
      const std::string tag = " via " + std::string(to_string(r));
      const bool g = r == AngleRoute::GramDeterminant;
      s.expect_near(g ? asymmetric_angle_gram(vm, wm, f, tol) : asymmetric_angle(v, w, r, tol),
                    std::acos(1 / r3), eps, "Theta" + tag);
      s.expect_near(g ? disjointness_angle_gram(vm, wm, f, tol) : disjointness_angle(v, w, r, tol),
                    0.0, eps, "Upsilon" + tag);
      s.expect_near(g ? supplementation_angle_gram(vm, w.basis(), f, tol)
                      : supplementation_angle(v, w, r, tol),
                    std::asin(std::sqrt(2.0 / 3)), eps, "Psi" + tag);
    }
    const Matrix w3 = columns({{1, 0, 0}, {0, xi, 0}, {0, 0, xi * xi}});
    for (const auto& index : ext::multi_indices(2, 3)) {
      Matrix cols(3, 2);
      int k = 0;
      for (int i : index.indices()) cols.col(k++) = w3.col(i - 1);
      s.expect_near(std::cos(asymmetric_angle(v, span(cols, f), AngleRoute::PrincipalAngles, tol)),
                    1 / r3, eps, "cos Theta_{V,[w_" + index.to_string() + "]}");
    }
    s.expect_near(pythagorean_sum(v, w3, tol), 1.0, eps, "Pythagorean sum over [w_ij]");
    s.finish(report);
  }
  {
    Suite s("golden: planes in R^4 with M_12");
    const Matrix vm = columns({{1, -1, 0, 1}, {0, 1, 1, -1}});
    const Matrix wm = columns({{1, 0, 0, 0}, {0, 0, 1, 0}});
    const auto f = FieldTag::Real;
    const auto v = span(vm, f);
    const auto w = span(wm, f);
    s.expect_near(supplementation_angle_gram(vm, wm, f, tol), 0.0, eps, "Psi via gram");
    s.expect_near(supplementation_angle(v, w, AngleRoute::PrincipalAngles, tol), 0.0, eps, "Psi via principal");
    s.expect_near(supplementation_angle(v, w, AngleRoute::ExteriorAlgebra, tol), 0.0, eps, "Psi via exterior");
    s.finish(report);
  }
  {
    Suite s("golden: Pythagorean identity (C^2 and R^4)");
    const auto f = FieldTag::Complex;
    const auto v = span(columns({{i_unit / 2.0, r3 / 2}}), f);
    const auto w1 = span(columns({{1, 0}}), f);
    const auto w2 = span(columns({{0, 1}}), f);
    s.expect_near(asymmetric_angle(v, w1, AngleRoute::PrincipalAngles, tol), 60 * kDeg, eps, "Theta_{V,[w1]}");
    s.expect_near(asymmetric_angle(v, w2, AngleRoute::PrincipalAngles, tol), 30 * kDeg, eps, "Theta_{V,[w2]}");
    s.expect_near(pythagorean_sum(v, Matrix::Identity(2, 2), tol), 1.0, eps, "sum over C^2");
    const auto vr = underlying_real(v);
    const Matrix y = Matrix::Identity(4, 4);
    const double expected[] = {75.5, 64.3, 90, 90, 64.3, 41.4};  // y12 y13 y14 y23 y24 y34
    int k = 0;
    for (const auto& index : ext::multi_indices(2, 4)) {
      Matrix cols(4, 2);
      int c = 0;
      for (int i : index.indices()) cols.col(c++) = y.col(i - 1);
      const double t = asymmetric_angle(vr, span(cols, FieldTag::Real), AngleRoute::PrincipalAngles, tol);
      s.expect_near(t / kDeg, expected[k++], 0.05, "Theta_{V_R,[y_" + index.to_string() + "]} in degrees");
    }
    s.expect_near(pythagorean_sum(vr, y, tol), 1.0, eps, "sum over R^4");
    s.finish(report);
  }
  {
    Suite s("golden: complex lines need alignment (C^2)");
    const auto f = FieldTag::Complex;
    const Vector u = columns({{i_unit, 0}}).col(0);
    const Vector w = columns({{0.5, r3 / 2}}).col(0);
    const Vector v = u + w;
    s.expect_near(line_angle(u, w, f), 60 * kDeg, eps, "gamma_{u,w}");
    s.expect_near(line_angle(u, v, f) / kDeg, 38, 0.5, "gamma_{u,v} in degrees");
    s.expect_near(line_angle(v, w, f), line_angle(u, v, f), eps, "gamma_{v,w} = gamma_{u,v}");
    s.expect(line_angle(u, w, f) < line_angle(u, v, f) + line_angle(v, w, f) - 1e-3,
             "strict triangle inequality for unaligned vectors");
    s.finish(report);
  }
}

}  // namespace

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

VerifyReport verify_builtin(const Tolerance& tol, std::uint64_t seed) {
  VerifyReport report;
  golden_examples(tol, report);

  const double r2 = std::sqrt(2.0);
  const auto real = FieldTag::Real;
  std::vector<Subspace> r5 = {
      span(columns({{1 / r2, 0, 1 / r2, 0, 0}, {0, 1 / r2, 0, 1 / r2, 0}}), real),
      span(columns({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}}), real),
      span(columns({{2, -1, 0, 0, 0}, {2, 0, 1, 0, 0}}), real),
      span(columns({{0, 1, 0, 0, 1}, {0, 0, 1, -1, 0}}), real),
      span(columns({{0, 1, 0, 0, 1}, {0, 0, 1, -1, 0}, {0, 0, 0, 1, 0}}), real),
      span(columns({{2, -1, 0, 0, 0}, {2, 0, 1, 0, 0}, {0, 0, 1, 0, 0}}), real),
  };
  run_identity_suites(members_of(r5), "example subspaces of R^5", tol, report);

  std::mt19937_64 rng(seed);
  run_identity_suites(random_group(5, FieldTag::Real, 6, rng), "random R^5", tol, report);
  run_identity_suites(random_group(3, FieldTag::Complex, 6, rng), "random C^3", tol, report);
  return report;
}

VerifyReport verify_file(const SubspaceFile& file, const Tolerance& tol, std::uint64_t seed) {
  VerifyReport report;
  std::vector<Member> group;
  for (const auto& s : file.subspaces) group.push_back({s.subspace, s.vectors});
  run_identity_suites(group, "file subspaces", tol, report);
  std::mt19937_64 rng(seed);
  run_identity_suites(random_group(file.ambient_dim, file.field, 5, rng), "random subspaces", tol,
                      report);
  return report;
}

}  // namespace subangle
