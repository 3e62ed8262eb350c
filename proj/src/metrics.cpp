#include "subangle/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace subangle {

namespace {

constexpr double kHalfPi = M_PI / 2;

double sum_of(const std::vector<double>& t, double (*g)(double)) {
  double s = 0.0;
  for (double x : t) s += g(x);
  return s;
}

double sq(double x) { return x * x; }
double sin2(double x) { return sq(std::sin(x)); }
double sin2_half(double x) { return sq(std::sin(x / 2)); }

// 1 - prod cos^2 theta_i, accurate for small angles.
double one_minus_prod_cos2(const std::vector<double>& t) {
  double log_sum = 0.0;
  for (double x : t) log_sum += std::log1p(-std::min(sin2(x), 1.0));
  return 0.0 - std::expm1(log_sum);  // not -expm1: avoids -0
}

// 1 - prod cos theta_i, with cos x - 1 = -2 sin^2(x/2).
double one_minus_prod_cos(const std::vector<double>& t) {
  double log_sum = 0.0;
  for (double x : t) log_sum += std::log1p(-std::min(2 * sin2_half(x), 1.0));
  return 0.0 - std::expm1(log_sum);  // not -expm1: avoids -0
}

double prod_cos(const std::vector<double>& t) {
  double p = 1.0;
  for (double x : t) p *= std::cos(x);
  return p;
}

double largest(const std::vector<double>& t) {
  return t.empty() ? 0.0 : *std::max_element(t.begin(), t.end());
}

MetricDescriptor make(MetricName name) {
  const auto sp = [](int p) { return std::sqrt(static_cast<double>(p)); };
  const auto constant = [](double c) {
    return [c](int p) { return p == 0 ? 0.0 : c; };
  };
  switch (name) {
    case MetricName::Geodesic:
      return {name, [](const auto& t) { return std::sqrt(sum_of(t, sq)); },
              [sp](int p) { return kHalfPi * sp(p); }, "radians"};
    case MetricName::ChordalFrobenius:
      return {name, [](const auto& t) { return 2 * std::sqrt(sum_of(t, sin2_half)); },
              [sp](int p) { return sp(2 * p); }, "dimensionless"};
    case MetricName::ProjectionFrobenius:
      return {name, [](const auto& t) { return std::sqrt(sum_of(t, sin2)); }, sp,
              "dimensionless"};
    case MetricName::FubiniStudy:
      return {name,
              [](const auto& t) {
                return std::atan2(std::sqrt(one_minus_prod_cos2(t)), std::max(prod_cos(t), 0.0));
              },
              constant(kHalfPi), "radians"};
    case MetricName::ChordalWedge:
      return {name, [](const auto& t) { return std::sqrt(2 * one_minus_prod_cos(t)); },
              constant(std::sqrt(2.0)), "dimensionless"};
    case MetricName::BinetCauchy:
      return {name, [](const auto& t) { return std::sqrt(one_minus_prod_cos2(t)); },
              constant(1.0), "dimensionless"};
    case MetricName::Asimov:
      return {name, [](const auto& t) { return largest(t); }, constant(kHalfPi), "radians"};
    case MetricName::Chordal2Norm:
      return {name, [](const auto& t) { return 2 * std::sin(largest(t) / 2); },
              constant(std::sqrt(2.0)), "dimensionless"};
    case MetricName::Projection2Norm:
      return {name, [](const auto& t) { return std::sin(largest(t)); }, constant(1.0),
              "dimensionless"};
  }
  throw std::logic_error("unknown metric");
}

MetricDescriptor checked(MetricName name) {
  MetricDescriptor d = make(name);
  for (int p = 0; p <= 16; ++p) {
    const double expected = d.f(std::vector<double>(static_cast<std::size_t>(p), kHalfPi));
    if (std::abs(expected - d.diam(p)) > 1e-12) {
      throw std::logic_error("diameter of " + std::string(to_string(name)) +
                             " disagrees with f_p(pi/2, ..., pi/2) at p=" + std::to_string(p));
    }
  }
  return d;
}

std::vector<double> angles_or_empty(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  if (v.is_zero() || w.is_zero()) return {};
  return principal_decomposition(v, w, tol).angles;
}

Verdict strict_greater(double lhs, double rhs) {
  const double diff = lhs - rhs;
  if (diff > kStrictMargin) return Verdict::Holds;
  if (diff < -kStrictMargin) return Verdict::Fails;
  return Verdict::Indeterminate;
}

Verdict greater_equal(double lhs, double rhs) {
  return lhs >= rhs - kStrictMargin ? Verdict::Holds : Verdict::Fails;
}

Verdict equal_within(double lhs, double rhs, double tol) {
  return std::abs(lhs - rhs) <= tol ? Verdict::Holds : Verdict::Fails;
}

double metric_of(MetricName name, const std::vector<double>& t) { return descriptor(name).f(t); }

}  // namespace

std::string_view to_string(MetricName name) {
  switch (name) {
    case MetricName::Geodesic: return "geodesic";
    case MetricName::ChordalFrobenius: return "chordal_frobenius";
    case MetricName::ProjectionFrobenius: return "projection_frobenius";
    case MetricName::FubiniStudy: return "fubini_study";
    case MetricName::ChordalWedge: return "chordal_wedge";
    case MetricName::BinetCauchy: return "binet_cauchy";
    case MetricName::Asimov: return "asimov";
    case MetricName::Chordal2Norm: return "chordal_2norm";
    case MetricName::Projection2Norm: return "projection_2norm";
  }
  return "";
}

std::optional<MetricName> parse_metric(std::string_view name) {
  for (MetricName m : kAllMetrics) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

const MetricDescriptor& descriptor(MetricName name) {
  static const std::array<MetricDescriptor, 9> table = [] {
    std::array<MetricDescriptor, 9> out{};
    for (std::size_t i = 0; i < kAllMetrics.size(); ++i) out[i] = checked(kAllMetrics[i]);
    return out;
  }();
  return table[static_cast<std::size_t>(name)];
}

std::string_view to_string(ExtensionCase c) {
  switch (c) {
    case ExtensionCase::EqualDim: return "equal_dim";
    case ExtensionCase::LowToHigh: return "low_to_high";
    case ExtensionCase::HighToLowDiameter: return "high_to_low_diameter";
    case ExtensionCase::ZeroFrom: return "zero_from";
  }
  return "";
}

double equal_dim_distance(MetricName name, const Subspace& v, const Subspace& w,
                          const Tolerance& tol) {
  require_same_space(v, w, "equal_dim_distance");
  if (v.dim() != w.dim() || v.is_zero()) {
    throw DomainError("equal_dim_distance: needs nonzero subspaces of equal dimension, got " +
                      std::to_string(v.dim()) + " and " + std::to_string(w.dim()));
  }
  return descriptor(name).f(principal_decomposition(v, w, tol).angles);
}

DistanceResult asymmetric_distance(const MetricDescriptor& desc, const Subspace& v,
                                   const Subspace& w, const Tolerance& tol) {
  require_same_space(v, w, "asymmetric_distance");
  DistanceResult out;
  out.metric = desc.name;
  out.from_dim = v.dim();
  out.to_dim = w.dim();
  if (v.is_zero()) {
    out.extension_case = ExtensionCase::ZeroFrom;
    out.value = 0.0;
  } else if (v.dim() > w.dim()) {
    out.extension_case = ExtensionCase::HighToLowDiameter;
    out.value = desc.diam(v.dim());
  } else {
    out.extension_case = v.dim() == w.dim() ? ExtensionCase::EqualDim : ExtensionCase::LowToHigh;
    out.value = desc.f(principal_decomposition(v, w, tol).angles);
  }
  return out;
}

double containment_gap(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  require_same_space(v, w, "containment_gap");
  if (v.is_zero()) return 0.0;
  if (v.dim() > w.dim()) return 1.0;
  return std::sin(largest(principal_decomposition(v, w, tol).angles));
}

double gap(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  return std::max(containment_gap(v, w, tol), containment_gap(w, v, tol));
}

double directional_distance(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  require_same_space(v, w, "directional_distance");
  if (v.is_zero()) throw DomainError("directional_distance: zero source subspace");
  const auto t = angles_or_empty(v, w, tol);
  const double excess = std::max(0, v.dim() - w.dim());
  return std::sqrt(excess + sum_of(t, sin2));
}

double symmetric_distance(const Subspace& v, const Subspace& w, const Tolerance& tol) {
  require_same_space(v, w, "symmetric_distance");
  const auto t = angles_or_empty(v, w, tol);
  return std::sqrt(std::abs(v.dim() - w.dim()) + sum_of(t, sin2));
}

std::map<std::string, Diagnostic> diagnostic_quantities(const Subspace& v, const Subspace& w,
                                                        const Tolerance& tol) {
  require_same_space(v, w, "diagnostic_quantities");
  if (v.is_zero() || w.is_zero()) throw DomainError("diagnostic_quantities: zero subspace");
  const auto t = principal_decomposition(v, w, tol).angles;
  std::map<std::string, Diagnostic> out;
  out["max_correlation"] = {std::sin(t.front()), false, true};
  Diagnostic martin;
  if (t.back() >= kHalfPi - tol.angle_tol) {
    martin.value = std::numeric_limits<double>::infinity();
    martin.infinite = true;
  } else {
    double log_sum = 0.0;
    for (double x : t) log_sum += std::log1p(-sin2(x));
    martin.value = std::sqrt(std::max(0.0, -log_sum));
  }
  out["martin"] = martin;
  return out;
}

std::optional<Symmetrization> parse_symmetrization(std::string_view name) {
  if (name == "none") return Symmetrization::None;
  if (name == "max") return Symmetrization::Max;
  if (name == "mean") return Symmetrization::Mean;
  return std::nullopt;
}

double symmetrize(double d_fwd, double d_bwd, Symmetrization mode) {
  if (d_fwd < 0 || d_bwd < 0) throw DomainError("symmetrize: negative distance");
  switch (mode) {
    case Symmetrization::None: return d_fwd;
    case Symmetrization::Max: return std::max(d_fwd, d_bwd);
    case Symmetrization::Mean: return (d_fwd + d_bwd) / 2;
  }
  return d_fwd;
}

SubspaceTriple make_equality_triple(int ambient_dim, FieldTag field, int r_dim, double kappa,
                                    double lambda, std::uint64_t seed) {
  if (!(kappa > 0) || !(lambda > 0)) {
    throw DomainError("make_equality_triple: kappa and lambda must be positive");
  }
  if (r_dim < 0 || ambient_dim < r_dim + 2) {
    throw DomainError("make_equality_triple: ambient dimension " + std::to_string(ambient_dim) +
                      " cannot host R of dimension " + std::to_string(r_dim) +
                      " plus an orthogonal plane");
  }
  std::mt19937_64 rng(seed);
  const Matrix q = random_unitary(ambient_dim, field, rng);
  const int room = ambient_dim - 2 - r_dim;
  const int s_extra = std::uniform_int_distribution<int>(0, room / 2)(rng);
  const int t_extra = std::uniform_int_distribution<int>(0, room - s_extra)(rng);
  const double phi = std::uniform_real_distribution<double>(0.2, 1.0)(rng);

  const Vector u = q.col(0);
  const Vector w = std::cos(phi) * q.col(0) + std::sin(phi) * q.col(1);
  const Vector v = kappa * u + lambda * w;
  const auto build = [&](const Vector& lead, int extra_dim) {
    Matrix cols(ambient_dim, 1 + extra_dim);
    cols.col(0) = lead;
    cols.rightCols(extra_dim) = q.middleCols(2, extra_dim);
    return Subspace::from_vectors(cols, field);
  };
  return {build(u, r_dim), build(v, r_dim + s_extra), build(w, r_dim + s_extra + t_extra)};
}

bool ChainReport::ok() const {
  return std::none_of(comparisons.begin(), comparisons.end(),
                      [](const auto& c) { return c.verdict == Verdict::Fails; });
}

std::string ChainReport::first_failure() const {
  for (const auto& c : comparisons) {
    if (c.verdict == Verdict::Fails) return c.label;
  }
  return "";
}

ChainReport row_chains(const std::vector<double>& theta) {
  ChainReport out;
  const auto chain = [&](const char* name, MetricName top, MetricName a, MetricName b) {
    const double d_top = metric_of(top, theta);
    const double da = metric_of(a, theta);
    const double db = metric_of(b, theta);
    const std::string n(name);
    out.comparisons.push_back({n + ": (pi/2) gap >= angular", kHalfPi * db, d_top,
                               greater_equal(kHalfPi * db, d_top)});
    out.comparisons.push_back({n + ": angular > chordal", d_top, da, strict_greater(d_top, da)});
    out.comparisons.push_back({n + ": chordal > gap", da, db, strict_greater(da, db)});
  };
  chain("l2", MetricName::Geodesic, MetricName::ChordalFrobenius, MetricName::ProjectionFrobenius);
  chain("wedge", MetricName::FubiniStudy, MetricName::ChordalWedge, MetricName::BinetCauchy);
  chain("max", MetricName::Asimov, MetricName::Chordal2Norm, MetricName::Projection2Norm);
  return out;
}

ChainReport column_chains(const std::vector<double>& theta, int intersection_dim,
                          double equality_tol) {
  ChainReport out;
  const int p = static_cast<int>(theta.size());
  const bool equality_regime = intersection_dim >= p - 1;
  const double root_p = std::sqrt(static_cast<double>(p));
  const auto chain = [&](const char* name, MetricName l2, MetricName wedge, MetricName max) {
    const double a = metric_of(l2, theta);
    const double b = metric_of(wedge, theta);
    const double c = metric_of(max, theta);
    const std::string n(name);
    out.comparisons.push_back(
        {n + ": sqrt(p) max >= l2", root_p * c, a, greater_equal(root_p * c, a)});
    if (equality_regime) {
      out.comparisons.push_back({n + ": l2 = wedge", a, b, equal_within(a, b, equality_tol)});
      out.comparisons.push_back({n + ": wedge = max", b, c, equal_within(b, c, equality_tol)});
    } else {
      out.comparisons.push_back({n + ": l2 > wedge", a, b, strict_greater(a, b)});
      out.comparisons.push_back({n + ": wedge > max", b, c, strict_greater(b, c)});
    }
  };
  chain("angular", MetricName::Geodesic, MetricName::FubiniStudy, MetricName::Asimov);
  chain("chordal", MetricName::ChordalFrobenius, MetricName::ChordalWedge, MetricName::Chordal2Norm);
  chain("gap", MetricName::ProjectionFrobenius, MetricName::BinetCauchy, MetricName::Projection2Norm);
  return out;
}

}  // namespace subangle
