#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subangle/subspace.hpp"

namespace subangle {

enum class MetricName {
  Geodesic,
  ChordalFrobenius,
  ProjectionFrobenius,
  FubiniStudy,
  ChordalWedge,
  BinetCauchy,
  Asimov,
  Chordal2Norm,
  Projection2Norm,
};

inline constexpr std::array<MetricName, 9> kAllMetrics = {
    MetricName::Geodesic,     MetricName::ChordalFrobenius, MetricName::ProjectionFrobenius,
    MetricName::FubiniStudy,  MetricName::ChordalWedge,     MetricName::BinetCauchy,
    MetricName::Asimov,       MetricName::Chordal2Norm,     MetricName::Projection2Norm,
};

std::string_view to_string(MetricName name);
std::optional<MetricName> parse_metric(std::string_view name);

/// An equal-dimension metric d_p = f_p(theta_1..theta_p) together with the
/// diameter of G_p over all ambient spaces.
struct MetricDescriptor {
  MetricName name;
  std::function<double(const std::vector<double>&)> f;
  std::function<double(int)> diam;
  std::string_view units;  // "radians" or "dimensionless"
};

/// Built once; construction throws std::logic_error if some diam(p) differs
/// from f_p(pi/2, ..., pi/2).
const MetricDescriptor& descriptor(MetricName name);

enum class ExtensionCase { EqualDim, LowToHigh, HighToLowDiameter, ZeroFrom };

std::string_view to_string(ExtensionCase c);

struct DistanceResult {
  double value = 0.0;
  MetricName metric = MetricName::FubiniStudy;
  int from_dim = 0;
  int to_dim = 0;
  ExtensionCase extension_case = ExtensionCase::EqualDim;
};

/// Table 1 metric for dim V = dim W >= 1.
double equal_dim_distance(MetricName name, const Subspace& v, const Subspace& w,
                          const Tolerance& tol = {});

/// Asymmetric extension d(V, W): 0 for V = {0}, f_p(theta) for 0 < p <= q,
/// diam(p) otherwise.
DistanceResult asymmetric_distance(const MetricDescriptor& desc, const Subspace& v,
                                   const Subspace& w, const Tolerance& tol = {});

/// sin theta_p if p <= q, else 1.
double containment_gap(const Subspace& v, const Subspace& w, const Tolerance& tol = {});
/// max of both containment gaps; equals the operator norm of P_V - P_W.
double gap(const Subspace& v, const Subspace& w, const Tolerance& tol = {});
/// sqrt(sum ||e_i - P_W e_i||^2) over an orthonormal basis of V (V nonzero).
double directional_distance(const Subspace& v, const Subspace& w, const Tolerance& tol = {});
/// sqrt(|p - q| + sum sin^2 theta_i), the larger directional distance.
/// ||P_V - P_W||_F^2 = |p - q| + 2 sum sin^2 theta_i, so the two agree only for p = q.
double symmetric_distance(const Subspace& v, const Subspace& w, const Tolerance& tol = {});

struct Diagnostic {
  double value = 0.0;
  bool infinite = false;
  bool non_metric = true;
};

/// "max_correlation" = sin theta_1 and "martin" = sqrt(-log prod cos^2 theta_i);
/// neither is a metric. Both subspaces nonzero.
std::map<std::string, Diagnostic> diagnostic_quantities(const Subspace& v, const Subspace& w,
                                                        const Tolerance& tol = {});

enum class Symmetrization { None, Max, Mean };

std::optional<Symmetrization> parse_symmetrization(std::string_view name);
/// None returns d_fwd unchanged.
double symmetrize(double d_fwd, double d_bwd, Symmetrization mode);

struct SubspaceTriple {
  Subspace u;
  Subspace v;
  Subspace w;
};

/// U = [u] + R, V = [v] + S, W = [w] + T with R inside S inside T, dim R = r_dim,
/// and u, w orthonormal-plane vectors orthogonal to T with v = kappa u + lambda w.
/// The angle between u and w is drawn from [0.2, 1.0] radians. Requires
/// ambient_dim >= r_dim + 2.
SubspaceTriple make_equality_triple(int ambient_dim, FieldTag field, int r_dim, double kappa,
                                    double lambda, std::uint64_t seed);

enum class Verdict { Holds, Fails, Indeterminate };

struct ChainComparison {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  Verdict verdict = Verdict::Holds;
};

struct ChainReport {
  std::vector<ChainComparison> comparisons;
  bool ok() const;
  /// First failing comparison, or "" when none fails.
  std::string first_failure() const;
};

/// Strict comparisons closer than this are reported Indeterminate.
inline constexpr double kStrictMargin = 1e-12;

/// Row chains for distinct equal-dimension subspaces with principal angles theta.
ChainReport row_chains(const std::vector<double>& theta);
/// Column chains; when intersection_dim >= p - 1 the strict comparisons are
/// checked as equalities within equality_tol.
ChainReport column_chains(const std::vector<double>& theta, int intersection_dim,
                          double equality_tol = 1e-9);

}  // namespace subangle
