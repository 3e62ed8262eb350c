#include "subangle/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

namespace subangle {

using nlohmann::json;

namespace {

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + ": non-finite value");
  return x;
}

Scalar parse_entry(const json& j, FieldTag field, const std::string& where) {
  if (j.is_number()) return {finite_number(j, where), 0.0};
  if (j.is_array()) {
    if (field != FieldTag::Complex) {
      throw ParseError(where + ": [re, im] pair in a real-field file");
    }
    if (j.size() != 2) throw ParseError(where + ": complex entry must be [re, im]");
    return {finite_number(j[0], where), finite_number(j[1], where)};
  }
  throw ParseError(where + ": expected a number or [re, im]");
}

json entry_to_json(Scalar x, FieldTag field) {
  if (field == FieldTag::Real) return x.real();
  return json::array({x.real(), x.imag()});
}

const json& member(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

double nan() { return std::numeric_limits<double>::quiet_NaN(); }
double inf() { return std::numeric_limits<double>::infinity(); }

enum class Quantity {
  Metric,
  ContainmentGap,
  Gap,
  Directional,
  Symmetric,
  MaxCorrelation,
  Martin,
};

struct QuantityInfo {
  Quantity kind;
  MetricName metric;
  std::string units;
  bool symmetric;
  bool non_metric;
};

std::optional<QuantityInfo> lookup(std::string_view name) {
  if (auto m = parse_metric(name)) {
    return QuantityInfo{Quantity::Metric, *m, std::string(descriptor(*m).units), false, false};
  }
  const auto d = MetricName::FubiniStudy;
  if (name == "containment_gap") return QuantityInfo{Quantity::ContainmentGap, d, "dimensionless", false, false};
  if (name == "gap") return QuantityInfo{Quantity::Gap, d, "dimensionless", true, false};
  if (name == "directional_distance") return QuantityInfo{Quantity::Directional, d, "dimensionless", false, false};
  if (name == "symmetric_distance") return QuantityInfo{Quantity::Symmetric, d, "dimensionless", true, false};
  if (name == "max_correlation") return QuantityInfo{Quantity::MaxCorrelation, d, "dimensionless", true, true};
  if (name == "martin") return QuantityInfo{Quantity::Martin, d, "dimensionless", true, true};
  return std::nullopt;
}

double entry(const QuantityInfo& q, const Subspace& a, const Subspace& b, const Tolerance& tol) {
  switch (q.kind) {
    case Quantity::Metric:
      return asymmetric_distance(descriptor(q.metric), a, b, tol).value;
    case Quantity::ContainmentGap:
      return containment_gap(a, b, tol);
    case Quantity::Gap:
      return gap(a, b, tol);
    case Quantity::Directional:
      return a.is_zero() ? nan() : directional_distance(a, b, tol);
    case Quantity::Symmetric:
      return symmetric_distance(a, b, tol);
    case Quantity::MaxCorrelation:
    case Quantity::Martin: {
      if (a.is_zero() || b.is_zero()) return nan();
      const auto diag = diagnostic_quantities(a, b, tol);
      const Diagnostic& d = diag.at(q.kind == Quantity::Martin ? "martin" : "max_correlation");
      return d.infinite ? inf() : d.value;
    }
  }
  return nan();
}

std::string format_full(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

}  // namespace

const NamedSubspace& SubspaceFile::find(std::string_view id) const {
  for (const auto& s : subspaces) {
    if (s.id == id) return s;
  }
  throw ParseError("no subspace with id \"" + std::string(id) + "\"");
}

SubspaceFile parse_subspace_file(const json& doc, const Tolerance& tol) {
  if (!doc.is_object()) throw ParseError("subspace file: top level must be an object");
  SubspaceFile out;
  const json& field = member(doc, "field", "subspace file");
  if (field == "real") {
    out.field = FieldTag::Real;
  } else if (field == "complex") {
    out.field = FieldTag::Complex;
  } else {
    throw ParseError("subspace file: field must be \"real\" or \"complex\"");
  }
  const json& n = member(doc, "ambient_dim", "subspace file");
  if (!n.is_number_integer() || n.get<long long>() < 1) {
    throw ParseError("subspace file: ambient_dim must be a positive integer");
  }
  out.ambient_dim = n.get<int>();

  const json& list = member(doc, "subspaces", "subspace file");
  if (!list.is_array() || list.empty()) {
    throw ParseError("subspace file: \"subspaces\" must be a nonempty array");
  }
  std::set<std::string> seen;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = "subspace #" + std::to_string(k + 1);
    const json& item = list[k];
    if (!item.is_object()) throw ParseError(where + ": expected an object");
    const json& id = member(item, "id", where);
    if (!id.is_string()) throw ParseError(where + ": id must be a string");
    const std::string name = id.get<std::string>();
    if (!seen.insert(name).second) throw ParseError("duplicate subspace id \"" + name + "\"");
    const json& vectors = member(item, "vectors", where);
    if (!vectors.is_array()) throw ParseError(where + ": \"vectors\" must be an array");

    Matrix cols(out.ambient_dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      const json& vec = vectors[j];
      const std::string vwhere = "subspace \"" + name + "\" vector #" + std::to_string(j + 1);
      if (!vec.is_array() || static_cast<int>(vec.size()) != out.ambient_dim) {
        throw ParseError(vwhere + ": expected " + std::to_string(out.ambient_dim) + " entries");
      }
      for (int i = 0; i < out.ambient_dim; ++i) {
        cols(i, static_cast<Eigen::Index>(j)) = parse_entry(vec[static_cast<std::size_t>(i)],
                                                             out.field, vwhere);
      }
    }
    out.subspaces.push_back({name, cols, Subspace::from_vectors(cols, out.field, tol)});
  }
  return out;
}

SubspaceFile parse_subspace_file_text(std::string_view text, const Tolerance& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_subspace_file(doc, tol);
}

SubspaceFile load_subspace_file(const std::filesystem::path& path, const Tolerance& tol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_subspace_file_text(buffer.str(), tol);
}

json to_json(const SubspaceFile& file) {
  json list = json::array();
  for (const auto& s : file.subspaces) {
    json vectors = json::array();
    for (Eigen::Index j = 0; j < s.vectors.cols(); ++j) {
      json vec = json::array();
      for (Eigen::Index i = 0; i < s.vectors.rows(); ++i) {
        vec.push_back(entry_to_json(s.vectors(i, j), file.field));
      }
      vectors.push_back(vec);
    }
    list.push_back({{"id", s.id}, {"vectors", vectors}});
  }
  return {{"field", std::string(to_string(file.field))},
          {"ambient_dim", file.ambient_dim},
          {"subspaces", list}};
}

AngleReport angle_report(const NamedSubspace& v, const NamedSubspace& w, FieldTag field,
                         AngleRoute route, const Tolerance& tol) {
  if (route != AngleRoute::GramDeterminant) return angle_report(v.subspace, w.subspace, route, tol);
  AngleReport out = angle_report(v.subspace, w.subspace, AngleRoute::PrincipalAngles, tol);
  out.theta_vw = asymmetric_angle_gram(v.vectors, w.vectors, field, tol);
  out.theta_wv = asymmetric_angle_gram(w.vectors, v.vectors, field, tol);
  out.upsilon = disjointness_angle_gram(v.vectors, w.vectors, field, tol);
  out.psi = supplementation_angle_gram(v.vectors, w.subspace.basis(), field, tol);
  return out;
}

std::vector<std::string> matrix_quantity_names() {
  std::vector<std::string> out;
  for (MetricName m : kAllMetrics) out.emplace_back(to_string(m));
  for (const char* s : {"containment_gap", "gap", "directional_distance", "symmetric_distance",
                        "max_correlation", "martin"}) {
    out.emplace_back(s);
  }
  return out;
}

DistanceMatrix distance_matrix(const SubspaceFile& file, std::string_view quantity,
                               Symmetrization mode, const Tolerance& tol) {
  const auto info = lookup(quantity);
  if (!info) {
    std::string names;
    for (const auto& n : matrix_quantity_names()) names += (names.empty() ? "" : ", ") + n;
    throw ParseError("unknown metric \"" + std::string(quantity) + "\"; valid names: " + names);
  }
  DistanceMatrix out;
  out.metric = std::string(quantity);
  out.units = info->units;
  out.symmetric_quantity = info->symmetric;
  out.non_metric = info->non_metric;
  out.symmetrization = mode;
  const std::size_t k = file.subspaces.size();
  for (const auto& s : file.subspaces) out.ids.push_back(s.id);
  std::vector<std::vector<double>> raw(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      raw[i][j] = entry(*info, file.subspaces[i].subspace, file.subspaces[j].subspace, tol);
    }
  }
  out.values = raw;
  if (mode != Symmetrization::None) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const double a = raw[i][j];
        const double b = raw[j][i];
        out.values[i][j] = std::isnan(a) || std::isnan(b) ? nan()
                           : std::isinf(a) || std::isinf(b) ? inf()
                                                            : symmetrize(a, b, mode);
      }
    }
  }
  return out;
}

json to_json(const DistanceMatrix& m) {
  json values = json::array();
  for (const auto& row : m.values) {
    json r = json::array();
    for (double x : row) r.push_back(std::isfinite(x) ? json(x) : json(nullptr));
    values.push_back(r);
  }
  const char* sym = m.symmetrization == Symmetrization::Max    ? "max"
                    : m.symmetrization == Symmetrization::Mean ? "mean"
                                                               : "none";
  return {{"metric", m.metric},
          {"direction_convention", "row→column"},
          {"symmetrize", sym},
          {"units", m.units},
          {"non_metric", m.non_metric},
          {"ids", m.ids},
          {"values", values}};
}

std::string to_csv(const DistanceMatrix& m) {
  std::ostringstream out;
  out << "# metric=" << m.metric << "; direction_convention=row→column; units=" << m.units
      << "\n";
  out << "from\\to";
  for (const auto& id : m.ids) out << ',' << id;
  out << '\n';
  for (std::size_t i = 0; i < m.values.size(); ++i) {
    out << m.ids[i];
    for (double x : m.values[i]) {
      out << ',';
      if (std::isinf(x)) {
        out << "inf";
      } else if (!std::isnan(x)) {
        out << format_full(x);
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace subangle
