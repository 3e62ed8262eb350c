#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "subangle/angles.hpp"
#include "subangle/metrics.hpp"

namespace subangle {

/// Malformed subspace file or unknown name on the command line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct NamedSubspace {
  std::string id;
  Matrix vectors;  // the vectors as given, one per column
  Subspace subspace;
};

struct SubspaceFile {
  FieldTag field = FieldTag::Real;
  int ambient_dim = 0;
  std::vector<NamedSubspace> subspaces;

  /// Throws ParseError for an unknown id.
  const NamedSubspace& find(std::string_view id) const;
};

/// Layout: {"field": "real"|"complex", "ambient_dim": n,
///          "subspaces": [{"id": "...", "vectors": [[...], ...]}, ...]}
/// with complex entries as [re, im] pairs. Throws ParseError.
SubspaceFile parse_subspace_file(const nlohmann::json& doc, const Tolerance& tol = {});
SubspaceFile parse_subspace_file_text(std::string_view text, const Tolerance& tol = {});
SubspaceFile load_subspace_file(const std::filesystem::path& path, const Tolerance& tol = {});

nlohmann::json to_json(const SubspaceFile& file);

/// Angle report on the stored vectors; the Gram route uses them unmodified.
AngleReport angle_report(const NamedSubspace& v, const NamedSubspace& w, FieldTag field,
                         AngleRoute route, const Tolerance& tol = {});

/// Names accepted by distance_matrix: the nine metric extensions, then
/// containment_gap, gap, directional, symmetric, max_correlation, martin.
std::vector<std::string> matrix_quantity_names();

struct DistanceMatrix {
  std::string metric;
  std::vector<std::string> ids;
  std::vector<std::vector<double>> values;  // NaN where undefined, inf where infinite
  std::string units;
  bool symmetric_quantity = false;
  bool non_metric = false;
  Symmetrization symmetrization = Symmetrization::None;
};

/// Entry (i, j) is the distance from subspace i to subspace j.
/// Throws ParseError for an unknown quantity name.
DistanceMatrix distance_matrix(const SubspaceFile& file, std::string_view quantity,
                               Symmetrization mode, const Tolerance& tol = {});

/// JSON carries full precision; undefined and infinite entries become null.
nlohmann::json to_json(const DistanceMatrix& m);
/// Header row of ids; empty cells for undefined entries, "inf" for infinite ones.
std::string to_csv(const DistanceMatrix& m);

}  // namespace subangle
