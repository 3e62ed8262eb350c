#include <doctest.h>

#include <cmath>
#include <limits>

#include "subangle/io.hpp"
#include "subangle/verify.hpp"
#include "support.hpp"

using namespace subangle;
using testing::kDeg;

namespace {

const std::string kData = SUBANGLE_TEST_DATA;
const double kHalfPi = M_PI / 2;

}  // namespace

TEST_CASE("parse and round trip") {
  const auto f = load_subspace_file(kData + "/formula_bases.json");
  CHECK(f.field == FieldTag::Complex);
  CHECK(f.ambient_dim == 3);
  REQUIRE(f.subspaces.size() == 2);
  CHECK(f.find("V").subspace.dim() == 2);
  const auto again = parse_subspace_file(to_json(f));
  for (std::size_t i = 0; i < f.subspaces.size(); ++i) {
    CHECK(again.subspaces[i].id == f.subspaces[i].id);
    const Matrix& a = again.subspaces[i].vectors;
    const Matrix& b = f.subspaces[i].vectors;
    REQUIRE(a.size() == b.size());
    for (Eigen::Index k = 0; k < a.size(); ++k) {
      CHECK(a.data()[k].real() == b.data()[k].real());  // bit-for-bit
      CHECK(a.data()[k].imag() == b.data()[k].imag());
    }
  }
  CHECK_THROWS_AS(f.find("nope"), ParseError);
}

TEST_CASE("malformed files are rejected") {
  CHECK_THROWS_AS(load_subspace_file(kData + "/corrupt.json"), ParseError);
  CHECK_THROWS_AS(load_subspace_file(kData + "/missing.json"), ParseError);
  CHECK_THROWS_AS(parse_subspace_file_text("{"), ParseError);
  CHECK_THROWS_AS(parse_subspace_file_text(R"({"field":"quaternion","ambient_dim":2,"subspaces":[{"id":"a","vectors":[]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_subspace_file_text(R"({"field":"real","ambient_dim":2,"subspaces":[]})"), ParseError);
  CHECK_THROWS_AS(parse_subspace_file_text(R"({"field":"real","ambient_dim":2,"subspaces":[{"id":"a","vectors":[[1,2,3]]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_subspace_file_text(R"({"field":"real","ambient_dim":2,"subspaces":[{"id":"a","vectors":[[[1,0],2]]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_subspace_file_text(
                      R"({"field":"real","ambient_dim":1,"subspaces":[{"id":"a","vectors":[[1]]},{"id":"a","vectors":[[2]]}]})"),
                  ParseError);
  // an empty vector list is the zero subspace
  const auto z = parse_subspace_file_text(R"({"field":"real","ambient_dim":2,"subspaces":[{"id":"z","vectors":[]}]})");
  CHECK(z.subspaces[0].subspace.is_zero());
}

TEST_CASE("angle reports from files") {
  const auto f = load_subspace_file(kData + "/contraction.json");
  for (auto route : {AngleRoute::PrincipalAngles, AngleRoute::GramDeterminant, AngleRoute::ExteriorAlgebra}) {
    const auto r = angle_report(f.find("A"), f.find("B"), f.field, route);
    CHECK(r.theta_vw / kDeg == doctest::Approx(80.40).epsilon(1e-4));
    CHECK(r.upsilon == doctest::Approx(std::asin(std::sqrt(17.0) / 6)).epsilon(1e-9));
    CHECK(r.upsilon / kDeg == doctest::Approx(43.4).epsilon(1e-3));
    CHECK(std::abs(r.psi) < 1e-9);
  }
  const auto g = load_subspace_file(kData + "/formula_bases.json");
  const auto r = angle_report(g.find("V"), g.find("W"), g.field, AngleRoute::GramDeterminant);
  CHECK(r.theta_vw / kDeg == doctest::Approx(54.74).epsilon(1e-4));
  CHECK(std::abs(r.upsilon) < 1e-9);
  CHECK(r.psi / kDeg == doctest::Approx(54.74).epsilon(1e-4));
  const auto d = load_subspace_file(kData + "/dependent.json");
  CHECK_THROWS_AS(angle_report(d.find("V"), d.find("W"), d.field, AngleRoute::GramDeterminant),
                  DegenerateBasisError);
  CHECK_NOTHROW(angle_report(d.find("V"), d.find("W"), d.field, AngleRoute::PrincipalAngles));
}

TEST_CASE("distance matrices") {
  const auto nested = load_subspace_file(kData + "/nested.json");
  auto m = distance_matrix(nested, "fubini_study", Symmetrization::None);
  CHECK(m.ids == std::vector<std::string>{"line", "plane"});
  CHECK(std::abs(m.values[0][0]) < 1e-12);
  CHECK(std::abs(m.values[0][1]) < 1e-12);
  CHECK(m.values[1][0] == kHalfPi);
  CHECK(std::abs(m.values[1][1]) < 1e-12);
  CHECK(m.units == "radians");
  m = distance_matrix(nested, "fubini_study", Symmetrization::Max);
  CHECK(m.values[0][1] == kHalfPi);
  CHECK(m.values[1][0] == kHalfPi);

  const auto pair = load_subspace_file(kData + "/real_pair.json");
  m = distance_matrix(pair, "fubini_study", Symmetrization::None);
  CHECK(m.values[0][1] == doctest::Approx(M_PI / 3));
  CHECK(m.values[1][0] == doctest::Approx(kHalfPi));

  CHECK_THROWS_WITH_AS(distance_matrix(pair, "euclid", Symmetrization::None),
                       doctest::Contains("projection_2norm"), ParseError);
  for (const auto& name : matrix_quantity_names()) {
    const auto q = distance_matrix(pair, name, Symmetrization::None);
    for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(q.values[i][i]) < 1e-9);
  }
  const auto gm = distance_matrix(pair, "gap", Symmetrization::None);
  CHECK(gm.values[0][1] == gm.values[1][0]);
}

TEST_CASE("matrix serialization") {
  const auto nested = load_subspace_file(kData + "/nested.json");
  const auto perp = parse_subspace_file_text(
      R"({"field":"real","ambient_dim":2,"subspaces":[{"id":"x","vectors":[[1,0]]},{"id":"y","vectors":[[0,1]]}]})");
  const auto m = distance_matrix(perp, "martin", Symmetrization::None);
  const auto j = to_json(m);
  CHECK(j["direction_convention"] == "row→column");
  CHECK(j["non_metric"] == true);
  CHECK(j["values"][1][0].is_null());  // infinite
  const std::string csv = to_csv(m);
  CHECK(csv.find("direction_convention=row→column") != std::string::npos);
  CHECK(csv.find("inf") != std::string::npos);
  const auto fs = to_json(distance_matrix(nested, "fubini_study", Symmetrization::None));
  CHECK(fs["values"][1][0].get<double>() == kHalfPi);  // full precision
}

TEST_CASE("verification suites") {
  const Tolerance tol;
  const auto builtin = verify_builtin(tol, 1);
  CHECK(builtin.passed());
  const auto f = verify_file(load_subspace_file(kData + "/contraction.json"), tol, 2);
  CHECK(f.passed());
  Tolerance tight;
  tight.match_tol = 1e-15;
  const auto t = verify_builtin(tight, 1);
  CHECK_FALSE(t.passed());
  REQUIRE(t.first_failure() != nullptr);
}
