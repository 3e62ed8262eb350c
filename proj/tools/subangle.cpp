#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "subangle/io.hpp"
#include "subangle/verify.hpp"

namespace {

using namespace subangle;
using nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string id_from;
  std::string id_to;
  std::string metric;
  std::string route = "principal";
  std::string symmetrize = "none";
  std::string format;
  std::string output;
  double rank_tol = Tolerance{}.rank_tol;
  double angle_tol = Tolerance{}.angle_tol;
  double match_tol = Tolerance{}.match_tol;
  std::uint64_t seed = 20240601;
};

Tolerance tolerance(const Options& o) { return {o.rank_tol, o.angle_tol, o.match_tol}; }

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw UsageError("cannot write " + o.output);
  out << text;
}

std::string degrees(double radians) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << radians * 180.0 / M_PI << " deg";
  return out.str();
}

std::string full(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

int cmd_angles(const Options& o) {
  const Tolerance tol = tolerance(o);
  const auto route = parse_route(o.route);
  if (!route) throw UsageError("unknown route \"" + o.route + "\"; valid: principal, gram, exterior");
  if (!o.format.empty() && o.format != "json" && o.format != "text") {
    throw UsageError("angles supports --format json or text");
  }
  const SubspaceFile file = load_subspace_file(o.input, tol);
  const auto& v = file.find(o.id_from);
  const auto& w = file.find(o.id_to);
  const AngleReport r = angle_report(v, w, file.field, *route, tol);

  if (o.format == "json") {
    json doc = {{"from", v.id},
                {"to", w.id},
                {"route", std::string(to_string(*route))},
                {"field", std::string(to_string(file.field))},
                {"ambient_dim", r.n},
                {"dim_from", r.p},
                {"dim_to", r.q},
                {"units", "radians"},
                {"theta_from_to", r.theta_vw},
                {"theta_to_from", r.theta_wv},
                {"upsilon", r.upsilon},
                {"psi", r.psi},
                {"psi_ill_conditioned", r.psi_ill_conditioned},
                {"projection_factor", r.projection_factor},
                {"principal_angles", r.principal_angles}};
    emit(o, doc.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream out;
  const auto line = [&](const std::string& label, double x) {
    out << std::left << std::setw(22) << label << degrees(x) << "  (" << full(x) << " rad)\n";
  };
  out << "from " << v.id << " (dim " << r.p << ") to " << w.id << " (dim " << r.q << ") in "
      << (file.field == FieldTag::Real ? "R" : "C") << "^" << r.n << ", route "
      << to_string(*route) << "\n";
  line("Theta(from,to)", r.theta_vw);
  line("Theta(to,from)", r.theta_wv);
  line("Upsilon", r.upsilon);
  line("Psi", r.psi);
  if (r.psi_ill_conditioned) out << "  warning: Psi is ill-conditioned (V + W = X only barely)\n";
  out << std::left << std::setw(22) << "projection factor" << full(r.projection_factor) << "\n";
  for (std::size_t i = 0; i < r.principal_angles.size(); ++i) {
    line("theta_" + std::to_string(i + 1), r.principal_angles[i]);
  }
  emit(o, out.str());
  return kOk;
}

int cmd_matrix(const Options& o) {
  const Tolerance tol = tolerance(o);
  const auto mode = parse_symmetrization(o.symmetrize);
  if (!mode) throw UsageError("unknown symmetrization \"" + o.symmetrize + "\"; valid: none, max, mean");
  const std::string format = o.format.empty() ? "json" : o.format;
  if (format != "json" && format != "csv") throw UsageError("matrix supports --format json or csv");
  const SubspaceFile file = load_subspace_file(o.input, tol);
  const DistanceMatrix m = distance_matrix(file, o.metric, *mode, tol);
  emit(o, format == "json" ? to_json(m).dump(2) + "\n" : to_csv(m));
  return kOk;
}

int cmd_verify(const Options& o) {
  const Tolerance tol = tolerance(o);
  if (!o.format.empty() && o.format != "json" && o.format != "text") {
    throw UsageError("verify supports --format json or text");
  }
  const VerifyReport report = o.input.empty()
                                  ? verify_builtin(tol, o.seed)
                                  : verify_file(load_subspace_file(o.input, tol), tol, o.seed);
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    emit(o, json{{"passed", report.passed()}, {"checks", checks}}.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    }
    emit(o, out.str());
  }
  if (const auto* f = report.first_failure()) {
    std::cerr << "verification failed: " << f->name << ": " << f->detail << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--rank-tol", o.rank_tol, "Relative singular-value cutoff")->check(CLI::PositiveNumber);
  cmd->add_option("--angle-tol", o.angle_tol, "Angle tolerance in radians")->check(CLI::PositiveNumber);
  cmd->add_option("--output", o.output, "Write to this file instead of stdout");
  cmd->add_option("--format", o.format, "Output format");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Angles and asymmetric distances between subspaces of R^n and C^n"};
  app.require_subcommand(1);
  Options o;

  auto* angles = app.add_subcommand("angles", "Angle report between two subspaces of a file");
  angles->add_option("input", o.input, "Subspace file (JSON)")->required();
  angles->add_option("from", o.id_from, "Id of the first subspace")->required();
  angles->add_option("to", o.id_to, "Id of the second subspace")->required();
  angles->add_option("--route", o.route, "principal, gram or exterior");
  add_common(angles, o);

  auto* matrix = app.add_subcommand("matrix", "Pairwise distance matrix, entry (i,j) from i to j");
  matrix->add_option("input", o.input, "Subspace file (JSON)")->required();
  matrix->add_option("--metric", o.metric, "Metric or distance name")->required();
  matrix->add_option("--symmetrize", o.symmetrize, "none, max or mean");
  add_common(matrix, o);

  auto* verify = app.add_subcommand("verify", "Run identity suites on a file or the built-in examples");
  verify->add_option("input", o.input, "Subspace file (JSON); built-in examples when omitted");
  verify->add_option("--seed", o.seed, "Seed for the randomized suites");
  verify->add_option("--match-tol", o.match_tol, "Comparison tolerance")->check(CLI::PositiveNumber);
  add_common(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (angles->parsed()) return cmd_angles(o);
    if (matrix->parsed()) return cmd_matrix(o);
    return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericalError& e) {
    std::cerr << "numerical degeneracy: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
