// lefschetz-lab: exact transversal symplectic Hodge calculus on Lie-algebra
// foliation models. Subcommands: validate, report, identities, harmonic,
// models. Exit codes: 0 success, 1 mathematical check failure, 2 input error.

#include "lefschetz/cohomology.hpp"
#include "lefschetz/model_io.hpp"
#include "lefschetz/model_library.hpp"
#include "lefschetz/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <unistd.h>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

lefschetz::LieModel load_or_exit(const std::string& path) {
  // ParseError propagates to main's handler (exit 2)
  return lefschetz::load_model_file(path);
}

int cmd_validate(const std::string& path) {
  const auto model = load_or_exit(path);
  const auto report = lefschetz::validate_model(model);
  std::cout << "model " << model.name << "\n";
  auto line = [](const char* label, bool ok) {
    std::cout << "  " << label << ": " << (ok ? "ok" : "FAIL") << "\n";
  };
  line("jacobi identity", report.jacobi);
  line("foliation subalgebra", report.foliation_subalgebra);
  line("omega closed", report.omega_closed);
  line("ker(omega) contains foliation", report.omega_foliation_kernel);
  line("omega nondegenerate on Q", report.omega_nondegenerate);
  std::cout << "  unimodular: " << (report.unimodular ? "yes" : "no") << "\n";
  for (const auto& f : report.failures) std::cout << "  failure: " << f << "\n";
  return report.passed() ? kExitOk : kExitMathFailure;
}

int cmd_report(const std::string& path, const std::string& format, std::uint64_t seed,
               int count) {
  const auto model = load_or_exit(path);
  const auto report = lefschetz::build_report(model, seed, count);
  if (format == "json") {
    std::cout << lefschetz::report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << lefschetz::report_to_text(report, lefschetz::color_mode_from_env(),
                                           isatty(STDOUT_FILENO) != 0);
  }
  if (!report.validation.passed()) return kExitMathFailure;
  if (report.identities.failed_count() > 0) return kExitMathFailure;
  if (report.hard_lefschetz.applicable && !report.hard_lefschetz.equivalent)
    return kExitMathFailure;
  return kExitOk;
}

int cmd_identities(const std::string& path, std::uint64_t seed, int count) {
  const auto model = load_or_exit(path);
  const auto validation = lefschetz::validate_model(model);
  if (!validation.passed()) {
    for (const auto& f : validation.failures) std::cerr << "validation failure: " << f << "\n";
    return kExitMathFailure;
  }
  const auto ctx = lefschetz::make_context(model);
  const auto summary = lefschetz::run_identity_suite(ctx, seed, count);
  for (const auto& r : summary.results) {
    switch (r.status) {
      case lefschetz::IdentityStatus::passed:
        std::cout << "pass  " << r.name << " (" << r.checked << " forms)\n";
        break;
      case lefschetz::IdentityStatus::skipped:
        std::cout << "skip  " << r.name << " — " << r.detail << "\n";
        break;
      case lefschetz::IdentityStatus::failed:
        std::cout << "FAIL  " << r.name << " — " << r.detail << "\n";
        break;
    }
  }
  std::cout << summary.passed_count() << " passed, " << summary.failed_count() << " failed, "
            << summary.skipped_count() << " skipped\n";
  return summary.all_passed() ? kExitOk : kExitMathFailure;
}

int cmd_harmonic(const std::string& path, int degree) {
  const auto model = load_or_exit(path);
  const auto validation = lefschetz::validate_model(model);
  if (!validation.passed()) {
    for (const auto& f : validation.failures) std::cerr << "validation failure: " << f << "\n";
    return kExitMathFailure;
  }
  const auto ctx = lefschetz::make_context(model);
  if (!ctx.mc.kappa_basic) {
    std::cerr << "not isoparametric: mean curvature form is not basic\n";
    return kExitMathFailure;
  }
  if (!ctx.mc.dkappa_zero) {
    std::cerr << "d(kappa) != 0: modified cohomology undefined\n";
    return kExitMathFailure;
  }
  if (degree < 0 || degree > ctx.complex.top_degree()) {
    std::cerr << "degree out of range 0.." << ctx.complex.top_degree() << "\n";
    return kExitInputError;
  }
  const auto group = lefschetz::cohomology_group(ctx, lefschetz::OperatorKind::dKappa, degree);
  if (group.dimension == 0) {
    std::cout << "H_kappa^" << degree << " = 0, nothing to represent\n";
    return kExitOk;
  }
  for (int j = 0; j < group.dimension; ++j) {
    const auto rep = lefschetz::harmonic_representative(ctx, group.representatives[j]);
    std::cout << "class #" << j << " [" << group.representatives[j].to_string() << "]: ";
    if (rep)
      std::cout << rep->to_string() << "\n";
    else
      std::cout << "NONE\n";
  }
  return kExitOk;
}

int cmd_models(const std::string& out_dir) {
  if (out_dir.empty()) {
    for (const auto& name : lefschetz::catalog_names()) std::cout << name << "\n";
    return kExitOk;
  }
  std::filesystem::create_directories(out_dir);
  for (const auto& name : lefschetz::catalog_names()) {
    const auto entry = lefschetz::get_model(name);
    const auto path = std::filesystem::path(out_dir) / (name + ".json");
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write " << path.string() << "\n";
      return kExitInputError;
    }
    out << lefschetz::model_to_json(entry.model).dump(2) << "\n";
    std::cout << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symplectic Hodge calculus on Lie-algebra foliation models"};
  app.require_subcommand(1);

  std::string path, format = "text", out_dir;
  std::uint64_t seed = 1;
  int count = 16, degree = 0;

  auto* validate = app.add_subcommand("validate", "structural checks on a model file");
  validate->add_option("path", path, "model file")->required();

  auto* report = app.add_subcommand("report", "full pipeline report");
  report->add_option("path", path, "model file")->required();
  report->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  report->add_option("--seed", seed, "identity-suite seed");
  report->add_option("--count", count, "identity-suite forms per identity")
      ->check(CLI::NonNegativeNumber);

  auto* identities = app.add_subcommand("identities", "operator-identity fuzzing");
  identities->add_option("path", path, "model file")->required();
  identities->add_option("--seed", seed, "random seed");
  identities->add_option("--count", count, "forms per identity")->check(CLI::NonNegativeNumber);

  auto* harmonic = app.add_subcommand("harmonic", "modified harmonic representatives");
  harmonic->add_option("path", path, "model file")->required();
  harmonic->add_option("--degree", degree, "cohomology degree")->required();

  auto* models = app.add_subcommand("models", "list or export the built-in models");
  models->add_option("--out", out_dir, "directory to export the catalog into");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (report->parsed()) return cmd_report(path, format, seed, count);
    if (identities->parsed()) return cmd_identities(path, seed, count);
    if (harmonic->parsed()) return cmd_harmonic(path, degree);
    if (models->parsed()) return cmd_models(out_dir);
  } catch (const lefschetz::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMathFailure;
  }
  return kExitOk;
}
