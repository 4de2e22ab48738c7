// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything is exact arithmetic; there are no tolerances to tune.

#include "lefschetz/cohomology.hpp"
#include "lefschetz/identities.hpp"
#include "lefschetz/model_io.hpp"
#include "lefschetz/random_forms.hpp"
#include "lefschetz/report.hpp"
#include "lefschetz/sl2.hpp"

#include "support.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace lefschetz;
using namespace testsupport;

namespace {

struct CriterionResult {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& message) {
    if (!cond && ok) {
      ok = false;
      detail = message;
    }
  }
};

// ---------- 1: operator-identity suite, n = 1..3, 200 seeded forms ----------

CriterionResult criterion_identity_suite() {
  CriterionResult res;
  std::vector<LieModel> models = {
      get_model("sol_hyperbolic").model,   // n = 1, kappa != 0
      sol_torus_product(2),                // n = 2, kappa != 0
      sol_torus_product(3),                // n = 3, kappa != 0
      get_model("heisenberg_contact").model,
      get_model("kt_product").model,
  };
  for (const auto& model : models) {
    const auto summary = run_identity_suite(make_context(model), 2024, 200);
    res.require(summary.all_passed() && summary.skipped_count() == 0,
                model.name + ": " + std::to_string(summary.failed_count()) + " failed, " +
                    std::to_string(summary.skipped_count()) + " skipped");
    for (const auto& r : summary.results)
      if (r.status == IdentityStatus::failed)
        res.require(false, model.name + ": " + r.name + ": " + r.detail);
  }
  return res;
}

// ---------- 2: star involution and pointwise Lefschetz power maps ----------

CriterionResult criterion_star_and_power() {
  CriterionResult res;
  for (int n = 1; n <= 3; ++n) {
    const auto s = standard_symplectic(n);
    for (int r = 0; r <= 2 * n; ++r)
      for (const Mask key : monomials(s.frame->transverse_mask(), r)) {
        const Form phi = Form::monomial(s.frame, key);
        res.require(star(s, star(s, phi)) == phi,
                    "star is not involutive on a basis form, n = " + std::to_string(n));
      }
    for (int r = 0; r <= n; ++r) {
      const auto power = sl2::lefschetz_power_matrix(s, r);
      res.require(power.bijective, "L^" + std::to_string(r) + " not bijective, n = " +
                                       std::to_string(n) + " (rank " +
                                       std::to_string(power.rank) + ")");
    }
  }
  return res;
}

// ---------- 3: catalog reproductions ----------

CriterionResult criterion_examples() {
  CriterionResult res;

  const auto heis = build_report(get_model("heisenberg_contact").model);
  res.require(heis.mc.kappa.is_zero(), "heisenberg kappa != 0");
  res.require(heis.mc.phi0 == heis.model.omega && !heis.mc.phi0.is_zero(),
              "heisenberg phi0 != omega");
  res.require(heis.h_b_dims == std::vector<int>{1, 2, 1}, "heisenberg H_B wrong");
  res.require(heis.taut_known && heis.taut, "heisenberg not taut");
  res.require(heis.hard_lefschetz.applicable && heis.hard_lefschetz.harmonic_in_every_class &&
                  heis.hard_lefschetz.lefschetz_surjective_all_r && heis.hard_lefschetz.equivalent,
              "heisenberg equivalence verdict wrong");

  const auto ab = build_report(get_model("abelian_cosymplectic").model);
  res.require(ab.mc.kappa.is_zero() && ab.mc.phi0.is_zero(), "abelian kappa/phi0 nonzero");

  const auto sol = build_report(get_model("sol_hyperbolic").model);
  res.require(sol.taut_known && !sol.taut, "sol should be nontaut");
  res.require(sol.h_b_dims == std::vector<int>{1, 1, 0}, "sol H_B wrong");
  res.require(sol.h_kappa_defined && sol.h_kappa_dims == std::vector<int>{0, 0, 0},
              "sol H_kappa wrong");
  res.require(sol.hard_lefschetz.applicable && sol.hard_lefschetz.harmonic_in_every_class &&
                  sol.hard_lefschetz.lefschetz_surjective_all_r && sol.hard_lefschetz.equivalent,
              "sol equivalence verdict wrong");
  return res;
}

// ---------- 4: kt_product contrast case ----------

CriterionResult criterion_contrast() {
  CriterionResult res;
  const auto start = std::chrono::steady_clock::now();

  const auto ctx = make_context(get_model("kt_product").model);
  res.require(tautness_check(ctx), "kt_product should be taut");

  const auto h_b = cohomology(ctx, OperatorKind::dB);
  const auto betti = even_betti_check(ctx, h_b, true);
  res.require(betti.all_nonzero, "kt_product has a vanishing even basic group");

  const auto groups = cohomology(ctx, OperatorKind::dKappa);
  const auto l1 = lefschetz_on_cohomology(ctx, groups, 1);
  res.require(!l1.surjective, "kt_product L^1 unexpectedly surjective");

  int missing = 0;
  for (const auto& g : groups)
    for (const auto& rep : g.representatives)
      if (!harmonic_representative(ctx, rep)) ++missing;
  res.require(missing > 0, "kt_product: every class had a representative");

  const auto verdict = hard_lefschetz_equivalence(ctx);
  res.require(verdict.applicable && !verdict.harmonic_in_every_class &&
                  !verdict.lefschetz_surjective_all_r && verdict.equivalent,
              "kt_product verdict is not (false, false, equivalent)");

  const auto elapsed = std::chrono::steady_clock::now() - start;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  res.require(ms < 1000, "contrast case took " + std::to_string(ms) + " ms");
  res.detail = res.ok ? std::to_string(ms) + " ms" : res.detail;
  return res;
}

// ---------- 5: adjointness for all basic basis pairs ----------

CriterionResult criterion_adjointness() {
  CriterionResult res;
  for (const auto& name : catalog_names()) {
    const auto ctx = make_context(get_model(name).model);
    if (!ctx.unimodular) {
      res.require(false, name + " is not unimodular");
      continue;
    }
    const Form mu = wedge(ctx.symp.volume, ctx.mc.chi);
    for (int r = 1; r <= ctx.complex.top_degree(); ++r)
      for (const auto& phi : ctx.complex.bases[r - 1])
        for (const auto& psi : ctx.complex.bases[r]) {
          const bool d_pair =
              integrate(wedge(wedge(d_B(ctx, phi), star(ctx.symp, psi)), ctx.mc.chi), mu) ==
              integrate(wedge(wedge(phi, star(ctx.symp, delta_B(ctx, psi))), ctx.mc.chi), mu);
          const bool k_pair =
              integrate(wedge(wedge(d_kappa(ctx, phi), star(ctx.symp, psi)), ctx.mc.chi), mu) ==
              integrate(wedge(wedge(phi, star(ctx.symp, delta_kappa(ctx, psi))), ctx.mc.chi), mu);
          res.require(d_pair, name + ": d_B adjointness fails in degree " + std::to_string(r));
          res.require(k_pair, name + ": d_kappa adjointness fails in degree " + std::to_string(r));
        }
  }
  return res;
}

// ---------- 6: Lefschetz isomorphisms between harmonic spaces ----------

CriterionResult criterion_harmonic_lefschetz() {
  CriterionResult res;
  for (const auto& name : catalog_names()) {
    const auto ctx = make_context(get_model(name).model);
    for (int r = 0; r <= ctx.n(); ++r)
      for (const auto kind : {HarmonicKind::ST, HarmonicKind::SK}) {
        const auto check = harmonic_lefschetz_check(ctx, kind, r);
        const bool full = check.images_in_target && check.source_dim == check.target_dim &&
                          check.rank == static_cast<std::size_t>(check.target_dim);
        res.require(full, name + ": L^" + std::to_string(r) + " on " +
                              harmonic_kind_name(kind) + " not bijective (" +
                              std::to_string(check.source_dim) + " -> " +
                              std::to_string(check.target_dim) + ", rank " +
                              std::to_string(check.rank) + ")");
      }
  }
  return res;
}

// ---------- 7: primitive decomposition round-trips ----------

CriterionResult criterion_primitive_decompose() {
  CriterionResult res;
  for (int n = 1; n <= 3; ++n) {
    const auto s = standard_symplectic(n);
    for (int r = 0; r <= 2 * n; ++r) {
      Rng rng(9000 + 10 * n + r);
      for (int trial = 0; trial < 100; ++trial) {
        const Form phi = random_transverse_form(rng, s, r);
        const auto dec = sl2::primitive_decompose(s, phi);
        Form sum(s.frame, 0);
        for (const auto& [k, beta] : dec.components) {
          if (!sl2::Lambda(s, beta).is_zero())
            res.require(false, "component not primitive, n = " + std::to_string(n));
          sum += sl2::L_power(s, beta, k);
        }
        res.require(sum == phi, "reconstruction failed, n = " + std::to_string(n) +
                                    ", degree " + std::to_string(r));
      }
    }
  }
  return res;
}

// ---------- 8: CLI contract ----------

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(LEFSCHETZ_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun run;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return run;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    run.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CriterionResult criterion_cli_contract() {
  CriterionResult res;
  const auto dir = std::filesystem::temp_directory_path() / "lefschetz_acceptance";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);

  const auto exported = run_cli("models --out " + dir.string());
  res.require(exported.exit_code == 0, "model export failed");

  for (const auto& name : catalog_names()) {
    const std::string model_path = (dir / (name + ".json")).string();
    const auto first = run_cli("report " + model_path + " --format json");
    const auto second = run_cli("report " + model_path + " --format json");
    res.require(first.exit_code == 0, name + ": report exited " +
                                          std::to_string(first.exit_code));
    res.require(first.output == second.output, name + ": report not byte-stable across runs");

    // no scalar in the report may be a float; rationals travel as strings
    std::function<bool(const nlohmann::json&)> no_floats = [&](const nlohmann::json& v) {
      if (v.is_number_float()) return false;
      if (v.is_object() || v.is_array())
        for (const auto& child : v)
          if (!no_floats(child)) return false;
      return true;
    };
    res.require(no_floats(nlohmann::json::parse(first.output)),
                name + ": report contains a floating-point token");

    const auto golden = slurp(std::filesystem::path(LEFSCHETZ_GOLDEN_DIR) /
                              (name + ".report.json"));
    res.require(!golden.empty(), name + ": missing golden report");
    res.require(first.output == golden, name + ": report differs from the golden file");
  }

  // seeded identity runs are byte-identical
  const std::string sol_path = (dir / "sol_hyperbolic.json").string();
  const auto ids1 = run_cli("identities " + sol_path + " --seed 7 --count 40");
  const auto ids2 = run_cli("identities " + sol_path + " --seed 7 --count 40");
  res.require(ids1.exit_code == 0, "identities run failed");
  res.require(ids1.output == ids2.output, "identities output not byte-stable for a fixed seed");

  // crafted bad inputs: broken JSON (2), Jacobi violation (1), zero denominator (2)
  const auto bad1 = dir / "bad_syntax.json";
  std::ofstream(bad1) << "{ this is not json";
  res.require(run_cli("validate " + bad1.string()).exit_code == 2,
              "syntax error did not exit 2");

  const auto bad2 = dir / "bad_jacobi.json";
  std::ofstream(bad2) << R"({
    "name": "bad_jacobi", "dimension": 3, "p": 1, "n": 1,
    "basis_names": ["e1", "e2", "e3"],
    "brackets": [
      {"i": 1, "j": 2, "coeffs": {"3": "1"}},
      {"i": 1, "j": 3, "coeffs": {"1": "1"}}
    ],
    "omega": [{"i": 2, "j": 3, "coeff": "1"}]
  })";
  const auto jacobi_run = run_cli("validate " + bad2.string());
  res.require(jacobi_run.exit_code == 1, "jacobi violation did not exit 1");
  res.require(jacobi_run.output.find("(1,2,3)") != std::string::npos,
              "jacobi failure does not name the triple");

  const auto bad3 = dir / "bad_rational.json";
  std::ofstream(bad3) << R"({
    "name": "bad_rational", "dimension": 3, "p": 1, "n": 1,
    "basis_names": ["e1", "e2", "e3"],
    "brackets": [],
    "omega": [{"i": 2, "j": 3, "coeff": "1/0"}]
  })";
  res.require(run_cli("validate " + bad3.string()).exit_code == 2,
              "zero denominator did not exit 2");

  return res;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<CriterionResult()>>> criteria = {
      {"operator-identity suite, n = 1..3, 200 seeded forms, exact", criterion_identity_suite},
      {"star involution and pointwise Lefschetz powers on full bases, n <= 3",
       criterion_star_and_power},
      {"catalog reproductions: heisenberg, abelian, sol", criterion_examples},
      {"contrast case kt_product: taut, Lefschetz fails, equivalence preserved",
       criterion_contrast},
      {"adjointness pairings on all basic basis pairs, unimodular catalog",
       criterion_adjointness},
      {"Lefschetz bijections between harmonic spaces, all models, r <= n",
       criterion_harmonic_lefschetz},
      {"primitive decomposition round-trips, 100 forms per degree, n <= 3",
       criterion_primitive_decompose},
      {"CLI contract: byte-stable golden reports and exit codes", criterion_cli_contract},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    CriterionResult result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    all_ok = all_ok && result.ok;
    std::cout << (result.ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].first;
    if (!result.detail.empty()) std::cout << " — " << result.detail;
    std::cout << "\n";
  }
  return all_ok ? 0 : 1;
}
