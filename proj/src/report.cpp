#include "lefschetz/report.hpp"

#include <cstdlib>
#include <sstream>

namespace lefschetz {

Report build_report(const LieModel& model, std::uint64_t identity_seed, int identity_count) {
  Report report(model);
  report.validation = validate_model(model);
  if (!report.validation.passed()) return report;

  const FoliationContext ctx = make_context(model);
  report.mc = ctx.mc;
  for (int r = 0; r <= ctx.complex.top_degree(); ++r)
    report.basic_dims.push_back(ctx.complex.dim(r));

  const auto h_b = cohomology(ctx, OperatorKind::dB);
  for (const auto& g : h_b) report.h_b_dims.push_back(g.dimension);

  if (ctx.mc.kappa_basic) {
    report.taut = tautness_check(ctx);
    report.taut_known = true;
  }
  report.even_betti = even_betti_check(ctx, h_b, report.taut_known && report.taut);

  if (ctx.mc.kappa_basic && ctx.mc.dkappa_zero) {
    for (const auto& g : cohomology(ctx, OperatorKind::dKappa))
      report.h_kappa_dims.push_back(g.dimension);
    report.h_kappa_defined = true;
  }

  report.hard_lefschetz = hard_lefschetz_equivalence(ctx);
  report.identities = run_identity_suite(ctx, identity_seed, identity_count);
  return report;
}

namespace {

nlohmann::ordered_json matrix_to_json(const RatMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* status_name(IdentityStatus status) {
  switch (status) {
    case IdentityStatus::passed: return "passed";
    case IdentityStatus::failed: return "failed";
    case IdentityStatus::skipped: return "skipped";
  }
  return "?";
}

} // namespace

nlohmann::ordered_json report_to_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["schema"] = "lefschetz-lab/report/v1";

  nlohmann::ordered_json model;
  model["name"] = report.model.name;
  model["dimension"] = report.model.frame->dim();
  model["p"] = report.model.frame->leaf_dim;
  model["n"] = report.model.frame->half_transverse;
  model["basis_names"] = report.model.frame->names;
  doc["model"] = std::move(model);

  nlohmann::ordered_json validation;
  validation["jacobi"] = report.validation.jacobi;
  validation["foliation_subalgebra"] = report.validation.foliation_subalgebra;
  validation["omega_closed"] = report.validation.omega_closed;
  validation["omega_foliation_kernel"] = report.validation.omega_foliation_kernel;
  validation["omega_nondegenerate"] = report.validation.omega_nondegenerate;
  validation["unimodular"] = report.validation.unimodular;
  validation["passed"] = report.validation.passed();
  validation["failures"] = report.validation.failures;
  doc["validation"] = std::move(validation);
  if (!report.validation.passed()) return doc;

  nlohmann::ordered_json mc;
  mc["chi"] = report.mc.chi.to_string();
  mc["kappa"] = report.mc.kappa.to_string();
  mc["phi0"] = report.mc.phi0.to_string();
  mc["kappa_basic"] = report.mc.kappa_basic;
  mc["dkappa_zero"] = report.mc.dkappa_zero;
  doc["mean_curvature"] = std::move(mc);

  if (report.taut_known)
    doc["taut"] = report.taut;
  else
    doc["taut"] = nullptr;

  doc["basic_dims"] = report.basic_dims;
  doc["H_B"] = report.h_b_dims;
  if (report.h_kappa_defined)
    doc["H_kappa"] = report.h_kappa_dims;
  else
    doc["H_kappa"] = nullptr;

  nlohmann::ordered_json betti;
  betti["taut"] = report.even_betti.taut;
  betti["asserted"] = report.even_betti.asserted;
  betti["H_B_even"] = report.even_betti.even_dims;
  betti["all_nonzero"] = report.even_betti.all_nonzero;
  doc["even_betti"] = std::move(betti);

  nlohmann::ordered_json hl;
  hl["applicable"] = report.hard_lefschetz.applicable;
  if (report.hard_lefschetz.applicable) {
    auto maps = nlohmann::ordered_json::array();
    for (const auto& entry : report.hard_lefschetz.lefschetz) {
      nlohmann::ordered_json map;
      map["r"] = entry.r;
      map["source_degree"] = entry.source_degree;
      map["target_degree"] = entry.target_degree;
      map["matrix"] = matrix_to_json(entry.matrix);
      map["surjective"] = entry.surjective;
      maps.push_back(std::move(map));
    }
    hl["lefschetz"] = std::move(maps);
    hl["harmonic_representative_in_every_class"] =
        report.hard_lefschetz.harmonic_in_every_class;
    hl["lefschetz_surjective_for_all_r"] = report.hard_lefschetz.lefschetz_surjective_all_r;
    hl["equivalent"] = report.hard_lefschetz.equivalent;
    auto missing = nlohmann::ordered_json::array();
    for (const auto& [degree, index] : report.hard_lefschetz.classes_without_representative) {
      nlohmann::ordered_json item;
      item["degree"] = degree;
      item["class_index"] = index;
      missing.push_back(std::move(item));
    }
    hl["classes_without_representative"] = std::move(missing);
  } else {
    hl["reason"] = report.hard_lefschetz.reason;
  }
  doc["hard_lefschetz"] = std::move(hl);

  nlohmann::ordered_json ids;
  ids["seed"] = report.identities.seed;
  ids["count"] = report.identities.count;
  ids["passed"] = report.identities.passed_count();
  ids["failed"] = report.identities.failed_count();
  ids["skipped"] = report.identities.skipped_count();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& r : report.identities.results) {
    nlohmann::ordered_json entry;
    entry["name"] = r.name;
    entry["status"] = status_name(r.status);
    if (r.status == IdentityStatus::passed) entry["checked"] = r.checked;
    if (!r.detail.empty()) entry["detail"] = r.detail;
    entries.push_back(std::move(entry));
  }
  ids["results"] = std::move(entries);
  doc["identities"] = std::move(ids);
  return doc;
}

ColorMode color_mode_from_env() {
  const char* value = std::getenv("LEFSCHETZ_LAB_COLOR");
  if (!value) return ColorMode::automatic;
  const std::string v(value);
  if (v == "never") return ColorMode::never;
  if (v == "always") return ColorMode::always;
  return ColorMode::automatic;
}

namespace {

struct Palette {
  const char* good = "";
  const char* bad = "";
  const char* dim = "";
  const char* reset = "";
};

Palette palette(ColorMode mode, bool tty) {
  const bool on = mode == ColorMode::always || (mode == ColorMode::automatic && tty);
  if (!on) return {};
  return {"\033[32m", "\033[31m", "\033[2m", "\033[0m"};
}

std::string dims_to_string(const std::vector<int>& dims) {
  std::string out = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(dims[i]);
  }
  return out + ")";
}

} // namespace

std::string report_to_text(const Report& report, ColorMode color, bool stdout_is_tty) {
  const Palette c = palette(color, stdout_is_tty);
  std::ostringstream out;
  auto yesno = [&](bool b) {
    return std::string(b ? c.good : c.bad) + (b ? "yes" : "no") + c.reset;
  };

  out << "model " << report.model.name << "  (m = " << report.model.frame->dim()
      << ", p = " << report.model.frame->leaf_dim
      << ", n = " << report.model.frame->half_transverse << ")\n";

  out << "validation: " << (report.validation.passed() ? "passed" : "FAILED");
  out << "  [jacobi " << yesno(report.validation.jacobi) << ", foliation subalgebra "
      << yesno(report.validation.foliation_subalgebra) << ", d(omega)=0 "
      << yesno(report.validation.omega_closed) << ", ker(omega)⊇TF "
      << yesno(report.validation.omega_foliation_kernel) << ", nondegenerate "
      << yesno(report.validation.omega_nondegenerate) << ", unimodular "
      << yesno(report.validation.unimodular) << "]\n";
  for (const auto& f : report.validation.failures) out << "  failure: " << f << "\n";
  if (!report.validation.passed()) return out.str();

  out << "chi = " << report.mc.chi.to_string() << "\n";
  out << "kappa = " << report.mc.kappa.to_string()
      << "  (basic: " << (report.mc.kappa_basic ? "yes" : "no")
      << ", d(kappa)=0: " << (report.mc.dkappa_zero ? "yes" : "no") << ")\n";
  out << "phi0 = " << report.mc.phi0.to_string() << "\n";
  if (report.taut_known)
    out << "taut: " << (report.taut ? "yes" : "no") << "\n";
  else
    out << "taut: unknown (kappa is not basic)\n";

  out << "dim Omega_B = " << dims_to_string(report.basic_dims) << "\n";
  out << "dim H_B     = " << dims_to_string(report.h_b_dims) << "\n";
  if (report.h_kappa_defined)
    out << "dim H_kappa = " << dims_to_string(report.h_kappa_dims) << "\n";
  else
    out << "dim H_kappa = undefined (needs kappa basic and d(kappa)=0)\n";

  out << "even basic cohomology " << dims_to_string(report.even_betti.even_dims)
      << (report.even_betti.asserted
              ? (report.even_betti.all_nonzero ? " all nonzero (taut)" : " VANISHING (taut!)")
              : " (no tautness assertion)")
      << "\n";

  if (report.hard_lefschetz.applicable) {
    for (const auto& entry : report.hard_lefschetz.lefschetz)
      out << "L^" << entry.r << ": H_kappa^" << entry.source_degree << " -> H_kappa^"
          << entry.target_degree << "  " << (entry.surjective ? "surjective" : "NOT surjective")
          << "\n";
    out << "harmonic representative in every class: "
        << yesno(report.hard_lefschetz.harmonic_in_every_class) << "\n";
    for (const auto& [degree, index] : report.hard_lefschetz.classes_without_representative)
      out << "  NONE for class #" << index << " in H_kappa^" << degree << "\n";
    out << "Lefschetz surjective for all r: "
        << yesno(report.hard_lefschetz.lefschetz_surjective_all_r) << "\n";
    out << "equivalence holds: " << yesno(report.hard_lefschetz.equivalent) << "\n";
  } else {
    out << "hard Lefschetz equivalence: not applicable (" << report.hard_lefschetz.reason
        << ")\n";
  }

  out << "identities: " << report.identities.passed_count() << " passed, "
      << report.identities.failed_count() << " failed, " << report.identities.skipped_count()
      << " skipped (seed " << report.identities.seed << ", count " << report.identities.count
      << ")\n";
  for (const auto& r : report.identities.results) {
    if (r.status == IdentityStatus::passed) continue;
    out << "  " << r.name << ": " << status_name(r.status);
    if (!r.detail.empty()) out << " — " << r.detail;
    out << "\n";
  }
  return out.str();
}

} // namespace lefschetz
