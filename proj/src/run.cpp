#include "lattice/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "json.hpp"
#include "lattice/bands.hpp"
#include "lattice/floquet.hpp"
#include "lattice/friedrichs.hpp"
#include "lattice/io.hpp"
#include "lattice/nearfield.hpp"
#include "lattice/scattering.hpp"

namespace tl {

namespace {

using json = nlohmann::ordered_json;

json jc(cplx v) { return json::array({v.real(), v.imag()}); }

std::string config_hash(const RunConfig& c) {
  // FNV-1a 64 of the canonical serialization, with the output directory
  // normalized away: relocating the artifacts does not change the run.
  RunConfig keyed = c;
  keyed.output = "out";
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char ch : serialize_config(keyed)) {
    hash ^= ch;
    hash *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string out_path(const RunConfig& c, const std::string& name) {
  return c.output + "/" + name;
}

// Polarization matrix with the junction pattern from its three class values.
Matrix6d pattern_M(double r_m, double t_m, double tperp_m) {
  Matrix6d M;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      M(i, j) = (i == j) ? r_m : ((i + 3) % 6 == j ? t_m : tperp_m);
  return M;
}

struct ModelInputs {
  double mu1 = 0.0, beta1 = 0.0, K = 0.0;
  std::array<double, 3> nu_model{};
};

ModelInputs run_nearfield(const RunConfig& c, json& manifest) {
  TrappedMode tm = compute_mu1(c.R, c.h_list, c.eig_tol, c.seed);
  auto sym = check_symmetry(tm.grid, tm.eigenvector);
  double hi = std::min(c.window_hi, c.R - 2.0 * tm.grid.h);
  DecayFit fit = extract_decay_amplitude(tm.grid, tm.eigenvector, c.window_lo, hi);

  json j;
  j["mu1"] = tm.extrapolated_mu1;
  j["mu1_finest"] = tm.mu1;
  j["second_eigenvalue"] = tm.second_eigenvalue;
  j["threshold"] = threshold_lambda();
  j["beta1"] = tm.beta1;
  j["beta2"] = tm.beta2;
  j["symmetry_defects"] = {sym[0], sym[1], sym[2]};
  j["K"] = fit.K;
  j["beta_fit"] = fit.beta_fit;
  j["K_branch_spread"] = fit.spread;
  manifest["nearfield"] = j;

  CsvTable csv;
  csv.header = {"h", "mu1"};
  for (std::size_t i = 0; i < tm.spacings.size(); ++i)
    csv.rows.push_back({format_double(tm.spacings[i]), format_double(tm.mu1_per_h[i])});
  write_text_file(out_path(c, "nearfield_mu1.csv"), csv.to_string());
  write_text_file(out_path(c, "nearfield_mu1.gp"),
                  plot_script("nearfield_mu1.csv", "trapped mode vs spacing", "h", "mu1",
                              {{2, "mu1"}}));
  return {tm.extrapolated_mu1, tm.beta1, fit.K};
}

void run_mixed(const RunConfig& c, json& manifest) {
  EigResult res = compute_mixed_spectrum(c.R, c.scattering_h, 6, c.eig_tol, c.seed);
  json j;
  j["h"] = c.scattering_h;
  j["eigenvalues"] = res.values;
  j["threshold"] = threshold_lambda();
  j["second_above_threshold"] = res.values.size() > 1 && res.values[1] > threshold_lambda();
  manifest["mixed"] = j;

  CsvTable csv;
  csv.header = {"index", "eigenvalue"};
  for (std::size_t i = 0; i < res.values.size(); ++i)
    csv.rows.push_back({std::to_string(i + 1), format_double(res.values[i])});
  write_text_file(out_path(c, "mixed_spectrum.csv"), csv.to_string());
}

ScatteringData run_scattering(const RunConfig& c, json& manifest) {
  ScatteringData sd = compute_scattering(c.R, c.scattering_h, c.solve_tol);
  json j;
  j["R"] = sd.R;
  j["h"] = sd.h;
  j["r"] = jc(sd.r);
  j["t"] = jc(sd.t);
  j["t_perp"] = jc(sd.t_perp);
  j["r_m"] = sd.r_m;
  j["t_m"] = sd.t_m;
  j["tperp_m"] = sd.t_perp_m;
  j["unitarity_defect"] = sd.unitarity_defect;
  j["symmetry_defect"] = sd.symmetry_defect;
  j["max_imag_M"] = sd.max_imag_M;
  j["pattern_defect"] = sd.pattern_defect;
  j["cayley_roundtrip"] = sd.cayley_roundtrip;
  json eig = json::array();
  for (auto& e : sd.S_eigenvalues) eig.push_back(jc(e));
  j["S_eigenvalues"] = eig;
  manifest["scattering"] = j;

  CsvTable s_csv;
  s_csv.header = {"row", "col", "re", "im"};
  CsvTable m_csv;
  m_csv.header = {"row", "col", "value"};
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) {
      s_csv.rows.push_back({std::to_string(i + 1), std::to_string(k + 1),
                            format_double(sd.S(i, k).real()), format_double(sd.S(i, k).imag())});
      m_csv.rows.push_back(
          {std::to_string(i + 1), std::to_string(k + 1), format_double(sd.M(i, k))});
    }
  write_text_file(out_path(c, "scattering_S.csv"), s_csv.to_string());
  write_text_file(out_path(c, "scattering_M.csv"), m_csv.to_string());
  return sd;
}

void run_bands(const RunConfig& c, const Matrix6d& M, json& manifest) {
  AlephSweep sweep = sweep_aleph(M, c.eta_per_axis);
  json j;
  j["eta_per_axis"] = c.eta_per_axis;
  j["aleph"] = {sweep.min, sweep.max};
  j["aleph_nu_convention"] = {sweep.min_neg, sweep.max_neg};
  j["connected"] = sweep.connected;
  j["max_gap"] = sweep.max_gap;
  manifest["bands"] = j;

  CsvTable csv;
  csv.header = {"path_parameter", "e1", "e2", "e3"};
  for (const auto& rec : sweep.path_records)
    csv.rows.push_back({format_double(rec[0]), format_double(rec[1]), format_double(rec[2]),
                        format_double(rec[3])});
  write_text_file(out_path(c, "bands_path.csv"), csv.to_string());
  write_text_file(out_path(c, "bands_path.gp"),
                  plot_script("bands_path.csv", "limit-model band diagram", "path parameter",
                              "eigenvalue", {{2, "e1"}, {3, "e2"}, {4, "e3"}}));
}

void run_friedrichs(const RunConfig& c, json& manifest) {
  FriedrichsConstant inf = kappa_infinite(c.a);
  FriedrichsConstant trunc = kappa_truncated(c.a, c.friedrichs_R);
  InequalityCheck chk = verify_inequality_1d(c.a, std::nullopt, c.samples, 1e-3, 6.0, c.seed);
  json j;
  j["a"] = c.a;
  j["kappa"] = inf.kappa;
  j["kappa_residual"] = inf.residual;
  j["R"] = c.friedrichs_R;
  j["kappa_truncated"] = trunc.kappa;
  j["kappa_gap"] = std::abs(trunc.kappa - inf.kappa);
  j["worst_sample_ratio"] = chk.worst_ratio;
  j["discrete_min"] = chk.discrete_min;
  j["samples"] = c.samples;
  manifest["friedrichs"] = j;

  CsvTable csv;
  csv.header = {"a", "R", "kappa", "residual"};
  csv.rows.push_back({format_double(inf.a), "inf", format_double(inf.kappa),
                      format_double(inf.residual)});
  csv.rows.push_back({format_double(trunc.a), format_double(c.friedrichs_R),
                      format_double(trunc.kappa), format_double(trunc.residual)});
  write_text_file(out_path(c, "friedrichs.csv"), csv.to_string());
}

// Reference junction constants at the cells' scaled spacing h/eps = h_ratio
// (the cell eigenvalues converge to this lattice's, not to the continuum).
ModelInputs matched_reference(const RunConfig& c, json& manifest) {
  TrappedMode tm = compute_mu1(c.R, {2.0 * c.h_ratio, c.h_ratio}, c.eig_tol, c.seed);
  double hi = std::min(c.window_hi, c.R - 2.0 * tm.grid.h);
  DecayFit fit = extract_decay_amplitude(tm.grid, tm.eigenvector, c.window_lo, hi);
  json j;
  j["scaled_spacing"] = c.h_ratio;
  j["mu1"] = tm.mu1;
  j["beta_fit"] = fit.beta_fit;
  j["K"] = fit.K;
  manifest["floquet_reference"] = j;
  return {tm.mu1, fit.beta_fit, fit.K};
}

// Predicted second-cluster corrections at eta = 0 for p = 1, ascending.
std::array<double, 3> nu_model_from_M(const Matrix6d& M) {
  const double f = 2.0 * std::numbers::pi * std::numbers::pi;
  auto e = model_eigenvalues({0.0, 0.0, 0.0}, M);
  std::array<double, 3> nu = {-f * e[0], -f * e[1], -f * e[2]};
  std::sort(nu.begin(), nu.end());
  return nu;
}

void run_floquet(const RunConfig& c, const ModelInputs& model, json& manifest) {
  std::vector<CellBandRecord> gamma_records;
  CsvTable csv;
  csv.header = {"eps", "h", "eta1", "eta2", "eta3"};
  for (int b = 0; b < c.bands_k; ++b) csv.header.push_back("lambda" + std::to_string(b + 1));

  json per_eps = json::array();
  for (double eps : c.eps_list) {
    double h = c.h_ratio * eps;
    std::vector<std::array<double, 3>> etas = {{0.0, 0.0, 0.0},
                                               {std::numbers::pi, std::numbers::pi,
                                                std::numbers::pi}};
    auto recs = compute_cell_bands(eps, h, etas, c.bands_k, c.eig_tol, c.seed);
    for (const auto& rec : recs) {
      std::vector<std::string> row = {format_double(rec.eps), format_double(rec.h),
                                      format_double(rec.eta[0]), format_double(rec.eta[1]),
                                      format_double(rec.eta[2])};
      for (double v : rec.values) row.push_back(format_double(v));
      csv.rows.push_back(row);
    }
    gamma_records.push_back(recs.front());
    json e;
    e["eps"] = eps;
    e["h"] = h;
    e["lambda_gamma"] = recs[0].values;
    e["lambda_pi"] = recs[1].values;
    e["first_band_width"] = first_band_width(eps, h, 5, c.eig_tol, c.seed);
    per_eps.push_back(e);
  }
  write_text_file(out_path(c, "floquet_bands.csv"), csv.to_string());

  json j;
  j["per_eps"] = per_eps;
  if (model.mu1 > 0.0) {
    AsymptoticsReport rep = compare_asymptotics(
        gamma_records, {model.mu1, model.beta1, model.K, model.nu_model});
    json cmp = json::array();
    for (const auto& d : rep.per_eps) {
      json e;
      e["eps"] = d.eps;
      e["scaled_lambda1"] = d.scaled_lambda1;
      e["mu1_error"] = d.mu1_error;
      e["cluster_center"] = d.cluster_center;
      e["cluster_spread"] = d.cluster_spread;
      e["gap_below"] = d.gap_below;
      e["gap_above"] = d.gap_above;
      e["predicted_center"] = d.predicted_center;
      e["center_rel_error"] = d.center_rel_error;
      e["nu_scaled"] = {d.nu_scaled[0], d.nu_scaled[1], d.nu_scaled[2]};
      cmp.push_back(e);
    }
    j["asymptotics"] = cmp;
    j["mu1_error_decreasing"] = rep.mu1_error_decreasing;
    j["model_mu1"] = model.mu1;
    j["model_beta1"] = model.beta1;
    j["model_K"] = model.K;
    if (model.nu_model[0] != 0.0 || model.nu_model[2] != 0.0) {
      j["nu_model"] = {model.nu_model[0], model.nu_model[1], model.nu_model[2]};
      j["nu_ratio"] = {rep.nu_ratio[0], rep.nu_ratio[1], rep.nu_ratio[2]};
      j["nu_sign_ordering_ok"] = rep.nu_sign_ordering_ok;
    }
  }
  manifest["floquet"] = j;
}

}  // namespace

std::string version_string() { return "thinlattice 1.0.0"; }

RunResult run(const RunConfig& c) {
  RunResult result;
  ensure_directory(c.output);

  json manifest;
  manifest["version"] = version_string();
  manifest["config_hash"] = config_hash(c);
  manifest["command"] = c.command;
  manifest["seed"] = c.seed;

  // Wall-clock data stays out of the manifest so artifacts are reproducible.
  auto t0 = std::chrono::system_clock::now();

  try {
    if (c.command == "nearfield") {
      run_nearfield(c, manifest);
    } else if (c.command == "mixed") {
      run_mixed(c, manifest);
    } else if (c.command == "scattering") {
      run_scattering(c, manifest);
    } else if (c.command == "bands") {
      Matrix6d M;
      if (c.m_override) {
        M = pattern_M(c.r_m, c.t_m, c.tperp_m);
        manifest["bands_input"] = "override";
      } else {
        ScatteringData sd = run_scattering(c, manifest);
        M = sd.M;
        manifest["bands_input"] = "computed";
      }
      run_bands(c, M, manifest);
    } else if (c.command == "friedrichs") {
      run_friedrichs(c, manifest);
    } else if (c.command == "floquet") {
      ModelInputs model = matched_reference(c, manifest);
      if (c.m_override) model.nu_model = nu_model_from_M(pattern_M(c.r_m, c.t_m, c.tperp_m));
      run_floquet(c, model, manifest);
    } else if (c.command == "all") {
      run_nearfield(c, manifest);
      run_mixed(c, manifest);
      ScatteringData sd = run_scattering(c, manifest);
      manifest["bands_input"] = "computed";
      run_bands(c, sd.M, manifest);
      run_friedrichs(c, manifest);
      ModelInputs model = matched_reference(c, manifest);
      model.nu_model = nu_model_from_M(sd.M);
      run_floquet(c, model, manifest);
    } else {
      throw ConfigError(0, "unknown command '" + c.command + "'");
    }
  } catch (const std::exception& e) {
    manifest["failure"] = e.what();
    result.status = 1;
    result.error = e.what();
  }

  result.manifest_json = manifest.dump(2) + "\n";
  write_text_file(out_path(c, "manifest.json"), result.manifest_json);

  auto t1 = std::chrono::system_clock::now();
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  auto stamp = std::chrono::duration_cast<std::chrono::seconds>(t0.time_since_epoch()).count();
  write_text_file(out_path(c, "run.log"),
                  "started_unix=" + std::to_string(stamp) + "\nelapsed_ms=" + std::to_string(ms) +
                      "\nstatus=" + std::to_string(result.status) + "\n");
  return result;
}

}  // namespace tl
