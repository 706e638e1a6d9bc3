// Acceptance suite: end-to-end numerical checks of the toolkit at its
// reference parameters. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>

#include "lattice/bands.hpp"
#include "lattice/floquet.hpp"
#include "lattice/friedrichs.hpp"
#include "lattice/nearfield.hpp"
#include "lattice/operators.hpp"
#include "lattice/scattering.hpp"
#include "lattice/solvers.hpp"

using namespace tl;
namespace {
constexpr double pi = std::numbers::pi;
int failures = 0;

void report(int idx, bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s: [%2d] %s (%s)\n", ok ? "PASS" : "FAIL", idx, name.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

Matrix6d pattern_matrix(double rm, double tm, double tpm) {
  Matrix6d M;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) M(i, j) = (i == j) ? rm : ((i + 3) % 6 == j ? tm : tpm);
  return M;
}
}  // namespace

int main() {
  // ---- shared computations -------------------------------------------------
  TrappedMode mode = compute_mu1(2.5, {1.0 / 8.0, 1.0 / 12.0, 1.0 / 16.0});

  // [1] trapped eigenvalue below the threshold, in the reference box
  {
    bool in_box = std::abs(mode.extrapolated_mu1 - 12.9) <= 0.4;
    bool isolated = mode.mu1 < threshold_lambda() && mode.second_eigenvalue > threshold_lambda();
    report(1, in_box && isolated, "trapped eigenvalue 12.9 +/- 0.4, simple below threshold",
           fmt("mu1 = %.6f, next = %.6f, 2 pi^2 = %.6f", mode.extrapolated_mu1,
               mode.second_eigenvalue, threshold_lambda()));
  }

  // [2] full octahedral symmetry of the trapped mode
  {
    auto d = check_symmetry(mode.grid, mode.eigenvector);
    double worst = std::max({d[0], d[1], d[2]});
    report(2, worst <= 1e-6, "trapped mode symmetric under coordinate reflections",
           fmt("max relative defect = %.3e", worst));
  }

  // [3] exponential decay along the bars with the predicted rate
  DecayFit fit = extract_decay_amplitude(mode.grid, mode.eigenvector, 1.0, 1.75);
  {
    double rel = std::abs(fit.beta_fit - mode.beta1) / mode.beta1;
    report(3, rel <= 0.05 && fit.spread <= 0.05,
           "bar decay rate matches sqrt(2 pi^2 - mu1) with equal branch amplitudes",
           fmt("beta_fit = %.4f vs %.4f (%.2f%%), amplitude spread = %.2e", fit.beta_fit,
               mode.beta1, 100 * rel, fit.spread));
  }

  // [4] the Neumann-cut problem adds no second discrete eigenvalue
  {
    EigResult mixed = compute_mixed_spectrum(2.5, 1.0 / 12.0, 2);
    report(4, mixed.values[1] > threshold_lambda(),
           "mixed problem keeps one eigenvalue below the threshold",
           fmt("mu2 = %.4f > %.4f", mixed.values[1], threshold_lambda()));
  }

  // ---- threshold scattering ------------------------------------------------
  ScatteringData sd = compute_scattering(2.5, 1.0 / 20.0);

  // [5] scattering coefficients and unitary structure
  {
    double dr = std::abs(sd.r - cplx(0.66, 0.11));
    double dt = std::abs(sd.t - cplx(0.08, -0.70));
    double dp = std::abs(sd.t_perp - cplx(-0.08, -0.08));
    bool coeffs = dr <= 0.08 && dt <= 0.08 && dp <= 0.05;
    bool unitary = sd.unitarity_defect <= 0.03;
    bool eigs_ok = true;
    double min_res = 1e9;
    for (cplx ev : sd.S_eigenvalues) {
      eigs_ok = eigs_ok && std::abs(ev) >= 0.97 && std::abs(ev) <= 1.03;
      min_res = std::min(min_res, std::abs(ev + 1.0));
    }
    report(5, coeffs && unitary && eigs_ok && min_res >= 0.1,
           "threshold scattering coefficients with unitary 6x6 matrix",
           fmt("|dr| %.3f |dt| %.3f |dtp| %.3f, unit %.1e, min|ev+1| %.2f", dr, dt, dp,
               sd.unitarity_defect, min_res));
  }

  // [6] polarization matrix through the Cayley transform
  {
    bool vals = std::abs(sd.r_m - 0.08) <= 0.05 && std::abs(sd.t_m + 0.44) <= 0.05 &&
                std::abs(sd.t_perp_m + 0.06) <= 0.05;
    bool clean = sd.max_imag_M <= 0.02 && sd.pattern_defect <= 0.02 &&
                 sd.cayley_roundtrip <= 1e-10;
    report(6, vals && clean, "polarization coefficients (0.08, -0.44, -0.06) +/- 0.05",
           fmt("r_m %.4f t_m %.4f tp_m %.4f, imag %.1e pattern %.1e roundtrip %.1e", sd.r_m,
               sd.t_m, sd.t_perp_m, sd.max_imag_M, sd.pattern_defect, sd.cayley_roundtrip));
  }

  // [7] second-cluster sweep range and its closed corner forms
  {
    AlephSweep sw = sweep_aleph(pattern_matrix(0.08, -0.44, -0.06), 33);
    bool range = std::abs(sw.min - (-1.24)) <= 0.10 && std::abs(sw.max - 1.04) <= 0.10;
    bool corners = true;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(-0.5, 0.5);
    for (int trial = 0; trial < 10 && corners; ++trial) {
      double rm = dist(rng), tm = dist(rng), tpm = dist(rng);
      Matrix6d M = pattern_matrix(rm, tm, tpm);
      std::array<double, 3> w0 = {2 * rm + 2 * tm + 8 * tpm, 2 * rm + 2 * tm - 4 * tpm,
                                  2 * rm + 2 * tm - 4 * tpm};
      std::sort(w0.begin(), w0.end());
      auto g0 = model_eigenvalues({0, 0, 0}, M);
      auto gp = model_eigenvalues({pi, pi, pi}, M);
      for (int k = 0; k < 3; ++k) {
        corners = corners && std::abs(g0[k] - w0[k]) < 1e-12;
        corners = corners && std::abs(gp[k] - (2 * rm - 2 * tm)) < 1e-12;
      }
    }
    report(7, range && corners && sw.connected,
           "limit-model sweep spans (-1.24, 1.04) +/- 0.10 with exact corner values",
           fmt("min %.4f max %.4f connected %d", sw.min, sw.max, sw.connected ? 1 : 0));
  }

  // [8] weighted 1D inequality constants
  {
    const double a = pi * std::sqrt(2.5);
    FriedrichsConstant inf = kappa_infinite(a);
    FriedrichsConstant trunc = kappa_truncated(a, 10.0);
    InequalityCheck chk = verify_inequality_1d(a, std::nullopt, 10000);
    bool root_ok = inf.kappa > pi * pi / 2.0 && inf.residual <= 1e-12;
    bool sat = std::abs(trunc.kappa - inf.kappa) <= 1e-6;
    bool ineq = chk.worst_ratio >= chk.kappa &&
                std::abs(chk.discrete_min - chk.kappa) / chk.kappa <= 0.005;
    report(8, root_ok && sat && ineq,
           "sharp 1D constant above pi^2/2, saturated truncation, inequality holds",
           fmt("kappa %.8f residual %.1e |trunc-inf| %.1e discrete %.6f worst %.4f", inf.kappa,
               inf.residual, std::abs(trunc.kappa - inf.kappa), chk.discrete_min,
               chk.worst_ratio));
  }

  // [9] quasi-periodic cell spectra against the asymptotic models
  {
    // reference constants at the same scaled spacing h/eps = 1/4 so the
    // discretization bias cancels from the trends
    TrappedMode ref = compute_mu1(2.5, {0.5, 0.25});
    DecayFit rfit = extract_decay_amplitude(ref.grid, ref.eigenvector, 1.0, 1.75);
    BandModelInputs model;
    model.mu1 = ref.mu1;
    model.beta1 = rfit.beta_fit;
    model.K = rfit.K;

    std::vector<CellBandRecord> recs;
    bool widths_ok = true;
    std::string width_note;
    for (double eps : {1.0 / 2.0, 1.0 / 3.0, 1.0 / 4.0}) {
      recs.push_back(compute_cell_bands(eps, eps / 4.0, {{0, 0, 0}}, 6)[0]);
      double w = first_band_width(eps, eps / 4.0);
      double bound = 24.0 / (eps * eps) * std::exp(-model.beta1 / eps) * model.beta1 *
                     model.K * model.K * 1.5;
      widths_ok = widths_ok && w <= bound;
      width_note += fmt("w(%.2f)=%.3g<=%.3g ", eps, w, bound);
    }
    AsymptoticsReport rep = compare_asymptotics(recs, model);
    const FloquetDiscrepancy& fine = rep.per_eps.back();
    bool cluster = fine.center_rel_error <= 0.05 && fine.gap_below > fine.cluster_spread &&
                   fine.gap_above > 0.0;

    // second-cluster corrections at the smallest feasible thinning, using
    // the polarization data measured in [6]
    Matrix6d M = pattern_matrix(sd.r_m, sd.t_m, sd.t_perp_m);
    auto a0 = model_eigenvalues({0, 0, 0}, M);
    for (int k = 0; k < 3; ++k) model.nu_model[k] = -2.0 * pi * pi * a0[2 - k];
    std::sort(model.nu_model.begin(), model.nu_model.end());
    std::vector<CellBandRecord> recs_nu = recs;
    recs_nu.push_back(compute_cell_bands(1.0 / 8.0, 1.0 / 32.0, {{0, 0, 0}}, 6)[0]);
    AsymptoticsReport rep_nu = compare_asymptotics(recs_nu, model);
    bool nu_ok = rep_nu.nu_sign_ordering_ok;
    for (double r : rep_nu.nu_ratio) nu_ok = nu_ok && r >= 0.5 && r <= 1.5;

    report(9, rep.mu1_error_decreasing && cluster && widths_ok && nu_ok,
           "cell spectra: first-band trend, cluster structure, widths, corrections",
           fmt("mu1_err %.3g/%.3g/%.3g, center_err %.3f, %snu (%.2f %.2f %.2f)",
               rep.per_eps[0].mu1_error, rep.per_eps[1].mu1_error, rep.per_eps[2].mu1_error,
               fine.center_rel_error, width_note.c_str(), rep_nu.nu_ratio[0],
               rep_nu.nu_ratio[1], rep_nu.nu_ratio[2]));
  }

  // [10] self-consistency: analytic cube eigenvalue, dense cross-check,
  //      bitwise reproducibility
  {
    JunctionGrid cube = build_junction_grid(0.5, 1.0 / 16.0);
    EigResult ce = smallest_eigenpairs(assemble_dirichlet(cube), 1);
    bool cube_ok = std::abs(ce.values[0] - 3 * pi * pi) / (3 * pi * pi) <= 0.01;

    CellGrid cell = build_cell_grid(0.5, 1.0 / 8.0);
    SparseOperator op = assemble_floquet(cell, {0.9, 1.7, 2.4});
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> dense(Eigen::MatrixXcd(op.cplx_matrix()));
    EigResult it = smallest_eigenpairs(op, 4);
    bool dense_ok = true;
    for (int k = 0; k < 4; ++k)
      dense_ok = dense_ok && std::abs(it.values[k] - dense.eigenvalues()[k]) <= 1e-7;

    TrappedMode again = compute_mu1(2.5, {1.0 / 8.0, 1.0 / 12.0, 1.0 / 16.0});
    bool repro = again.extrapolated_mu1 == mode.extrapolated_mu1 &&
                 (again.eigenvector - mode.eigenvector).norm() == 0.0;

    report(10, cube_ok && dense_ok && repro,
           "analytic cube value, dense eigensolver agreement, bitwise reproducibility",
           fmt("cube %.4f vs %.4f, dense ok %d, repro %d", ce.values[0], 3 * pi * pi,
               dense_ok ? 1 : 0, repro ? 1 : 0));
  }

  if (failures > 0) {
    std::printf("ACCEPTANCE: %d criterion/criteria FAILED\n", failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all 10 criteria passed\n");
  return 0;
}
