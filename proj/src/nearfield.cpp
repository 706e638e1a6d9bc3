#include "lattice/nearfield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tl {

namespace {
constexpr double pi = std::numbers::pi;
}

TrappedMode compute_mu1(double R, const std::vector<double>& spacings, double tol,
                        std::uint64_t seed) {
  if (R < 2.0) throw std::invalid_argument("compute_mu1: requires R >= 2");
  if (spacings.size() < 2) throw std::invalid_argument("compute_mu1: need >= 2 spacings");

  TrappedMode mode;
  mode.R = R;
  mode.spacings = spacings;
  // Finest grid last.
  std::vector<double> hs = spacings;
  std::sort(hs.begin(), hs.end(), std::greater<>());
  mode.spacings = hs;

  for (std::size_t i = 0; i < hs.size(); ++i) {
    JunctionGrid grid = build_junction_grid(R, hs[i]);
    SparseOperator op = assemble_dirichlet(grid);
    EigOptions opts;
    opts.tol = tol;
    opts.seed = seed;
    EigResult eig = smallest_eigenpairs(op, 2, opts);
    mode.mu1_per_h.push_back(eig.values[0]);
    if (i + 1 == hs.size()) {
      if (eig.values[1] < threshold_lambda() * (1.0 - 0.02)) {
        throw std::runtime_error("compute_mu1: second eigenvalue " + std::to_string(eig.values[1]) +
                                 " below threshold, discretization anomaly");
      }
      mode.mu1 = eig.values[0];
      mode.second_eigenvalue = eig.values[1];
      mode.grid = std::move(grid);
      mode.eigenvector = eig.vectors.col(0).real();
    }
  }

  // Least-squares fit mu(h) = mu0 + c h^2 over all spacings.
  double s1 = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    double x = hs[i] * hs[i], y = mode.mu1_per_h[i];
    s1 += 1;
    sx += x;
    sxx += x * x;
    sy += y;
    sxy += x * y;
  }
  double det = s1 * sxx - sx * sx;
  mode.extrapolated_mu1 = (sxx * sy - sx * sxy) / det;
  if (!(mode.extrapolated_mu1 > 0.0 && mode.extrapolated_mu1 < threshold_lambda())) {
    throw std::runtime_error("compute_mu1: extrapolated value outside (0, 2 pi^2)");
  }
  mode.beta1 = std::sqrt(2.0 * pi * pi - mode.extrapolated_mu1);
  mode.beta2 = std::sqrt(5.0 * pi * pi - mode.extrapolated_mu1);
  return mode;
}

std::array<double, 3> check_symmetry(const JunctionGrid& grid, const Eigen::VectorXd& v) {
  std::array<double, 3> defects{};
  const double nrm = v.norm();
  for (int axis = 0; axis < 3; ++axis) {
    double acc = 0.0;
    for (int i = 0; i < v.size(); ++i) {
      double d = v[i] - v[reflect_node(grid, i, axis)];
      acc += d * d;
    }
    defects[axis] = std::sqrt(acc) / nrm;
  }
  return defects;
}

DecayFit extract_decay_amplitude(const JunctionGrid& grid, const Eigen::VectorXd& v,
                                 double window_lo, double window_hi) {
  if (!(0.5 < window_lo && window_lo < window_hi && window_hi <= grid.R - 2.0 * grid.h)) {
    throw std::invalid_argument("extract_decay_amplitude: window must satisfy 1/2 < lo < hi <= R - 2h");
  }
  const double h = grid.h;
  const int z_lo = static_cast<int>(std::ceil(window_lo / h - 1e-9));
  const int z_hi = static_cast<int>(std::floor(window_hi / h + 1e-9));
  if (z_hi - z_lo < 3) throw std::invalid_argument("extract_decay_amplitude: window too narrow");

  DecayFit fit;
  double beta_sum = 0.0;
  for (int j = 0; j < 6; ++j) {
    const int axis = branch_axis(j);
    const int sign = branch_sign(j);
    std::vector<double> zs, logs;
    double first_sign = 0.0;
    for (int zi = z_lo; zi <= z_hi; ++zi) {
      double proj = 0.0;
      for (int b = -grid.half + 1; b <= grid.half - 1; ++b) {
        for (int c = -grid.half + 1; c <= grid.half - 1; ++c) {
          Node n{};
          if (axis == 0) n = {sign * zi, b, c};
          if (axis == 1) n = {b, sign * zi, c};
          if (axis == 2) n = {b, c, sign * zi};
          int idx = grid.interior_index(n);
          if (idx < 0) throw std::logic_error("extract_decay_amplitude: window node not interior");
          proj += v[idx] * cross_mode(grid, n, j) * h * h;
        }
      }
      if (first_sign == 0.0) first_sign = proj >= 0 ? 1.0 : -1.0;
      double aligned = proj * first_sign;
      if (aligned <= 0.0) {
        throw std::runtime_error("extract_decay_amplitude: projection sign flip inside window");
      }
      zs.push_back(zi * h);
      logs.push_back(std::log(aligned));
    }
    // Linear fit log|p|(z) = log K - beta z.
    double s1 = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      s1 += 1;
      sx += zs[i];
      sxx += zs[i] * zs[i];
      sy += logs[i];
      sxy += zs[i] * logs[i];
    }
    double det = s1 * sxx - sx * sx;
    double slope = (s1 * sxy - sx * sy) / det;
    double intercept = (sxx * sy - sx * sxy) / det;
    fit.K_branch[j] = std::exp(intercept);
    beta_sum += -slope;
  }
  fit.beta_fit = beta_sum / 6.0;
  double lg = 0.0, mn = fit.K_branch[0], mx = fit.K_branch[0], mean = 0.0;
  for (double k : fit.K_branch) {
    lg += std::log(k);
    mn = std::min(mn, k);
    mx = std::max(mx, k);
    mean += k / 6.0;
  }
  fit.K = std::exp(lg / 6.0);
  fit.spread = (mx - mn) / mean;
  return fit;
}

EigResult compute_mixed_spectrum(double R, double h, int k, double tol, std::uint64_t seed) {
  if (R < 2.0) throw std::invalid_argument("compute_mixed_spectrum: requires R >= 2");
  JunctionGrid grid = build_junction_grid(R, h);
  SparseOperator op = assemble_mixed(grid);
  EigOptions opts;
  opts.tol = tol;
  opts.seed = seed;
  return smallest_eigenpairs(op, k, opts);
}

}  // namespace tl
