#include "lattice/bands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tl {

namespace {
constexpr double pi = std::numbers::pi;
}

Matrix3c assemble_A(const std::array<double, 3>& eta, const Matrix6d& M) {
  Eigen::Matrix<cplx, 3, 6> Theta = Eigen::Matrix<cplx, 3, 6>::Zero();
  for (int j = 0; j < 3; ++j) {
    Theta(j, j) = 1.0;
    Theta(j, j + 3) = std::polar(1.0, -eta[j]);
  }
  return Theta * M.cast<cplx>() * Theta.adjoint();
}

std::array<double, 3> model_eigenvalues(const std::array<double, 3>& eta, const Matrix6d& M) {
  Eigen::SelfAdjointEigenSolver<Matrix3c> es(assemble_A(eta, M));
  return {es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvalues()(2)};
}

AlephSweep sweep_aleph(const Matrix6d& M, int n_per_axis) {
  if (n_per_axis < 9) throw std::invalid_argument("sweep_aleph: need >= 9 points per axis");
  AlephSweep out;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_per_axis) * n_per_axis * n_per_axis * 3);
  const double step = 2.0 * pi / n_per_axis;
  // eta -> -eta gives conjugate A with identical spectrum; sweep half the cube.
  for (int i = 0; i <= n_per_axis / 2; ++i) {
    for (int j = 0; j < n_per_axis; ++j) {
      for (int k = 0; k < n_per_axis; ++k) {
        auto ev = model_eigenvalues({i * step, j * step, k * step}, M);
        values.insert(values.end(), ev.begin(), ev.end());
      }
    }
  }
  // The corners {0, pi}^3 carry the closed-form extrema; include them so the
  // endpoints do not depend on the grid parity.
  for (int i = 0; i < 8; ++i) {
    auto ev = model_eigenvalues({(i & 1) ? pi : 0.0, (i & 2) ? pi : 0.0, (i & 4) ? pi : 0.0}, M);
    values.insert(values.end(), ev.begin(), ev.end());
  }
  std::sort(values.begin(), values.end());
  out.min = values.front();
  out.max = values.back();
  out.min_neg = -out.max;
  out.max_neg = -out.min;
  double gap = 0.0;
  for (std::size_t i = 1; i < values.size(); ++i) gap = std::max(gap, values[i] - values[i - 1]);
  out.max_gap = gap;
  // Connected at the sampling resolution: holes no wider than a few grid cells
  // worth of eigenvalue motion.
  double range = out.max - out.min;
  out.connected = range == 0.0 || gap <= std::max(1e-12, 10.0 * range / n_per_axis);

  // Band diagram along the standard path.
  auto add_leg = [&](std::array<double, 3> a, std::array<double, 3> b, double t0) {
    const int n = 40;
    for (int s = 0; s <= n; ++s) {
      double u = static_cast<double>(s) / n;
      std::array<double, 3> eta{a[0] + u * (b[0] - a[0]), a[1] + u * (b[1] - a[1]),
                                a[2] + u * (b[2] - a[2])};
      auto ev = model_eigenvalues(eta, M);
      out.path_records.push_back({t0 + u, ev[0], ev[1], ev[2]});
    }
  };
  add_leg({0, 0, 0}, {pi, 0, 0}, 0.0);
  add_leg({pi, 0, 0}, {pi, pi, 0}, 1.0);
  add_leg({pi, pi, 0}, {pi, pi, pi}, 2.0);
  add_leg({pi, pi, pi}, {0, 0, 0}, 3.0);
  return out;
}

FirstBandModel first_band_model(double eps, const std::array<double, 3>& eta, double K,
                                double beta1, double mu1) {
  if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("first_band_model: eps in (0, 1/2)");
  FirstBandModel out;
  double cos_sum = std::cos(eta[0]) + std::cos(eta[1]) + std::cos(eta[2]);
  out.m_eta = -4.0 * beta1 * K * K * cos_sum;
  double scale = std::exp(-beta1 / eps) / (eps * eps);
  out.lambda1 = mu1 / (eps * eps) + scale * out.m_eta;
  out.c1 = 12.0 * beta1 * K * K;
  out.half_width = scale * out.c1;
  return out;
}

std::vector<UpsilonSegment> upsilon_segments(double eps, int p_max, double aleph_min,
                                             double aleph_max, bool* overlapping) {
  if (p_max < 1) throw std::invalid_argument("upsilon_segments: p_max >= 1");
  const double c_p = 1.05 * std::max(std::abs(aleph_min), std::abs(aleph_max));
  std::vector<UpsilonSegment> segs;
  bool overlap = false;
  for (int p = 1; p <= p_max; ++p) {
    UpsilonSegment s;
    s.p = p;
    s.center = 2.0 * pi * pi / (eps * eps) + p * p * pi * pi;
    s.half_width = eps * c_p;
    s.gap_to_next = (2 * p + 1) * pi * pi;
    if (s.gap_to_next < 2.0 * s.half_width) overlap = true;
    segs.push_back(s);
  }
  if (overlapping) *overlapping = overlap;
  return segs;
}

std::pair<cplx, cplx> gamma_profiles(int p, double eta_j, double s) {
  if (p < 1) throw std::invalid_argument("gamma_profiles: p >= 1");
  if (s < -0.5 || s > 0.5) throw std::invalid_argument("gamma_profiles: s in [-1/2, 1/2]");
  cplx gp = std::sin(p * pi * s);
  cplx gm = -std::polar(1.0, eta_j) * std::sin(p * pi * s);
  return {gp, gm};
}

}  // namespace tl
