#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "lattice/scattering.hpp"

using namespace tl;
using namespace std::complex_literals;

TEST_CASE("scattering matrix pattern and eigenvalue closed forms") {
  const cplx r(0.3, 0.1), t(0.05, -0.7), tp(-0.08, -0.06);
  Matrix6c S = build_S(r, t, tp);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      cplx want = (i == j) ? r : ((i + 3) % 6 == j ? t : tp);
      CHECK(std::abs(S(i, j) - want) == 0.0);
    }
  // symmetry classes of the 6-branch star: one isotropic eigenvalue,
  // a double and a triple
  Eigen::ComplexEigenSolver<Matrix6c> es(S);
  std::array<cplx, 3> want = {r + t + 4.0 * tp, r + t - 2.0 * tp, r - t};
  std::array<int, 3> mult = {1, 2, 3};
  std::array<int, 3> found{};
  for (int k = 0; k < 6; ++k) {
    for (int c = 0; c < 3; ++c)
      if (std::abs(es.eigenvalues()[k] - want[c]) < 1e-12) {
        ++found[c];
        break;
      }
  }
  for (int c = 0; c < 3; ++c) CHECK(found[c] == mult[c]);
}

TEST_CASE("Cayley transform: fixed points, involution, random unitary input") {
  // S = -Id is the transparency-free fixed point: M = i(Id+S)^{-1}(Id-S)
  // blows up, flagged as near-resonance; S = Id gives M = 0.
  CayleyResult id = cayley_to_M(Matrix6c::Identity());
  CHECK(id.M.cwiseAbs().maxCoeff() < 1e-14);
  CHECK(id.roundtrip < 1e-12);
  CHECK_FALSE(id.near_resonance);

  CayleyResult rot = cayley_to_M(cplx(0.0, 1.0) * Matrix6c::Identity());
  CHECK((rot.M - Matrix6d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(rot.roundtrip < 1e-12);

  CHECK(cayley_to_M(-Matrix6c::Identity()).near_resonance);

  // random symmetric unitary: M must be real symmetric and round-trip to S
  std::mt19937_64 rng(11);
  std::normal_distribution<double> dist;
  Eigen::MatrixXcd G(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) G(i, j) = cplx(dist(rng), dist(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
  Eigen::MatrixXcd Q = qr.householderQ();
  Matrix6c S = Q * Q.transpose();  // symmetric unitary
  CayleyResult res = cayley_to_M(S);
  CHECK(res.max_imag < 1e-12);
  CHECK((res.M - res.M.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(res.roundtrip < 1e-10);
}

TEST_CASE("reduce_M averages the symmetry pattern and reports the defect") {
  Matrix6d M;
  const double rm = 0.21, tm = -0.4, tpm = -0.07;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      M(i, j) = (i == j) ? rm : ((i + 3) % 6 == j ? tm : tpm);
  ReducedM red = reduce_M(M);
  CHECK(red.r_m == doctest::Approx(rm).epsilon(1e-14));
  CHECK(red.t_m == doctest::Approx(tm).epsilon(1e-14));
  CHECK(red.t_perp_m == doctest::Approx(tpm).epsilon(1e-14));
  CHECK(red.pattern_defect < 1e-14);
  M(0, 0) += 0.05;  // break the pattern
  CHECK(reduce_M(M).pattern_defect >= 0.04);
}

TEST_CASE("coefficient extraction on a manufactured incoming/outgoing trace") {
  // fill every cut face with c_j times the incoming-wave trace; the overlap
  // integrals then have closed values: r = q (c_0 - 1), t = q c_3,
  // t_perp = q c_1 with q = (R+i)^2 / (R^2+1).
  const double R = 2.0, h = 0.125;
  ScatteredField f;
  f.grid = build_junction_grid(R, h);
  f.dofs = build_mixed_dofs(f.grid);
  f.values = Eigen::VectorXcd::Zero(static_cast<int>(f.dofs.nodes.size()));
  const cplx w = cplx(R, 1.0) / std::sqrt(2.0);
  const std::array<cplx, 6> c = {cplx(0.4, 0.2), cplx(-0.3, 0.1), 1.0 + 0.0i,
                                 cplx(0.0, -0.8), 0.25 + 0.0i,    cplx(0.6, 0.6)};
  for (int j = 0; j < 6; ++j)
    for (const auto& n : f.grid.faces[j])
      f.values[f.dofs.lookup(n)] = c[j] * w * cross_mode(f.grid, n, j);
  auto [r, t, tp] = extract_coefficients(f);
  const cplx q = cplx(R, 1.0) * cplx(R, 1.0) / (R * R + 1.0);
  CHECK(std::abs(r - q * (c[0] - 1.0)) < 1e-12);
  CHECK(std::abs(t - q * c[3]) < 1e-12);
  CHECK(std::abs(tp - q * c[1]) < 1e-12);
}

TEST_CASE("threshold scattering solve: unitary, symmetric, energy-conserving") {
  ScatteringData sd = compute_scattering(2.5, 0.1);
  CHECK(sd.unitarity_defect < 1e-8);
  CHECK(sd.symmetry_defect < 1e-12);
  // energy balance of the first column
  double flux = std::norm(sd.r) + std::norm(sd.t) + 4.0 * std::norm(sd.t_perp);
  CHECK(flux == doctest::Approx(1.0).epsilon(1e-8));
  // S eigenvalues sit on the unit circle in the three symmetry classes
  std::array<cplx, 3> classes = {sd.r + sd.t + 4.0 * sd.t_perp,
                                 sd.r + sd.t - 2.0 * sd.t_perp, sd.r - sd.t};
  for (cplx ev : sd.S_eigenvalues) {
    CHECK(std::abs(std::abs(ev) - 1.0) < 1e-8);
    double best = 1e9;
    for (cplx c : classes) best = std::min(best, std::abs(ev - c));
    CHECK(best < 1e-10);
  }
  // polarization matrix is real, symmetric, with the branch pattern
  CHECK(sd.max_imag_M < 1e-8);
  CHECK(sd.pattern_defect < 1e-8);
  CHECK(sd.cayley_roundtrip < 1e-10);
  ReducedM red = reduce_M(sd.M);
  CHECK(sd.r_m == doctest::Approx(red.r_m).epsilon(1e-14));
  CHECK(sd.t_m == doctest::Approx(red.t_m).epsilon(1e-14));
  CHECK(sd.t_perp_m == doctest::Approx(red.t_perp_m).epsilon(1e-14));
}

TEST_CASE("solved coefficients are stable under grid refinement") {
  ScatteringData a = compute_scattering(2.5, 1.0 / 8.0);
  ScatteringData b = compute_scattering(2.5, 1.0 / 12.0);
  // first-order convergence: consecutive values differ by O(h)
  CHECK(std::abs(a.r - b.r) < 0.12);
  CHECK(std::abs(a.t - b.t) < 0.12);
  CHECK(std::abs(a.t_perp - b.t_perp) < 0.12);
}
