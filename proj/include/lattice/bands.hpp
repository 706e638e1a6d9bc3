#ifndef LATTICE_BANDS_HPP
#define LATTICE_BANDS_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "lattice/scattering.hpp"

namespace tl {

using Matrix3c = Eigen::Matrix<cplx, 3, 3>;

// 3x3 Hermitian matrix A(eta) = Theta(eta) M Theta*(eta) of the 1D limit
// model, with Theta = [Id | diag(e^{-i eta_j})].
Matrix3c assemble_A(const std::array<double, 3>& eta, const Matrix6d& M);

// Ascending eigenvalues of A(eta). The model's nu~ values are the negatives
// of these; both conventions are carried in the sweep report.
std::array<double, 3> model_eigenvalues(const std::array<double, 3>& eta, const Matrix6d& M);

struct AlephSweep {
  double min = 0.0, max = 0.0;          // endpoints of the A-eigenvalue sweep
  double min_neg = 0.0, max_neg = 0.0;  // same for the -A (nu~) convention
  double max_gap = 0.0;                 // largest hole in the sampled value set
  bool connected = false;               // no hole wider than the sampling scale
  std::vector<std::array<double, 4>> path_records;  // (path parameter, e1, e2, e3)
};

// Sweep of A(eta) over an n^3 grid on [0, 2pi)^3; also tabulates the
// standard path (0,0,0)->(pi,0,0)->(pi,pi,0)->(pi,pi,pi)->(0,0,0).
AlephSweep sweep_aleph(const Matrix6d& M, int n_per_axis);

// First-band asymptotic model: Lambda_1 ~ eps^-2 mu1 + eps^-2 e^{-beta1/eps} M(eta)
// with M(eta) = -4 beta1 K^2 sum_j cos(eta_j). Half-width bound c1 = 12 beta1 K^2.
struct FirstBandModel {
  double lambda1 = 0.0;
  double m_eta = 0.0;
  double c1 = 0.0;
  double half_width = 0.0;  // eps^-2 e^{-beta1/eps} c1
};
FirstBandModel first_band_model(double eps, const std::array<double, 3>& eta, double K,
                                double beta1, double mu1);

// Predicted second-cluster segments: center eps^-2 2pi^2 + p^2 pi^2,
// half-width eps * c_p with c_p = 1.05 max|aleph|.
struct UpsilonSegment {
  int p = 0;
  double center = 0.0;
  double half_width = 0.0;
  double gap_to_next = 0.0;  // between consecutive centers
};
std::vector<UpsilonSegment> upsilon_segments(double eps, int p_max, double aleph_min,
                                             double aleph_max, bool* overlapping = nullptr);

// 1D limit eigenfunctions gamma_j^+/- at longitudinal index p.
std::pair<cplx, cplx> gamma_profiles(int p, double eta_j, double s);

}  // namespace tl

#endif
