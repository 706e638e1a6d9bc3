#ifndef LATTICE_NEARFIELD_HPP
#define LATTICE_NEARFIELD_HPP

#include <array>

#include "lattice/solvers.hpp"

namespace tl {

// Trapped mode of the Dirichlet Laplacian on the truncated junction.
struct TrappedMode {
  double R = 0.0;
  std::vector<double> spacings;
  std::vector<double> mu1_per_h;   // matching spacings
  double mu1 = 0.0;                // finest-grid value
  double extrapolated_mu1 = 0.0;   // O(h^2) Richardson fit
  double beta1 = 0.0;              // sqrt(2 pi^2 - extrapolated_mu1)
  double beta2 = 0.0;              // sqrt(5 pi^2 - extrapolated_mu1)
  double second_eigenvalue = 0.0;  // finest grid, must sit at/above the threshold
  JunctionGrid grid;               // finest grid
  Eigen::VectorXd eigenvector;     // trapped mode on the finest grid, L2-normalized
  double K = 0.0;                  // branch decay amplitude (set by extract_decay_amplitude)
  double beta_fit = 0.0;
};

// Computes mu1 on every spacing, checks that exactly one eigenvalue sits
// below the threshold on the finest grid, and Richardson-extrapolates.
TrappedMode compute_mu1(double R, const std::vector<double>& spacings, double tol = 1e-10,
                        std::uint64_t seed = 0x5eedULL);

// Relative defect ||v - v o reflect|| / ||v|| per symmetry plane.
std::array<double, 3> check_symmetry(const JunctionGrid& grid, const Eigen::VectorXd& v);

struct DecayFit {
  double K = 0.0;         // geometric mean over the six branches
  double beta_fit = 0.0;  // mean fitted decay rate
  std::array<double, 6> K_branch{};
  double spread = 0.0;  // (max-min)/mean of the branch amplitudes
};

// Projects the mode onto the cross-section profile U+ along each branch and
// fits log|projection| linearly over z in [window_lo, window_hi].
DecayFit extract_decay_amplitude(const JunctionGrid& grid, const Eigen::VectorXd& v,
                                 double window_lo, double window_hi);

// Smallest k eigenvalues of the mixed (Neumann cut) problem on Omega^R.
EigResult compute_mixed_spectrum(double R, double h, int k, double tol = 1e-9,
                                 std::uint64_t seed = 0x5eedULL);

}  // namespace tl

#endif
