#ifndef LATTICE_SCATTERING_HPP
#define LATTICE_SCATTERING_HPP

#include "lattice/solvers.hpp"

namespace tl {

using Matrix6c = Eigen::Matrix<cplx, 6, 6>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

// Threshold scattering data on the truncated junction: coefficients, 6x6
// scattering matrix S, polarization matrix M = i(Id+S)^{-1}(Id-S) and its
// reduced coefficients.
struct ScatteringData {
  double R = 0.0;
  double h = 0.0;
  cplx r, t, t_perp;
  Matrix6c S;
  Matrix6d M;
  double r_m = 0.0, t_m = 0.0, t_perp_m = 0.0;
  // Diagnostics
  double unitarity_defect = 0.0;  // max |S conj(S)^T - Id|
  double symmetry_defect = 0.0;   // max |S - S^T| (zero by construction)
  double max_imag_M = 0.0;
  double pattern_defect = 0.0;
  double cayley_roundtrip = 0.0;  // max |S' - S| after M -> S'
  double cond_id_plus_S = 0.0;
  std::array<cplx, 6> S_eigenvalues{};
};

// Field of the discrete Robin-approximated scattering problem.
struct ScatteredField {
  JunctionGrid grid;
  MixedDofMap dofs;
  Eigen::VectorXcd values;
};

ScatteredField solve_scattering(double R, double h, double tol = 1e-8);

// (r, t, t_perp) from the trace integrals over Gamma_1, Gamma_4, Gamma_2.
std::array<cplx, 3> extract_coefficients(const ScatteredField& field);

// S with the junction's symmetry pattern: r on the diagonal, t across
// opposite branches, t_perp elsewhere.
Matrix6c build_S(cplx r, cplx t, cplx t_perp);

struct CayleyResult {
  Matrix6d M;
  double max_imag = 0.0;
  double condition = 0.0;
  double roundtrip = 0.0;
  bool near_resonance = false;
};
CayleyResult cayley_to_M(const Matrix6c& S);

struct ReducedM {
  double r_m = 0.0, t_m = 0.0, t_perp_m = 0.0;
  double pattern_defect = 0.0;
};
ReducedM reduce_M(const Matrix6d& M);

// Full pipeline at (R, h).
ScatteringData compute_scattering(double R, double h, double tol = 1e-8);

}  // namespace tl

#endif
