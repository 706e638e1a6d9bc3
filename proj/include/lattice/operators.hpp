#ifndef LATTICE_OPERATORS_HPP
#define LATTICE_OPERATORS_HPP

#include <Eigen/Sparse>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "lattice/geometry.hpp"

namespace tl {

using cplx = std::complex<double>;

// Threshold of the continuous spectrum: first Dirichlet eigenvalue of the
// unit-square cross section, Lambda+ = 2 pi^2.
inline constexpr double threshold_lambda() {
  return 2.0 * std::numbers::pi * std::numbers::pi;
}

// Its discrete counterpart on a lattice of spacing h: twice the first
// eigenvalue of the 1D second-difference Dirichlet operator on (-1/2, 1/2).
// At this energy the profile U+(y) (a z + b) solves the lattice equation
// exactly, so the radiation machinery carries over verbatim.
inline double threshold_lambda_discrete(double h) {
  return 2.0 * (2.0 / (h * h)) * (1.0 - std::cos(std::numbers::pi * h));
}

// Assembled sparse operator. Exactly one of the entry vectors is populated,
// according to `kind`. `mass` holds the diagonal L2 weight per dof (h^3 for
// interior dofs, h^3/2 on Neumann/Robin cut faces); eigenvectors are
// normalized against it.
struct SparseOperator {
  enum class Kind { Real, Complex };

  int dim = 0;
  Kind kind = Kind::Real;
  double h = 0.0;
  std::vector<Eigen::Triplet<double>> real_entries;
  std::vector<Eigen::Triplet<cplx>> cplx_entries;
  Eigen::VectorXd mass;  // size dim

  Eigen::SparseMatrix<double> real_matrix() const;
  Eigen::SparseMatrix<cplx> cplx_matrix() const;

  double symmetry_defect() const;   // max |A - A^T|
  double hermitian_defect() const;  // max |A - A^*|
};

// Dirichlet Laplacian on Omega^R, cut faces included in the Dirichlet
// boundary. Dofs = grid.interior. 7-point stencil, diag 6/h^2.
SparseOperator assemble_dirichlet(const JunctionGrid& grid);

// Dof map used by the mixed and Robin assemblies: interior nodes first (same
// order as grid.interior) then the six cut faces in branch order.
struct MixedDofMap {
  std::vector<Node> nodes;
  std::unordered_map<std::int64_t, int> index;
  int n_interior = 0;
  std::array<int, 6> face_offset{};  // first dof of each face block
  int lookup(const Node& n) const;
};
MixedDofMap build_mixed_dofs(const JunctionGrid& grid);

// Laplacian with Neumann conditions on the six cut faces, symmetrized with
// the diagonal mass so the assembled matrix is exactly symmetric. Returned
// eigenvectors of this operator live in the mass-weighted variables; divide
// by sqrt(mass/h^3) to recover nodal values.
SparseOperator assemble_mixed(const JunctionGrid& grid);

// Complex-symmetric operator and right-hand side of the threshold scattering
// problem with approximate Robin radiation conditions on the cut faces:
//   K - 2 pi^2 M - (R - i)^{-1} F_Gamma,   b = -2i/(R^2+1) * (w_1^- , .)_Gamma1.
struct RobinSystem {
  SparseOperator op;
  Eigen::VectorXcd rhs;
  MixedDofMap dofs;
};
RobinSystem assemble_robin_scattering(const JunctionGrid& grid, double R);

// Quasi-periodic (Floquet) Laplacian on the periodicity cell at parameter
// eta in [0,2pi)^3. Hermitian; real symmetric at eta = 0.
SparseOperator assemble_floquet(const CellGrid& grid, const std::array<double, 3>& eta);

// Matrix Market coordinate export (real or complex by kind), 17 significant
// digits.
std::string to_matrix_market(const SparseOperator& op);

}  // namespace tl

#endif
