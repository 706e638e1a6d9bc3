#ifndef LATTICE_SOLVERS_HPP
#define LATTICE_SOLVERS_HPP

#include <Eigen/Dense>

#include "lattice/operators.hpp"

namespace tl {

// Eigenpairs of a symmetric/Hermitian SparseOperator. Values ascending,
// vectors normalized to 1 in the discrete L2 inner product (weights
// op.mass), residuals in the plain 2-norm sense ||Av - lambda v|| / ||v||.
struct EigResult {
  std::vector<double> values;
  Eigen::MatrixXcd vectors;  // column per pair (real operators give real columns)
  std::vector<double> residuals;
  int iterations = 0;
};

struct EigOptions {
  double shift = 0.0;      // must not be an eigenvalue; default below the spectrum
  double tol = 1e-8;       // residual bound
  int max_subspace = 400;  // Lanczos budget
  std::uint64_t seed = 0x5eedULL;
};

// k smallest eigenvalues above the shift by shift-invert Lanczos with full
// reorthogonalization. Deterministic for a fixed seed; the sign gauge makes
// the first significant vector component positive real.
EigResult smallest_eigenpairs(const SparseOperator& op, int k, const EigOptions& opts = {});

// Sparse direct solve of a complex system; throws on factorization failure
// or when the relative residual exceeds tol.
Eigen::VectorXcd solve_linear_complex(const SparseOperator& op, const Eigen::VectorXcd& rhs,
                                      double tol = 1e-8);

}  // namespace tl

#endif
