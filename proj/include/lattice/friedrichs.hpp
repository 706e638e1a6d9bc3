#ifndef LATTICE_FRIEDRICHS_HPP
#define LATTICE_FRIEDRICHS_HPP

#include <cstdint>
#include <optional>

namespace tl {

// Sharp constant of the weighted 1D Friedrichs inequality: smallest positive
// root of sqrt(k) tan(sqrt(k)/2) = a (half-line) or = a tanh(a(R - 1/2))
// (interval of length R).
struct FriedrichsConstant {
  double a = 0.0;
  std::optional<double> R;  // empty for the half-line case
  double kappa = 0.0;
  double residual = 0.0;  // |sqrt(k) tan(sqrt(k)/2) - target|
};

FriedrichsConstant kappa_infinite(double a);
FriedrichsConstant kappa_truncated(double a, double R);

// Discrete Rayleigh-quotient check of the inequality on (0, L):
//   [ int phi'^2 + a^2 int_{1/2}^L phi^2 ] / int_0^{1/2} phi^2  >=  kappa.
// Returns the worst sampled ratio and the discrete minimizer eigenvalue.
struct InequalityCheck {
  double worst_ratio = 0.0;
  double discrete_min = 0.0;  // smallest generalized eigenvalue of the grid problem
  double kappa = 0.0;         // transcendental root for comparison
};

InequalityCheck verify_inequality_1d(double a, std::optional<double> R, int n_samples,
                                     double h = 1e-3, double L_infinite = 6.0,
                                     std::uint64_t seed = 0x5eedULL);

}  // namespace tl

#endif
