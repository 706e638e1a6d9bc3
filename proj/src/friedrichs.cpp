#include "lattice/friedrichs.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace tl {

namespace {
constexpr double pi = std::numbers::pi;

// f(k) = sqrt(k) tan(sqrt(k)/2) is increasing from 0 to +inf on (0, pi^2).
double trans_eqn(double kappa) {
  double s = std::sqrt(kappa);
  return s * std::tan(s / 2.0);
}

FriedrichsConstant solve_root(double a, double target, std::optional<double> R) {
  constexpr double delta = 1e-9;
  double lo = delta, hi = pi * pi - delta;
  if (trans_eqn(hi) < target) throw std::logic_error("friedrichs: bracket failure");
  // Bisection to a tight bracket, then Newton polish.
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    double mid = 0.5 * (lo + hi);
    (trans_eqn(mid) < target ? lo : hi) = mid;
  }
  double k = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    double s = std::sqrt(k);
    double t = std::tan(s / 2.0);
    double f = s * t - target;
    // d/dk [sqrt(k) tan(sqrt(k)/2)] = tan(s/2)/(2s) + (1 + tan^2(s/2))/4
    double df = t / (2.0 * s) + (1.0 + t * t) / 4.0;
    double next = k - f / df;
    if (next > lo && next < hi) k = next;
  }
  FriedrichsConstant out;
  out.a = a;
  out.R = R;
  out.kappa = k;
  out.residual = std::abs(trans_eqn(k) - target);
  return out;
}

}  // namespace

FriedrichsConstant kappa_infinite(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("kappa_infinite: requires a > 0");
  return solve_root(a, a, std::nullopt);
}

FriedrichsConstant kappa_truncated(double a, double R) {
  if (!(a > 0.0)) throw std::invalid_argument("kappa_truncated: requires a > 0");
  if (!(R > 0.5)) throw std::invalid_argument("kappa_truncated: requires R > 1/2");
  return solve_root(a, a * std::tanh(a * (R - 0.5)), R);
}

InequalityCheck verify_inequality_1d(double a, std::optional<double> R, int n_samples, double h,
                                     double L_infinite, std::uint64_t seed) {
  const double L = R.value_or(L_infinite);
  const FriedrichsConstant root = R ? kappa_truncated(a, *R) : kappa_infinite(a);
  const int n = static_cast<int>(std::lround(L / h)) + 1;  // nodes 0..L, Neumann ends
  const int imid = static_cast<int>(std::lround(0.5 / h));

  // Trapezoid mass weights for the indicator windows (0,1/2) and (1/2,L).
  std::vector<double> wb(n, 0.0), wa(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    if (i < imid) {
      wb[i] = w;
    } else if (i == imid) {
      wb[i] = 0.5;
      wa[i] = 0.5;
    } else {
      wa[i] = w;
    }
  }

  auto quotient = [&](const std::vector<double>& phi) {
    double stiff = 0.0, mb = 0.0, ma = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      double d = (phi[i + 1] - phi[i]) / h;
      stiff += d * d * h;
    }
    for (int i = 0; i < n; ++i) {
      mb += wb[i] * phi[i] * phi[i] * h;
      ma += wa[i] * phi[i] * phi[i] * h;
    }
    return (stiff + a * a * ma) / mb;
  };

  // Discrete minimizer by inverse power iteration on A x = lambda B x with
  // A = K + a^2 Ma (tridiagonal, SPD) and B = Mb.
  std::vector<double> diag(n), off(n - 1, -1.0 / h);
  for (int i = 0; i < n; ++i) {
    double k = 0.0;
    if (i > 0) k += 1.0 / h;
    if (i + 1 < n) k += 1.0 / h;
    diag[i] = k + a * a * wa[i] * h;
  }
  auto thomas = [&](std::vector<double> rhs) {
    std::vector<double> c(n - 1), d(n);
    c[0] = off[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for (int i = 1; i < n; ++i) {
      double m = diag[i] - off[i - 1] * (i - 1 < n - 1 ? c[i - 1] : 0.0);
      if (i < n - 1) c[i] = off[i] / m;
      d[i] = (rhs[i] - off[i - 1] * d[i - 1]) / m;
    }
    for (int i = n - 2; i >= 0; --i) d[i] -= c[i] * d[i + 1];
    return d;
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  std::vector<double> x(n);
  for (auto& v : x) v = dist(rng);
  double lam = 0.0;
  for (int it = 0; it < 400; ++it) {
    std::vector<double> bx(n);
    for (int i = 0; i < n; ++i) bx[i] = wb[i] * x[i] * h;
    x = thomas(bx);
    double nrm = 0.0;
    for (double v : x) nrm += v * v;
    nrm = std::sqrt(nrm);
    for (auto& v : x) v /= nrm;
    double prev = lam;
    lam = quotient(x);
    if (it > 10 && std::abs(lam - prev) < 1e-13 * lam) break;
  }

  InequalityCheck out;
  out.discrete_min = lam;
  out.kappa = root.kappa;
  out.worst_ratio = std::numeric_limits<double>::infinity();
  std::vector<double> phi(n);
  for (int s = 0; s < n_samples; ++s) {
    for (auto& v : phi) v = dist(rng);
    out.worst_ratio = std::min(out.worst_ratio, quotient(phi));
  }
  return out;
}

}  // namespace tl
