#include "lattice/solvers.hpp"

#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace tl {

namespace {

template <typename Scalar>
struct LanczosRun {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  const Eigen::SparseMatrix<Scalar>& A;
  const Eigen::SparseLU<Eigen::SparseMatrix<Scalar>>& lu;
  double shift;
  int n;

  Mat V;                              // Lanczos basis, column-major growth
  std::vector<double> alpha, beta;    // tridiagonal coefficients (real for Hermitian)

  LanczosRun(const Eigen::SparseMatrix<Scalar>& A_,
             const Eigen::SparseLU<Eigen::SparseMatrix<Scalar>>& lu_, double shift_,
             std::uint64_t seed)
      : A(A_), lu(lu_), shift(shift_), n(static_cast<int>(A_.rows())) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    Vec v0(n);
    for (int i = 0; i < n; ++i) {
      if constexpr (std::is_same_v<Scalar, double>) {
        v0[i] = dist(rng);
      } else {
        v0[i] = Scalar(dist(rng), dist(rng));
      }
    }
    v0.normalize();
    V.resize(n, 1);
    V.col(0) = v0;
  }

  int steps() const { return static_cast<int>(alpha.size()); }

  // Extend the factorization-driven Lanczos recurrence by `m` steps.
  bool extend(int m) {
    for (int it = 0; it < m; ++it) {
      int j = steps();
      if (j >= n) return false;
      Vec w = lu.solve(V.col(j));
      if (lu.info() != Eigen::Success) throw std::runtime_error("shift-invert solve failed");
      Scalar a = V.col(j).dot(w);
      alpha.push_back(std::real(a));
      w -= V.leftCols(j + 1) * (V.leftCols(j + 1).adjoint() * w);
      w -= V.leftCols(j + 1) * (V.leftCols(j + 1).adjoint() * w);  // second pass
      double b = w.norm();
      beta.push_back(b);
      if (b < 1e-14) return false;  // invariant subspace reached
      V.conservativeResize(Eigen::NoChange, j + 2);
      V.col(j + 1) = w / b;
    }
    return true;
  }

  // Rayleigh-Ritz on the tridiagonal matrix; returns eigenpairs of A nearest
  // the shift, ascending in the original eigenvalue.
  void ritz(int k, std::vector<double>& vals, Mat& vecs, std::vector<double>& resid) const {
    int m = steps();
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      T(i, i) = alpha[i];
      if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    // Largest theta of (A - shift)^{-1}  <->  eigenvalues nearest above shift.
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return es.eigenvalues()[a] > es.eigenvalues()[b]; });
    int kk = std::min(k, m);
    vals.resize(kk);
    resid.resize(kk);
    vecs.resize(n, kk);
    for (int i = 0; i < kk; ++i) {
      double theta = es.eigenvalues()[order[i]];
      vals[i] = shift + 1.0 / theta;
      Vec y = V.leftCols(m) * es.eigenvectors().col(order[i]).template cast<Scalar>();
      y.normalize();
      vecs.col(i) = y;
      resid[i] = (A * y - Scalar(vals[i]) * y).norm();
    }
    // Ascending eigenvalues (theta ordering already gives ascending lambda
    // for shifts below the spectrum; enforce it regardless).
    std::vector<int> ord2(kk);
    for (int i = 0; i < kk; ++i) ord2[i] = i;
    std::sort(ord2.begin(), ord2.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    std::vector<double> v2(kk), r2(kk);
    Mat m2(n, kk);
    for (int i = 0; i < kk; ++i) {
      v2[i] = vals[ord2[i]];
      r2[i] = resid[ord2[i]];
      m2.col(i) = vecs.col(ord2[i]);
    }
    vals = v2;
    resid = r2;
    vecs = m2;
  }
};

template <typename Scalar>
EigResult run_lanczos(const Eigen::SparseMatrix<Scalar>& A, const Eigen::VectorXd& mass, int k,
                      const EigOptions& opts) {
  const int n = static_cast<int>(A.rows());
  if (k < 1 || k > n) throw std::invalid_argument("smallest_eigenpairs: bad k");

  Eigen::SparseMatrix<Scalar> As = A;
  if (opts.shift != 0.0) {
    Eigen::SparseMatrix<Scalar> I(n, n);
    I.setIdentity();
    As = A - Scalar(opts.shift) * I;
  }
  As.makeCompressed();
  Eigen::SparseLU<Eigen::SparseMatrix<Scalar>> lu;
  lu.compute(As);
  if (lu.info() != Eigen::Success) {
    throw std::runtime_error("smallest_eigenpairs: factorization failed at the shift; re-shift");
  }

  LanczosRun<Scalar> run(A, lu, opts.shift, opts.seed);
  int m = std::min(n, std::max(2 * k + 16, 32));
  bool more = run.extend(m);

  std::vector<double> vals, resid;
  typename LanczosRun<Scalar>::Mat vecs;
  while (true) {
    run.ritz(k, vals, vecs, resid);
    bool ok = static_cast<int>(vals.size()) >= std::min(k, n) &&
              *std::max_element(resid.begin(), resid.end()) <= opts.tol;
    if (ok) break;
    if (!more || run.steps() >= std::min(n, opts.max_subspace)) {
      if (!more) break;  // exact invariant subspace: residuals are as good as they get
      throw std::runtime_error("smallest_eigenpairs: no convergence within iteration budget, best residual " +
                               std::to_string(*std::max_element(resid.begin(), resid.end())));
    }
    more = run.extend(std::min(16, std::min(n, opts.max_subspace) - run.steps()));
  }

  EigResult out;
  out.iterations = run.steps();
  out.values = vals;
  out.residuals = resid;
  out.vectors.resize(n, vals.size());
  for (std::size_t c = 0; c < vals.size(); ++c) {
    Eigen::VectorXcd v = vecs.col(c).template cast<cplx>();
    // Discrete L2 normalization with the operator's mass weights.
    double nrm = std::sqrt((mass.array() * v.array().abs2()).sum());
    v /= nrm;
    // Sign gauge: first significant component positive real.
    double mx = v.cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) {
      if (std::abs(v[i]) > 1e-8 * mx) {
        v *= std::conj(v[i]) / std::abs(v[i]);
        break;
      }
    }
    out.vectors.col(c) = v;
  }
  return out;
}

}  // namespace

EigResult smallest_eigenpairs(const SparseOperator& op, int k, const EigOptions& opts) {
  Eigen::VectorXd mass = op.mass.size() == op.dim ? op.mass : Eigen::VectorXd::Ones(op.dim);
  if (op.kind == SparseOperator::Kind::Real) {
    return run_lanczos<double>(op.real_matrix(), mass, k, opts);
  }
  return run_lanczos<cplx>(op.cplx_matrix(), mass, k, opts);
}

Eigen::VectorXcd solve_linear_complex(const SparseOperator& op, const Eigen::VectorXcd& rhs,
                                      double tol) {
  if (rhs.size() != op.dim) throw std::invalid_argument("solve_linear_complex: dimension mismatch");
  if (rhs.norm() == 0.0) return Eigen::VectorXcd::Zero(op.dim);
  Eigen::SparseMatrix<cplx> A = op.cplx_matrix();
  A.makeCompressed();
  Eigen::SparseLU<Eigen::SparseMatrix<cplx>> lu(A);
  if (lu.info() != Eigen::Success) {
    throw std::runtime_error("solve_linear_complex: factorization failed (singular system)");
  }
  Eigen::VectorXcd x = lu.solve(rhs);
  double rel = (A * x - rhs).norm() / rhs.norm();
  if (!(rel <= tol)) {
    throw std::runtime_error("solve_linear_complex: residual " + std::to_string(rel) +
                             " exceeds tolerance");
  }
  return x;
}

}  // namespace tl
