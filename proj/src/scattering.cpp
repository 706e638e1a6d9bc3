#include "lattice/scattering.hpp"

#include <Eigen/Eigenvalues>
#include <limits>
#include <cmath>

namespace tl {

ScatteredField solve_scattering(double R, double h, double tol) {
  ScatteredField field;
  field.grid = build_junction_grid(R, h);
  RobinSystem sys = assemble_robin_scattering(field.grid, R);
  field.values = solve_linear_complex(sys.op, sys.rhs, tol);
  field.dofs = std::move(sys.dofs);
  return field;
}

std::array<cplx, 3> extract_coefficients(const ScatteredField& field) {
  const JunctionGrid& g = field.grid;
  const double h = g.h;
  const double R = g.R;
  const cplx w_face = cplx(R, 1.0) / std::sqrt(2.0);  // w_j^- = (z+i)/sqrt(2) U+ on z_j = R
  const double scale = 2.0 / (R * R + 1.0);

  auto face_integral = [&](int face, bool subtract_w) {
    cplx acc = 0.0;
    for (const auto& n : g.faces[face]) {
      cplx v = field.values[field.dofs.lookup(n)];
      cplx w = w_face * cross_mode(g, n, face);
      if (subtract_w) v -= w;
      acc += v * w * h * h;
    }
    return scale * acc;
  };

  cplx r = face_integral(0, true);   // Gamma_1, incident branch
  cplx t = face_integral(3, false);  // Gamma_4, opposite branch
  cplx tp = face_integral(1, false); // Gamma_2, perpendicular branch
  return {r, t, tp};
}

Matrix6c build_S(cplx r, cplx t, cplx t_perp) {
  Matrix6c S;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i == j) {
        S(i, j) = r;
      } else if ((i + 3) % 6 == j) {
        S(i, j) = t;
      } else {
        S(i, j) = t_perp;
      }
    }
  }
  return S;
}

CayleyResult cayley_to_M(const Matrix6c& S) {
  CayleyResult out;
  Matrix6c Id = Matrix6c::Identity();
  Matrix6c A = Id + S;
  Eigen::JacobiSVD<Matrix6c> svd(A);
  double smin = svd.singularValues()(5);
  out.condition = smin > 0.0 ? svd.singularValues()(0) / smin
                             : std::numeric_limits<double>::infinity();
  out.near_resonance = !(out.condition < 1e3);
  Matrix6c Mc = cplx(0.0, 1.0) * A.inverse() * (Id - S);
  out.max_imag = Mc.imag().cwiseAbs().maxCoeff();
  out.M = Mc.real();
  // Round trip through the inverse Cayley transform S' = (M + i Id)^{-1}(i Id - M).
  Matrix6c Sp = (Mc + cplx(0.0, 1.0) * Id).inverse() * (cplx(0.0, 1.0) * Id - Mc);
  out.roundtrip = (Sp - S).cwiseAbs().maxCoeff();
  return out;
}

ReducedM reduce_M(const Matrix6d& M) {
  ReducedM out;
  double sr = 0.0, st = 0.0, sp = 0.0;
  int nr = 0, nt = 0, np = 0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i == j) {
        sr += M(i, j);
        ++nr;
      } else if ((i + 3) % 6 == j) {
        st += M(i, j);
        ++nt;
      } else {
        sp += M(i, j);
        ++np;
      }
    }
  }
  out.r_m = sr / nr;
  out.t_m = st / nt;
  out.t_perp_m = sp / np;
  double defect = 0.0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      double cls = i == j ? out.r_m : ((i + 3) % 6 == j ? out.t_m : out.t_perp_m);
      defect = std::max(defect, std::abs(M(i, j) - cls));
    }
  }
  out.pattern_defect = defect;
  return out;
}

ScatteringData compute_scattering(double R, double h, double tol) {
  ScatteringData data;
  data.R = R;
  data.h = h;
  ScatteredField field = solve_scattering(R, h, tol);
  auto [r, t, tp] = extract_coefficients(field);
  data.r = r;
  data.t = t;
  data.t_perp = tp;
  data.S = build_S(r, t, tp);
  data.symmetry_defect = (data.S - Matrix6c(data.S.transpose())).cwiseAbs().maxCoeff();
  data.unitarity_defect =
      (data.S * data.S.conjugate().transpose() - Matrix6c::Identity()).cwiseAbs().maxCoeff();
  Eigen::ComplexEigenSolver<Matrix6c> es(data.S);
  for (int i = 0; i < 6; ++i) data.S_eigenvalues[i] = es.eigenvalues()(i);

  CayleyResult cay = cayley_to_M(data.S);
  data.M = cay.M;
  data.max_imag_M = cay.max_imag;
  data.cond_id_plus_S = cay.condition;
  data.cayley_roundtrip = cay.roundtrip;
  ReducedM red = reduce_M(data.M);
  data.r_m = red.r_m;
  data.t_m = red.t_m;
  data.t_perp_m = red.t_perp_m;
  data.pattern_defect = red.pattern_defect;
  return data;
}

}  // namespace tl
