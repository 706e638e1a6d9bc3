#include "lattice/operators.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace tl {

namespace {
constexpr double pi = std::numbers::pi;

const std::array<Node, 6> kSteps = {Node{1, 0, 0},  Node{0, 1, 0},  Node{0, 0, 1},
                                    Node{-1, 0, 0}, Node{0, -1, 0}, Node{0, 0, -1}};

Node step(const Node& n, const Node& d) { return {n.x + d.x, n.y + d.y, n.z + d.z}; }

// Which cut face (0..5) a mixed dof lies on, or -1 for interior nodes.
int face_of(const JunctionGrid& g, const Node& n) {
  const int c[3] = {n.x, n.y, n.z};
  for (int a = 0; a < 3; ++a) {
    if (c[a] == g.Rn) return a;
    if (c[a] == -g.Rn) return a + 3;
  }
  return -1;
}

}  // namespace

Eigen::SparseMatrix<double> SparseOperator::real_matrix() const {
  if (kind != Kind::Real) throw std::logic_error("real_matrix on complex operator");
  Eigen::SparseMatrix<double> A(dim, dim);
  A.setFromTriplets(real_entries.begin(), real_entries.end());
  return A;
}

Eigen::SparseMatrix<cplx> SparseOperator::cplx_matrix() const {
  Eigen::SparseMatrix<cplx> A(dim, dim);
  if (kind == Kind::Complex) {
    A.setFromTriplets(cplx_entries.begin(), cplx_entries.end());
  } else {
    std::vector<Eigen::Triplet<cplx>> t;
    t.reserve(real_entries.size());
    for (const auto& e : real_entries) t.emplace_back(e.row(), e.col(), cplx(e.value(), 0.0));
    A.setFromTriplets(t.begin(), t.end());
  }
  return A;
}

double SparseOperator::symmetry_defect() const {
  Eigen::SparseMatrix<cplx> A = cplx_matrix();
  Eigen::SparseMatrix<cplx> D = A - Eigen::SparseMatrix<cplx>(A.transpose());
  double m = 0.0;
  for (int k = 0; k < D.outerSize(); ++k)
    for (Eigen::SparseMatrix<cplx>::InnerIterator it(D, k); it; ++it)
      m = std::max(m, std::abs(it.value()));
  return m;
}

double SparseOperator::hermitian_defect() const {
  Eigen::SparseMatrix<cplx> A = cplx_matrix();
  Eigen::SparseMatrix<cplx> D = A - Eigen::SparseMatrix<cplx>(A.adjoint());
  double m = 0.0;
  for (int k = 0; k < D.outerSize(); ++k)
    for (Eigen::SparseMatrix<cplx>::InnerIterator it(D, k); it; ++it)
      m = std::max(m, std::abs(it.value()));
  return m;
}

SparseOperator assemble_dirichlet(const JunctionGrid& grid) {
  SparseOperator op;
  op.dim = static_cast<int>(grid.interior.size());
  op.kind = SparseOperator::Kind::Real;
  op.h = grid.h;
  const double ih2 = 1.0 / (grid.h * grid.h);
  op.mass = Eigen::VectorXd::Constant(op.dim, grid.h * grid.h * grid.h);
  op.real_entries.reserve(static_cast<std::size_t>(op.dim) * 7);
  for (int i = 0; i < op.dim; ++i) {
    op.real_entries.emplace_back(i, i, 6.0 * ih2);
    for (const auto& d : kSteps) {
      int j = grid.interior_index(step(grid.interior[i], d));
      if (j >= 0) op.real_entries.emplace_back(i, j, -ih2);
    }
  }
  return op;
}

int MixedDofMap::lookup(const Node& n) const {
  auto it = index.find(node_key(n));
  return it == index.end() ? -1 : it->second;
}

MixedDofMap build_mixed_dofs(const JunctionGrid& grid) {
  MixedDofMap m;
  m.nodes = grid.interior;
  m.n_interior = static_cast<int>(grid.interior.size());
  m.index = grid.index;
  for (int f = 0; f < 6; ++f) {
    m.face_offset[f] = static_cast<int>(m.nodes.size());
    for (const auto& n : grid.faces[f]) {
      m.index.emplace(node_key(n), static_cast<int>(m.nodes.size()));
      m.nodes.push_back(n);
    }
  }
  return m;
}

namespace {

// Trapezoid-consistent weights on the mixed dof set: node volume weight
// (1/2 on a cut face) and edge weight (1/2 for edges lying inside a face).
double node_weight(const JunctionGrid& g, const Node& n) { return face_of(g, n) >= 0 ? 0.5 : 1.0; }

double edge_weight(const JunctionGrid& g, const Node& a, const Node& b) {
  int fa = face_of(g, a), fb = face_of(g, b);
  return (fa >= 0 && fa == fb) ? 0.5 : 1.0;
}

// Neighbour lies past a cut plane x_j = +-R (no edge there; the cut carries
// the natural boundary condition). Any other missing neighbour is a node of
// the Dirichlet wall and its edge still loads the diagonal.
bool beyond_cut(const JunctionGrid& g, const Node& n) {
  return std::abs(n.x) > g.Rn || std::abs(n.y) > g.Rn || std::abs(n.z) > g.Rn;
}

}  // namespace

SparseOperator assemble_mixed(const JunctionGrid& grid) {
  MixedDofMap dofs = build_mixed_dofs(grid);
  SparseOperator op;
  op.dim = static_cast<int>(dofs.nodes.size());
  op.kind = SparseOperator::Kind::Real;
  op.h = grid.h;
  const double h = grid.h;
  const double ih2 = 1.0 / (h * h);
  op.mass.resize(op.dim);
  op.real_entries.reserve(static_cast<std::size_t>(op.dim) * 7);
  for (int i = 0; i < op.dim; ++i) {
    const Node& n = dofs.nodes[i];
    const double wi = node_weight(grid, n);
    op.mass[i] = wi * h * h * h;
    double diag = 0.0;
    for (const auto& d : kSteps) {
      Node nb = step(n, d);
      int j = dofs.lookup(nb);
      if (j < 0) {
        if (!beyond_cut(grid, nb)) diag += edge_weight(grid, n, nb) / wi;  // wall edge
        continue;
      }
      double we = edge_weight(grid, n, nb);
      diag += we / wi;
      double wj = node_weight(grid, nb);
      op.real_entries.emplace_back(i, j, -we * ih2 / std::sqrt(wi * wj));
    }
    op.real_entries.emplace_back(i, i, diag * ih2);
  }
  return op;
}

RobinSystem assemble_robin_scattering(const JunctionGrid& grid, double R) {
  if (std::abs(R - grid.R) > 1e-12) {
    throw std::invalid_argument("assemble_robin_scattering: R does not match the grid");
  }
  RobinSystem sys;
  sys.dofs = build_mixed_dofs(grid);
  const auto& dofs = sys.dofs;
  SparseOperator& op = sys.op;
  op.dim = static_cast<int>(dofs.nodes.size());
  op.kind = SparseOperator::Kind::Complex;
  op.h = grid.h;
  const double h = grid.h;
  const cplx robin = 1.0 / cplx(R, -1.0);  // 1/(R - i)
  op.mass.resize(op.dim);
  op.cplx_entries.reserve(static_cast<std::size_t>(op.dim) * 7);
  sys.rhs = Eigen::VectorXcd::Zero(op.dim);

  for (int i = 0; i < op.dim; ++i) {
    const Node& n = dofs.nodes[i];
    const double wi = node_weight(grid, n);
    op.mass[i] = wi * h * h * h;
    // Stiffness row: sum over edges of w_e * h * (u_i - u_j).
    cplx diag = 0.0;
    for (const auto& d : kSteps) {
      Node nb = step(n, d);
      int j = dofs.lookup(nb);
      double we = edge_weight(grid, n, nb) * h;
      if (j < 0) {
        if (!beyond_cut(grid, nb)) diag += we;  // wall edge
        continue;
      }
      diag += we;
      op.cplx_entries.emplace_back(i, j, cplx(-we, 0.0));
    }
    // Threshold volume term (discrete value, see threshold_lambda_discrete)
    // and Robin face term -(R-i)^{-1} h^2.
    diag -= threshold_lambda_discrete(h) * op.mass[i];
    if (face_of(grid, n) >= 0) diag -= robin * h * h;
    op.cplx_entries.emplace_back(i, i, diag);
  }

  // Incident-wave data on Gamma_1: w_1^- = (z_1 + i)/sqrt(2) U+(y_1), so the
  // trace on z_1 = R is (R + i)/sqrt(2) U+.
  const cplx w_face = cplx(R, 1.0) / std::sqrt(2.0);
  const cplx coef = cplx(0.0, -2.0) / (R * R + 1.0);
  for (const auto& node : grid.faces[0]) {
    int i = dofs.lookup(node);
    sys.rhs[i] = coef * w_face * cross_mode(grid, node, 0) * h * h;
  }
  return sys;
}

SparseOperator assemble_floquet(const CellGrid& grid, const std::array<double, 3>& eta) {
  SparseOperator op;
  op.dim = static_cast<int>(grid.dofs.size());
  op.kind = SparseOperator::Kind::Complex;
  op.h = grid.h;
  const double ih2 = 1.0 / (grid.h * grid.h);
  op.mass = Eigen::VectorXd::Constant(op.dim, grid.h * grid.h * grid.h);
  op.cplx_entries.reserve(static_cast<std::size_t>(op.dim) * 7);

  for (int i = 0; i < op.dim; ++i) {
    const Node& n = grid.dofs[i];
    op.cplx_entries.emplace_back(i, i, cplx(6.0 * ih2, 0.0));
    for (const auto& d : kSteps) {
      Node nb = step(n, d);
      cplx phase = 1.0;
      // Wrap across the periodic seams: U(x + e_a) = e^{-i eta_a} U(x).
      for (int a = 0; a < 3; ++a) {
        int v = node_coord(nb, a);
        if (v == grid.half + 1) {
          nb = node_with_coord(nb, a, -grid.half + 1);
          phase *= std::polar(1.0, -eta[a]);
        } else if (v == -grid.half) {
          nb = node_with_coord(nb, a, grid.half);
          phase *= std::polar(1.0, +eta[a]);
        }
      }
      int j = grid.dof_index(nb);
      if (j >= 0) op.cplx_entries.emplace_back(i, j, -ih2 * phase);
    }
  }
  return op;
}

std::string to_matrix_market(const SparseOperator& op) {
  // Collapse duplicate triplets first.
  std::string out;
  char buf[128];
  if (op.kind == SparseOperator::Kind::Real) {
    Eigen::SparseMatrix<double> A = op.real_matrix();
    out += "%%MatrixMarket matrix coordinate real general\n";
    out += std::to_string(A.rows()) + " " + std::to_string(A.cols()) + " " +
           std::to_string(A.nonZeros()) + "\n";
    for (int k = 0; k < A.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it) {
        std::snprintf(buf, sizeof buf, "%d %d %.17g\n", static_cast<int>(it.row()) + 1,
                      static_cast<int>(it.col()) + 1, it.value());
        out += buf;
      }
  } else {
    Eigen::SparseMatrix<cplx> A = op.cplx_matrix();
    out += "%%MatrixMarket matrix coordinate complex general\n";
    out += std::to_string(A.rows()) + " " + std::to_string(A.cols()) + " " +
           std::to_string(A.nonZeros()) + "\n";
    for (int k = 0; k < A.outerSize(); ++k)
      for (Eigen::SparseMatrix<cplx>::InnerIterator it(A, k); it; ++it) {
        std::snprintf(buf, sizeof buf, "%d %d %.17g %.17g\n", static_cast<int>(it.row()) + 1,
                      static_cast<int>(it.col()) + 1, it.value().real(), it.value().imag());
        out += buf;
      }
  }
  return out;
}

}  // namespace tl
