#include "lattice/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace tl {

namespace {

// h must divide `len` exactly (len/h integer within rounding slack).
int exact_divide(double len, double h, const char* what) {
  double q = len / h;
  int n = static_cast<int>(std::lround(q));
  if (n <= 0 || std::abs(q - n) > 1e-9 * std::max(1.0, q)) {
    throw std::invalid_argument(std::string(what) + ": spacing h=" + std::to_string(h) +
                                " does not divide " + std::to_string(len) + " exactly");
  }
  return n;
}

}  // namespace

bool JunctionGrid::is_interior(const Node& n) const {
  const int c[3] = {n.x, n.y, n.z};
  for (int j = 0; j < 3; ++j) {
    bool in = std::abs(c[j]) <= Rn - 1;
    for (int k = 0; k < 3 && in; ++k) {
      if (k != j) in = std::abs(c[k]) <= half - 1;
    }
    if (in) return true;
  }
  return false;
}

int JunctionGrid::interior_index(const Node& n) const {
  auto it = index.find(node_key(n));
  return it == index.end() ? -1 : it->second;
}

JunctionGrid build_junction_grid(double R, double h) {
  if (R < 0.5) throw std::invalid_argument("build_junction_grid: requires R >= 1/2");
  if (h > 0.5) throw std::invalid_argument("build_junction_grid: requires h <= 1/2");
  JunctionGrid g;
  g.R = R;
  g.h = h;
  g.half = exact_divide(0.5, h, "build_junction_grid (1/(2h))");
  g.Rn = exact_divide(R, h, "build_junction_grid (R/h)");

  // Bar j sweep; the central cube is visited once thanks to the index map.
  for (int j = 0; j < 3; ++j) {
    for (int a = -g.Rn + 1; a <= g.Rn - 1; ++a) {
      for (int b = -g.half + 1; b <= g.half - 1; ++b) {
        for (int c = -g.half + 1; c <= g.half - 1; ++c) {
          Node n{};
          if (j == 0) n = {a, b, c};
          if (j == 1) n = {b, a, c};
          if (j == 2) n = {b, c, a};
          if (g.index.contains(node_key(n))) continue;
          g.index.emplace(node_key(n), static_cast<int>(g.interior.size()));
          g.interior.push_back(n);
        }
      }
    }
  }

  for (int f = 0; f < 6; ++f) {
    int axis = branch_axis(f);
    int v = branch_sign(f) * g.Rn;
    for (int b = -g.half + 1; b <= g.half - 1; ++b) {
      for (int c = -g.half + 1; c <= g.half - 1; ++c) {
        Node n{};
        if (axis == 0) n = {v, b, c};
        if (axis == 1) n = {b, v, c};
        if (axis == 2) n = {b, c, v};
        g.faces[f].push_back(n);
      }
    }
  }
  return g;
}

int reflect_node(const JunctionGrid& grid, int node, int axis) {
  Node n = grid.interior.at(static_cast<std::size_t>(node));
  Node m = node_with_coord(n, axis, -node_coord(n, axis));
  int idx = grid.interior_index(m);
  if (idx < 0) throw std::logic_error("reflect_node: mirror image is not interior");
  return idx;
}

double cross_mode(const JunctionGrid& grid, const Node& n, int branch) {
  const int axis = branch_axis(branch);
  const int c[3] = {n.x, n.y, n.z};
  double s1 = c[(axis + 1) % 3] * grid.h;
  double s2 = c[(axis + 2) % 3] * grid.h;
  constexpr double pi = std::numbers::pi;
  return 2.0 * std::cos(pi * s1) * std::cos(pi * s2);
}

bool CellGrid::is_dof(const Node& n) const {
  const int c[3] = {n.x, n.y, n.z};
  for (int j = 0; j < 3; ++j) {
    bool in = c[j] >= -half + 1 && c[j] <= half;
    for (int k = 0; k < 3 && in; ++k) {
      if (k != j) in = std::abs(c[k]) <= en - 1;
    }
    if (in) return true;
  }
  return false;
}

int CellGrid::dof_index(const Node& n) const {
  auto it = index.find(node_key(n));
  return it == index.end() ? -1 : it->second;
}

CellGrid build_cell_grid(double eps, double h) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("build_cell_grid: requires 0 < eps < 1");
  CellGrid g;
  g.eps = eps;
  g.h = h;
  g.half = exact_divide(0.5, h, "build_cell_grid (1/(2h))");
  g.en = exact_divide(eps / 2.0, h, "build_cell_grid (eps/(2h))");

  for (int j = 0; j < 3; ++j) {
    for (int a = -g.half + 1; a <= g.half; ++a) {
      for (int b = -g.en + 1; b <= g.en - 1; ++b) {
        for (int c = -g.en + 1; c <= g.en - 1; ++c) {
          Node n{};
          if (j == 0) n = {a, b, c};
          if (j == 1) n = {b, a, c};
          if (j == 2) n = {b, c, a};
          if (g.index.contains(node_key(n))) continue;
          g.index.emplace(node_key(n), static_cast<int>(g.dofs.size()));
          g.dofs.push_back(n);
        }
      }
    }
    for (int b = -g.en + 1; b <= g.en - 1; ++b) {
      for (int c = -g.en + 1; c <= g.en - 1; ++c) {
        Node plus{}, minus{};
        if (j == 0) { plus = {g.half, b, c}; minus = {-g.half, b, c}; }
        if (j == 1) { plus = {b, g.half, c}; minus = {b, -g.half, c}; }
        if (j == 2) { plus = {b, c, g.half}; minus = {b, c, -g.half}; }
        g.periodic_pairs[j].emplace_back(minus, plus);
      }
    }
  }
  return g;
}

namespace {
std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace

std::string JunctionGrid::summary_json() const {
  std::string s = "{";
  s += "\"R\":" + fmt_double(R) + ",\"h\":" + fmt_double(h);
  s += ",\"interior_nodes\":" + std::to_string(interior.size());
  s += ",\"face_nodes\":" + std::to_string(faces[0].size());
  s += ",\"bounding_box\":[" + fmt_double(-R) + "," + fmt_double(R) + "]";
  s += "}";
  return s;
}

std::string CellGrid::summary_json() const {
  std::string s = "{";
  s += "\"eps\":" + fmt_double(eps) + ",\"h\":" + fmt_double(h);
  s += ",\"dofs\":" + std::to_string(dofs.size());
  s += ",\"periodic_pairs\":[" + std::to_string(periodic_pairs[0].size()) + "," +
       std::to_string(periodic_pairs[1].size()) + "," + std::to_string(periodic_pairs[2].size()) + "]";
  s += "}";
  return s;
}

}  // namespace tl
