#ifndef LATTICE_GEOMETRY_HPP
#define LATTICE_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace tl {

// Grid node, coordinates in units of the spacing h.
struct Node {
  int x, y, z;
  bool operator==(const Node&) const = default;
};

inline std::int64_t node_key(const Node& n) {
  auto enc = [](int v) -> std::int64_t { return static_cast<std::int64_t>(v) + (1 << 20); };
  return (enc(n.x) << 42) | (enc(n.y) << 21) | enc(n.z);
}

inline int node_coord(const Node& n, int axis) {
  return axis == 0 ? n.x : (axis == 1 ? n.y : n.z);
}

inline Node node_with_coord(Node n, int axis, int v) {
  (axis == 0 ? n.x : axis == 1 ? n.y : n.z) = v;
  return n;
}

// Uniform Cartesian grid over the truncated three-bar junction
//   Omega^R = union of bars { |x_j| < R, |x_k| < 1/2 for k != j }.
// Nodes sit at integer multiples of h. Interior nodes (strictly inside the
// union) are the Dirichlet dofs; the six cut faces at x_j = +-R carry their
// own node lists (transverse-interior only, edges belong to the wall).
struct JunctionGrid {
  double R = 0.0;
  double h = 0.0;
  int Rn = 0;    // R/h
  int half = 0;  // 1/(2h)

  std::vector<Node> interior;                   // dense index -> node
  std::unordered_map<std::int64_t, int> index;  // interior node -> dense index
  std::array<std::vector<Node>, 6> faces;       // Gamma_1..Gamma_6 (branch order)

  bool is_interior(const Node& n) const;
  int interior_index(const Node& n) const;  // -1 if not interior

  std::string summary_json() const;
};

// Face numbering: Gamma_1,2,3 at x_1,x_2,x_3 = +R and
// Gamma_4,5,6 at x_1,x_2,x_3 = -R.
JunctionGrid build_junction_grid(double R, double h);

// Mirror an interior node across the coordinate plane orthogonal to `axis`
// (axis=0 -> plane x_1=0, etc). Returns the dense index of the image node.
int reflect_node(const JunctionGrid& grid, int node, int axis);

// Local branch coordinates (z_j, y_j), j = 0..5 (one-based Gamma_1..6):
//   z_{1,2,3} = +x_{1,2,3}, z_{4,5,6} = -x_{1,2,3}.
inline int branch_axis(int j) { return j % 3; }
inline int branch_sign(int j) { return j < 3 ? +1 : -1; }

// First Dirichlet cross-section mode U+(s1,s2) = 2 cos(pi s1) cos(pi s2),
// evaluated at a node's transverse coordinates (units of h).
double cross_mode(const JunctionGrid& grid, const Node& n, int branch);

// Periodicity cell omega^eps = union of three bars of width eps crossing at
// the origin, length 1 along their axis. Dofs are the nodes strictly inside
// plus the nodes on the outer faces x_j = +1/2 (the x_j = -1/2 face is
// identified with them by quasi-periodicity).
struct CellGrid {
  double eps = 0.0;
  double h = 0.0;
  int en = 0;    // eps/(2h)
  int half = 0;  // 1/(2h)

  std::vector<Node> dofs;
  std::unordered_map<std::int64_t, int> index;
  // Matched geometric node pairs (minus face, plus face) per axis.
  std::array<std::vector<std::pair<Node, Node>>, 3> periodic_pairs;

  bool is_dof(const Node& n) const;
  int dof_index(const Node& n) const;  // -1 if not a dof

  std::string summary_json() const;
};

CellGrid build_cell_grid(double eps, double h);

}  // namespace tl

#endif
