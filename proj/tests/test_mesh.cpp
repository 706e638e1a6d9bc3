#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <set>

#include "doctest.h"
#include "lattice/geometry.hpp"

using namespace tl;

namespace {

// Independent point-in-union test straight from the definition of the
// junction: a point is inside iff some bar {|x_a| < R, |x_b| < 1/2 (b != a)}
// contains it strictly.
bool oracle_inside(double R, double x, double y, double z) {
  const double c[3] = {x, y, z};
  for (int a = 0; a < 3; ++a) {
    bool in = std::abs(c[a]) < R - 1e-12;
    for (int b = 0; b < 3; ++b)
      if (b != a && std::abs(c[b]) >= 0.5 - 1e-12) in = false;
    if (in) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("interior set matches the definition of the bar union") {
  const double R = 1.5, h = 0.25;
  JunctionGrid g = build_junction_grid(R, h);
  std::set<std::array<int, 3>> interior;
  for (const auto& n : g.interior) interior.insert({n.x, n.y, n.z});
  CHECK(interior.size() == g.interior.size());  // no duplicates
  int count = 0;
  for (int x = -g.Rn - 1; x <= g.Rn + 1; ++x)
    for (int y = -g.Rn - 1; y <= g.Rn + 1; ++y)
      for (int z = -g.Rn - 1; z <= g.Rn + 1; ++z) {
        bool inside = oracle_inside(R, x * h, y * h, z * h);
        CHECK(g.is_interior(Node{x, y, z}) == inside);
        if (inside) ++count;
      }
  CHECK(count == static_cast<int>(g.interior.size()));
}

TEST_CASE("coarsest admissible grid has a single interior node") {
  JunctionGrid g = build_junction_grid(0.5, 0.5);
  REQUIRE(g.interior.size() == 1);
  CHECK(g.interior[0] == Node{0, 0, 0});
  for (int f = 0; f < 6; ++f) CHECK(g.faces[f].size() == 1);
}

TEST_CASE("cut faces sit at +-R with transverse-interior nodes only") {
  JunctionGrid g = build_junction_grid(2.0, 0.25);
  const int expected = (2 * g.half - 1) * (2 * g.half - 1);
  for (int f = 0; f < 6; ++f) {
    CHECK(static_cast<int>(g.faces[f].size()) == expected);
    for (const auto& n : g.faces[f]) {
      int axis = f % 3;
      int want = f < 3 ? g.Rn : -g.Rn;
      CHECK(node_coord(n, axis) == want);
      for (int b = 0; b < 3; ++b)
        if (b != axis) CHECK(std::abs(node_coord(n, b)) <= g.half - 1);
      // one step inward is an interior node
      Node in = node_with_coord(n, axis, want + (f < 3 ? -1 : 1));
      CHECK(g.is_interior(in));
    }
  }
}

TEST_CASE("reflections are involutions preserving the interior") {
  JunctionGrid g = build_junction_grid(1.5, 0.125);
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < static_cast<int>(g.interior.size()); ++i) {
      int j = reflect_node(g, i, a);
      REQUIRE(j >= 0);
      CHECK(reflect_node(g, j, a) == i);
    }
}

TEST_CASE("cross-section mode: center value and exact face quadrature") {
  JunctionGrid g = build_junction_grid(2.0, 0.125);
  // U+(0,0) = 2
  CHECK(cross_mode(g, Node{g.Rn, 0, 0}, 0) == doctest::Approx(2.0).epsilon(1e-14));
  // h^2 sum over a face of U+^2 is exactly 1 (discrete mode normalization)
  for (int f = 0; f < 6; ++f) {
    double acc = 0.0;
    for (const auto& n : g.faces[f]) {
      double u = cross_mode(g, n, f);
      acc += u * u * g.h * g.h;
    }
    CHECK(acc == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("invalid junction parameters are rejected") {
  CHECK_THROWS(build_junction_grid(0.4, 0.1));   // R < 1/2
  CHECK_THROWS(build_junction_grid(1.0, 0.6));   // h > 1/2
  CHECK_THROWS(build_junction_grid(1.0, 0.15));  // 1/(2h) not integer
  CHECK_THROWS(build_junction_grid(1.02, 0.25)); // R/h not integer
}

TEST_CASE("cell grid dofs match a brute-force oracle") {
  const double eps = 0.5, h = 0.125;
  CellGrid g = build_cell_grid(eps, h);
  // Oracle: inside the eps-width bar union on the periodic cell, open at the
  // minus faces and closed at the plus faces (identified pairs).
  auto oracle = [&](int x, int y, int z) {
    const int c[3] = {x, y, z};
    for (int a = 0; a < 3; ++a) {
      bool in = c[a] >= -g.half + 1 && c[a] <= g.half;
      for (int b = 0; b < 3; ++b)
        if (b != a && std::abs(c[b]) >= g.en) in = false;
      if (in) return true;
    }
    return false;
  };
  int count = 0;
  for (int x = -g.half - 1; x <= g.half + 1; ++x)
    for (int y = -g.half - 1; y <= g.half + 1; ++y)
      for (int z = -g.half - 1; z <= g.half + 1; ++z) {
        CHECK(g.is_dof(Node{x, y, z}) == oracle(x, y, z));
        if (oracle(x, y, z)) ++count;
      }
  CHECK(count == static_cast<int>(g.dofs.size()));
}

TEST_CASE("periodic pairs identify the +-1/2 faces node by node") {
  CellGrid g = build_cell_grid(0.5, 0.125);
  for (int a = 0; a < 3; ++a) {
    CHECK(g.periodic_pairs[a].size() == static_cast<std::size_t>((2 * g.en - 1) * (2 * g.en - 1)));
    for (const auto& [minus, plus] : g.periodic_pairs[a]) {
      CHECK(node_coord(minus, a) == -g.half);
      CHECK(node_coord(plus, a) == g.half);
      for (int b = 0; b < 3; ++b)
        if (b != a) CHECK(node_coord(minus, b) == node_coord(plus, b));
      CHECK(g.dof_index(plus) >= 0);
      CHECK(g.dof_index(minus) < 0);  // minus face is identified, not a dof
    }
  }
}

TEST_CASE("invalid cell parameters are rejected") {
  CHECK_THROWS(build_cell_grid(0.7, 0.125));   // eps/(2h) not integer
  CHECK_THROWS(build_cell_grid(0.5, 0.3));     // 1/(2h) not integer
  CHECK_THROWS(build_cell_grid(1.5, 0.125));   // eps >= 1 leaves no walls
}
