#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"

#include "dorling/beam.hpp"
#include "dorling/errors.hpp"
#include "oracles.hpp"

using namespace dorling;

namespace {

Circle circle(const std::string& id, double x, double y, double r) {
  return Circle{id, {x, y}, r, {x, y}};
}

oracles::Matrix to_matrix(const Mat6& k) {
  oracles::Matrix m(6, std::vector<double>(6));
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) m[r][c] = k[r][c];
  }
  return m;
}

oracles::Matrix dense_of(const Eigen::SparseMatrix<double>& s) {
  oracles::Matrix m(s.rows(), std::vector<double>(s.cols(), 0.0));
  for (int k = 0; k < s.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(s, k); it; ++it) {
      m[it.row()][it.col()] = it.value();
    }
  }
  return m;
}

// DOF rotation taking global displacements into the frame rotated by alpha.
Mat6 dof_rotation(double alpha) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  Mat6 t{};
  t[0][0] = c;  t[0][1] = s;
  t[1][0] = -s; t[1][1] = c;
  t[2][2] = 1.0;
  t[3][3] = c;  t[3][4] = s;
  t[4][3] = -s; t[4][4] = c;
  t[5][5] = 1.0;
  return t;
}

Mat6 conjugate(const Mat6& k0, double alpha) {
  const Mat6 t = dof_rotation(alpha);
  Mat6 tmp{}, out{};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      for (int l = 0; l < 6; ++l) tmp[i][j] += k0[i][l] * t[l][j];
    }
  }
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      for (int l = 0; l < 6; ++l) out[i][j] += t[l][i] * tmp[l][j];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("element stiffness entries at alpha = 0") {
  BeamParams params;
  params.axial_a = 1.0;
  params.inertia_i = 1.0;
  params.elasticity_e = 1.0;
  const Mat6 k = element_stiffness(1.0, 0.0, params);
  CHECK(k[0][0] == doctest::Approx(1.0));
  CHECK(k[1][1] == doctest::Approx(12.0));
  CHECK(k[2][2] == doctest::Approx(4.0));
  CHECK(k[2][5] == doctest::Approx(2.0));
  CHECK(k[0][3] == doctest::Approx(-1.0));

  CHECK_THROWS_AS(element_stiffness(0.0, 0.0, params), ConfigError);
  CHECK_THROWS_AS(element_stiffness(-2.0, 0.0, params), ConfigError);
}

TEST_CASE("element stiffness is symmetric, PSD, rank 3, and rotation equivariant") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> len(0.2, 30.0);
  std::uniform_real_distribution<double> ang(-3.2, 3.2);
  BeamParams params;
  params.elasticity_e = 7.0;

  for (int trial = 0; trial < 100; ++trial) {
    const double l = len(rng);
    const double alpha = ang(rng);
    const Mat6 k = element_stiffness(l, alpha, params);

    double max_entry = 0.0;
    for (int r = 0; r < 6; ++r) {
      for (int c = 0; c < 6; ++c) max_entry = std::max(max_entry, std::abs(k[r][c]));
    }
    for (int r = 0; r < 6; ++r) {
      for (int c = 0; c < 6; ++c) {
        CHECK(std::abs(k[r][c] - k[c][r]) <= 1e-12 * max_entry);
      }
    }

    const auto eig = oracles::symmetric_eigenvalues(to_matrix(k));
    for (int idx = 0; idx < 3; ++idx) CHECK(std::abs(eig[idx]) <= 1e-9 * max_entry);
    for (int idx = 3; idx < 6; ++idx) CHECK(eig[idx] > 1e-9 * max_entry);

    const Mat6 expected = conjugate(element_stiffness(l, 0.0, params), alpha);
    for (int r = 0; r < 6; ++r) {
      for (int c = 0; c < 6; ++c) {
        CHECK(std::abs(k[r][c] - expected[r][c]) <= 1e-9 * max_entry);
      }
    }
  }
}

TEST_CASE("single-beam assembly equals the element matrix") {
  std::vector<Circle> circles{circle("a", 0, 0, 1), circle("b", 4, 3, 1)};
  ProximityGraph g;
  g.nodes = circles;
  g.edges = {{0, 1, EdgeType::type1, pairwise_gap(circles[0], circles[1])}};

  BeamParams params;
  params.regularization = 0.0;
  params.use_geometric_length = true;
  const auto system = assemble_global(g, params);
  CHECK(system.lambda == 0.0);

  const Mat6 k = element_stiffness(5.0, std::atan2(3.0, 4.0), params);
  const auto dense = dense_of(system.matrix);
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) CHECK(dense[r][c] == doctest::Approx(k[r][c]).epsilon(1e-12));
  }
}

TEST_CASE("path graph assembly matches a dense scatter oracle") {
  std::vector<Circle> circles{circle("a", 0, 0, 1), circle("b", 3, 1, 1), circle("c", 7, -1, 1)};
  ProximityGraph g;
  g.nodes = circles;
  g.edges = {{0, 1, EdgeType::type1, 0.0}, {1, 2, EdgeType::type1, 0.0}};

  BeamParams params;
  params.regularization = 0.0;
  params.use_geometric_length = true;

  // independent dense assembly
  oracles::Matrix expected(9, std::vector<double>(9, 0.0));
  for (const GraphEdge& e : g.edges) {
    const Point pa = circles[e.a].center;
    const Point pb = circles[e.b].center;
    const Mat6 k = element_stiffness(distance(pa, pb), std::atan2(pb.y - pa.y, pb.x - pa.x), params);
    const int base[2] = {3 * e.a, 3 * e.b};
    for (int r = 0; r < 6; ++r) {
      for (int c = 0; c < 6; ++c) {
        expected[base[r / 3] + r % 3][base[c / 3] + c % 3] += k[r][c];
      }
    }
  }

  const auto dense = dense_of(assemble_global(g, params).matrix);
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) CHECK(dense[r][c] == doctest::Approx(expected[r][c]).epsilon(1e-12));
  }
}

TEST_CASE("rigid-body modes are annihilated without the anchor") {
  std::vector<Circle> circles{circle("a", 0, 0, 1), circle("b", 5, 2, 1), circle("c", 2, 6, 1)};
  ProximityGraph g;
  g.nodes = circles;
  g.edges = {{0, 1, EdgeType::type1, 0.0}, {1, 2, EdgeType::type1, 0.0}, {0, 2, EdgeType::type2, 0.0}};
  // The linearized rotation mode is only a null vector when the element
  // matrices carry the true beam lengths.
  BeamParams params;
  params.regularization = 0.0;
  params.use_geometric_length = true;
  const auto dense = dense_of(assemble_global(g, params).matrix);

  // centroid for the linearized rotation mode
  double cx = 0.0, cy = 0.0;
  for (const Circle& c : circles) {
    cx += c.center.x / 3.0;
    cy += c.center.y / 3.0;
  }
  std::vector<std::vector<double>> modes(3, std::vector<double>(9, 0.0));
  for (int i = 0; i < 3; ++i) {
    modes[0][3 * i] = 1.0;                                // uniform x
    modes[1][3 * i + 1] = 1.0;                            // uniform y
    modes[2][3 * i] = -(circles[i].center.y - cy);        // rotation about centroid
    modes[2][3 * i + 1] = circles[i].center.x - cx;
    modes[2][3 * i + 2] = 1.0;
  }
  double scale = 0.0;
  for (const auto& row : dense) {
    for (double v : row) scale = std::max(scale, std::abs(v));
  }
  for (const auto& mode : modes) {
    for (int r = 0; r < 9; ++r) {
      double s = 0.0;
      for (int c = 0; c < 9; ++c) s += dense[r][c] * mode[c];
      CHECK(std::abs(s) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("anchored system is positive definite and solvable") {
  std::vector<Circle> circles{circle("a", 0, 0, 1), circle("b", 5, 0, 1)};
  ProximityGraph g;
  g.nodes = circles;
  g.edges = {{0, 1, EdgeType::type1, 0.0}};
  BeamParams params;  // default anchor
  const auto system = assemble_global(g, params);
  CHECK(system.lambda > 0.0);

  // zero loads -> zero displacements
  const auto zero = solve_displacements(system, std::vector<NodeLoad>(2));
  for (const auto& d : zero) {
    CHECK(d.dx == 0.0);
    CHECK(d.dy == 0.0);
    CHECK(d.theta == 0.0);
  }

  // equal-and-opposite axial loads: symmetric dx, zero dy and theta
  std::vector<NodeLoad> loads{{-1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
  const auto disp = solve_displacements(system, loads);
  CHECK(disp[0].dx == doctest::Approx(-disp[1].dx).epsilon(1e-9));
  CHECK(disp[0].dy == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(disp[1].dy == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(std::abs(disp[0].theta) <= 1e-9);
}

TEST_CASE("sparse solve matches the dense oracle on random graphs") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> pos(0.0, 40.0);
  std::uniform_real_distribution<double> load(-5.0, 5.0);
  std::uniform_int_distribution<int> extra(0, 2);

  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;  // up to 6 nodes
    std::vector<Circle> circles;
    for (int k = 0; k < n; ++k) {
      circles.push_back(circle("n" + std::to_string(k), pos(rng), pos(rng), 1.0));
    }
    ProximityGraph g;
    g.nodes = circles;
    for (int k = 1; k < n; ++k) g.edges.push_back({k - 1, k, EdgeType::type1, 0.0});  // spanning path
    for (int k = 0; k < extra(rng) && n > 2; ++k) {
      g.edges.push_back({0, n - 1, EdgeType::type2, 0.0});
    }

    BeamParams params;
    const auto system = assemble_global(g, params);
    std::vector<NodeLoad> loads(n);
    for (auto& f : loads) f = {load(rng), load(rng), 0.0};

    const auto disp = solve_displacements(system, loads);

    auto dense = dense_of(system.matrix);
    std::vector<double> rhs(3 * n, 0.0);
    for (int k = 0; k < n; ++k) {
      rhs[3 * k] = loads[k].fx;
      rhs[3 * k + 1] = loads[k].fy;
    }
    const auto expected = oracles::dense_solve(dense, rhs);
    double ref = 0.0;
    for (double v : expected) ref = std::max(ref, std::abs(v));
    for (int k = 0; k < n; ++k) {
      CHECK(std::abs(disp[k].dx - expected[3 * k]) <= 1e-8 * ref);
      CHECK(std::abs(disp[k].dy - expected[3 * k + 1]) <= 1e-8 * ref);
      CHECK(std::abs(disp[k].theta - expected[3 * k + 2]) <= 1e-8 * ref);
    }
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("linearity and elasticity scaling") {
  std::vector<Circle> circles{circle("a", 0, 0, 1), circle("b", 4, 1, 1), circle("c", 8, 0, 1)};
  ProximityGraph g;
  g.nodes = circles;
  g.edges = {{0, 1, EdgeType::type1, 0.0}, {1, 2, EdgeType::type1, 0.0}};
  BeamParams params;
  const auto system = assemble_global(g, params);

  std::vector<NodeLoad> loads{{1.0, -2.0, 0.0}, {0.5, 0.25, 0.0}, {-1.5, 1.75, 0.0}};
  const auto base = solve_displacements(system, loads);

  std::vector<NodeLoad> scaled = loads;
  for (auto& f : scaled) {
    f.fx *= 3.0;
    f.fy *= 3.0;
  }
  const auto three = solve_displacements(system, scaled);
  for (std::size_t k = 0; k < base.size(); ++k) {
    CHECK(three[k].dx == doctest::Approx(3.0 * base[k].dx).epsilon(1e-9));
    CHECK(three[k].dy == doctest::Approx(3.0 * base[k].dy).epsilon(1e-9));
  }

  BeamParams stiff = params;
  stiff.elasticity_e = 2.0 * params.elasticity_e;
  const auto harder = solve_displacements(assemble_global(g, stiff), loads);
  for (std::size_t k = 0; k < base.size(); ++k) {
    CHECK(harder[k].dx == doctest::Approx(0.5 * base[k].dx).epsilon(1e-9));
    CHECK(harder[k].dy == doctest::Approx(0.5 * base[k].dy).epsilon(1e-9));
  }
}

TEST_CASE("update_elasticity") {
  BeamParams params;
  params.e0 = 10.0;
  CHECK(update_elasticity(params, 5.0, 5.0).elasticity_e == doctest::Approx(10.0));
  CHECK(update_elasticity(params, 10.0, 5.0).elasticity_e == doctest::Approx(20.0));
  CHECK(update_elasticity(params, 5.0, 5.0).axial_a == params.axial_a);
  CHECK_THROWS_AS(update_elasticity(params, 1.0, 0.0), ConfigError);
}

TEST_CASE("coincident endpoints are rejected and matrices dump cleanly") {
  std::vector<Circle> circles{circle("a", 1, 1, 1), circle("b", 1, 1, 1)};
  ProximityGraph g;
  g.nodes = circles;
  g.edges = {{0, 1, EdgeType::type2, 0.0}};
  CHECK_THROWS_AS(assemble_global(g, BeamParams{}), ConfigError);

  std::vector<Circle> ok{circle("a", 0, 0, 1), circle("b", 2, 0, 1)};
  g.nodes = ok;
  const auto system = assemble_global(g, BeamParams{});
  std::ostringstream dump;
  write_coordinate_format(dump, system.matrix);
  CHECK(dump.str().find("6 6") == 0);  // header: rows cols nnz
}
