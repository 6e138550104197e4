#include "dorling/beam.hpp"

#include <cmath>
#include <ostream>

#include "dorling/errors.hpp"
#include "dorling/format.hpp"

namespace dorling {

Mat6 element_stiffness(double length_l, double angle_alpha, const BeamParams& params) {
  if (!(length_l > 0.0)) throw ConfigError("element_stiffness: beam length must be positive");

  const double l = length_l;
  const double c = std::cos(angle_alpha);
  const double s = std::sin(angle_alpha);
  const double A = params.axial_a;
  const double I = params.inertia_i;
  const double scale = params.elasticity_e / l;

  const double k_aa = A * c * c + (12.0 * I / (l * l)) * s * s;
  const double k_bb = A * s * s + (12.0 * I / (l * l)) * c * c;
  const double k_ab = (A - 12.0 * I / (l * l)) * c * s;
  const double k_s = (6.0 * I / l) * s;
  const double k_c = (6.0 * I / l) * c;

  // Plane frame element in global coordinates: axial + Euler-Bernoulli
  // bending, DOFs (dx1, dy1, th1, dx2, dy2, th2).
  Mat6 k{{
      {{k_aa, k_ab, -k_s, -k_aa, -k_ab, -k_s}},
      {{k_ab, k_bb, k_c, -k_ab, -k_bb, k_c}},
      {{-k_s, k_c, 4.0 * I, k_s, -k_c, 2.0 * I}},
      {{-k_aa, -k_ab, k_s, k_aa, k_ab, k_s}},
      {{-k_ab, -k_bb, -k_c, k_ab, k_bb, -k_c}},
      {{-k_s, k_c, 2.0 * I, k_s, -k_c, 4.0 * I}},
  }};
  for (auto& row : k) {
    for (double& v : row) v *= scale;
  }
  return k;
}

GlobalStiffness assemble_global(const ProximityGraph& graph, const BeamParams& params) {
  const int n = static_cast<int>(graph.nodes.size());
  const int dofs = 3 * n;

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(graph.edges.size() * 36 + dofs);

  for (const GraphEdge& e : graph.edges) {
    const Point pa = graph.nodes[e.a].center;
    const Point pb = graph.nodes[e.b].center;
    const double l = distance(pa, pb);
    if (!(l > 0.0)) {
      throw ConfigError("assemble_global: edge between '" + graph.nodes[e.a].region_id +
                        "' and '" + graph.nodes[e.b].region_id + "' has coincident endpoints");
    }
    const double alpha = std::atan2(pb.y - pa.y, pb.x - pa.x);
    const Mat6 k = element_stiffness(params.use_geometric_length ? l : 1.0, alpha, params);

    const int base[2] = {3 * e.a, 3 * e.b};
    for (int r = 0; r < 6; ++r) {
      for (int col = 0; col < 6; ++col) {
        triplets.emplace_back(base[r / 3] + r % 3, base[col / 3] + col % 3, k[r][col]);
      }
    }
  }

  GlobalStiffness out;
  out.matrix.resize(dofs, dofs);
  out.matrix.setFromTriplets(triplets.begin(), triplets.end());

  if (params.regularization > 0.0 && dofs > 0) {
    double diag_sum = 0.0;
    for (int i = 0; i < dofs; ++i) diag_sum += out.matrix.coeff(i, i);
    const double mean_diag = diag_sum / dofs;
    out.lambda = params.regularization * (mean_diag > 0.0 ? mean_diag : 1.0);
    for (int i = 0; i < n; ++i) {
      out.matrix.coeffRef(3 * i, 3 * i) += out.lambda;
      out.matrix.coeffRef(3 * i + 1, 3 * i + 1) += out.lambda;
    }
    out.matrix.makeCompressed();
  }
  return out;
}

std::vector<NodeDisplacement> solve_displacements(const GlobalStiffness& stiffness,
                                                  const std::vector<NodeLoad>& loads) {
  const int n = static_cast<int>(loads.size());
  const int dofs = 3 * n;
  if (stiffness.matrix.rows() != dofs) {
    throw ConfigError("solve_displacements: load count does not match the system size");
  }

  Eigen::VectorXd f(dofs);
  for (int i = 0; i < n; ++i) {
    f[3 * i] = loads[i].fx;
    f[3 * i + 1] = loads[i].fy;
    f[3 * i + 2] = loads[i].moment;
  }

  std::vector<NodeDisplacement> result(n);
  const double f_norm = f.lpNorm<Eigen::Infinity>();
  if (f_norm == 0.0) return result;  // homogeneous system

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
  ldlt.compute(stiffness.matrix);
  if (ldlt.info() != Eigen::Success) {
    throw SolverError("stiffness factorization failed (singular system)");
  }

  const Eigen::VectorXd d = ldlt.vectorD();
  const double d_max = d.cwiseAbs().maxCoeff();
  const double d_min = d.cwiseAbs().minCoeff();
  if (!(d_min > 0.0) || d_max / d_min > 1e14) {
    throw SolverError("stiffness matrix is ill-conditioned (pivot ratio above 1e14)");
  }

  Eigen::VectorXd x = ldlt.solve(f);
  Eigen::VectorXd residual = f - stiffness.matrix * x;
  if (residual.lpNorm<Eigen::Infinity>() / f_norm > 1e-10) {
    x += ldlt.solve(residual);  // one step of iterative refinement
    residual = f - stiffness.matrix * x;
    if (residual.lpNorm<Eigen::Infinity>() / f_norm > 1e-10) {
      throw SolverError("solution residual above 1e-10 after refinement");
    }
  }

  for (int i = 0; i < n; ++i) {
    result[i] = {x[3 * i], x[3 * i + 1], x[3 * i + 2]};
  }
  return result;
}

BeamParams update_elasticity(const BeamParams& params, double max_d0, double max_fk) {
  if (!(max_fk > 0.0)) throw ConfigError("update_elasticity: max force must be positive");
  BeamParams next = params;
  next.elasticity_e = (max_d0 / max_fk) * params.e0;
  return next;
}

void write_coordinate_format(std::ostream& out, const Eigen::SparseMatrix<double>& m) {
  out << m.rows() << " " << m.cols() << " " << m.nonZeros() << "\n";
  for (int k = 0; k < m.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it) {
      out << it.row() << " " << it.col() << " " << fmt_double(it.value()) << "\n";
    }
  }
}

}  // namespace dorling
