#ifndef DORLING_BEAM_HPP
#define DORLING_BEAM_HPP

#include <array>
#include <iosfwd>
#include <vector>

#include <Eigen/Sparse>

#include "dorling/graph.hpp"

namespace dorling {

// Material parameters of the elastic beams. axial_a governs stretching and
// compression, inertia_i bending, elasticity_e the overall stiffness; e0 is
// the elasticity used on the first iteration of a run. regularization is the
// relative weight of the diagonal anchor that pins the rigid-body modes: the
// absolute value added to each translational DOF is
// regularization * mean(diagonal of the assembled matrix).
struct BeamParams {
  double axial_a = 1.0;
  double inertia_i = 1.0;
  double elasticity_e = 10.0;
  double e0 = 10.0;
  double regularization = 0.2;
  // When false, every element matrix is evaluated at unit length (only the
  // beam angle is taken from the geometry), so axial and bending stiffness
  // stay on the same scale regardless of the map extent. Geometric lengths
  // make long beams so soft in bending that the displacement step diverges.
  bool use_geometric_length = false;
};

struct NodeLoad {
  double fx = 0.0;
  double fy = 0.0;
  double moment = 0.0;  // never driven in this pipeline
};

struct NodeDisplacement {
  double dx = 0.0;
  double dy = 0.0;
  double theta = 0.0;
};

using Mat6 = std::array<std::array<double, 6>, 6>;

// Stiffness of one beam of length l at angle alpha to the x-axis, relating
// end loads (fx, fy, M) at both nodes to end displacements (dx, dy, theta).
// Symmetric, positive semidefinite, with exactly the three rigid-body zero
// modes. Throws ConfigError for l <= 0.
Mat6 element_stiffness(double length_l, double angle_alpha, const BeamParams& params);

struct GlobalStiffness {
  Eigen::SparseMatrix<double> matrix;  // 3N x 3N, node i owns DOFs 3i..3i+2
  double lambda = 0.0;                 // absolute anchor weight that was applied
};

// Sums the element matrices over the graph edges (beam length = center
// distance) and anchors the translational diagonal. Throws ConfigError when
// an edge has coincident endpoints.
GlobalStiffness assemble_global(const ProximityGraph& graph, const BeamParams& params);

// Direct sparse solve of K d = f to a relative residual of 1e-10, with one
// refinement pass if needed. Throws SolverError on singular or
// ill-conditioned systems (pivot-ratio estimate > 1e14).
std::vector<NodeDisplacement> solve_displacements(const GlobalStiffness& stiffness,
                                                  const std::vector<NodeLoad>& loads);

// E_{k+1} = (max displacement of the first iteration / max force of the last
// iteration) * e0; all other parameters are kept.
BeamParams update_elasticity(const BeamParams& params, double max_d0, double max_fk);

// Coordinate-format text dump (row col value per line) for debugging.
void write_coordinate_format(std::ostream& out, const Eigen::SparseMatrix<double>& m);

}  // namespace dorling

#endif
