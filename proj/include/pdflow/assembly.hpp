#ifndef PDFLOW_ASSEMBLY_HPP
#define PDFLOW_ASSEMBLY_HPP

#include <Eigen/Sparse>
#include <vector>

#include "pdflow/field.hpp"
#include "pdflow/mesh.hpp"

namespace pdflow {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

/// Scalar P1 Laplace and mass matrices.
SpMat p1_stiffness(const Mesh& mesh);
SpMat p1_mass(const Mesh& mesh);

/// Vector P2 operators on interleaved dofs; the stiffness uses the full
/// gradient (componentwise Laplacian).
SpMat p2_vector_stiffness(const Mesh& mesh);
SpMat p2_vector_mass(const Mesh& mesh);

/// Mixed divergence block: rows P1 pressure, columns interleaved P2 velocity,
/// entries int rho_k d_c N_j.
SpMat p2p1_divergence(const Mesh& mesh);

/// int rho_j dx for all P1 pressure dofs.
Vec p1_moments(const Mesh& mesh);

/// <g1, rho_j> for a scalar P0/P1 datum.
Vec g1_moments(const Mesh& mesh, const DiscreteField& g1);

/// Scalar P2 node ids split into interior and boundary (vertices on the
/// boundary plus midpoints of boundary edges).
struct VelocityPartition {
    std::vector<int> free_nodes;
    std::vector<int> boundary_nodes;
    std::vector<int> node_to_free;  // -1 for boundary nodes
};
VelocityPartition velocity_partition(const Mesh& mesh);

}  // namespace pdflow

#endif
