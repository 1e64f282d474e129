#ifndef PDFLOW_STOKES_HPP
#define PDFLOW_STOKES_HPP

#include <memory>
#include <utility>
#include <vector>

#include "pdflow/assembly.hpp"
#include "pdflow/field.hpp"

namespace pdflow {

struct StokesResult {
    DiscreteField velocity;  // vector P2
    DiscreteField pressure;  // scalar P1, zero mean
    double divergence_residual = 0.0;  // || div u - g1 || in the discrete pressure norm
};

/// Mixed P2/P1 solver for the constant-viscosity Stokes system
///   -Delta u + grad pi = 0,  div u = g1,  u = g2 on the boundary,
/// with the pressure mean pinned by a scalar multiplier. The saddle matrix is
/// factorized once per mesh; every lift on the mesh reuses the factorization.
class TaylorHoodStokes {
public:
    explicit TaylorHoodStokes(const Mesh& mesh);
    ~TaylorHoodStokes();
    TaylorHoodStokes(TaylorHoodStokes&&) noexcept;

    /// dirichlet: (P2 node id, value) for every boundary P2 node;
    /// g1 may be null (solenoidal constraint).
    StokesResult solve(const std::vector<std::pair<int, Point>>& dirichlet,
                       const DiscreteField* g1) const;

    /// Same solve with the divergence datum given directly as pressure
    /// moments <g1, rho_j>.
    StokesResult solve_moments(const std::vector<std::pair<int, Point>>& dirichlet,
                               const Vec& rg1) const;

    /// Discrete pressure norm sqrt(r^T M_p^{-1} r) of a pressure functional.
    double pressure_dual_norm(const Vec& r) const;

    /// Cached mixed divergence block (pressure x all velocity dofs).
    const SpMat& divergence_matrix() const;

    const VelocityPartition& partition() const { return part_; }

private:
    struct Impl;
    const Mesh* mesh_;
    VelocityPartition part_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace pdflow

#endif
