#ifndef PDFLOW_BOUNDARY_HPP
#define PDFLOW_BOUNDARY_HPP

#include <vector>

#include "pdflow/field.hpp"
#include "pdflow/mesh.hpp"

namespace pdflow {

/// Piecewise-linear vector function on the boundary, stored edge-wise: one
/// value per endpoint of every boundary edge. Corner nodes may carry a
/// different value on each incident edge (the normal is only defined
/// edge-wise on a polygon).
struct TraceValues {
    std::vector<std::array<Point, 2>> v;  // indexed like Mesh::boundary_edges()

    static TraceValues zeros(const Mesh& mesh);
};

/// Divergence datum g1 (interior, scalar P1) and Dirichlet datum g2 given at
/// boundary nodes.
struct BoundaryData {
    DiscreteField g1;
    std::vector<Point> g2;  // size num_nodes; meaningful at boundary nodes

    static BoundaryData zeros(const Mesh& mesh);
};

/// Edge-wise trace of nodal boundary values.
TraceValues trace_from_nodal(const Mesh& mesh, const std::vector<Point>& nodal);

/// Pointwise orthogonal decomposition g_n = (g2.n) n, g_t = g2 - g_n,
/// performed per boundary edge.
struct BoundarySplit {
    TraceValues g_n;
    TraceValues g_t;
};
BoundarySplit decompose_boundary(const BoundaryData& data, const Mesh& mesh);

/// | int_Omega g1 - oint_dOmega g2 . n |, exact for the piecewise-linear data.
double check_compatibility(const BoundaryData& data, const Mesh& mesh);

/// Sum of the two traces (same edge-wise layout).
TraceValues trace_add(const TraceValues& a, const TraceValues& b);

/// Single-valued nodal data for Dirichlet lifts: edge values averaged at
/// shared nodes (they only differ at corners).
std::vector<Point> nodal_from_trace(const TraceValues& trace, const Mesh& mesh);

/// Dirichlet values on all boundary P2 nodes (vertices averaged as above,
/// boundary-edge midpoints by linear interpolation along the edge). Returned
/// as pairs (p2 node id, value).
std::vector<std::pair<int, Point>> p2_boundary_values(const TraceValues& trace, const Mesh& mesh);

double boundary_norm_Lp(const TraceValues& g, double p, const Mesh& mesh);

/// Intrinsic fractional norm: [ ||g||_{L^p}^p + |g|_{theta,p}^p ]^(1/p) with
/// the Gagliardo double integral over the boundary. Self-edge terms are
/// integrated in closed form, vertex-adjacent pairs by a Duffy-type
/// transformation.
double boundary_norm_fractional(const TraceValues& g, double theta, double p, const Mesh& mesh);

/// Distance to the boundary as a scalar P1 field (exact nodal values).
DiscreteField distance_field(const Mesh& mesh);

}  // namespace pdflow

#endif
