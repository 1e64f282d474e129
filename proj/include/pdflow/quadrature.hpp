#ifndef PDFLOW_QUADRATURE_HPP
#define PDFLOW_QUADRATURE_HPP

#include <array>
#include <cstddef>

namespace pdflow {

/// Quadrature point on the reference triangle in barycentric-style
/// coordinates (l1, l2) with l0 = 1 - l1 - l2; weights sum to 1.
struct TriQuadPoint {
    double l1, l2, w;
};

/// Dunavant rule, degree 4 (6 points). The default rule for all element
/// integrals.
const std::array<TriQuadPoint, 6>& tri_rule_deg4();

/// Gauss-Legendre points on [0,1]; weights sum to 1. Degree 9.
struct LineQuadPoint {
    double x, w;
};
const std::array<LineQuadPoint, 5>& line_rule_5();

}  // namespace pdflow

#endif
