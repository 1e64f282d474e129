#ifndef PDFLOW_FIELD_HPP
#define PDFLOW_FIELD_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "pdflow/mesh.hpp"

namespace pdflow {

enum class Space { ScalarP0, ScalarP1, VectorP1, VectorP2 };

std::size_t dof_count(Space space, const Mesh& mesh);
int components(Space space);

/// Finite element function. Vector dofs are interleaved (x0, y0, x1, y1, ...);
/// P2 nodes are the mesh vertices followed by the edge midpoints in global
/// edge order.
struct DiscreteField {
    Space space = Space::ScalarP1;
    const Mesh* mesh = nullptr;
    std::vector<double> dofs;

    static DiscreteField zeros(Space space, const Mesh& mesh);
};

DiscreteField operator+(const DiscreteField& a, const DiscreteField& b);
DiscreteField operator-(const DiscreteField& a, const DiscreteField& b);
DiscreteField operator*(double t, const DiscreteField& a);

/// Position of a P2 node (vertex or edge midpoint).
Point p2_node_position(const Mesh& mesh, int p2_node);
int num_p2_nodes(const Mesh& mesh);

/// Affine element geometry: Jacobian, its inverse transpose and area.
struct ElementGeom {
    Point p0;
    double J[2][2];
    double invJT[2][2];
    double area;
};
ElementGeom element_geom(const Mesh& mesh, int t);

void p1_shapes(double l1, double l2, double N[3]);
void p2_shapes(double l1, double l2, double N[6]);
/// Reference-coordinate gradients.
void p1_grads_ref(double G[3][2]);
void p2_grads_ref(double l1, double l2, double G[6][2]);

/// Global P2 dof ids (scalar numbering) of an element: 3 vertices then the
/// midpoints of local edges (0,1), (1,2), (2,0).
std::array<int, 6> p2_element_nodes(const Mesh& mesh, int t);

/// Evaluation of a field inside element t at reference point (l1, l2).
/// value: up to 2 components; grad: grad[c][k] = d value_c / d x_k.
struct FieldValue {
    std::array<double, 2> value{};
    std::array<std::array<double, 2>, 2> grad{};
};
FieldValue eval_field(const DiscreteField& f, int t, double l1, double l2,
                      const ElementGeom& geom);

DiscreteField interpolate_scalar(Space space, const Mesh& mesh,
                                 const std::function<double(double, double)>& fn);
DiscreteField interpolate_vector(Space space, const Mesh& mesh,
                                 const std::function<Point(double, double)>& fn);

/// Nodal interpolation of a P1 field onto the P2 nodes.
DiscreteField p1_to_p2(const DiscreteField& f);

/// Nodal interpolation of the product (scalar P1) * (vector P1) onto P2.
DiscreteField product_to_p2(const DiscreteField& scalar_p1, const DiscreteField& vector_p1);

}  // namespace pdflow

#endif
