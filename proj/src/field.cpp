#include "pdflow/field.hpp"

#include <stdexcept>

namespace pdflow {

std::size_t dof_count(Space space, const Mesh& mesh) {
    switch (space) {
        case Space::ScalarP0: return static_cast<std::size_t>(mesh.num_triangles());
        case Space::ScalarP1: return static_cast<std::size_t>(mesh.num_nodes());
        case Space::VectorP1: return 2 * static_cast<std::size_t>(mesh.num_nodes());
        case Space::VectorP2: return 2 * static_cast<std::size_t>(num_p2_nodes(mesh));
    }
    throw std::logic_error("dof_count: bad space");
}

int components(Space space) {
    return (space == Space::VectorP1 || space == Space::VectorP2) ? 2 : 1;
}

DiscreteField DiscreteField::zeros(Space space, const Mesh& mesh) {
    DiscreteField f;
    f.space = space;
    f.mesh = &mesh;
    f.dofs.assign(dof_count(space, mesh), 0.0);
    return f;
}

namespace {
void check_compatible(const DiscreteField& a, const DiscreteField& b) {
    if (a.space != b.space || a.mesh != b.mesh || a.dofs.size() != b.dofs.size())
        throw std::invalid_argument("DiscreteField: operands live on different spaces");
}
}  // namespace

DiscreteField operator+(const DiscreteField& a, const DiscreteField& b) {
    check_compatible(a, b);
    DiscreteField out = a;
    for (std::size_t i = 0; i < out.dofs.size(); ++i) out.dofs[i] += b.dofs[i];
    return out;
}

DiscreteField operator-(const DiscreteField& a, const DiscreteField& b) {
    check_compatible(a, b);
    DiscreteField out = a;
    for (std::size_t i = 0; i < out.dofs.size(); ++i) out.dofs[i] -= b.dofs[i];
    return out;
}

DiscreteField operator*(double t, const DiscreteField& a) {
    DiscreteField out = a;
    for (auto& v : out.dofs) v *= t;
    return out;
}

int num_p2_nodes(const Mesh& mesh) { return mesh.num_nodes() + mesh.num_edges(); }

Point p2_node_position(const Mesh& mesh, int p2_node) {
    if (p2_node < mesh.num_nodes()) return mesh.node(p2_node);
    const auto& e = mesh.edge_nodes(p2_node - mesh.num_nodes());
    return 0.5 * (mesh.node(e[0]) + mesh.node(e[1]));
}

ElementGeom element_geom(const Mesh& mesh, int t) {
    const auto& tri = mesh.triangle(t);
    const Point a = mesh.node(tri[0]), b = mesh.node(tri[1]), c = mesh.node(tri[2]);
    ElementGeom g;
    g.p0 = a;
    g.J[0][0] = b.x - a.x;
    g.J[0][1] = c.x - a.x;
    g.J[1][0] = b.y - a.y;
    g.J[1][1] = c.y - a.y;
    const double det = g.J[0][0] * g.J[1][1] - g.J[0][1] * g.J[1][0];
    g.area = 0.5 * det;
    // inv(J) = 1/det [J11 -J01; -J10 J00]; invJT is its transpose.
    g.invJT[0][0] = g.J[1][1] / det;
    g.invJT[0][1] = -g.J[1][0] / det;
    g.invJT[1][0] = -g.J[0][1] / det;
    g.invJT[1][1] = g.J[0][0] / det;
    return g;
}

void p1_shapes(double l1, double l2, double N[3]) {
    N[0] = 1.0 - l1 - l2;
    N[1] = l1;
    N[2] = l2;
}

void p2_shapes(double l1, double l2, double N[6]) {
    const double l0 = 1.0 - l1 - l2;
    N[0] = l0 * (2.0 * l0 - 1.0);
    N[1] = l1 * (2.0 * l1 - 1.0);
    N[2] = l2 * (2.0 * l2 - 1.0);
    N[3] = 4.0 * l0 * l1;
    N[4] = 4.0 * l1 * l2;
    N[5] = 4.0 * l2 * l0;
}

void p1_grads_ref(double G[3][2]) {
    G[0][0] = -1.0; G[0][1] = -1.0;
    G[1][0] = 1.0;  G[1][1] = 0.0;
    G[2][0] = 0.0;  G[2][1] = 1.0;
}

void p2_grads_ref(double l1, double l2, double G[6][2]) {
    const double l0 = 1.0 - l1 - l2;
    G[0][0] = 1.0 - 4.0 * l0; G[0][1] = 1.0 - 4.0 * l0;
    G[1][0] = 4.0 * l1 - 1.0; G[1][1] = 0.0;
    G[2][0] = 0.0;            G[2][1] = 4.0 * l2 - 1.0;
    G[3][0] = 4.0 * (l0 - l1); G[3][1] = -4.0 * l1;
    G[4][0] = 4.0 * l2;        G[4][1] = 4.0 * l1;
    G[5][0] = -4.0 * l2;       G[5][1] = 4.0 * (l0 - l2);
}

std::array<int, 6> p2_element_nodes(const Mesh& mesh, int t) {
    const auto& tri = mesh.triangle(t);
    const auto& edges = mesh.triangle_edges(t);
    const int nv = mesh.num_nodes();
    return {tri[0], tri[1], tri[2], nv + edges[0], nv + edges[1], nv + edges[2]};
}

FieldValue eval_field(const DiscreteField& f, int t, double l1, double l2,
                      const ElementGeom& geom) {
    FieldValue out;
    const Mesh& mesh = *f.mesh;
    const int nc = components(f.space);
    switch (f.space) {
        case Space::ScalarP0: {
            out.value[0] = f.dofs[static_cast<std::size_t>(t)];
            return out;
        }
        case Space::ScalarP1:
        case Space::VectorP1: {
            double N[3];
            double Gr[3][2];
            p1_shapes(l1, l2, N);
            p1_grads_ref(Gr);
            const auto& tri = mesh.triangle(t);
            for (int i = 0; i < 3; ++i) {
                const double gx = geom.invJT[0][0] * Gr[i][0] + geom.invJT[0][1] * Gr[i][1];
                const double gy = geom.invJT[1][0] * Gr[i][0] + geom.invJT[1][1] * Gr[i][1];
                for (int c = 0; c < nc; ++c) {
                    const double v = f.dofs[static_cast<std::size_t>(nc * tri[static_cast<std::size_t>(i)] + c)];
                    out.value[static_cast<std::size_t>(c)] += v * N[i];
                    out.grad[static_cast<std::size_t>(c)][0] += v * gx;
                    out.grad[static_cast<std::size_t>(c)][1] += v * gy;
                }
            }
            return out;
        }
        case Space::VectorP2: {
            double N[6];
            double Gr[6][2];
            p2_shapes(l1, l2, N);
            p2_grads_ref(l1, l2, Gr);
            const auto nodes = p2_element_nodes(mesh, t);
            for (int i = 0; i < 6; ++i) {
                const double gx = geom.invJT[0][0] * Gr[i][0] + geom.invJT[0][1] * Gr[i][1];
                const double gy = geom.invJT[1][0] * Gr[i][0] + geom.invJT[1][1] * Gr[i][1];
                for (int c = 0; c < 2; ++c) {
                    const double v = f.dofs[static_cast<std::size_t>(2 * nodes[static_cast<std::size_t>(i)] + c)];
                    out.value[static_cast<std::size_t>(c)] += v * N[i];
                    out.grad[static_cast<std::size_t>(c)][0] += v * gx;
                    out.grad[static_cast<std::size_t>(c)][1] += v * gy;
                }
            }
            return out;
        }
    }
    throw std::logic_error("eval_field: bad space");
}

DiscreteField interpolate_scalar(Space space, const Mesh& mesh,
                                 const std::function<double(double, double)>& fn) {
    DiscreteField f = DiscreteField::zeros(space, mesh);
    if (space == Space::ScalarP1) {
        for (int i = 0; i < mesh.num_nodes(); ++i)
            f.dofs[static_cast<std::size_t>(i)] = fn(mesh.node(i).x, mesh.node(i).y);
    } else if (space == Space::ScalarP0) {
        for (int t = 0; t < mesh.num_triangles(); ++t) {
            const auto& tri = mesh.triangle(t);
            const Point c = (1.0 / 3.0) * (mesh.node(tri[0]) + mesh.node(tri[1]) + mesh.node(tri[2]));
            f.dofs[static_cast<std::size_t>(t)] = fn(c.x, c.y);
        }
    } else {
        throw std::invalid_argument("interpolate_scalar: scalar spaces only");
    }
    return f;
}

DiscreteField interpolate_vector(Space space, const Mesh& mesh,
                                 const std::function<Point(double, double)>& fn) {
    DiscreteField f = DiscreteField::zeros(space, mesh);
    if (space == Space::VectorP1) {
        for (int i = 0; i < mesh.num_nodes(); ++i) {
            const Point v = fn(mesh.node(i).x, mesh.node(i).y);
            f.dofs[static_cast<std::size_t>(2 * i)] = v.x;
            f.dofs[static_cast<std::size_t>(2 * i + 1)] = v.y;
        }
    } else if (space == Space::VectorP2) {
        for (int i = 0; i < num_p2_nodes(mesh); ++i) {
            const Point p = p2_node_position(mesh, i);
            const Point v = fn(p.x, p.y);
            f.dofs[static_cast<std::size_t>(2 * i)] = v.x;
            f.dofs[static_cast<std::size_t>(2 * i + 1)] = v.y;
        }
    } else {
        throw std::invalid_argument("interpolate_vector: vector spaces only");
    }
    return f;
}

DiscreteField p1_to_p2(const DiscreteField& f) {
    if (f.space != Space::VectorP1 && f.space != Space::ScalarP1)
        throw std::invalid_argument("p1_to_p2: P1 input required");
    const Mesh& mesh = *f.mesh;
    if (f.space == Space::ScalarP1)
        throw std::invalid_argument("p1_to_p2: scalar variant not needed; vector only");
    DiscreteField out = DiscreteField::zeros(Space::VectorP2, mesh);
    for (int i = 0; i < mesh.num_nodes(); ++i) {
        out.dofs[static_cast<std::size_t>(2 * i)] = f.dofs[static_cast<std::size_t>(2 * i)];
        out.dofs[static_cast<std::size_t>(2 * i + 1)] = f.dofs[static_cast<std::size_t>(2 * i + 1)];
    }
    for (int e = 0; e < mesh.num_edges(); ++e) {
        const auto& en = mesh.edge_nodes(e);
        const int id = mesh.num_nodes() + e;
        for (int c = 0; c < 2; ++c)
            out.dofs[static_cast<std::size_t>(2 * id + c)] =
                0.5 * (f.dofs[static_cast<std::size_t>(2 * en[0] + c)] +
                       f.dofs[static_cast<std::size_t>(2 * en[1] + c)]);
    }
    return out;
}

DiscreteField product_to_p2(const DiscreteField& scalar_p1, const DiscreteField& vector_p1) {
    if (scalar_p1.space != Space::ScalarP1 || vector_p1.space != Space::VectorP1 ||
        scalar_p1.mesh != vector_p1.mesh)
        throw std::invalid_argument("product_to_p2: expects scalar P1 and vector P1 on one mesh");
    const Mesh& mesh = *scalar_p1.mesh;
    DiscreteField out = DiscreteField::zeros(Space::VectorP2, mesh);
    for (int i = 0; i < mesh.num_nodes(); ++i) {
        const double s = scalar_p1.dofs[static_cast<std::size_t>(i)];
        out.dofs[static_cast<std::size_t>(2 * i)] = s * vector_p1.dofs[static_cast<std::size_t>(2 * i)];
        out.dofs[static_cast<std::size_t>(2 * i + 1)] =
            s * vector_p1.dofs[static_cast<std::size_t>(2 * i + 1)];
    }
    for (int e = 0; e < mesh.num_edges(); ++e) {
        const auto& en = mesh.edge_nodes(e);
        const int id = mesh.num_nodes() + e;
        const double s_mid = 0.5 * (scalar_p1.dofs[static_cast<std::size_t>(en[0])] +
                                    scalar_p1.dofs[static_cast<std::size_t>(en[1])]);
        for (int c = 0; c < 2; ++c) {
            const double v_mid = 0.5 * (vector_p1.dofs[static_cast<std::size_t>(2 * en[0] + c)] +
                                        vector_p1.dofs[static_cast<std::size_t>(2 * en[1] + c)]);
            out.dofs[static_cast<std::size_t>(2 * id + c)] = s_mid * v_mid;
        }
    }
    return out;
}

}  // namespace pdflow
