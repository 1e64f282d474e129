#include "pdflow/assembly.hpp"

#include <array>

#include "pdflow/parallel.hpp"
#include "pdflow/quadrature.hpp"

namespace pdflow {

namespace {

using Trip = Eigen::Triplet<double>;

// Parallel local computation, serial in-order insertion: deterministic for
// any thread count.
template <typename LocalKernel>
SpMat assemble(const Mesh& mesh, int rows, int cols, int entries_per_element, LocalKernel&& k) {
    const std::size_t nt = static_cast<std::size_t>(mesh.num_triangles());
    std::vector<std::vector<Trip>> local(nt);
    parallel_for(nt, [&](std::size_t t) {
        local[t].reserve(static_cast<std::size_t>(entries_per_element));
        k(static_cast<int>(t), local[t]);
    });
    std::vector<Trip> trips;
    trips.reserve(nt * static_cast<std::size_t>(entries_per_element));
    for (const auto& l : local) trips.insert(trips.end(), l.begin(), l.end());
    SpMat m(rows, cols);
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

void p2_mapped_grads(const ElementGeom& geom, double l1, double l2, double out[6][2]) {
    double Gr[6][2];
    p2_grads_ref(l1, l2, Gr);
    for (int i = 0; i < 6; ++i) {
        out[i][0] = geom.invJT[0][0] * Gr[i][0] + geom.invJT[0][1] * Gr[i][1];
        out[i][1] = geom.invJT[1][0] * Gr[i][0] + geom.invJT[1][1] * Gr[i][1];
    }
}

}  // namespace

SpMat p1_stiffness(const Mesh& mesh) {
    const int n = mesh.num_nodes();
    return assemble(mesh, n, n, 9, [&](int t, std::vector<Trip>& out) {
        const ElementGeom geom = element_geom(mesh, t);
        double Gr[3][2];
        p1_grads_ref(Gr);
        double g[3][2];
        for (int i = 0; i < 3; ++i) {
            g[i][0] = geom.invJT[0][0] * Gr[i][0] + geom.invJT[0][1] * Gr[i][1];
            g[i][1] = geom.invJT[1][0] * Gr[i][0] + geom.invJT[1][1] * Gr[i][1];
        }
        const auto& tri = mesh.triangle(t);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                out.emplace_back(tri[static_cast<std::size_t>(i)], tri[static_cast<std::size_t>(j)],
                                 geom.area * (g[i][0] * g[j][0] + g[i][1] * g[j][1]));
    });
}

SpMat p1_mass(const Mesh& mesh) {
    const int n = mesh.num_nodes();
    return assemble(mesh, n, n, 9, [&](int t, std::vector<Trip>& out) {
        const ElementGeom geom = element_geom(mesh, t);
        const auto& tri = mesh.triangle(t);
        for (const auto& qp : tri_rule_deg4()) {
            double N[3];
            p1_shapes(qp.l1, qp.l2, N);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    out.emplace_back(tri[static_cast<std::size_t>(i)], tri[static_cast<std::size_t>(j)],
                                     geom.area * qp.w * N[i] * N[j]);
        }
    });
}

SpMat p2_vector_stiffness(const Mesh& mesh) {
    const int n = 2 * num_p2_nodes(mesh);
    return assemble(mesh, n, n, 72, [&](int t, std::vector<Trip>& out) {
        const ElementGeom geom = element_geom(mesh, t);
        const auto nodes = p2_element_nodes(mesh, t);
        double acc[6][6] = {};
        for (const auto& qp : tri_rule_deg4()) {
            double g[6][2];
            p2_mapped_grads(geom, qp.l1, qp.l2, g);
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j)
                    acc[i][j] += qp.w * (g[i][0] * g[j][0] + g[i][1] * g[j][1]);
        }
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                for (int c = 0; c < 2; ++c)
                    out.emplace_back(2 * nodes[static_cast<std::size_t>(i)] + c,
                                     2 * nodes[static_cast<std::size_t>(j)] + c,
                                     geom.area * acc[i][j]);
    });
}

SpMat p2_vector_mass(const Mesh& mesh) {
    const int n = 2 * num_p2_nodes(mesh);
    return assemble(mesh, n, n, 72, [&](int t, std::vector<Trip>& out) {
        const ElementGeom geom = element_geom(mesh, t);
        const auto nodes = p2_element_nodes(mesh, t);
        double acc[6][6] = {};
        for (const auto& qp : tri_rule_deg4()) {
            double N[6];
            p2_shapes(qp.l1, qp.l2, N);
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) acc[i][j] += qp.w * N[i] * N[j];
        }
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                for (int c = 0; c < 2; ++c)
                    out.emplace_back(2 * nodes[static_cast<std::size_t>(i)] + c,
                                     2 * nodes[static_cast<std::size_t>(j)] + c,
                                     geom.area * acc[i][j]);
    });
}

SpMat p2p1_divergence(const Mesh& mesh) {
    const int rows = mesh.num_nodes();
    const int cols = 2 * num_p2_nodes(mesh);
    return assemble(mesh, rows, cols, 36, [&](int t, std::vector<Trip>& out) {
        const ElementGeom geom = element_geom(mesh, t);
        const auto nodes = p2_element_nodes(mesh, t);
        const auto& tri = mesh.triangle(t);
        double acc[3][6][2] = {};
        for (const auto& qp : tri_rule_deg4()) {
            double g[6][2];
            p2_mapped_grads(geom, qp.l1, qp.l2, g);
            double R[3];
            p1_shapes(qp.l1, qp.l2, R);
            for (int k = 0; k < 3; ++k)
                for (int j = 0; j < 6; ++j)
                    for (int c = 0; c < 2; ++c) acc[k][j][c] += qp.w * R[k] * g[j][c];
        }
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 6; ++j)
                for (int c = 0; c < 2; ++c)
                    out.emplace_back(tri[static_cast<std::size_t>(k)],
                                     2 * nodes[static_cast<std::size_t>(j)] + c,
                                     geom.area * acc[k][j][c]);
    });
}

Vec p1_moments(const Mesh& mesh) {
    Vec m = Vec::Zero(mesh.num_nodes());
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangle(t);
        const double a = mesh.triangle_area(t) / 3.0;
        for (int k = 0; k < 3; ++k) m[tri[static_cast<std::size_t>(k)]] += a;
    }
    return m;
}

Vec g1_moments(const Mesh& mesh, const DiscreteField& g1) {
    Vec m = Vec::Zero(mesh.num_nodes());
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const ElementGeom geom = element_geom(mesh, t);
        const auto& tri = mesh.triangle(t);
        for (const auto& qp : tri_rule_deg4()) {
            const double val = eval_field(g1, t, qp.l1, qp.l2, geom).value[0];
            double R[3];
            p1_shapes(qp.l1, qp.l2, R);
            for (int k = 0; k < 3; ++k)
                m[tri[static_cast<std::size_t>(k)]] += geom.area * qp.w * val * R[k];
        }
    }
    return m;
}

VelocityPartition velocity_partition(const Mesh& mesh) {
    const int n = num_p2_nodes(mesh);
    VelocityPartition part;
    part.node_to_free.assign(static_cast<std::size_t>(n), -1);
    std::vector<bool> on_boundary(static_cast<std::size_t>(n), false);
    for (int i = 0; i < mesh.num_nodes(); ++i)
        if (mesh.is_boundary_node(i)) on_boundary[static_cast<std::size_t>(i)] = true;
    for (const auto& be : mesh.boundary_edges())
        on_boundary[static_cast<std::size_t>(mesh.num_nodes() + be.edge_id)] = true;
    for (int i = 0; i < n; ++i) {
        if (on_boundary[static_cast<std::size_t>(i)]) {
            part.boundary_nodes.push_back(i);
        } else {
            part.node_to_free[static_cast<std::size_t>(i)] = static_cast<int>(part.free_nodes.size());
            part.free_nodes.push_back(i);
        }
    }
    return part;
}

}  // namespace pdflow
