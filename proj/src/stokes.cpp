#include "pdflow/stokes.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#include <stdexcept>

namespace pdflow {

struct TaylorHoodStokes::Impl {
    SpMat A;   // full P2 vector stiffness
    SpMat B;   // pressure x all velocity dofs
    Vec moments;
    Eigen::SparseLU<SpMat> lu;
    Eigen::SimplicialLDLT<SpMat> mass_ldlt;
    int n_free = 0;
    int n_p = 0;
};

TaylorHoodStokes::TaylorHoodStokes(const Mesh& mesh)
    : mesh_(&mesh), part_(velocity_partition(mesh)), impl_(std::make_unique<Impl>()) {
    impl_->A = p2_vector_stiffness(mesh);
    impl_->B = p2p1_divergence(mesh);
    impl_->moments = p1_moments(mesh);
    impl_->n_free = 2 * static_cast<int>(part_.free_nodes.size());
    impl_->n_p = mesh.num_nodes();

    const int nf = impl_->n_free;
    const int np = impl_->n_p;
    const int total = nf + np + 1;

    std::vector<Eigen::Triplet<double>> trips;
    // A_ff block.
    for (int k = 0; k < impl_->A.outerSize(); ++k)
        for (SpMat::InnerIterator it(impl_->A, k); it; ++it) {
            const int ri = part_.node_to_free[static_cast<std::size_t>(it.row() / 2)];
            const int ci = part_.node_to_free[static_cast<std::size_t>(it.col() / 2)];
            if (ri >= 0 && ci >= 0)
                trips.emplace_back(2 * ri + static_cast<int>(it.row()) % 2,
                                   2 * ci + static_cast<int>(it.col()) % 2, it.value());
        }
    // B_f and -B_f^T blocks.
    for (int k = 0; k < impl_->B.outerSize(); ++k)
        for (SpMat::InnerIterator it(impl_->B, k); it; ++it) {
            const int ci = part_.node_to_free[static_cast<std::size_t>(it.col() / 2)];
            if (ci < 0) continue;
            const int vc = 2 * ci + static_cast<int>(it.col()) % 2;
            const int pr = nf + static_cast<int>(it.row());
            trips.emplace_back(pr, vc, it.value());
            trips.emplace_back(vc, pr, -it.value());
        }
    // Pressure mean multiplier row/column.
    for (int j = 0; j < np; ++j) {
        trips.emplace_back(nf + np, nf + j, impl_->moments[j]);
        trips.emplace_back(nf + j, nf + np, impl_->moments[j]);
    }
    SpMat K(total, total);
    K.setFromTriplets(trips.begin(), trips.end());
    K.makeCompressed();
    impl_->lu.compute(K);
    if (impl_->lu.info() != Eigen::Success)
        throw std::runtime_error("TaylorHoodStokes: saddle factorization failed");

    SpMat Mp = p1_mass(mesh);
    impl_->mass_ldlt.compute(Mp);
    if (impl_->mass_ldlt.info() != Eigen::Success)
        throw std::runtime_error("TaylorHoodStokes: pressure mass factorization failed");
}

TaylorHoodStokes::~TaylorHoodStokes() = default;
TaylorHoodStokes::TaylorHoodStokes(TaylorHoodStokes&&) noexcept = default;

StokesResult TaylorHoodStokes::solve(const std::vector<std::pair<int, Point>>& dirichlet,
                                     const DiscreteField* g1) const {
    Vec rg1 = Vec::Zero(impl_->n_p);
    if (g1 != nullptr) rg1 = g1_moments(*mesh_, *g1);
    return solve_moments(dirichlet, rg1);
}

StokesResult TaylorHoodStokes::solve_moments(const std::vector<std::pair<int, Point>>& dirichlet,
                                             const Vec& rg1) const {
    const Mesh& mesh = *mesh_;
    const int nall = 2 * num_p2_nodes(mesh);
    const int nf = impl_->n_free;
    const int np = impl_->n_p;

    Vec g_full = Vec::Zero(nall);
    std::vector<bool> seen(static_cast<std::size_t>(num_p2_nodes(mesh)), false);
    for (const auto& [node, val] : dirichlet) {
        if (part_.node_to_free[static_cast<std::size_t>(node)] >= 0)
            throw std::invalid_argument("TaylorHoodStokes::solve: Dirichlet value on interior node");
        g_full[2 * node] = val.x;
        g_full[2 * node + 1] = val.y;
        seen[static_cast<std::size_t>(node)] = true;
    }
    for (int b : part_.boundary_nodes)
        if (!seen[static_cast<std::size_t>(b)])
            throw std::invalid_argument("TaylorHoodStokes::solve: missing Dirichlet value");

    const Vec Ag = impl_->A * g_full;
    const Vec Bg = impl_->B * g_full;

    Vec rhs = Vec::Zero(nf + np + 1);
    for (std::size_t i = 0; i < part_.free_nodes.size(); ++i) {
        const int node = part_.free_nodes[i];
        rhs[2 * static_cast<int>(i)] = -Ag[2 * node];
        rhs[2 * static_cast<int>(i) + 1] = -Ag[2 * node + 1];
    }
    rhs.segment(nf, np) = rg1 - Bg;

    const Vec sol = impl_->lu.solve(rhs);
    if (impl_->lu.info() != Eigen::Success)
        throw std::runtime_error("TaylorHoodStokes::solve: linear solve failed");

    StokesResult out;
    out.velocity = DiscreteField::zeros(Space::VectorP2, mesh);
    for (int i = 0; i < nall; ++i) out.velocity.dofs[static_cast<std::size_t>(i)] = g_full[i];
    for (std::size_t i = 0; i < part_.free_nodes.size(); ++i) {
        const int node = part_.free_nodes[i];
        out.velocity.dofs[static_cast<std::size_t>(2 * node)] = sol[2 * static_cast<int>(i)];
        out.velocity.dofs[static_cast<std::size_t>(2 * node + 1)] = sol[2 * static_cast<int>(i) + 1];
    }

    out.pressure = DiscreteField::zeros(Space::ScalarP1, mesh);
    for (int j = 0; j < np; ++j) out.pressure.dofs[static_cast<std::size_t>(j)] = sol[nf + j];
    const double area = impl_->moments.sum();
    const double mean = impl_->moments.dot(
        Eigen::Map<const Vec>(out.pressure.dofs.data(), np)) / area;
    for (auto& v : out.pressure.dofs) v -= mean;

    Vec v_all(nall);
    for (int i = 0; i < nall; ++i) v_all[i] = out.velocity.dofs[static_cast<std::size_t>(i)];
    const Vec div_res = impl_->B * v_all - rg1;
    out.divergence_residual = pressure_dual_norm(div_res);
    return out;
}

double TaylorHoodStokes::pressure_dual_norm(const Vec& r) const {
    const Vec z = impl_->mass_ldlt.solve(r);
    const double sq = r.dot(z);
    return sq > 0.0 ? std::sqrt(sq) : 0.0;
}

const SpMat& TaylorHoodStokes::divergence_matrix() const { return impl_->B; }

}  // namespace pdflow
