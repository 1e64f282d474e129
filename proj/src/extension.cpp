#include "pdflow/extension.hpp"

#include <Eigen/SparseCholesky>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "pdflow/norms.hpp"

namespace pdflow {

double cutoff_eval(double eta, double dist) {
    if (!(eta > 0.0)) throw std::invalid_argument("cutoff_eval: eta must be positive");
    if (dist < 0.0) throw std::invalid_argument("cutoff_eval: distance must be non-negative");
    if (dist <= eta) return 1.0;
    if (dist >= 2.0 * eta) return 0.0;
    return 2.0 - dist / eta;
}

struct ExtensionBuilder::Impl {
    TaylorHoodStokes stokes;
    // Scalar P1 Laplace split for the harmonic lift.
    std::vector<int> free_nodes;
    std::vector<int> node_to_free;
    SpMat A1;  // full P1 stiffness
    Eigen::SimplicialLDLT<SpMat> lap_ldlt;

    explicit Impl(const Mesh& mesh) : stokes(mesh) {}
};

ExtensionBuilder::ExtensionBuilder(const Mesh& mesh)
    : mesh_(&mesh), dist_(distance_field(mesh)), impl_(std::make_unique<Impl>(mesh)) {
    impl_->A1 = p1_stiffness(mesh);
    impl_->node_to_free.assign(static_cast<std::size_t>(mesh.num_nodes()), -1);
    for (int i = 0; i < mesh.num_nodes(); ++i)
        if (!mesh.is_boundary_node(i)) {
            impl_->node_to_free[static_cast<std::size_t>(i)] =
                static_cast<int>(impl_->free_nodes.size());
            impl_->free_nodes.push_back(i);
        }
    const int nf = static_cast<int>(impl_->free_nodes.size());
    std::vector<Eigen::Triplet<double>> trips;
    for (int k = 0; k < impl_->A1.outerSize(); ++k)
        for (SpMat::InnerIterator it(impl_->A1, k); it; ++it) {
            const int ri = impl_->node_to_free[static_cast<std::size_t>(it.row())];
            const int ci = impl_->node_to_free[static_cast<std::size_t>(it.col())];
            if (ri >= 0 && ci >= 0) trips.emplace_back(ri, ci, it.value());
        }
    SpMat Aff(nf, nf);
    Aff.setFromTriplets(trips.begin(), trips.end());
    impl_->lap_ldlt.compute(Aff);
    if (impl_->lap_ldlt.info() != Eigen::Success)
        throw std::runtime_error("ExtensionBuilder: Laplace factorization failed");
}

ExtensionBuilder::~ExtensionBuilder() = default;

DiscreteField ExtensionBuilder::cutoff_field(double eta) const {
    DiscreteField psi = DiscreteField::zeros(Space::ScalarP1, *mesh_);
    for (std::size_t i = 0; i < psi.dofs.size(); ++i)
        psi.dofs[i] = cutoff_eval(eta, dist_.dofs[i]);
    return psi;
}

DiscreteField ExtensionBuilder::harmonic_lift(const TraceValues& g) const {
    const Mesh& mesh = *mesh_;
    const std::vector<Point> nodal = nodal_from_trace(g, mesh);
    const int nf = static_cast<int>(impl_->free_nodes.size());
    DiscreteField out = DiscreteField::zeros(Space::VectorP1, mesh);

    for (int c = 0; c < 2; ++c) {
        Vec g_full = Vec::Zero(mesh.num_nodes());
        for (int i = 0; i < mesh.num_nodes(); ++i)
            if (mesh.is_boundary_node(i))
                g_full[i] = c == 0 ? nodal[static_cast<std::size_t>(i)].x
                                   : nodal[static_cast<std::size_t>(i)].y;
        const Vec Ag = impl_->A1 * g_full;
        Vec rhs(nf);
        for (int i = 0; i < nf; ++i) rhs[i] = -Ag[impl_->free_nodes[static_cast<std::size_t>(i)]];
        const Vec sol = impl_->lap_ldlt.solve(rhs);
        for (int i = 0; i < mesh.num_nodes(); ++i) {
            const int fi = impl_->node_to_free[static_cast<std::size_t>(i)];
            out.dofs[static_cast<std::size_t>(2 * i + c)] = fi >= 0 ? sol[fi] : g_full[i];
        }
    }
    return out;
}

StokesResult ExtensionBuilder::stokes_lift(const TraceValues& g_n, const DiscreteField& g1) const {
    const Mesh& mesh = *mesh_;
    // Compatibility precondition (the necessary condition for div k = g1
    // with the prescribed normal trace).
    BoundaryData probe;
    probe.g1 = g1;
    probe.g2 = nodal_from_trace(g_n, mesh);
    const double residual = check_compatibility(probe, mesh);
    double scale = 0.0;
    for (const auto& ev : g_n.v) scale = std::max({scale, norm(ev[0]), norm(ev[1])});
    for (double v : g1.dofs) scale = std::max(scale, std::abs(v));
    if (residual > 1e-10 * std::max(1.0, scale)) {
        std::ostringstream os;
        os << "stokes_lift: incompatible data, |int g1 - flux(g2)| = " << residual;
        throw std::invalid_argument(os.str());
    }
    return impl_->stokes.solve(p2_boundary_values(g_n, mesh), &g1);
}

DiscreteField ExtensionBuilder::divergence_correct(const DiscreteField& f) const {
    const Mesh& mesh = *mesh_;
    if (f.space != Space::VectorP2 || f.mesh != mesh_)
        throw std::invalid_argument("divergence_correct: vector P2 field on the builder mesh required");

    // Precondition: vanishing normal trace, checked edge-wise at both
    // endpoints and the midpoint.
    double scale = 0.0;
    for (double v : f.dofs) scale = std::max(scale, std::abs(v));
    double worst = 0.0;
    for (const auto& be : mesh.boundary_edges()) {
        const int mid = mesh.num_nodes() + be.edge_id;
        for (int node : {be.a, be.b, mid}) {
            const Point val{f.dofs[static_cast<std::size_t>(2 * node)],
                            f.dofs[static_cast<std::size_t>(2 * node + 1)]};
            worst = std::max(worst, std::abs(dot(val, be.normal)));
        }
    }
    if (worst > 1e-8 * (1.0 + scale)) {
        std::ostringstream os;
        os << "divergence_correct: nonzero normal trace, max |f.n| = " << worst;
        throw std::invalid_argument(os.str());
    }

    // Zero-trace Stokes velocity with divergence datum div f. The datum
    // enters weakly: <div w, rho> = <div f, rho> for all pressure rho, i.e.
    // the moments are B f.
    std::vector<std::pair<int, Point>> zero_bc;
    for (int node : impl_->stokes.partition().boundary_nodes) zero_bc.emplace_back(node, Point{});

    Vec fv(f.dofs.size());
    for (std::size_t i = 0; i < f.dofs.size(); ++i) fv[static_cast<Eigen::Index>(i)] = f.dofs[i];
    const Vec target = impl_->stokes.divergence_matrix() * fv;

    StokesResult res = impl_->stokes.solve_moments(zero_bc, target);
    return res.velocity;
}

TangentialExtension ExtensionBuilder::tangential_extension(const TraceValues& g_t, double eta,
                                                           const ExponentTable& ex) const {
    const Mesh& mesh = *mesh_;
    if (!(eta > 0.0) || !(eta < 0.5 * mesh.diameter()))
        throw std::invalid_argument("tangential_extension: eta must lie in (0, diam/2)");
    // Tangential data: vanishing normal component edge-wise.
    double scale = 0.0, worst = 0.0;
    const auto& bedges = mesh.boundary_edges();
    for (std::size_t i = 0; i < bedges.size(); ++i)
        for (int k = 0; k < 2; ++k) {
            scale = std::max(scale, norm(g_t.v[i][static_cast<std::size_t>(k)]));
            worst = std::max(worst,
                             std::abs(dot(g_t.v[i][static_cast<std::size_t>(k)], bedges[i].normal)));
        }
    if (worst > 1e-10 * (1.0 + scale))
        throw std::invalid_argument("tangential_extension: datum has a normal component");

    TangentialExtension out;
    out.layer_resolved = eta >= 2.0 * mesh.h_max();
    if (!out.layer_resolved)
        std::fprintf(stderr,
                     "tangential_extension: warning: eta = %g below 2 h_max = %g, layer unresolved\n",
                     eta, 2.0 * mesh.h_max());

    out.h = harmonic_lift(g_t);
    const DiscreteField psi = cutoff_field(eta);
    out.h_tilde = product_to_p2(psi, out.h);
    const DiscreteField correction = divergence_correct(out.h_tilde);
    out.h_eta = out.h_tilde - correction;

    out.norm_h_q = norm_Lp(out.h, ex.q);
    out.norm_r = norm_Lp(out.h_eta, ex.r);
    out.norm_w1p = norm_W1p(out.h_eta, ex.p);
    out.norm_grad_p = norm_grad_Lp(out.h_eta, ex.p);

    // Weak divergence residual in the discrete pressure norm.
    Vec hv(out.h_eta.dofs.size());
    for (std::size_t i = 0; i < out.h_eta.dofs.size(); ++i)
        hv[static_cast<Eigen::Index>(i)] = out.h_eta.dofs[i];
    out.div_residual = impl_->stokes.pressure_dual_norm(impl_->stokes.divergence_matrix() * hv);
    return out;
}

ExtensionPair ExtensionBuilder::extension_pair(const BoundaryData& data, double eta,
                                               const ExponentTable& ex) const {
    const Mesh& mesh = *mesh_;
    const double residual = check_compatibility(data, mesh);
    double scale = 1.0;
    for (const Point& g : data.g2) scale = std::max(scale, norm(g));
    if (residual > 1e-10 * scale) {
        std::ostringstream os;
        os << "build_extension_pair: incompatible data, residual = " << residual;
        throw std::invalid_argument(os.str());
    }

    const BoundarySplit split = decompose_boundary(data, mesh);
    double gn_size = 0.0, gt_size = 0.0, g1_size = 0.0;
    for (const auto& ev : split.g_n.v) gn_size = std::max({gn_size, norm(ev[0]), norm(ev[1])});
    for (const auto& ev : split.g_t.v) gt_size = std::max({gt_size, norm(ev[0]), norm(ev[1])});
    for (double v : data.g1.dofs) g1_size = std::max(g1_size, std::abs(v));

    ExtensionPair out;
    out.pressure = DiscreteField::zeros(Space::ScalarP1, mesh);
    if (gn_size > 0.0 || g1_size > 0.0) {
        StokesResult lift = stokes_lift(split.g_n, data.g1);
        out.k = std::move(lift.velocity);
        out.pressure = std::move(lift.pressure);
        out.measured_norms["div_residual_k"] = lift.divergence_residual;
    } else {
        out.k = DiscreteField::zeros(Space::VectorP2, mesh);
        out.measured_norms["div_residual_k"] = 0.0;
    }

    if (gt_size > 0.0) {
        TangentialExtension tang = tangential_extension(split.g_t, eta, ex);
        out.h_eta = std::move(tang.h_eta);
        out.measured_norms["h_eta_r"] = tang.norm_r;
        out.measured_norms["h_eta_w1p"] = tang.norm_w1p;
        out.measured_norms["h_eta_grad_p"] = tang.norm_grad_p;
        out.measured_norms["h_q"] = tang.norm_h_q;
        out.measured_norms["div_residual_h"] = tang.div_residual;
    } else {
        out.h_eta = DiscreteField::zeros(Space::VectorP2, mesh);
        out.measured_norms["h_eta_r"] = 0.0;
        out.measured_norms["h_eta_w1p"] = 0.0;
        out.measured_norms["h_eta_grad_p"] = 0.0;
        out.measured_norms["h_q"] = 0.0;
        out.measured_norms["div_residual_h"] = 0.0;
    }

    out.g = out.h_eta + out.k;
    out.measured_norms["k_r"] = norm_Lp(out.k, ex.r);
    out.measured_norms["k_w1p"] = norm_W1p(out.k, ex.p);
    out.measured_norms["g_r"] = norm_Lp(out.g, ex.r);
    out.measured_norms["g_w1p"] = norm_W1p(out.g, ex.p);
    return out;
}

DiscreteField harmonic_lift(const Mesh& mesh, const TraceValues& g) {
    return ExtensionBuilder(mesh).harmonic_lift(g);
}

StokesResult stokes_lift(const Mesh& mesh, const TraceValues& g_n, const DiscreteField& g1) {
    return ExtensionBuilder(mesh).stokes_lift(g_n, g1);
}

DiscreteField divergence_correct(const Mesh& mesh, const DiscreteField& f) {
    return ExtensionBuilder(mesh).divergence_correct(f);
}

TangentialExtension build_tangential_extension(const Mesh& mesh, const TraceValues& g_t, double eta,
                                               const ExponentTable& ex) {
    return ExtensionBuilder(mesh).tangential_extension(g_t, eta, ex);
}

ExtensionPair build_extension_pair(const Mesh& mesh, const BoundaryData& data, double eta,
                                   const ExponentTable& ex) {
    return ExtensionBuilder(mesh).extension_pair(data, eta, ex);
}

}  // namespace pdflow
