#ifndef PDFLOW_EXTENSION_HPP
#define PDFLOW_EXTENSION_HPP

#include <map>
#include <memory>
#include <string>

#include "pdflow/boundary.hpp"
#include "pdflow/exponents.hpp"
#include "pdflow/field.hpp"
#include "pdflow/stokes.hpp"

namespace pdflow {

/// Boundary-layer cutoff: 1 within distance eta of the boundary, linear ramp
/// down to 0 at distance 2 eta.
double cutoff_eval(double eta, double dist);

struct TangentialExtension {
    DiscreteField h;        // vector P1 harmonic lift of g_t
    DiscreteField h_tilde;  // vector P2, cutoff applied, supported in the 2 eta layer
    DiscreteField h_eta;    // vector P2, discretely solenoidal, trace g_t
    double norm_h_q = 0.0;       // ||h||_q
    double norm_r = 0.0;         // ||h_eta||_r
    double norm_w1p = 0.0;       // ||D h_eta||_p
    double norm_grad_p = 0.0;    // ||grad h_eta||_p
    double div_residual = 0.0;   // weak divergence of h_eta, pressure norm
    bool layer_resolved = true;  // eta >= 2 h_max
};

struct ExtensionPair {
    DiscreteField h_eta;    // vector P2
    DiscreteField k;        // vector P2
    DiscreteField g;        // h_eta + k
    DiscreteField pressure; // Stokes-lift pressure (zero mean)
    std::map<std::string, double> measured_norms;
};

/// Constructs the boundary-data extensions on one mesh: harmonic tangential
/// lift, cutoff and divergence correction for h_eta; Taylor-Hood Stokes lift
/// for the normal/divergence part k. Factorizations are cached, so eta
/// sweeps on a fixed mesh are cheap.
class ExtensionBuilder {
public:
    explicit ExtensionBuilder(const Mesh& mesh);
    ~ExtensionBuilder();

    const Mesh& mesh() const { return *mesh_; }
    const DiscreteField& distance() const { return dist_; }

    /// Scalar P1 interpolant of cutoff_eval(eta, distance).
    DiscreteField cutoff_field(double eta) const;

    /// Componentwise discrete harmonic P1 lift of the trace.
    DiscreteField harmonic_lift(const TraceValues& g) const;

    /// Mixed Stokes lift of (g_n, g1); requires compatible data.
    StokesResult stokes_lift(const TraceValues& g_n, const DiscreteField& g1) const;

    /// Zero-trace field with the same weak divergence as f; requires
    /// vanishing normal trace of f.
    DiscreteField divergence_correct(const DiscreteField& f) const;

    TangentialExtension tangential_extension(const TraceValues& g_t, double eta,
                                             const ExponentTable& ex) const;

    ExtensionPair extension_pair(const BoundaryData& data, double eta,
                                 const ExponentTable& ex) const;

private:
    struct Impl;
    const Mesh* mesh_;
    DiscreteField dist_;
    std::unique_ptr<Impl> impl_;
};

// One-shot conveniences.
DiscreteField harmonic_lift(const Mesh& mesh, const TraceValues& g);
StokesResult stokes_lift(const Mesh& mesh, const TraceValues& g_n, const DiscreteField& g1);
DiscreteField divergence_correct(const Mesh& mesh, const DiscreteField& f);
TangentialExtension build_tangential_extension(const Mesh& mesh, const TraceValues& g_t,
                                               double eta, const ExponentTable& ex);
ExtensionPair build_extension_pair(const Mesh& mesh, const BoundaryData& data, double eta,
                                   const ExponentTable& ex);

}  // namespace pdflow

#endif
