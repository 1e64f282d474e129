#ifndef PDFLOW_SOLVER_HPP
#define PDFLOW_SOLVER_HPP

#include <functional>
#include <vector>

#include "pdflow/boundary.hpp"
#include "pdflow/extension.hpp"
#include "pdflow/smallness.hpp"

namespace pdflow {

using ForceDensity = std::function<Point(double, double)>;

struct SolveConfig {
    int n_reg = 100;        // regularization index n
    double sigma = 2.5;     // penalty exponent, must exceed max{s, 2}
    int max_picard = 60;
    double tol_rel = 1e-8;
    double damping = 1.0;   // initial damping factor in (0, 1]
    bool use_penalty = true;       // false disables the 1/n term entirely
    bool include_convective = true;
    bool newton = false;           // full Newton linearization behind a flag
    double eps_visc = 1e-10;       // floor for the secant coefficient base

    void validate(const ExponentTable& ex) const;
};

struct SolveResult {
    DiscreteField u;         // vector P2, zero trace
    DiscreteField pressure;  // scalar P1, zero mean
    DiscreteField v;         // u + g
    std::vector<double> residual_history;  // relative dual-norm residuals
    double Du_norm_p = 0.0;
    double Du_norm_sigma = 0.0;
    bool converged = false;
    int iterations = 0;
    bool apriori_ok = false;  // filled by verify_apriori
};

// Weak forms evaluated by element quadrature; fields may live in any vector
// space on one mesh.
double viscous_form(const DiscreteField& u, const DiscreteField& g, const DiscreteField& phi,
                    const StressModel& m);
double convective_form(const DiscreteField& u, const DiscreteField& g, const DiscreteField& phi);
double penalty_form(const DiscreteField& u, const DiscreteField& phi, double sigma);

/// |<T(u),u> - ( -<u.grad u, g> + 1/2 <g1 u, u> - <g.grad u, g> )|; vanishes
/// under refinement for discretely solenoidal zero-trace u.
double convective_reformulation_check(const DiscreteField& u, const DiscreteField& g,
                                      const DiscreteField& g1);

/// Damped fixed-point solve of the regularized system via lagged (secant)
/// coefficients, or full Newton when cfg.newton is set. The unknown u is the
/// zero-trace, discretely solenoidal part of v = u + g.
SolveResult solve_regularized(const Mesh& mesh, const ExtensionPair& ext, const ForceDensity& f,
                              const StressModel& m, const ExponentTable& ex,
                              const SolveConfig& cfg);

struct AprioriCheck {
    bool applicable = false;
    bool bound_holds = false;
    double margin = 0.0;
    double v_norm = 0.0;  // max{ n^(-2/(2 sigma - 1)) ||Du||_sigma, ||Du||_p }
};

AprioriCheck verify_apriori(const SolveResult& result, const SmallnessReport& report,
                            const SolveConfig& cfg);

/// Dual-norm residual of the pressure-coupled weak formulation at (v, pi)
/// plus the divergence-constraint residual and the boundary mismatch. The
/// final acceptance gate for a solve.
double residual_weak_form(const DiscreteField& v, const DiscreteField& pressure,
                          const BoundaryData& data, const ForceDensity& f, const StressModel& m);

}  // namespace pdflow

#endif
