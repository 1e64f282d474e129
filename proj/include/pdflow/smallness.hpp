#ifndef PDFLOW_SMALLNESS_HPP
#define PDFLOW_SMALLNESS_HPP

#include <array>
#include <string>

#include "pdflow/exponents.hpp"
#include "pdflow/tensor.hpp"

namespace pdflow {

/// Abbreviated data norms: divergence, force, normal and tangential boundary
/// data, plus the stress regularization delta.
struct DataNorms {
    double K_d = 0.0;
    double K_f = 0.0;
    double K_n = 0.0;
    double K_t = 0.0;
    double delta = 0.0;

    void validate() const;
};

/// Generic constants of the estimates; the analysis never quantifies them,
/// so they are user calibration knobs defaulting to 1.
struct Calibration {
    double c_L = 1.0;    // constant in the smallness condition
    double c_G2 = 1.0;   // convective constants (G2 and G32 share it)
    double c_G31 = 1.0;  // viscous data constant
    double c_G3f = 1.0;  // force constant in G3
    double c_G1 = 1.0;   // coercivity constant multiplying C1

    void validate() const;
};

/// The six summands of the smallness functional L(eta). Any term whose data
/// factor vanishes is 0 by convention, regardless of its eta power.
struct LTerms {
    std::array<double, 6> t{};
    double sum() const { return t[0] + t[1] + t[2] + t[3] + t[4] + t[5]; }
};

LTerms eval_L_terms(double eta, const DataNorms& norms, const ExponentTable& ex);
double eval_L(double eta, const DataNorms& norms, const ExponentTable& ex);

enum class MinimizerStatus { interior, constant, boundary_lo, boundary_hi };

std::string to_string(MinimizerStatus s);

struct MinimizeResult {
    double eta_star = 0.0;
    double L_min = 0.0;
    MinimizerStatus status = MinimizerStatus::interior;
};

/// Minimizes L over [lo, hi]: 200-point log grid, then golden-section
/// refinement of the bracketing cell to relative tolerance 1e-10. L is a
/// posynomial in eta (convex in log eta), so the interior minimum is unique;
/// the grid guards the degenerate regimes, which are returned with a flag.
MinimizeResult minimize_L(const DataNorms& norms, const ExponentTable& ex, double lo = 1e-6,
                          double hi = 1e6);

struct GConstants {
    double G1 = 0.0;
    double G2 = 0.0;
    double G3 = 0.0;
    double G31 = 0.0;
    double G32 = 0.0;
};

GConstants g_constants(double eta, const DataNorms& norms, const ExponentTable& ex,
                       const Calibration& cal, const StressModel& m);

/// R = (2 G3 / G1)^(1/(p-1)); zero data gives R = 0.
double coercivity_radius(double G1, double G3, double p);

struct SmallnessReport {
    double eta_star = 0.0;
    double L_min = 0.0;
    double G1 = 0.0;
    double G2 = 0.0;
    double G3 = 0.0;
    double R = 0.0;
    bool satisfied = false;     // C1 / c_L >= L_min
    bool direct_holds = false;  // G1 >= 2 G2^(p-1) G3^(2-p) at eta_star
    MinimizerStatus status = MinimizerStatus::interior;
};

/// Evaluates the sufficient condition: optimizes eta, evaluates the G
/// constants and the a-priori radius there, and records both the smallness
/// test and the direct coercivity inequality (the former upper-bounds the
/// latter, so the two may disagree for loosely chosen calibration).
SmallnessReport check_smallness(const DataNorms& norms, const ExponentTable& ex,
                                const Calibration& cal, const StressModel& m);

}  // namespace pdflow

#endif
