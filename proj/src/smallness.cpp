#include "pdflow/smallness.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pdflow/parallel.hpp"

namespace pdflow {

namespace {

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

// 0^e := 0 for the data factors, matching the limit of each summand as the
// norm tends to zero.
double pow0(double base, double e) { return base <= 0.0 ? 0.0 : std::pow(base, e); }

}  // namespace

void DataNorms::validate() const {
    if (!finite_nonneg(K_d) || !finite_nonneg(K_f) || !finite_nonneg(K_n) ||
        !finite_nonneg(K_t) || !finite_nonneg(delta))
        throw std::invalid_argument("DataNorms: all entries must be finite and non-negative");
}

void Calibration::validate() const {
    if (!(c_L > 0.0) || !(c_G2 > 0.0) || !(c_G31 > 0.0) || !(c_G3f > 0.0) || !(c_G1 > 0.0))
        throw std::invalid_argument("Calibration: all constants must be positive");
}

LTerms eval_L_terms(double eta, const DataNorms& norms, const ExponentTable& ex) {
    if (!(eta > 0.0)) throw std::invalid_argument("eval_L: eta must be positive");
    norms.validate();

    const double p = ex.p;
    const double a = ex.a();
    const double b = ex.b();
    const double Kd = norms.K_d, Kn = norms.K_n, Kt = norms.K_t, Kf = norms.K_f;
    const double kdn = Kd + Kn;
    const double B = Kd * Kd + Kn * Kn + Kf + pow0(Kt + Kn + Kd + norms.delta, p - 1.0);

    LTerms out;
    if (kdn > 0.0) {
        const double lead = std::pow(kdn, p - 1.0);
        out.t[0] = lead * pow0(B, 2.0 - p);
        if (Kt > 0.0) {
            out.t[1] = lead * std::pow(std::pow(eta, 2.0 * a) * Kt * Kt, 2.0 - p);
            out.t[2] = lead * std::pow(std::pow(eta, b) * Kt, (p - 1.0) * (2.0 - p));
        }
    }
    if (Kt > 0.0) {
        out.t[3] = std::pow(std::pow(eta, a) * Kt, p - 1.0) * pow0(B, 2.0 - p);
        out.t[4] = std::pow(eta, a * (3.0 - p)) * std::pow(Kt, 3.0 - p);
        out.t[5] = std::pow(eta, (a + b * (2.0 - p)) * (p - 1.0)) *
                   std::pow(Kt, (p - 1.0) * (3.0 - p));
    }
    return out;
}

double eval_L(double eta, const DataNorms& norms, const ExponentTable& ex) {
    return eval_L_terms(eta, norms, ex).sum();
}

std::string to_string(MinimizerStatus s) {
    switch (s) {
        case MinimizerStatus::interior: return "interior";
        case MinimizerStatus::constant: return "constant";
        case MinimizerStatus::boundary_lo: return "infimum at lower boundary";
        case MinimizerStatus::boundary_hi: return "infimum at upper boundary";
    }
    return "?";
}

MinimizeResult minimize_L(const DataNorms& norms, const ExponentTable& ex, double lo, double hi) {
    if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("minimize_L: invalid eta range");
    norms.validate();

    if (norms.K_t == 0.0) {
        // Every eta-bearing term carries a K_t factor; L is constant.
        return {lo, eval_L(lo, norms, ex), MinimizerStatus::constant};
    }

    constexpr int kGrid = 200;
    const double llo = std::log(lo), lhi = std::log(hi);
    std::vector<double> etas(kGrid);
    for (int i = 0; i < kGrid; ++i)
        etas[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (kGrid - 1));
    etas.front() = lo;
    etas.back() = hi;

    const auto [val, idx] = blocked_argmin(
        etas.size(), [&](std::size_t i) { return eval_L(etas[i], norms, ex); });

    if (idx == 0) return {lo, val, MinimizerStatus::boundary_lo};
    if (idx == etas.size() - 1) return {hi, val, MinimizerStatus::boundary_hi};

    // Golden-section on the bracketing cell, in log coordinates where L is
    // convex (posynomial).
    double xa = std::log(etas[idx - 1]);
    double xb = std::log(etas[idx + 1]);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = xb - gr * (xb - xa);
    double x2 = xa + gr * (xb - xa);
    double f1 = eval_L(std::exp(x1), norms, ex);
    double f2 = eval_L(std::exp(x2), norms, ex);
    while (xb - xa > 1e-10 * (std::abs(xa) + std::abs(xb) + 1.0)) {
        if (f1 <= f2) {
            xb = x2;
            x2 = x1;
            f2 = f1;
            x1 = xb - gr * (xb - xa);
            f1 = eval_L(std::exp(x1), norms, ex);
        } else {
            xa = x1;
            x1 = x2;
            f1 = f2;
            x2 = xa + gr * (xb - xa);
            f2 = eval_L(std::exp(x2), norms, ex);
        }
    }
    const double eta_star = std::exp(0.5 * (xa + xb));
    return {eta_star, eval_L(eta_star, norms, ex), MinimizerStatus::interior};
}

GConstants g_constants(double eta, const DataNorms& norms, const ExponentTable& ex,
                       const Calibration& cal, const StressModel& m) {
    if (!(eta > 0.0)) throw std::invalid_argument("g_constants: eta must be positive");
    norms.validate();
    cal.validate();

    const double p = ex.p;
    const double a = ex.a();
    const double b = ex.b();
    const double Kd = norms.K_d, Kn = norms.K_n, Kt = norms.K_t, Kf = norms.K_f;

    GConstants g;
    g.G1 = cal.c_G1 * m.C1;
    const double eta_a_Kt = Kt > 0.0 ? std::pow(eta, a) * Kt : 0.0;
    const double eta_b_Kt = Kt > 0.0 ? std::pow(eta, b) * Kt : 0.0;
    g.G2 = cal.c_G2 * (Kd + Kn + eta_a_Kt);
    g.G31 = cal.c_G31 * pow0(eta_b_Kt + Kt + Kn + Kd + norms.delta, p - 1.0);
    g.G32 = cal.c_G2 * (Kd * Kd + Kn * Kn + eta_a_Kt * eta_a_Kt);
    g.G3 = g.G31 + g.G32 + cal.c_G3f * Kf;
    return g;
}

double coercivity_radius(double G1, double G3, double p) {
    if (!(G1 > 0.0)) throw std::invalid_argument("coercivity_radius: G1 must be positive");
    if (G3 < 0.0) throw std::invalid_argument("coercivity_radius: G3 must be non-negative");
    if (G3 == 0.0) return 0.0;
    return std::pow(2.0 * G3 / G1, 1.0 / (p - 1.0));
}

SmallnessReport check_smallness(const DataNorms& norms, const ExponentTable& ex,
                                const Calibration& cal, const StressModel& m) {
    const MinimizeResult min = minimize_L(norms, ex);
    const GConstants g = g_constants(min.eta_star, norms, ex, cal, m);

    SmallnessReport rep;
    rep.eta_star = min.eta_star;
    rep.L_min = min.L_min;
    rep.status = min.status;
    rep.G1 = g.G1;
    rep.G2 = g.G2;
    rep.G3 = g.G3;
    rep.R = coercivity_radius(g.G1, g.G3, ex.p);
    rep.satisfied = m.C1 / cal.c_L >= min.L_min;
    const double direct_rhs =
        2.0 * pow0(g.G2, ex.p - 1.0) * pow0(g.G3, 2.0 - ex.p);
    rep.direct_holds = g.G1 >= direct_rhs;
    return rep;
}

}  // namespace pdflow
