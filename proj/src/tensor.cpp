#include "pdflow/tensor.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "pdflow/parallel.hpp"

namespace pdflow {

SymMatrix::SymMatrix(int d) : d_(d) {
    if (d != 2 && d != 3) throw std::invalid_argument("SymMatrix: dimension must be 2 or 3");
    a_.fill(0.0);
}

SymMatrix SymMatrix::diag(int d, const double* values) {
    SymMatrix m(d);
    for (int i = 0; i < d; ++i) m.set(i, i, values[i]);
    return m;
}

SymMatrix SymMatrix::diag2(double a, double b) {
    const double v[2] = {a, b};
    return diag(2, v);
}

SymMatrix SymMatrix::diag3(double a, double b, double c) {
    const double v[3] = {a, b, c};
    return diag(3, v);
}

SymMatrix SymMatrix::from_rowmajor(int d, const double* e, double tol) {
    SymMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            if (std::abs(e[i * d + j] - e[j * d + i]) > tol)
                throw std::invalid_argument("SymMatrix: input entries are not symmetric");
            m.set(i, j, e[i * d + j]);
        }
    return m;
}

void SymMatrix::set(int i, int j, double v) {
    a_[static_cast<std::size_t>(i * d_ + j)] = v;
    a_[static_cast<std::size_t>(j * d_ + i)] = v;
}

double SymMatrix::frobenius() const {
    double s = 0.0;
    for (int i = 0; i < d_ * d_; ++i) s += a_[static_cast<std::size_t>(i)] * a_[static_cast<std::size_t>(i)];
    return std::sqrt(s);
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
    for (int i = 0; i < d_ * d_; ++i) a_[static_cast<std::size_t>(i)] += o.a_[static_cast<std::size_t>(i)];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
    for (int i = 0; i < d_ * d_; ++i) a_[static_cast<std::size_t>(i)] -= o.a_[static_cast<std::size_t>(i)];
    return *this;
}

SymMatrix& SymMatrix::operator*=(double t) {
    for (int i = 0; i < d_ * d_; ++i) a_[static_cast<std::size_t>(i)] *= t;
    return *this;
}

SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
SymMatrix operator*(double t, SymMatrix a) { return a *= t; }

double dot(const SymMatrix& a, const SymMatrix& b) {
    double s = 0.0;
    const int d = a.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s += a(i, j) * b(i, j);
    return s;
}

StressModel::StressModel(double p_, double delta_, double C1_, double C2_)
    : p(p_), delta(delta_), C1(C1_), C2(C2_) {
    if (!(p > 1.0)) throw std::invalid_argument("StressModel: p must exceed 1");
    if (delta < 0.0) throw std::invalid_argument("StressModel: delta must be non-negative");
    if (!(C1 > 0.0) || !(C2 > 0.0)) throw std::invalid_argument("StressModel: C1, C2 must be positive");
    if (C1 > C2) throw std::invalid_argument("StressModel: C1 must not exceed C2");
}

SymMatrix stress_eval(const SymMatrix& A, const StressModel& m) {
    if (!(m.p > 1.0)) throw std::invalid_argument("stress_eval: p must exceed 1");
    const double norm = A.frobenius();
    if (norm == 0.0) return SymMatrix::zero(A.dim());
    const double factor = std::pow(m.delta + norm, m.p - 2.0);
    SymMatrix out = A;
    out *= factor;
    return out;
}

StructureReport check_structure_inequalities(
    const StressModel& m, const std::vector<std::pair<SymMatrix, SymMatrix>>& samples) {
    if (samples.empty())
        throw std::invalid_argument("check_structure_inequalities: sample set is empty");

    const std::size_t n = samples.size();
    // Per-pair ratios; skipped pairs are encoded as +inf / -inf so the
    // blocked reductions stay branch-free and deterministic.
    const double inf = std::numeric_limits<double>::infinity();
    auto lower_of = [&](std::size_t i) {
        const auto& [A, B] = samples[i];
        SymMatrix diff = A - B;
        const double dn = diff.frobenius();
        if (dn < 1e-14) return inf;
        const SymMatrix ds = stress_eval(A, m) - stress_eval(B, m);
        const double weight = std::pow(m.delta + B.frobenius() + dn, m.p - 2.0);
        return dot(ds, diff) / (weight * dn * dn);
    };
    auto upper_of = [&](std::size_t i) {
        const auto& [A, B] = samples[i];
        SymMatrix diff = A - B;
        const double dn = diff.frobenius();
        if (dn < 1e-14) return -inf;
        const SymMatrix ds = stress_eval(A, m) - stress_eval(B, m);
        const double weight = std::pow(m.delta + B.frobenius() + dn, m.p - 2.0);
        return ds.frobenius() / (weight * dn);
    };

    StructureReport rep;
    rep.min_ratio_lower = -blocked_max(n, [&](std::size_t i) { return -lower_of(i); });
    rep.max_ratio_upper = blocked_max(n, upper_of);
    std::size_t skipped = 0;
    for (const auto& [A, B] : samples)
        if ((A - B).frobenius() < 1e-14) ++skipped;
    rep.skipped_pairs = skipped;
    rep.used_pairs = n - skipped;
    if (rep.used_pairs == 0)
        throw std::invalid_argument("check_structure_inequalities: all pairs degenerate");
    rep.passes = rep.min_ratio_lower >= m.C1 && rep.max_ratio_upper <= m.C2;
    return rep;
}

bool reverse_jensen_check(double alpha, const std::vector<double>& xs) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("reverse_jensen_check: alpha must lie in (0,1)");
    double sum = 0.0, sum_pow = 0.0;
    for (double x : xs) {
        if (x < 0.0) throw std::invalid_argument("reverse_jensen_check: entries must be non-negative");
        sum += x;
        sum_pow += std::pow(x, alpha);
    }
    // Equality (n = 1) must count as true; allow roundoff slack.
    return std::pow(sum, alpha) <= sum_pow * (1.0 + 1e-12) + 1e-300;
}

std::vector<std::pair<SymMatrix, SymMatrix>> random_sym_pairs(int d, std::size_t n, double lo,
                                                              double hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(lo, hi);
    std::vector<std::pair<SymMatrix, SymMatrix>> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        SymMatrix A(d), B(d);
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                A.set(i, j, uni(rng));
                B.set(i, j, uni(rng));
            }
        out.emplace_back(A, B);
    }
    return out;
}

StressModel calibrate_structure_constants(double p, double delta, int d, std::size_t n,
                                          std::uint64_t seed) {
    StressModel probe(p, delta);
    const auto pairs = random_sym_pairs(d, n, -2.0, 2.0, seed);
    const auto rep = check_structure_inequalities(probe, pairs);
    return StressModel(p, delta, 0.99 * rep.min_ratio_lower, 1.01 * rep.max_ratio_upper);
}

}  // namespace pdflow
