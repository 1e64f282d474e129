#ifndef PDFLOW_TENSOR_HPP
#define PDFLOW_TENSOR_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pdflow {

/// Symmetric d x d matrix, d in {2, 3}. Entries are stored dense row-major;
/// writes go through set() which mirrors the off-diagonal entry.
class SymMatrix {
public:
    explicit SymMatrix(int d);
    static SymMatrix zero(int d) { return SymMatrix(d); }
    static SymMatrix diag(int d, const double* values);
    static SymMatrix diag2(double a, double b);
    static SymMatrix diag3(double a, double b, double c);

    // Validates symmetry of the supplied row-major entries.
    static SymMatrix from_rowmajor(int d, const double* entries, double tol = 1e-12);

    int dim() const { return d_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * d_ + j)]; }
    void set(int i, int j, double v);

    double frobenius() const;

    SymMatrix& operator+=(const SymMatrix& o);
    SymMatrix& operator-=(const SymMatrix& o);
    SymMatrix& operator*=(double t);

private:
    int d_;
    std::array<double, 9> a_{};
};

SymMatrix operator+(SymMatrix a, const SymMatrix& b);
SymMatrix operator-(SymMatrix a, const SymMatrix& b);
SymMatrix operator*(double t, SymMatrix a);

/// Frobenius inner product.
double dot(const SymMatrix& a, const SymMatrix& b);

/// The (p,delta)-structure law with its characteristics. The shipped
/// representative is S(A) = (delta + |A|)^(p-2) A with the Frobenius norm;
/// C1 and C2 are calibrated empirically (see calibrate_structure_constants).
struct StressModel {
    double p = 2.0;
    double delta = 0.0;
    double C1 = 1.0;
    double C2 = 1.0;

    StressModel() = default;
    StressModel(double p_, double delta_, double C1_ = 1.0, double C2_ = 1.0);
};

/// S(A) = (delta + |A|)^(p-2) A. S(0) = 0 exactly for every delta >= 0.
SymMatrix stress_eval(const SymMatrix& A, const StressModel& m);

struct StructureReport {
    double min_ratio_lower = 0.0;  // min of monotonicity ratio over pairs
    double max_ratio_upper = 0.0;  // max of growth ratio over pairs
    std::size_t used_pairs = 0;
    std::size_t skipped_pairs = 0;
    bool passes = false;           // min >= C1 and max <= C2
};

/// Evaluates both structure inequalities on the sample pairs. Pairs with
/// |A - B| below 1e-14 are skipped.
StructureReport check_structure_inequalities(const StressModel& m,
                                             const std::vector<std::pair<SymMatrix, SymMatrix>>& samples);

/// [sum x_i]^alpha <= sum x_i^alpha for alpha in (0,1), x_i >= 0.
bool reverse_jensen_check(double alpha, const std::vector<double>& xs);

/// Seeded uniform sample of symmetric matrix pairs with entries in [lo, hi].
std::vector<std::pair<SymMatrix, SymMatrix>> random_sym_pairs(int d, std::size_t n, double lo,
                                                              double hi, std::uint64_t seed);

/// Empirical characteristics of the shipped law: ratio extrema over a seeded
/// pre-run of n pairs, widened to C1 = 0.99 * min, C2 = 1.01 * max.
StressModel calibrate_structure_constants(double p, double delta, int d, std::size_t n,
                                          std::uint64_t seed);

}  // namespace pdflow

#endif
