#ifndef PDFLOW_PARALLEL_HPP
#define PDFLOW_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pdflow {

// Runtime switches shared by all kernels. Deterministic mode forces the
// blocked reductions below, whose result is independent of the thread count.
struct ParallelConfig {
    int threads = 0;          // 0 = library default
    bool deterministic = true;
};

ParallelConfig& parallel_config();

void set_threads(int n);
void set_deterministic(bool on);

namespace detail {
constexpr std::size_t kBlock = 1024;

inline int active_threads() {
#ifdef _OPENMP
    const int n = parallel_config().threads;
    return n > 0 ? n : omp_get_max_threads();
#else
    return 1;
#endif
}
}  // namespace detail

// Sum of f(i) for i in [0, n). Partial sums are formed per fixed-size block
// and folded in block order, so the result is bitwise identical for any
// thread count. The blocks themselves run in parallel.
template <typename F>
double blocked_sum(std::size_t n, F&& f) {
    if (n == 0) return 0.0;
    const std::size_t nblocks = (n + detail::kBlock - 1) / detail::kBlock;
    std::vector<double> partial(nblocks, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(detail::active_threads())
#endif
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * detail::kBlock;
        const std::size_t hi = lo + detail::kBlock < n ? lo + detail::kBlock : n;
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += f(i);
        partial[static_cast<std::size_t>(b)] = acc;
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

// Serial reference for blocked_sum: same block structure, same fold order,
// no threading. Kept for the serial-vs-parallel equivalence tests.
template <typename F>
double blocked_sum_serial(std::size_t n, F&& f) {
    if (n == 0) return 0.0;
    const std::size_t nblocks = (n + detail::kBlock - 1) / detail::kBlock;
    std::vector<double> partial(nblocks, 0.0);
    for (std::size_t b = 0; b < nblocks; ++b) {
        const std::size_t lo = b * detail::kBlock;
        const std::size_t hi = lo + detail::kBlock < n ? lo + detail::kBlock : n;
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += f(i);
        partial[b] = acc;
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

// Unordered OpenMP reduction; used only when deterministic mode is off.
template <typename F>
double fast_sum(std::size_t n, F&& f) {
    double total = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : total) \
    num_threads(detail::active_threads())
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        total += f(static_cast<std::size_t>(i));
    return total;
}

template <typename F>
double reduce_sum(std::size_t n, F&& f) {
    return parallel_config().deterministic ? blocked_sum(n, f) : fast_sum(n, f);
}

// Deterministic max over f(i); ties by value are index-independent.
template <typename F>
double blocked_max(std::size_t n, F&& f) {
    const double lowest = -std::numeric_limits<double>::infinity();
    if (n == 0) return lowest;
    const std::size_t nblocks = (n + detail::kBlock - 1) / detail::kBlock;
    std::vector<double> partial(nblocks, lowest);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(detail::active_threads())
#endif
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * detail::kBlock;
        const std::size_t hi = lo + detail::kBlock < n ? lo + detail::kBlock : n;
        double acc = lowest;
        for (std::size_t i = lo; i < hi; ++i) {
            const double v = f(i);
            if (v > acc) acc = v;
        }
        partial[static_cast<std::size_t>(b)] = acc;
    }
    double total = lowest;
    for (double v : partial) total = v > total ? v : total;
    return total;
}

// Deterministic argmin over (value, index); the smallest index wins ties.
template <typename F>
std::pair<double, std::size_t> blocked_argmin(std::size_t n, F&& f) {
    const double inf = std::numeric_limits<double>::infinity();
    if (n == 0) return {inf, 0};
    const std::size_t nblocks = (n + detail::kBlock - 1) / detail::kBlock;
    std::vector<std::pair<double, std::size_t>> partial(nblocks, {inf, 0});
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(detail::active_threads())
#endif
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * detail::kBlock;
        const std::size_t hi = lo + detail::kBlock < n ? lo + detail::kBlock : n;
        std::pair<double, std::size_t> best{inf, lo};
        for (std::size_t i = lo; i < hi; ++i) {
            const double v = f(i);
            if (v < best.first) best = {v, i};
        }
        partial[static_cast<std::size_t>(b)] = best;
    }
    std::pair<double, std::size_t> best{inf, 0};
    for (const auto& pv : partial)
        if (pv.first < best.first) best = pv;
    return best;
}

// Parallel loop without reduction (independent iterations).
template <typename F>
void parallel_for(std::size_t n, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(detail::active_threads())
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        f(static_cast<std::size_t>(i));
}

}  // namespace pdflow

#endif
