#ifndef PDFLOW_EXPONENTS_HPP
#define PDFLOW_EXPONENTS_HPP

namespace pdflow {

/// Secondary exponents derived from (d, p, q, sigma):
///   p* = d p / (d - p),  p' = p / (p - 1),
///   s  = max{(p*/2)', p},  r = max{d p / (d p - 2 d + p), 2 p'}.
/// Valid for 2d/(d+1) < p < 2, q > r and sigma > max{s, 2}; these
/// constraints imply 1/p + 1/p* + 1/r <= 1 with equality exactly when the
/// first branch of r is active.
struct ExponentTable {
    int d = 2;
    double p = 0.0;
    double p_star = 0.0;
    double p_prime = 0.0;
    double s = 0.0;
    double r = 0.0;
    double q = 0.0;
    double sigma = 0.0;

    // 1/r - 1/q and 1/p - 1/q - 1: the two eta exponents of the extension
    // estimates; used throughout the smallness functional.
    double a() const { return 1.0 / r - 1.0 / q; }
    double b() const { return 1.0 / p - 1.0 / q - 1.0; }
};

ExponentTable derive_exponents(int d, double p, double q, double sigma);

}  // namespace pdflow

#endif
