#include "pdflow/exponents.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pdflow {

ExponentTable derive_exponents(int d, double p, double q, double sigma) {
    if (d != 2 && d != 3) throw std::invalid_argument("derive_exponents: d must be 2 or 3");
    const double lo = 2.0 * d / (d + 1.0);
    if (!(p > lo) || !(p < 2.0)) {
        std::ostringstream os;
        os << "derive_exponents: p = " << p << " outside the open interval (" << lo << ", 2)";
        throw std::out_of_range(os.str());
    }

    ExponentTable t;
    t.d = d;
    t.p = p;
    t.p_star = d * p / (d - p);
    t.p_prime = p / (p - 1.0);
    const double half_star_conj = (t.p_star / 2.0) / (t.p_star / 2.0 - 1.0);
    t.s = std::max(half_star_conj, p);
    t.r = std::max(d * p / (d * p - 2.0 * d + p), 2.0 * t.p_prime);

    if (!(q > t.r)) {
        std::ostringstream os;
        os << "derive_exponents: q = " << q << " must exceed r = " << t.r;
        throw std::invalid_argument(os.str());
    }
    t.q = q;

    const double sigma_lo = std::max(t.s, 2.0);
    if (!(sigma > sigma_lo)) {
        std::ostringstream os;
        os << "derive_exponents: sigma = " << sigma << " must exceed max{s, 2} = " << sigma_lo;
        throw std::invalid_argument(os.str());
    }
    t.sigma = sigma;
    return t;
}

}  // namespace pdflow
