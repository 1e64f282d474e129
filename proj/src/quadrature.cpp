#include "pdflow/quadrature.hpp"

namespace pdflow {

const std::array<TriQuadPoint, 6>& tri_rule_deg4() {
    static const double a1 = 0.445948490915965;
    static const double b1 = 1.0 - 2.0 * a1;
    static const double w1 = 0.223381589678011;
    static const double a2 = 0.091576213509771;
    static const double b2 = 1.0 - 2.0 * a2;
    static const double w2 = 0.109951743655322;
    static const std::array<TriQuadPoint, 6> rule = {{
        {a1, a1, w1}, {a1, b1, w1}, {b1, a1, w1},
        {a2, a2, w2}, {a2, b2, w2}, {b2, a2, w2},
    }};
    return rule;
}

const std::array<LineQuadPoint, 5>& line_rule_5() {
    // Gauss-Legendre on [-1,1] mapped to [0,1].
    static const double x3 = 0.5384693101056831;
    static const double x5 = 0.9061798459386640;
    static const double w1 = 0.5688888888888889;
    static const double w3 = 0.4786286704993665;
    static const double w5 = 0.2369268850561891;
    static const std::array<LineQuadPoint, 5> rule = {{
        {0.5 * (1.0 - x5), 0.5 * w5},
        {0.5 * (1.0 - x3), 0.5 * w3},
        {0.5, 0.5 * w1},
        {0.5 * (1.0 + x3), 0.5 * w3},
        {0.5 * (1.0 + x5), 0.5 * w5},
    }};
    return rule;
}

}  // namespace pdflow
