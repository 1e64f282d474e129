#include "pdflow/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "pdflow/parallel.hpp"
#include "pdflow/quadrature.hpp"

namespace pdflow {

namespace {

enum class Kernel { value, sym_grad, full_grad, divergence };

double element_integral(const DiscreteField& f, int t, double p, Kernel kind) {
    const Mesh& mesh = *f.mesh;
    const ElementGeom geom = element_geom(mesh, t);
    const int nc = components(f.space);
    double acc = 0.0;
    for (const auto& qp : tri_rule_deg4()) {
        const FieldValue v = eval_field(f, t, qp.l1, qp.l2, geom);
        double mag = 0.0;
        switch (kind) {
            case Kernel::value:
                mag = nc == 1 ? std::abs(v.value[0])
                              : std::sqrt(v.value[0] * v.value[0] + v.value[1] * v.value[1]);
                break;
            case Kernel::sym_grad: {
                if (nc == 1) {
                    mag = std::sqrt(v.grad[0][0] * v.grad[0][0] + v.grad[0][1] * v.grad[0][1]);
                } else {
                    const double dxx = v.grad[0][0];
                    const double dyy = v.grad[1][1];
                    const double dxy = 0.5 * (v.grad[0][1] + v.grad[1][0]);
                    mag = std::sqrt(dxx * dxx + dyy * dyy + 2.0 * dxy * dxy);
                }
                break;
            }
            case Kernel::full_grad: {
                double s = 0.0;
                for (int c = 0; c < nc; ++c)
                    for (int k = 0; k < 2; ++k)
                        s += v.grad[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] *
                             v.grad[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
                mag = std::sqrt(s);
                break;
            }
            case Kernel::divergence:
                mag = std::abs(v.grad[0][0] + v.grad[1][1]);
                break;
        }
        acc += qp.w * std::pow(mag, p);
    }
    return acc * geom.area;
}

double norm_impl(const DiscreteField& f, double p, Kernel kind, bool serial) {
    if (!(p >= 1.0)) throw std::invalid_argument("norm: p must be at least 1");
    if (f.mesh == nullptr) throw std::invalid_argument("norm: field has no mesh");
    const std::size_t n = static_cast<std::size_t>(f.mesh->num_triangles());
    auto term = [&](std::size_t t) { return element_integral(f, static_cast<int>(t), p, kind); };
    const double integral = serial ? blocked_sum_serial(n, term) : reduce_sum(n, term);
    return std::pow(integral, 1.0 / p);
}

}  // namespace

double norm_Lp(const DiscreteField& f, double p) { return norm_impl(f, p, Kernel::value, false); }
double norm_W1p(const DiscreteField& f, double p) { return norm_impl(f, p, Kernel::sym_grad, false); }
double norm_grad_Lp(const DiscreteField& f, double p) {
    return norm_impl(f, p, Kernel::full_grad, false);
}
double norm_div_Lp(const DiscreteField& f, double p) {
    if (components(f.space) != 2) throw std::invalid_argument("norm_div_Lp: vector field required");
    return norm_impl(f, p, Kernel::divergence, false);
}

double norm_Lp_serial(const DiscreteField& f, double p) {
    return norm_impl(f, p, Kernel::value, true);
}
double norm_W1p_serial(const DiscreteField& f, double p) {
    return norm_impl(f, p, Kernel::sym_grad, true);
}
double norm_grad_Lp_serial(const DiscreteField& f, double p) {
    return norm_impl(f, p, Kernel::full_grad, true);
}

}  // namespace pdflow
