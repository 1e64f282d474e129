#ifndef PDFLOW_NORMS_HPP
#define PDFLOW_NORMS_HPP

#include "pdflow/field.hpp"

namespace pdflow {

/// L^p norm by degree-4 element quadrature of |f|^p.
double norm_Lp(const DiscreteField& f, double p);

/// W^{1,p} seminorm-as-norm using the symmetric gradient: ||Df||_p
/// (Korn/Poincare make this a norm on zero-trace fields). For scalar fields
/// the full gradient is used.
double norm_W1p(const DiscreteField& f, double p);

/// Full-gradient L^p norm ||grad f||_p.
double norm_grad_Lp(const DiscreteField& f, double p);

/// L^p norm of the pointwise divergence.
double norm_div_Lp(const DiscreteField& f, double p);

// Serial reference kernels; identical block/fold structure, no threads.
double norm_Lp_serial(const DiscreteField& f, double p);
double norm_W1p_serial(const DiscreteField& f, double p);
double norm_grad_Lp_serial(const DiscreteField& f, double p);

}  // namespace pdflow

#endif
