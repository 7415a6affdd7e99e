#pragma once

#include <span>

namespace symdyn {

// ln Gamma(x) for x > 0. Reentrant (does not touch the global signgam).
double log_gamma(double x);

// psi(x) = d/dx ln Gamma(x) for x > 0, absolute accuracy ~1e-13 on the
// range used here. Shifts x upward by the recurrence psi(x) = psi(x+1) - 1/x
// until the asymptotic expansion converges, then sums it.
double digamma(double x);

// ln sum exp(v_i), stable for large magnitudes. Returns -inf on empty input
// or when every term is -inf.
double log_sum_exp(std::span<const double> values);

}  // namespace symdyn
