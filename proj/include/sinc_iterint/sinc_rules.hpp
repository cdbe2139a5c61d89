#pragma once

#include <functional>

#include "sinc_iterint/de_core.hpp"

namespace sinc_iterint {

/// Integrand of one variable. Receives the whole node so endpoint-singular
/// functions can use dist_a / dist_b instead of x - a, b - x.
using NodeFunction = std::function<double(const DeNode&)>;

/// DE-Sinc quadrature of g over (a, b):
///   h_tilde * sum_{i=-M_minus}^{M_plus} g(phi(i h_tilde)) phi'(i h_tilde).
/// g is called once per node, in ascending index order.
double de_sinc_quadrature(const NodeFunction& g, const DeMap& map, double h_tilde, long m_minus,
                          long m_plus);

/// DE-Sinc indefinite integration of g from a to x:
///   sum_{j=-N_minus}^{N_plus} g(phi(jh)) phi'(jh) J(j,h)(phi^{-1}(x)).
double de_sinc_indefinite(const NodeFunction& g, const DeMap& map, double h, long n_minus,
                          long n_plus, double x);

}  // namespace sinc_iterint
