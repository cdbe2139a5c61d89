#include "sinc_iterint/sinc_rules.hpp"

#include <cmath>
#include <string>

#include "sinc_iterint/detail/compensated_sum.hpp"
#include "sinc_iterint/errors.hpp"

namespace sinc_iterint {

namespace {

void check_mesh(double step, long lo, long hi, const char* fn) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw DomainError(std::string(fn) + ": mesh size must be positive");
  }
  if (lo < 0 || hi < 0) throw DomainError(std::string(fn) + ": truncation counts must be >= 0");
}

double checked_eval(const NodeFunction& g, const DeNode& node, long index, const char* fn) {
  const double v = g(node);
  if (!std::isfinite(v)) {
    throw EvaluationError(std::string(fn) + ": non-finite integrand value at node index " +
                          std::to_string(index) + " (t = " + std::to_string(node.t) + ")");
  }
  return v;
}

}  // namespace

double de_sinc_quadrature(const NodeFunction& g, const DeMap& map, double h_tilde, long m_minus,
                          long m_plus) {
  check_mesh(h_tilde, m_minus, m_plus, "de_sinc_quadrature");
  detail::CompensatedSum sum;
  for (long i = -m_minus; i <= m_plus; ++i) {
    const DeNode node = make_node(map, static_cast<double>(i) * h_tilde);
    const double v = checked_eval(g, node, i, "de_sinc_quadrature");
    sum.add(v * map.length() * node.w);
  }
  return h_tilde * sum.value();
}

double de_sinc_indefinite(const NodeFunction& g, const DeMap& map, double h, long n_minus,
                          long n_plus, double x) {
  check_mesh(h, n_minus, n_plus, "de_sinc_indefinite");
  const double xi = phi_inverse(map, x);
  detail::CompensatedSum sum;
  for (long j = -n_minus; j <= n_plus; ++j) {
    const DeNode node = make_node(map, static_cast<double>(j) * h);
    const double v = checked_eval(g, node, j, "de_sinc_indefinite");
    sum.add(v * map.length() * node.w * j_kernel(j, h, xi));
  }
  return sum.value();
}

}  // namespace sinc_iterint
