#include "sinc_iterint/de_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sinc_iterint/errors.hpp"
#include "sinc_iterint/special.hpp"

namespace sinc_iterint {

namespace {
constexpr double kPi = std::numbers::pi;
}

DeMap::DeMap(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("DeMap: need finite a < b");
  }
}

double de_weight(double t) {
  const double u = 0.5 * kPi * std::sinh(t);
  // sech^2(u) = 4 e^{-2|u|} / (1 + e^{-2|u|})^2
  const double e = std::exp(-2.0 * std::abs(u));
  if (e == 0.0) return 0.0;
  const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
  return 0.25 * kPi * std::cosh(t) * sech2;
}

double phi(const DeMap& map, double t) {
  return 0.5 * map.length() * std::tanh(0.5 * kPi * std::sinh(t)) + 0.5 * (map.b() + map.a());
}

double phi_deriv(const DeMap& map, double t) { return map.length() * de_weight(t); }

DeNode make_node(const DeMap& map, double t) {
  if (!std::isfinite(t)) throw MeshInfeasibleError("make_node: non-finite abscissa");
  const double s = kPi * std::sinh(t);
  const double ep = std::exp(s);
  const double em = std::exp(-s);
  if (!std::isfinite(ep) || !std::isfinite(em)) {
    throw MeshInfeasibleError("make_node: exp(pi sinh t) overflows at t = " + std::to_string(t));
  }
  const double len = map.length();
  DeNode node{};
  node.t = t;
  node.dist_a = len / (1.0 + em);
  node.dist_b = len / (1.0 + ep);
  node.x = map.a() + node.dist_a;
  node.w = de_weight(t);
  return node;
}

double phi_inverse(const DeMap& map, double x) {
  if (!(x > map.a() && x < map.b())) {
    throw DomainError("phi_inverse: x must lie strictly inside (a, b)");
  }
  const double r = (2.0 * x - map.a() - map.b()) / map.length();
  return std::asinh((2.0 / kPi) * std::atanh(r));
}

double j_kernel(long j, double h, double xi) {
  if (!(h > 0.0)) throw DomainError("j_kernel: h must be positive");
  const double arg = kPi * (xi / h - static_cast<double>(j));
  return h * (0.5 + sine_integral(arg) / kPi);
}

}  // namespace sinc_iterint
