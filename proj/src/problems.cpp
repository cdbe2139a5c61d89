#include "sinc_iterint/problems.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sinc_iterint/errors.hpp"

namespace sinc_iterint {

namespace {

Problem smooth_example() {
  const double sqrt2 = std::numbers::sqrt2;
  Problem p;
  p.name = "example-1";
  p.a = 0.0;
  p.b = sqrt2;
  p.q = [](const DeNode& s) { return 0.5 * s.x * s.x; };
  p.q_prime = [](const DeNode& s) { return s.x; };
  p.direction = Direction::Increasing;
  p.f = [](const DeNode& x, double y) { return 1.0 / (x.x + y + 0.5); };
  p.params = {.alpha = 1.0, .beta = 1.0, .gamma = 1.0, .delta = 1.0, .K = 16.6, .d = 0.6};
  p.exact = -(sqrt2 + 0.5) * std::log(1.0 + 2.0 * sqrt2) +
            2.0 * (1.0 + sqrt2) * std::log(1.0 + sqrt2) - sqrt2;
  return p;
}

// On (0, 1): 1 - (1-x)^2 = x (2 - x) = dist_a (1 + dist_b).
Problem derivative_singular_example() {
  Problem p;
  p.name = "example-2";
  p.a = 0.0;
  p.b = 1.0;
  p.q = [](const DeNode& s) { return std::sqrt(s.dist_a * (1.0 + s.dist_b)); };
  p.q_prime = [](const DeNode& s) { return s.dist_b / std::sqrt(s.dist_a * (1.0 + s.dist_b)); };
  p.direction = Direction::Increasing;
  const auto y_factor = [](double y) { return std::sqrt((1.0 - y) * (1.0 + y)); };
  p.f = [y_factor](const DeNode&, double y) { return y_factor(y); };
  p.product = ProductForm{[](const DeNode&) { return 1.0; }, y_factor};
  p.params = {.alpha = 1.0, .beta = 1.0, .gamma = 0.5, .delta = 3.0, .K = 1.63, .d = 1.0};
  p.exact = 2.0 / 3.0;
  return p;
}

// q(s) = 1 - s = dist_b exactly; x = dist_a exactly since a = 0.
Problem weak_singular_example() {
  Problem p;
  p.name = "example-3";
  p.a = 0.0;
  p.b = 1.0;
  p.q = [](const DeNode& s) { return s.dist_b; };
  p.q_prime = [](const DeNode&) { return -1.0; };
  p.direction = Direction::Decreasing;
  p.f = [](const DeNode& x, double y) { return 1.0 / std::sqrt(x.dist_a * y); };
  p.product = ProductForm{[](const DeNode& x) { return 1.0 / std::sqrt(x.dist_a); },
                          [](double y) { return 1.0 / std::sqrt(y); }};
  p.params = {.alpha = 0.5, .beta = 1.0, .gamma = 1.0, .delta = 0.5, .K = 1.0, .d = 4.0 / 3.0};
  p.exact = std::numbers::pi;
  return p;
}

}  // namespace

Problem builtin(int id) {
  switch (id) {
    case 1:
      return smooth_example();
    case 2:
      return derivative_singular_example();
    case 3:
      return weak_singular_example();
    default:
      throw ProblemError("unknown built-in example id " + std::to_string(id) +
                         " (expected 1, 2 or 3)");
  }
}

}  // namespace sinc_iterint
