#include "sinc_iterint/special.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sinc_iterint/errors.hpp"

namespace sinc_iterint {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesLimit = 2.0;
constexpr double kAsymptoticLimit = 1.0e4;

double si_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 0; k < 60; ++k) {
    term *= -x2 / static_cast<double>((2 * k + 2) * (2 * k + 3));
    const double add = term / static_cast<double>(2 * k + 3);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// E1(ix) = -Ci(x) + i (Si(x) - pi/2) via the modified Lentz algorithm.
double si_continued_fraction(double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-17;
  using C = std::complex<double>;
  C b(1.0, x);
  C c(1.0 / kTiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 1; i < 1000; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
  }
  h *= C(std::cos(x), -std::sin(x));
  return kPi / 2 + h.imag();
}

// Si(x) = pi/2 - f(x) cos x - g(x) sin x with the leading three terms of
// the auxiliary-function expansions; truncation error < 1e-25 for x >= 1e4.
double si_asymptotic(double x) {
  const double r = 1.0 / x;
  const double r2 = r * r;
  const double f = r * (1.0 - 2.0 * r2 * (1.0 - 12.0 * r2));
  const double g = r2 * (1.0 - 6.0 * r2 * (1.0 - 20.0 * r2));
  return kPi / 2 - f * std::cos(x) - g * std::sin(x);
}

void require_positive(double v, const char* name, const char* fn) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(fn) + ": " + name + " must be positive and finite");
  }
}

}  // namespace

double sine_integral(double x) {
  if (!std::isfinite(x)) throw DomainError("sine_integral: non-finite argument");
  const double ax = std::abs(x);
  double r;
  if (ax <= kSeriesLimit) {
    r = si_series(ax);
  } else if (ax < kAsymptoticLimit) {
    r = si_continued_fraction(ax);
  } else {
    r = si_asymptotic(ax);
  }
  return std::signbit(x) ? -r : r;
}

double sigma(long k) {
  if (k == 0) return 0.0;
  const double s = sine_integral(kPi * static_cast<double>(std::labs(k))) / kPi;
  return k < 0 ? -s : s;
}

SigmaTable::SigmaTable(long kmax) : kmax_(kmax) {
  if (kmax < 0) throw std::invalid_argument("SigmaTable: kmax must be nonnegative");
  values_.resize(static_cast<std::size_t>(2 * kmax + 1));
  for (long k = 0; k <= kmax; ++k) {
    const double s = sigma(k);
    values_[static_cast<std::size_t>(kmax + k)] = s;
    values_[static_cast<std::size_t>(kmax - k)] = -s;
  }
  values_[static_cast<std::size_t>(kmax)] = 0.0;
}

double SigmaTable::at(long k) const {
  if (k < -kmax_ || k > kmax_) {
    throw std::out_of_range("SigmaTable: index " + std::to_string(k) + " outside [-" +
                            std::to_string(kmax_) + ", " + std::to_string(kmax_) + "]");
  }
  return (*this)[k];
}

SigmaTable build_sigma_table(long kmax) { return SigmaTable(kmax); }

double log_gamma(double x) {
  require_positive(x, "x", "log_gamma");
  // P. Godfrey's coefficients for g = 607/128, n = 15.
  static constexpr double kG = 607.0 / 128.0;
  static constexpr std::array<double, 15> kCoef = {
      0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
      14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
      0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
      -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
      0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double sum = kCoef[0];
  for (std::size_t i = 1; i < kCoef.size(); ++i) {
    sum += kCoef[i] / (z + static_cast<double>(i));
  }
  const double t = z + kG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double beta_fn(double kappa, double lambda) {
  require_positive(kappa, "kappa", "beta_fn");
  require_positive(lambda, "lambda", "beta_fn");
  return std::exp(log_gamma(kappa) + log_gamma(lambda) - log_gamma(kappa + lambda));
}

double c_const(double kappa, double lambda, double d) {
  require_positive(kappa, "kappa", "c_const");
  require_positive(lambda, "lambda", "c_const");
  if (!(d > 0.0 && d < kPi / 2)) throw DomainError("c_const: d must lie in (0, pi/2)");
  const double inner = std::cos(0.5 * kPi * std::sin(d));
  return 1.0 / (std::pow(inner, kappa + lambda) * std::cos(d));
}

double rho(double kappa) {
  require_positive(kappa, "kappa", "rho");
  const double s = 2.0 * kPi * kappa;
  if (s >= 1.0) return std::asinh(1.0);
  return std::asinh(std::sqrt(1.0 + std::sqrt(1.0 - s * s)) / s);
}

}  // namespace sinc_iterint
