#pragma once

#include <vector>

namespace sinc_iterint {

/// Sine integral Si(x) = \int_0^x sin(s)/s ds.
///
/// Power series for |x| <= 2, Lentz continued fraction for E1(ix) on
/// 2 < |x| < 1e4 and the auxiliary-function asymptotic expansion beyond.
/// Odd symmetry holds bit-exactly. Throws DomainError for non-finite x.
double sine_integral(double x);

/// sigma_k = Si(pi k) / pi.
double sigma(long k);

/// Immutable table of sigma_k for k in [-kmax, kmax].
class SigmaTable {
 public:
  explicit SigmaTable(long kmax);

  [[nodiscard]] long kmax() const noexcept { return kmax_; }

  /// Unchecked lookup; |k| <= kmax.
  [[nodiscard]] double operator[](long k) const noexcept {
    return values_[static_cast<std::size_t>(k + kmax_)];
  }

  /// Checked lookup, throws std::out_of_range.
  [[nodiscard]] double at(long k) const;

 private:
  long kmax_;
  std::vector<double> values_;
};

SigmaTable build_sigma_table(long kmax);

/// log Gamma(x) for x > 0 (Lanczos, Godfrey's g = 607/128, 15 terms).
double log_gamma(double x);

/// Beta function B(kappa, lambda), both arguments positive.
double beta_fn(double kappa, double lambda);

/// c_{kappa,lambda,d} = 1 / (cos^{kappa+lambda}(pi/2 sin d) cos d), 0 < d < pi/2.
double c_const(double kappa, double lambda, double d);

/// rho_kappa: arcsinh(1) for kappa >= 1/(2 pi), otherwise
/// arcsinh(sqrt(1 + sqrt(1 - (2 pi kappa)^2)) / (2 pi kappa)).
double rho(double kappa);

}  // namespace sinc_iterint
