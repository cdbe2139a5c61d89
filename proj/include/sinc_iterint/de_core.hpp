#pragma once

namespace sinc_iterint {

/// Double-exponential map of the real line onto (a, b):
///   phi(t) = (b-a)/2 tanh(pi/2 sinh t) + (b+a)/2.
class DeMap {
 public:
  DeMap(double a, double b);

  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] double b() const noexcept { return b_; }
  [[nodiscard]] double length() const noexcept { return b_ - a_; }

 private:
  double a_;
  double b_;
};

/// One DE node. dist_a and dist_b are evaluated from their own closed forms,
/// so integrands with algebraic endpoint singularities stay accurate even
/// when x rounds to a or b.
struct DeNode {
  double t;       // Sinc abscissa
  double x;       // phi(t) = a + dist_a
  double dist_a;  // x - a
  double dist_b;  // b - x
  double w;       // pi cosh(t) sech^2(pi/2 sinh t) / 4; phi'(t) = (b-a) w
};

/// Dimensionless DE weight pi cosh(t) sech^2(pi/2 sinh t) / 4.
double de_weight(double t);

double phi(const DeMap& map, double t);
double phi_deriv(const DeMap& map, double t);

/// Throws MeshInfeasibleError when exp(pi |sinh t|) overflows.
DeNode make_node(const DeMap& map, double t);

/// Inverse of phi on (a, b); throws DomainError outside.
double phi_inverse(const DeMap& map, double x);

/// Sinc indefinite-integration kernel J(j,h)(xi) = h (1/2 + Si(pi(xi/h - j))/pi).
double j_kernel(long j, double h, double xi);

}  // namespace sinc_iterint
