#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sinc_iterint/de_core.hpp"
#include "sinc_iterint/sinc_rules.hpp"

namespace sinc_iterint {

/// Hypotheses of the error bound: for z, w in the DE image of the strip
/// |Im| < d,
///   |f(z, q(w)) q'(w)| <= K |z-a|^{alpha-1} |b-z|^{beta-1} |w-a|^{gamma-1} |b-w|^{delta-1}.
/// The caller asserts these; nothing here checks analyticity.
struct RegularityParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double delta = 1.0;
  double K = 1.0;
  double d = 1.0;

  [[nodiscard]] double mu() const noexcept { return alpha < beta ? alpha : beta; }
  [[nodiscard]] double mu_bar() const noexcept { return alpha < beta ? beta : alpha; }
  [[nodiscard]] double nu() const noexcept { return gamma < delta ? gamma : delta; }
  [[nodiscard]] double nu_bar() const noexcept { return gamma < delta ? delta : gamma; }

  /// Throws DomainError unless all exponents and K are positive and 0 < d < pi/2.
  void validate() const;
};

enum class Direction { Increasing, Decreasing };

using BoundaryFunction = std::function<double(const DeNode&)>;
/// f(x, y): x arrives as a DE node (one-sided distances available), y = q(s).
using Integrand2D = std::function<double(const DeNode& x, double y)>;

/// f(x, y) = X(x) Y(y).
struct ProductForm {
  NodeFunction x_factor;
  std::function<double(double)> y_factor;
};

/// I = \int_a^b \int_A^{q(x)} f(x, y) dy dx with monotone q, where A = q(a)
/// for increasing q and A = q(b) for decreasing q.
struct Problem {
  std::string name;
  double a = 0.0;
  double b = 1.0;
  BoundaryFunction q;
  BoundaryFunction q_prime;
  Direction direction = Direction::Increasing;
  Integrand2D f;
  std::optional<ProductForm> product;
  RegularityParams params;
  std::optional<double> exact;
};

/// Structural checks plus sampled checks: sign of q' against direction on
/// 100 interior nodes, and the product decomposition on a 10x10 node grid.
void validate_problem(const Problem& problem);

struct MeshPlan {
  double h = 0.0;
  double h_tilde = 0.0;
  long n = 0;
  long m = 0;
  long n_minus = 0;
  long n_plus = 0;
  long m_minus = 0;
  long m_plus = 0;
  bool feasible = false;
  std::vector<std::string> infeasibility_reasons;
  long long n_total_general = 0;
  long long n_total_product = 0;

  bool operator==(const MeshPlan&) const = default;
};

/// Mesh of the modified formulas: n, m from h, then the asymmetric
/// truncation counts M-, M+ (step 2h) and N-, N+ (step h), then the four
/// rho-feasibility conditions. Never throws for h > 0; an unusable mesh comes
/// back with feasible = false and the reasons listed.
MeshPlan plan_mesh(const RegularityParams& params, double h);

struct ErrorBound {
  double abs = 0.0;
  double e1_component = 0.0;  // outer quadrature part
  double e2_component = 0.0;  // inner indefinite-integration part
  std::optional<double> rel;
};

enum class Formula { Modified, Original };

struct ApproxResult {
  double value = 0.0;
  MeshPlan plan;
  std::optional<ErrorBound> bound;  // absent for the original formula
  long long eval_count = 0;
  bool used_product_path = false;
  Formula formula = Formula::Modified;
};

/// Modified formula for increasing q (general integrand).
ApproxResult modified_inc(const Problem& problem, const MeshPlan& plan);
/// Modified formula for decreasing q (general integrand).
ApproxResult modified_dec(const Problem& problem, const MeshPlan& plan);
/// Modified formula through the product decomposition; either direction.
ApproxResult modified_product(const Problem& problem, const MeshPlan& plan);

enum class PathChoice { Auto, General, Product };

/// nu / 10.
double default_epsilon(const RegularityParams& params);

/// Original Muhammad-Mori rule: symmetric truncation, outer step equal to
/// the inner step, increasing q only. No certificate is attached.
ApproxResult original_mm(const Problem& problem, double h, double epsilon,
                         PathChoice path = PathChoice::Auto);

/// A-priori bound on |I - I_modified(h)| for an interval of the given length.
/// Throws MeshInfeasibleError when plan_mesh(params, h) is infeasible.
ErrorBound error_bound_abs(const RegularityParams& params, double h, double length);

/// bound_abs / ||approx| - bound_abs| when |approx| > bound_abs.
std::optional<double> error_bound_rel(double bound_abs, double approx);

/// Plans the mesh, picks the product path when available, otherwise the
/// increasing or decreasing general formula.
ApproxResult integrate(const Problem& problem, double h);

}  // namespace sinc_iterint
