#include "sinc_iterint/iterated.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sinc_iterint/detail/compensated_sum.hpp"
#include "sinc_iterint/errors.hpp"
#include "sinc_iterint/special.hpp"

namespace sinc_iterint {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIntegerSnap = 1e-12;

// Values within kIntegerSnap of an integer are snapped before rounding so
// that representation noise cannot shift a truncation count by one.
double snap(double v) {
  const double r = std::round(v);
  return std::abs(v - r) <= kIntegerSnap ? r : v;
}
long ceil_snapped(double v) { return static_cast<long>(std::ceil(snap(v))); }
long floor_snapped(double v) { return static_cast<long>(std::floor(snap(v))); }

std::string fmt_num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void check_condition(MeshPlan& plan, long count, double step, double threshold,
                     const char* count_name, const char* step_name, const char* rho_name) {
  const double lhs = static_cast<double>(count) * step;
  if (!(lhs >= threshold)) {
    plan.infeasibility_reasons.push_back(std::string(count_name) + "*" + step_name + " >= " +
                                         rho_name + " violated (" + fmt_num(lhs) + " < " +
                                         fmt_num(threshold) + ")");
  }
}

std::string join_reasons(const MeshPlan& plan) {
  std::string out;
  for (const auto& r : plan.infeasibility_reasons) {
    if (!out.empty()) out += "; ";
    out += r;
  }
  return out;
}

void require_feasible(const MeshPlan& plan, const char* fn) {
  if (!plan.feasible) {
    throw MeshInfeasibleError(std::string(fn) + ": infeasible mesh: " + join_reasons(plan));
  }
}

void require_matching_plan(const Problem& problem, const MeshPlan& plan, const char* fn) {
  require_feasible(plan, fn);
  if (!(plan == plan_mesh(problem.params, plan.h))) {
    throw ProblemError(std::string(fn) + ": mesh plan does not match the problem's parameters");
  }
}

struct InnerNode {
  DeNode node;
  double y;
  double signed_q_prime;  // q'(s) for increasing q, -q'(s) for decreasing
};

struct SumLayout {
  double h;            // inner step
  long stride;         // outer step = stride * h; sigma index = stride*i - j
  long m_minus, m_plus;
  long n_minus, n_plus;
  double sign;         // +1: (1/2 + sigma), -1: (1/2 - sigma)
};

std::vector<InnerNode> inner_nodes(const Problem& problem, const DeMap& map,
                                   const SumLayout& layout) {
  std::vector<InnerNode> nodes;
  nodes.reserve(static_cast<std::size_t>(layout.n_minus + layout.n_plus + 1));
  for (long j = -layout.n_minus; j <= layout.n_plus; ++j) {
    const DeNode node = make_node(map, static_cast<double>(j) * layout.h);
    const double y = problem.q(node);
    const double qp = problem.q_prime(node);
    if (!std::isfinite(y) || !std::isfinite(qp)) {
      throw EvaluationError("non-finite boundary value q or q' at inner node j = " +
                            std::to_string(j));
    }
    nodes.push_back({node, y, layout.sign * qp});
  }
  return nodes;
}

[[noreturn]] void throw_nonfinite(const char* what, long i, long j) {
  throw EvaluationError(std::string("non-finite ") + what + " at node (i = " + std::to_string(i) +
                        ", j = " + std::to_string(j) + ")");
}

// stride (b-a)^2 h^2 sum_i w_{stride i} { sum_j F(i,j) s q'(x_j) w_j (1/2 + s sigma_{stride i - j}) }
// summed with compensation, ascending i outside, ascending j inside.
double iterated_sum(const Problem& problem, const SumLayout& layout, bool product,
                    long long& eval_count) {
  const DeMap map(problem.a, problem.b);
  const auto inner = inner_nodes(problem, map, layout);
  const long kmax = layout.stride * std::max(layout.m_minus, layout.m_plus) +
                    std::max(layout.n_minus, layout.n_plus) + 2;
  const SigmaTable sigmas(kmax);

  std::vector<double> v_factor;
  if (product) {
    v_factor.reserve(inner.size());
    for (std::size_t k = 0; k < inner.size(); ++k) {
      const double yv = problem.product->y_factor(inner[k].y);
      ++eval_count;
      if (!std::isfinite(yv)) throw_nonfinite("Y factor", 0, static_cast<long>(k) - layout.n_minus);
      v_factor.push_back(yv * inner[k].signed_q_prime * inner[k].node.w);
    }
  }

  detail::CompensatedSum outer;
  for (long i = -layout.m_minus; i <= layout.m_plus; ++i) {
    const DeNode xnode =
        make_node(map, static_cast<double>(layout.stride * i) * layout.h);
    double u = 1.0;
    if (product) {
      u = problem.product->x_factor(xnode);
      ++eval_count;
      if (!std::isfinite(u)) throw_nonfinite("X factor", i, 0);
    }
    detail::CompensatedSum inner_sum;
    for (long j = -layout.n_minus; j <= layout.n_plus; ++j) {
      const auto k = static_cast<std::size_t>(j + layout.n_minus);
      const double kernel = 0.5 + layout.sign * sigmas[layout.stride * i - j];
      double term;
      if (product) {
        term = v_factor[k] * kernel;
      } else {
        const InnerNode& in = inner[k];
        const double fv = problem.f(xnode, in.y);
        ++eval_count;
        if (!std::isfinite(fv)) throw_nonfinite("integrand", i, j);
        term = fv * in.signed_q_prime * in.node.w * kernel;
      }
      inner_sum.add(term);
    }
    outer.add(u * xnode.w * inner_sum.value());
  }
  const double len = map.length();
  return static_cast<double>(layout.stride) * len * len * layout.h * layout.h * outer.value();
}

SumLayout modified_layout(const MeshPlan& plan, double sign) {
  return {plan.h, 2, plan.m_minus, plan.m_plus, plan.n_minus, plan.n_plus, sign};
}

ApproxResult finish_modified(const Problem& problem, const MeshPlan& plan, double value,
                             long long evals, bool product) {
  ApproxResult r;
  r.value = value;
  r.plan = plan;
  r.eval_count = evals;
  r.used_product_path = product;
  r.formula = Formula::Modified;
  ErrorBound bound = error_bound_abs(problem.params, plan.h, problem.b - problem.a);
  bound.rel = error_bound_rel(bound.abs, value);
  r.bound = bound;
  return r;
}

double direction_sign(Direction d) { return d == Direction::Increasing ? 1.0 : -1.0; }

ApproxResult modified_general(const Problem& problem, const MeshPlan& plan, Direction expected,
                              const char* fn) {
  validate_problem(problem);
  if (problem.direction != expected) {
    throw ProblemError(std::string(fn) + ": boundary direction does not match the formula");
  }
  require_matching_plan(problem, plan, fn);
  long long evals = 0;
  const double value =
      iterated_sum(problem, modified_layout(plan, direction_sign(expected)), false, evals);
  return finish_modified(problem, plan, value, evals, false);
}

}  // namespace

void RegularityParams::validate() const {
  const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!positive(alpha) || !positive(beta) || !positive(gamma) || !positive(delta)) {
    throw DomainError("RegularityParams: exponents alpha, beta, gamma, delta must be positive");
  }
  if (!positive(K)) throw DomainError("RegularityParams: K must be positive");
  if (!(d > 0.0 && d < kPi / 2)) throw DomainError("RegularityParams: d must lie in (0, pi/2)");
}

void validate_problem(const Problem& problem) {
  if (!std::isfinite(problem.a) || !std::isfinite(problem.b) || !(problem.a < problem.b)) {
    throw ProblemError("problem '" + problem.name + "': need finite a < b");
  }
  if (!problem.q || !problem.q_prime || !problem.f) {
    throw ProblemError("problem '" + problem.name + "': q, q' and f are required");
  }
  problem.params.validate();
  const DeMap map(problem.a, problem.b);

  constexpr int kDirSamples = 100;
  for (int k = 0; k < kDirSamples; ++k) {
    const double t = -3.0 + 6.0 * (k + 0.5) / kDirSamples;
    const double qp = problem.q_prime(make_node(map, t));
    const bool ok = problem.direction == Direction::Increasing ? qp >= 0.0 : qp <= 0.0;
    if (!ok) {
      throw ProblemError("problem '" + problem.name +
                         "': sign of q' contradicts the declared direction at t = " +
                         std::to_string(t));
    }
  }

  if (problem.product) {
    if (!problem.product->x_factor || !problem.product->y_factor) {
      throw ProblemError("problem '" + problem.name + "': incomplete product decomposition");
    }
    constexpr int kGrid = 10;
    for (int ix = 0; ix < kGrid; ++ix) {
      const DeNode xn = make_node(map, -2.0 + 4.0 * (ix + 0.5) / kGrid);
      for (int is = 0; is < kGrid; ++is) {
        const double y = problem.q(make_node(map, -2.0 + 4.0 * (is + 0.5) / kGrid));
        const double fv = problem.f(xn, y);
        const double pv = problem.product->x_factor(xn) * problem.product->y_factor(y);
        if (!(std::abs(fv - pv) <= 1e-12 * (1.0 + std::abs(fv)))) {
          throw ProblemError("problem '" + problem.name +
                             "': product decomposition disagrees with f");
        }
      }
    }
  }
}

MeshPlan plan_mesh(const RegularityParams& params, double h) {
  params.validate();
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("plan_mesh: h must be positive");
  MeshPlan plan;
  plan.h = h;
  plan.h_tilde = 2.0 * h;
  const double alpha = params.alpha, beta = params.beta;
  const double gamma = params.gamma, delta = params.delta;
  const double mu = params.mu(), nu = params.nu();

  const double log_arg = std::log(2.0 * params.d / (nu * h));
  plan.n = ceil_snapped(log_arg / h);
  plan.m = ceil_snapped(0.5 * (static_cast<double>(plan.n) + std::log(mu / nu) / h));

  // Ties (alpha == beta, gamma == delta) take the first branch; both agree.
  if (mu == alpha) {
    plan.m_minus = plan.m;
    plan.m_plus = plan.m - floor_snapped(std::log(beta / alpha) / plan.h_tilde);
  } else {
    plan.m_plus = plan.m;
    plan.m_minus = plan.m - floor_snapped(std::log(alpha / beta) / plan.h_tilde);
  }
  if (nu == gamma) {
    plan.n_minus = plan.n;
    plan.n_plus = plan.n - floor_snapped(std::log(delta / gamma) / h);
  } else {
    plan.n_plus = plan.n;
    plan.n_minus = plan.n - floor_snapped(std::log(gamma / delta) / h);
  }

  if (!(log_arg > 0.0)) {
    plan.infeasibility_reasons.push_back(
        "log argument nonpositive: log(2d/(nu h)) <= 0 because h >= 2d/nu");
  }
  const struct {
    long count;
    const char* name;
  } counts[] = {{plan.n, "n"},
                {plan.m, "m"},
                {plan.m_minus, "M_minus"},
                {plan.m_plus, "M_plus"},
                {plan.n_minus, "N_minus"},
                {plan.n_plus, "N_plus"}};
  for (const auto& c : counts) {
    if (c.count <= 0) {
      plan.infeasibility_reasons.push_back(std::string(c.name) + " is not a positive integer (" +
                                           std::to_string(c.count) + ")");
    }
  }
  check_condition(plan, plan.m_minus, plan.h_tilde, rho(alpha), "M_minus", "h_tilde", "rho_alpha");
  check_condition(plan, plan.m_plus, plan.h_tilde, rho(beta), "M_plus", "h_tilde", "rho_beta");
  check_condition(plan, plan.n_minus, h, rho(gamma), "N_minus", "h", "rho_gamma");
  check_condition(plan, plan.n_plus, h, rho(delta), "N_plus", "h", "rho_delta");
  plan.feasible = plan.infeasibility_reasons.empty();

  const long long outer = plan.m_minus + plan.m_plus + 1LL;
  const long long inner = plan.n_minus + plan.n_plus + 1LL;
  plan.n_total_general = outer * inner;
  plan.n_total_product = outer + inner;
  return plan;
}

ErrorBound error_bound_abs(const RegularityParams& params, double h, double length) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("error_bound_abs: interval length must be positive");
  }
  const MeshPlan plan = plan_mesh(params, h);
  require_feasible(plan, "error_bound_abs");

  const double alpha = params.alpha, beta = params.beta;
  const double gamma = params.gamma, delta = params.delta;
  const double d = params.d;
  const double mu = params.mu(), mu_bar = params.mu_bar();
  const double nu = params.nu(), nu_bar = params.nu_bar();
  const double c_ab = c_const(alpha, beta, d);
  const double c_gd = c_const(gamma, delta, d);

  const double decay = std::exp(-kPi * d / h);
  const double one_minus_decay = -std::expm1(-kPi * d / h);
  const double one_minus_decay2 = -std::expm1(-2.0 * kPi * d / h);
  const double prefactor =
      2.0 * params.K * std::pow(length, alpha + beta + gamma + delta - 2.0) * decay;

  const double e1 = beta_fn(gamma, delta) * c_gd / mu *
                    (std::exp(0.5 * kPi * mu_bar) + 2.0 * c_ab / one_minus_decay);
  const double e2 = (1.0 / nu) *
                    (beta_fn(alpha, beta) + 4.0 * c_ab / mu * decay / one_minus_decay) *
                    (1.1 * std::exp(0.5 * kPi * nu_bar) + h * c_gd / (d * one_minus_decay2));

  ErrorBound bound;
  bound.e1_component = e1 * prefactor;
  bound.e2_component = e2 * prefactor;
  bound.abs = (e1 + e2) * prefactor;
  return bound;
}

std::optional<double> error_bound_rel(double bound_abs, double approx) {
  if (!(bound_abs > 0.0)) throw DomainError("error_bound_rel: bound must be positive");
  const double mag = std::abs(approx);
  if (!(mag > bound_abs)) return std::nullopt;
  return bound_abs / (mag - bound_abs);
}

ApproxResult modified_inc(const Problem& problem, const MeshPlan& plan) {
  return modified_general(problem, plan, Direction::Increasing, "modified_inc");
}

ApproxResult modified_dec(const Problem& problem, const MeshPlan& plan) {
  return modified_general(problem, plan, Direction::Decreasing, "modified_dec");
}

ApproxResult modified_product(const Problem& problem, const MeshPlan& plan) {
  validate_problem(problem);
  if (!problem.product) {
    throw ProblemError("modified_product: problem '" + problem.name +
                       "' has no product decomposition");
  }
  require_matching_plan(problem, plan, "modified_product");
  long long evals = 0;
  const double value = iterated_sum(
      problem, modified_layout(plan, direction_sign(problem.direction)), true, evals);
  return finish_modified(problem, plan, value, evals, true);
}

double default_epsilon(const RegularityParams& params) { return params.nu() / 10.0; }

ApproxResult original_mm(const Problem& problem, double h, double epsilon, PathChoice path) {
  validate_problem(problem);
  if (problem.direction != Direction::Increasing) {
    throw UnsupportedCaseError(
        "original Muhammad-Mori formula requires q'(x) >= 0; problem '" + problem.name +
        "' has a decreasing boundary");
  }
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("original_mm: h must be positive");
  const double nu = problem.params.nu();
  if (!(epsilon > 0.0 && epsilon < nu)) {
    throw DomainError("original_mm: epsilon must lie in (0, nu)");
  }
  const bool product = path == PathChoice::Product ||
                       (path == PathChoice::Auto && problem.product.has_value());
  if (product && !problem.product) {
    throw ProblemError("original_mm: problem '" + problem.name + "' has no product decomposition");
  }

  const double d = problem.params.d;
  MeshPlan plan;
  plan.h = h;
  plan.h_tilde = h;
  plan.m = ceil_snapped(std::log(4.0 * d / ((nu - epsilon) * h)) / h);
  plan.n = ceil_snapped(std::log(2.0 * d / ((nu - epsilon) * h)) / h);
  plan.m_minus = plan.m_plus = plan.m;
  plan.n_minus = plan.n_plus = plan.n;
  if (plan.m <= 0 || plan.n <= 0) {
    throw MeshInfeasibleError("original_mm: log argument nonpositive, h too large (m = " +
                              std::to_string(plan.m) + ", n = " + std::to_string(plan.n) + ")");
  }
  plan.feasible = true;
  plan.n_total_general = (2LL * plan.m + 1) * (2LL * plan.n + 1);
  plan.n_total_product = (2LL * plan.m + 1) + (2LL * plan.n + 1);

  const SumLayout layout{h, 1, plan.m, plan.m, plan.n, plan.n, 1.0};
  ApproxResult r;
  r.value = iterated_sum(problem, layout, product, r.eval_count);
  r.plan = plan;
  r.used_product_path = product;
  r.formula = Formula::Original;
  return r;
}

ApproxResult integrate(const Problem& problem, double h) {
  const MeshPlan plan = plan_mesh(problem.params, h);
  require_feasible(plan, "integrate");
  if (problem.product) return modified_product(problem, plan);
  return problem.direction == Direction::Increasing ? modified_inc(problem, plan)
                                                    : modified_dec(problem, plan);
}

}  // namespace sinc_iterint
