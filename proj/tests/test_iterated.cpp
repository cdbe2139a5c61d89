#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "sinc_iterint/errors.hpp"
#include "sinc_iterint/iterated.hpp"
#include "sinc_iterint/problems.hpp"

using namespace sinc_iterint;

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Example 2 mirrored by x -> 1 - x: q(x) = sqrt(1 - x^2) is decreasing and
// the exponents swap (alpha<->beta, gamma<->delta).
Problem reflected_example2() {
  Problem p = builtin(2);
  p.name = "example-2-reflected";
  p.q = [](const DeNode& s) { return std::sqrt(s.dist_b * (1.0 + s.dist_a)); };
  p.q_prime = [](const DeNode& s) { return -s.dist_a / std::sqrt(s.dist_b * (1.0 + s.dist_a)); };
  p.direction = Direction::Decreasing;
  p.product.reset();
  std::swap(p.params.alpha, p.params.beta);
  std::swap(p.params.gamma, p.params.delta);
  return p;
}

}  // namespace

TEST_CASE("regularity parameters") {
  RegularityParams p{.alpha = 0.5, .beta = 2.0, .gamma = 3.0, .delta = 0.25, .K = 1.0, .d = 1.0};
  CHECK(p.mu() == 0.5);
  CHECK(p.mu_bar() == 2.0);
  CHECK(p.nu() == 0.25);
  CHECK(p.nu_bar() == 3.0);
  CHECK_NOTHROW(p.validate());
  p.d = std::numbers::pi / 2;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.d = 1.0;
  p.K = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.K = 1.0;
  p.gamma = -1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("mesh plans for the worked examples") {
  const MeshPlan p2 = plan_mesh(builtin(2).params, 0.5);
  CHECK(p2.n == 5);
  CHECK(p2.m == 4);
  CHECK(p2.n_minus == 5);
  CHECK(p2.n_plus == 2);
  CHECK(p2.m_minus == 4);
  CHECK(p2.m_plus == 4);
  CHECK(p2.feasible);
  CHECK(p2.h_tilde == 1.0);
  CHECK(p2.n_total_general == 9 * 8);
  CHECK(p2.n_total_product == 9 + 8);

  const MeshPlan p3 = plan_mesh(builtin(3).params, 0.5);
  CHECK(p3.n == 5);
  CHECK(p3.m == 3);

  const RegularityParams params = builtin(2).params;  // 2d/nu = 4
  for (double h : {4.0, 5.0, 10.0}) {
    const MeshPlan p = plan_mesh(params, h);
    CHECK_FALSE(p.feasible);
    REQUIRE_FALSE(p.infeasibility_reasons.empty());
    CHECK(p.infeasibility_reasons.front().find("log argument nonpositive") != std::string::npos);
  }
  CHECK_THROWS_AS(plan_mesh(params, 0.0), DomainError);
}

TEST_CASE("mesh plans match an independent transcription") {
  for (double alpha : {0.05, 0.5, 1.0, 2.0}) {
    for (double beta : {0.5, 1.0, 3.0}) {
      for (double h : {0.9, 0.4, 0.21, 0.1}) {
        const RegularityParams p{alpha, beta, beta, alpha, 1.0, 1.2};
        const MeshPlan plan = plan_mesh(p, h);
        const oracle::Plan ref = oracle::plan(alpha, beta, beta, alpha, 1.2, h);
        CAPTURE(alpha);
        CAPTURE(beta);
        CAPTURE(h);
        CHECK(plan.n == ref.n);
        CHECK(plan.m == ref.m);
        CHECK(plan.m_minus == ref.m_minus);
        CHECK(plan.m_plus == ref.m_plus);
        CHECK(plan.n_minus == ref.n_minus);
        CHECK(plan.n_plus == ref.n_plus);
        CHECK(plan.feasible == ref.feasible);
        CHECK(plan.h_tilde == 2.0 * h);
        CHECK(plan.n_total_general ==
              (plan.m_minus + plan.m_plus + 1LL) * (plan.n_minus + plan.n_plus + 1LL));
      }
    }
  }
}

TEST_CASE("infeasibility reasons name the violated condition") {
  const MeshPlan p = plan_mesh(builtin(1).params, 0.8);
  CHECK_FALSE(p.feasible);
  bool named = false;
  for (const auto& r : p.infeasibility_reasons) named = named || r.find("rho_gamma") != std::string::npos;
  CHECK(named);
  CHECK_THROWS_WITH_AS(integrate(builtin(1), 0.8), doctest::Contains("rho_gamma"),
                       MeshInfeasibleError);
  CHECK_THROWS_AS(error_bound_abs(builtin(1).params, 0.8, std::sqrt(2.0)), MeshInfeasibleError);
}

TEST_CASE("modified formula, increasing boundary") {
  for (int id : {1, 2}) {
    const Problem p = builtin(id);
    const MeshPlan plan = plan_mesh(p.params, 0.25);
    REQUIRE(plan.feasible);
    const ApproxResult r = modified_inc(p, plan);
    CAPTURE(id);
    REQUIRE(r.bound);
    CHECK(std::abs(r.value - *p.exact) <= r.bound->abs);
    CHECK(r.eval_count == plan.n_total_general);
    CHECK_FALSE(r.used_product_path);
  }
  Problem zero = builtin(1);
  zero.f = [](const DeNode&, double) { return 0.0; };
  CHECK(modified_inc(zero, plan_mesh(zero.params, 0.25)).value == 0.0);
}

TEST_CASE("modified formula, decreasing boundary") {
  const Problem p3 = builtin(3);
  const MeshPlan plan = plan_mesh(p3.params, 0.3);
  const ApproxResult r = modified_dec(p3, plan);
  CHECK(std::abs(r.value - std::numbers::pi) <= r.bound->abs);

  Problem zero = p3;
  zero.product.reset();
  zero.f = [](const DeNode&, double) { return 0.0; };
  CHECK(modified_dec(zero, plan).value == 0.0);

  const Problem refl = reflected_example2();
  const MeshPlan rp = plan_mesh(refl.params, 0.25);
  const ApproxResult rr = modified_dec(refl, rp);
  const ApproxResult orig = modified_inc(builtin(2), plan_mesh(builtin(2).params, 0.25));
  CHECK(rr.bound->abs == doctest::Approx(orig.bound->abs).epsilon(1e-14));
  CHECK(std::abs(rr.value - 2.0 / 3.0) <= 2.0 * rr.bound->abs);
  CHECK(std::abs(rr.value - 2.0 / 3.0) <= rr.bound->abs);
  CHECK(std::abs(orig.value - 2.0 / 3.0) <= orig.bound->abs);
}

TEST_CASE("direction mismatch and foreign plans are rejected") {
  const Problem p1 = builtin(1);
  const Problem p3 = builtin(3);
  CHECK_THROWS_AS(modified_dec(p1, plan_mesh(p1.params, 0.3)), ProblemError);
  CHECK_THROWS_AS(modified_inc(p3, plan_mesh(p3.params, 0.3)), ProblemError);
  CHECK_THROWS_AS(modified_inc(p1, plan_mesh(p3.params, 0.3)), ProblemError);
  CHECK_THROWS_AS(modified_inc(p1, plan_mesh(p1.params, 0.8)), MeshInfeasibleError);

  Problem liar = p1;
  liar.direction = Direction::Decreasing;
  CHECK_THROWS_AS(validate_problem(liar), ProblemError);

  Problem bad_product = builtin(2);
  bad_product.product->y_factor = [](double y) { return y; };
  CHECK_THROWS_AS(validate_problem(bad_product), ProblemError);
}

TEST_CASE("non-finite integrand aborts with node indices") {
  Problem p = builtin(1);
  p.f = [](const DeNode& x, double) {
    return x.t > 1.0 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
  };
  const MeshPlan plan = plan_mesh(p.params, 0.3);
  CHECK_THROWS_WITH_AS(modified_inc(p, plan), doctest::Contains("(i = 2"), EvaluationError);
}

TEST_CASE("product path equals the general path") {
  for (auto [id, h] : {std::pair{2, 0.25}, std::pair{3, 0.3}, std::pair{2, 0.15}}) {
    const Problem p = builtin(id);
    const MeshPlan plan = plan_mesh(p.params, h);
    const ApproxResult prod = modified_product(p, plan);
    const ApproxResult gen =
        p.direction == Direction::Increasing ? modified_inc(p, plan) : modified_dec(p, plan);
    CAPTURE(id);
    CHECK(rel_diff(prod.value, gen.value) <= 1e-12);
    CHECK(prod.eval_count == plan.n_total_product);
    CHECK(gen.eval_count == plan.n_total_general);
    CHECK(prod.used_product_path);
  }
  Problem zero = builtin(3);
  zero.product->x_factor = [](const DeNode&) { return 0.0; };
  zero.f = [](const DeNode&, double) { return 0.0; };
  CHECK(modified_product(zero, plan_mesh(zero.params, 0.3)).value == 0.0);
  CHECK_THROWS_AS(modified_product(builtin(1), plan_mesh(builtin(1).params, 0.3)), ProblemError);
}

TEST_CASE("original Muhammad-Mori formula") {
  const Problem p1 = builtin(1);
  const ApproxResult r = original_mm(p1, 0.25, default_epsilon(p1.params));
  CHECK(std::abs(r.value - *p1.exact) <= 1e-4);
  CHECK_FALSE(r.bound);
  CHECK(r.formula == Formula::Original);
  CHECK(r.plan.m_minus == r.plan.m_plus);
  CHECK(r.plan.n_minus == r.plan.n_plus);
  CHECK(r.eval_count == (2 * r.plan.m + 1) * (2 * r.plan.n + 1));

  const Problem p2 = builtin(2);
  const double eps = default_epsilon(p2.params);
  const ApproxResult prod = original_mm(p2, 0.25, eps, PathChoice::Product);
  const ApproxResult gen = original_mm(p2, 0.25, eps, PathChoice::General);
  CHECK(rel_diff(prod.value, gen.value) <= 1e-12);
  CHECK(prod.eval_count == (2 * prod.plan.m + 1) + (2 * prod.plan.n + 1));
  CHECK(original_mm(p2, 0.25, eps).used_product_path);

  Problem zero = p1;
  zero.f = [](const DeNode&, double) { return 0.0; };
  CHECK(original_mm(zero, 0.25, 0.1).value == 0.0);

  CHECK_THROWS_AS(original_mm(builtin(3), 0.25, 0.05), UnsupportedCaseError);
  CHECK_THROWS_AS(original_mm(p1, 0.25, 1.0), DomainError);
  CHECK_THROWS_AS(original_mm(p1, 0.25, 0.0), DomainError);
  CHECK_THROWS_AS(original_mm(p1, 0.25, 0.1, PathChoice::Product), ProblemError);
  CHECK_THROWS_AS(original_mm(p1, 100.0, 0.1), MeshInfeasibleError);
}

TEST_CASE("error bound evaluation") {
  const RegularityParams p1 = builtin(1).params;
  const double len = std::sqrt(2.0);
  const ErrorBound b = error_bound_abs(p1, 0.25, len);
  const double golden = 1.3988923111869071977;  // 40-digit evaluation
  CHECK(rel_diff(b.abs, golden) <= 1e-12);
  const oracle::Bound ref = oracle::error_bound(1, 1, 1, 1, 16.6, 0.6, 0.25, len);
  CHECK(rel_diff(b.e1_component, ref.e1) <= 1e-12);
  CHECK(rel_diff(b.e2_component, ref.e2) <= 1e-12);
  CHECK(rel_diff(b.abs, b.e1_component + b.e2_component) <= 1e-12);
  CHECK_FALSE(b.rel);

  RegularityParams twice = p1;
  twice.K *= 2.0;
  CHECK(error_bound_abs(twice, 0.25, len).abs == 2.0 * b.abs);

  for (int id : {1, 2, 3}) {
    const Problem p = builtin(id);
    double prev = std::numeric_limits<double>::infinity();
    for (double h = 0.8; h >= 0.1; h *= 0.9) {
      if (!plan_mesh(p.params, h).feasible) continue;
      const double v = error_bound_abs(p.params, h, p.b - p.a).abs;
      CAPTURE(h);
      CHECK(v < prev);
      prev = v;
      const oracle::Bound r = oracle::error_bound(p.params.alpha, p.params.beta, p.params.gamma,
                                                  p.params.delta, p.params.K, p.params.d, h,
                                                  p.b - p.a);
      CHECK(rel_diff(v, r.total) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(error_bound_abs(p1, 0.25, 0.0), DomainError);
}

TEST_CASE("relative bound") {
  CHECK(*error_bound_rel(0.1, 1.0) == doctest::Approx(0.1 / 0.9).epsilon(1e-15));
  CHECK(*error_bound_rel(0.1, -1.0) == doctest::Approx(0.1 / 0.9).epsilon(1e-15));
  CHECK_FALSE(error_bound_rel(1.0, 0.5));
  CHECK_FALSE(error_bound_rel(1.0, 1.0));
  CHECK_THROWS_AS(error_bound_rel(0.0, 1.0), DomainError);

  const Problem p2 = builtin(2);
  const ApproxResult r = integrate(p2, 0.25);
  REQUIRE(r.bound->rel);
  CHECK(*r.bound->rel >= std::abs(r.value - *p2.exact) / *p2.exact);
}

TEST_CASE("dispatcher") {
  const Problem p1 = builtin(1);
  const ApproxResult a = integrate(p1, 0.25);
  const ApproxResult b = modified_inc(p1, plan_mesh(p1.params, 0.25));
  CHECK(a.value == b.value);
  CHECK_FALSE(a.used_product_path);

  const Problem p3 = builtin(3);
  const ApproxResult c = integrate(p3, 0.3);
  CHECK(c.used_product_path);
  CHECK(c.eval_count == c.plan.n_total_product);

  CHECK(integrate(p1, 0.2).value == integrate(p1, 0.2).value);
}

TEST_CASE("shifting the interval leaves the approximation unchanged") {
  const double c = 0.75;
  const Problem base = builtin(1);
  Problem shifted = base;
  shifted.a += c;
  shifted.b += c;
  shifted.q = [c](const DeNode& s) { return 0.5 * (s.x - c) * (s.x - c); };
  shifted.q_prime = [c](const DeNode& s) { return s.x - c; };
  shifted.f = [c](const DeNode& x, double y) { return 1.0 / (x.x - c + y + 0.5); };
  for (double h : {0.3, 0.2}) {
    const double v0 = integrate(base, h).value;
    const double v1 = integrate(shifted, h).value;
    CHECK(rel_diff(v1, v0) <= 1e-13);
  }
}
