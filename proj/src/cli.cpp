#include "sinc_iterint/cli.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <exception>

#include "sinc_iterint/errors.hpp"
#include "sinc_iterint/problems.hpp"

namespace sinc_iterint::cli {

namespace {

constexpr double kGridStart = 0.8;
constexpr double kGridEnd = 0.15;
constexpr int kGridSteps = 10;
constexpr double kErrorFloor = 1e-13;

std::string num(double v) { return fmt::format("{:.17g}", v); }
std::string opt(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

const char* formula_name(Formula f) { return f == Formula::Modified ? "modified" : "original"; }

const char* boundary_text(int example) {
  switch (example) {
    case 1:
      return "q(x)=x^2/2";
    case 2:
      return "q(x)=sqrt(1-(1-x)^2)";
    default:
      return "q(x)=1-x";
  }
}

// CSV fields must not contain commas or line breaks.
std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

void copy_plan(SweepRecord& rec, const MeshPlan& plan, bool product) {
  rec.n = plan.n;
  rec.m = plan.m;
  rec.n_minus = plan.n_minus;
  rec.n_plus = plan.n_plus;
  rec.m_minus = plan.m_minus;
  rec.m_plus = plan.m_plus;
  rec.n_total = product ? plan.n_total_product : plan.n_total_general;
}

void fill_errors(SweepRecord& rec, const Problem& problem) {
  if (!problem.exact || !rec.value) return;
  rec.abs_err = std::abs(*rec.value - *problem.exact);
  if (*problem.exact != 0.0) rec.rel_err = *rec.abs_err / std::abs(*problem.exact);
}

std::string reasons_text(const MeshPlan& plan) {
  std::string out;
  for (const auto& r : plan.infeasibility_reasons) {
    if (!out.empty()) out += "; ";
    out += r;
  }
  return out;
}

bool valid_example(int example, std::ostream& err) {
  if (example >= 1 && example <= 3) return true;
  err << "error: unknown example " << example << " (expected 1, 2 or 3)\n";
  return false;
}

}  // namespace

std::string csv_header() {
  return "h,n,m,N_minus,N_plus,M_minus,M_plus,n_total,formula,value,abs_err,rel_err,"
         "bound_abs,bound_rel,eval_count,wall_time_ns,reason";
}

std::string to_csv(const SweepRecord& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}", num(r.h), r.n, r.m,
                     r.n_minus, r.n_plus, r.m_minus, r.m_plus, r.n_total,
                     formula_name(r.formula), opt(r.value), opt(r.abs_err), opt(r.rel_err),
                     opt(r.bound_abs), opt(r.bound_rel), r.eval_count, r.wall_time_ns,
                     sanitize(r.reason));
}

SweepRecord sweep_point(const Problem& problem, double h, Formula formula) {
  SweepRecord rec;
  rec.h = h;
  rec.formula = formula;
  const auto start = std::chrono::steady_clock::now();
  if (formula == Formula::Modified) {
    const MeshPlan plan = plan_mesh(problem.params, h);
    copy_plan(rec, plan, problem.product.has_value());
    if (!plan.feasible) {
      rec.reason = "infeasible: " + reasons_text(plan);
      return rec;
    }
    try {
      const ApproxResult res = integrate(problem, h);
      rec.value = res.value;
      rec.bound_abs = res.bound->abs;
      rec.bound_rel = res.bound->rel;
      rec.eval_count = res.eval_count;
    } catch (const MeshInfeasibleError& e) {
      rec.reason = std::string("infeasible: ") + e.what();
      return rec;
    }
  } else {
    try {
      const ApproxResult res = original_mm(problem, h, default_epsilon(problem.params));
      copy_plan(rec, res.plan, res.used_product_path);
      rec.value = res.value;
      rec.eval_count = res.eval_count;
    } catch (const MeshInfeasibleError& e) {
      rec.reason = std::string("infeasible: ") + e.what();
      return rec;
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  rec.wall_time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  fill_errors(rec, problem);
  return rec;
}

std::vector<double> verification_grid() {
  std::vector<double> grid;
  const double ratio = kGridEnd / kGridStart;
  for (int k = 0; k <= kGridSteps; ++k) {
    grid.push_back(kGridStart * std::pow(ratio, static_cast<double>(k) / kGridSteps));
  }
  grid.back() = kGridEnd;
  return grid;
}

int cmd_sweep(int example, std::span<const double> h_list, Formula formula, std::ostream& out,
              std::ostream& err) {
  if (!valid_example(example, err)) return kExitUsage;
  if (h_list.empty()) {
    err << "error: empty h list\n";
    return kExitUsage;
  }
  for (double h : h_list) {
    if (!(h > 0.0) || !std::isfinite(h)) {
      err << "error: every h must be positive and finite\n";
      return kExitUsage;
    }
  }
  const Problem problem = builtin(example);
  if (formula == Formula::Original && problem.direction == Direction::Decreasing) {
    err << "error: the original formula cannot be used in this case because "
        << boundary_text(example) << " does not satisfy q'(x) >= 0\n";
    return kExitUnsupported;
  }
  std::vector<std::string> rows;
  rows.reserve(h_list.size());
  for (double h : h_list) rows.push_back(to_csv(sweep_point(problem, h, formula)));
  out << csv_header() << '\n';
  for (const auto& row : rows) out << row << '\n';
  return kExitOk;
}

int cmd_bound(int example, double h, std::ostream& out, std::ostream& err,
              std::optional<double> k_override) {
  if (!valid_example(example, err)) return kExitUsage;
  if (!(h > 0.0) || !std::isfinite(h)) {
    err << "error: h must be positive and finite\n";
    return kExitUsage;
  }
  Problem problem = builtin(example);
  if (k_override) {
    if (!(*k_override > 0.0) || !std::isfinite(*k_override)) {
      err << "error: K must be positive\n";
      return kExitUsage;
    }
    problem.params.K = *k_override;
  }
  const MeshPlan plan = plan_mesh(problem.params, h);
  out << "example=" << example << '\n'
      << "h=" << num(plan.h) << '\n'
      << "h_tilde=" << num(plan.h_tilde) << '\n'
      << "n=" << plan.n << '\n'
      << "m=" << plan.m << '\n'
      << "N_minus=" << plan.n_minus << '\n'
      << "N_plus=" << plan.n_plus << '\n'
      << "M_minus=" << plan.m_minus << '\n'
      << "M_plus=" << plan.m_plus << '\n'
      << "n_total_general=" << plan.n_total_general << '\n'
      << "n_total_product=" << plan.n_total_product << '\n'
      << "feasible=" << (plan.feasible ? "true" : "false") << '\n';
  if (!plan.feasible) {
    err << "error: infeasible mesh: " << reasons_text(plan) << '\n';
    return kExitUnsupported;
  }
  const ApproxResult res = integrate(problem, h);
  const ErrorBound& bound = *res.bound;
  out << "K=" << num(problem.params.K) << '\n'
      << "value=" << num(res.value) << '\n'
      << "e1_component=" << num(bound.e1_component) << '\n'
      << "e2_component=" << num(bound.e2_component) << '\n'
      << "abs=" << num(bound.abs) << '\n'
      << "rel=" << (bound.rel ? num(*bound.rel) : std::string("unavailable")) << '\n';
  return kExitOk;
}

int cmd_verify(int example, std::ostream& out, std::ostream& err) {
  if (!valid_example(example, err)) return kExitUsage;
  const Problem problem = builtin(example);
  bool all_pass = true;
  std::optional<double> worst_so_far;
  for (double h : verification_grid()) {
    const SweepRecord rec = sweep_point(problem, h, Formula::Modified);
    if (!rec.reason.empty()) {
      out << "SKIP h=" << num(h) << ' ' << rec.reason << '\n';
      continue;
    }
    const double abs_err = *rec.abs_err;
    const bool dominated = abs_err <= *rec.bound_abs;
    const bool rel_ok = !rec.bound_rel || *rec.rel_err <= *rec.bound_rel;
    // No new error peak beyond what coarser meshes already showed.
    const bool decreasing = !worst_so_far || abs_err <= *worst_so_far || abs_err <= kErrorFloor;
    const bool pass = dominated && rel_ok && decreasing;
    all_pass = all_pass && pass;
    worst_so_far = worst_so_far ? std::max(*worst_so_far, abs_err) : abs_err;
    out << (pass ? "PASS" : "FAIL") << " h=" << num(h) << " abs_err=" << num(abs_err)
        << " bound_abs=" << num(*rec.bound_abs) << " rel_err=" << opt(rec.rel_err)
        << " bound_rel=" << (rec.bound_rel ? num(*rec.bound_rel) : std::string("unavailable"))
        << " path=" << (problem.product ? "product" : "general")
        << " eval_count=" << rec.eval_count << " n_total=" << rec.n_total;
    if (!dominated) out << " [abs bound violated]";
    if (!rel_ok) out << " [rel bound violated]";
    if (!decreasing) out << " [error increased]";
    out << '\n';
  }
  out << (all_pass ? "RESULT PASS" : "RESULT FAIL") << '\n';
  if (!all_pass) err << "error: certificate check failed for example " << example << '\n';
  return all_pass ? kExitOk : kExitCertificateViolation;
}

}  // namespace sinc_iterint::cli
