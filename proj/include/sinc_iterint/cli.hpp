#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sinc_iterint/iterated.hpp"

namespace sinc_iterint::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitCertificateViolation = 3,
  kExitUnsupported = 4,
};

/// One CSV row of a convergence sweep. Columns follow field order, then a
/// trailing `reason` column that is non-empty only for infeasible meshes.
struct SweepRecord {
  double h = 0.0;
  long n = 0, m = 0;
  long n_minus = 0, n_plus = 0, m_minus = 0, m_plus = 0;
  long long n_total = 0;
  Formula formula = Formula::Modified;
  std::optional<double> value;
  std::optional<double> abs_err;
  std::optional<double> rel_err;
  std::optional<double> bound_abs;
  std::optional<double> bound_rel;
  long long eval_count = 0;
  std::int64_t wall_time_ns = 0;
  std::string reason;
};

std::string csv_header();
std::string to_csv(const SweepRecord& record);

/// Runs one sweep point; infeasible meshes give a record with `reason` set.
/// Throws UnsupportedCaseError for the original formula on a decreasing q.
SweepRecord sweep_point(const Problem& problem, double h, Formula formula);

/// 11 geometric steps from 0.8 down to 0.15, both endpoints included.
std::vector<double> verification_grid();

int cmd_sweep(int example, std::span<const double> h_list, Formula formula, std::ostream& out,
              std::ostream& err);

/// key=value report of the mesh plan and the certificate at step h.
/// k_override replaces the example's K.
int cmd_bound(int example, double h, std::ostream& out, std::ostream& err,
              std::optional<double> k_override = std::nullopt);

int cmd_verify(int example, std::ostream& out, std::ostream& err);

}  // namespace sinc_iterint::cli
