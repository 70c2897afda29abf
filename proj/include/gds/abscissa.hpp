#pragma once

#include <complex>
#include <vector>

#include "gds/frequency.hpp"

namespace gds {

enum class RuleKind { constant, exp_decay, alternating, table };

/// Total coefficient function n -> a_n for one frequency, defined for all
/// n <= horizon (1-based count; table rules are zero past the table).
struct CoefficientRule {
  FrequencyPtr freq;
  RuleKind kind = RuleKind::constant;
  double c = 0;  ///< decay rate: a_n = e^{-c lambda_n} for exp_decay
  std::vector<std::complex<double>> table;
  std::size_t horizon = 0;

  std::complex<double> at(std::size_t n) const;  // 0-based
};

struct AbscissaEstimate {
  double value = 0;          ///< -infinity for finitely supported rules
  double band = 0;
  bool upper_only = false;   ///< two-sided equality not claimed below 0
  bool finite_support = false;
};

/// Abscissa of absolute convergence from the growth of the absolute
/// partial sums: the local slope of log sum_{n<=M}|a_n| against lambda_M
/// across dyadic windows, banded by two consecutive slopes. N >= 100.
AbscissaEstimate sigma_a_estimate(const CoefficientRule& rule, std::size_t N);

/// Same estimator on the plain (signed) partial sums.
AbscissaEstimate sigma_c_estimate(const CoefficientRule& rule, std::size_t N);

/// L as the convergence abscissa of sum e^{-lambda_n s}: the all-ones rule
/// reduces the slope to log(M) increments against lambda_M.
AbscissaEstimate estimate_L_via_sigma_c(const Frequency& freq, std::size_t N);

struct StripReport {
  double L = 0;
  double epsilon = 0;
  double target = 0;           ///< L/2 - epsilon
  AbscissaEstimate sigma_a;
  bool h2_convergent = false;  ///< sum |a_n|^2 tails observed decreasing
  bool skipped = false;        ///< degenerate when L is near 0
};

/// Builds a_n = e^{-(L/2 + eps) lambda_n} and measures sigma_a against the
/// target L/2 - eps.
StripReport strip_experiment(const FrequencyPtr& freq, double eps,
                             std::size_t N);

}  // namespace gds
