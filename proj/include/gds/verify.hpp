#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gds/norms.hpp"
#include "gds/polynomial.hpp"

namespace gds {

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  double max_deviation = 0;
  double tolerance = 0;
  bool pass = false;
  std::string csv_header;
  std::vector<std::string> csv_rows;

  void record(double deviation) {
    ++cases;
    if (deviation > max_deviation) max_deviation = deviation;
  }
  void finish() { pass = max_deviation <= tolerance; }
  std::string summary_line() const;
  void write_csv(const std::string& path) const;
};

/// Deterministic sample polynomial on a frequency prefix.
DirichletPolynomial random_polynomial(const FrequencyPtr& freq,
                                      std::size_t prefix,
                                      std::size_t max_terms,
                                      std::uint64_t seed);

/// Exact even norms are unchanged by character twists; checked over Haar
/// samples plus vertical-translation characters. All-sample quantifiers are
/// hard: one failing character fails the suite.
SuiteReport suite_vertical_isometry(const std::vector<FrequencyPtr>& freqs,
                                    std::size_t trials,
                                    const std::vector<unsigned>& p_list,
                                    std::uint64_t seed);

/// ||D_u||_2 increases monotonically as u decreases to 0 and lands within a
/// decay-sized band of ||D||_2 at u = 2^-10.
SuiteReport suite_translation_sup(const std::vector<FrequencyPtr>& freqs,
                                  std::size_t trials, std::uint64_t seed);

/// norm2(D) never exceeds the certified sup-norm upper value.
SuiteReport suite_parseval_vs_sup(const std::vector<FrequencyPtr>& freqs,
                                  std::size_t trials, std::uint64_t seed);

/// Poisson convolution of the boundary values reproduces the interior
/// evaluation within the kernel tail mass over the truncated window.
SuiteReport suite_helson_formula(const FrequencyPtr& freq,
                                 const DirichletPolynomial& d,
                                 const std::vector<double>& u_list,
                                 const std::vector<double>& t_list,
                                 std::size_t omega_samples, double window,
                                 std::uint64_t seed);

/// Index-prefix projections: exact contraction at p = 2, diagnostic
/// lower-bound table against lambda_N at p = 1.
SuiteReport suite_projection_growth(const FrequencyPtr& freq,
                                    const std::vector<std::size_t>& n_list,
                                    std::size_t samples, std::uint64_t seed);

/// Basis-column restrictions grow monotonically to the full norm.
SuiteReport suite_abschnitt(const std::vector<FrequencyPtr>& freqs,
                            std::size_t trials, std::uint64_t seed);

/// Typical means converge uniformly on right half-planes: the sup-norm
/// deviation table strictly trends to zero along the x schedule.
SuiteReport suite_riesz_mean(const FrequencyPtr& freq,
                             const DirichletPolynomial& d, double eps,
                             const std::vector<double>& x_list);

/// All suites at default scale, in a fixed order.
std::vector<SuiteReport> run_all_suites(std::uint64_t seed);

}  // namespace gds
