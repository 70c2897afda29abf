#include "gds/abscissa.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gds {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Local Bohr-Cahen slope between dyadic checkpoints of the running sums.
AbscissaEstimate slope_estimate(const Frequency& freq,
                                const std::vector<double>& logS,
                                std::size_t N) {
  // logS[i] = log of the partial-sum magnitude through index i (0-based)
  auto slope = [&](std::size_t lo, std::size_t hi) {
    double dl = freq.lambda(hi) - freq.lambda(lo);
    if (dl <= 0) return 0.0;
    return (logS[hi] - logS[lo]) / dl;
  };
  std::size_t n4 = N / 4 - 1, n2 = N / 2 - 1, n1 = N - 1;
  double s1 = slope(n2, n1);
  double s2 = slope(n4, n2);
  AbscissaEstimate est;
  est.value = s1;
  est.band = std::abs(s1 - s2) + 1e-3;
  // a slope near zero cannot distinguish a negative abscissa: the partial
  // sums of a convergent series flatten out instead of decaying
  est.upper_only = est.value < 0.05;
  return est;
}

AbscissaEstimate run_estimator(const CoefficientRule& rule, std::size_t N,
                               bool absolute) {
  if (N < 100) throw std::invalid_argument("N >= 100 required");
  if (!rule.freq) throw std::invalid_argument("rule has no frequency");
  if (N > rule.freq->size() || (rule.horizon && N > rule.horizon))
    throw std::invalid_argument("N beyond rule horizon");

  std::vector<double> logS(N);
  double S = 0;
  std::complex<double> C = 0;
  std::size_t last_nonzero = 0;
  bool any = false;
  for (std::size_t n = 0; n < N; ++n) {
    std::complex<double> a = rule.at(n);
    if (a != std::complex<double>(0)) {
      last_nonzero = n;
      any = true;
    }
    if (absolute) {
      S += std::abs(a);
      logS[n] = S > 0 ? std::log(S) : kNegInf;
    } else {
      C += a;
      double m = std::abs(C);
      logS[n] = m > 0 ? std::log(m) : kNegInf;
    }
  }
  if (!any || last_nonzero + 1 <= N / 2) {
    AbscissaEstimate est;
    est.value = kNegInf;
    est.finite_support = true;
    return est;
  }
  if (!absolute) {
    // signed sums can dip through zero; clamp to the running max from the
    // right so the dyadic slopes stay finite
    for (std::size_t n = N; n-- > 1;)
      if (!std::isfinite(logS[n - 1])) logS[n - 1] = logS[n];
  }
  return slope_estimate(*rule.freq, logS, N);
}

}  // namespace

std::complex<double> CoefficientRule::at(std::size_t n) const {
  switch (kind) {
    case RuleKind::constant:
      return 1.0;
    case RuleKind::exp_decay:
      return std::exp(-c * freq->lambda(n));
    case RuleKind::alternating:
      return (n % 2 == 0) ? 1.0 : -1.0;
    case RuleKind::table:
      return n < table.size() ? table[n] : 0.0;
  }
  return 0.0;
}

AbscissaEstimate sigma_a_estimate(const CoefficientRule& rule, std::size_t N) {
  return run_estimator(rule, N, true);
}

AbscissaEstimate sigma_c_estimate(const CoefficientRule& rule, std::size_t N) {
  return run_estimator(rule, N, false);
}

AbscissaEstimate estimate_L_via_sigma_c(const Frequency& freq, std::size_t N) {
  if (N < 100) throw std::invalid_argument("N >= 100 required");
  if (N > freq.size()) throw std::invalid_argument("N beyond frequency");
  std::vector<double> logS(N);
  for (std::size_t n = 0; n < N; ++n)
    logS[n] = std::log(static_cast<double>(n + 1));
  return slope_estimate(freq, logS, N);
}

StripReport strip_experiment(const FrequencyPtr& freq, double eps,
                             std::size_t N) {
  if (!freq) throw std::invalid_argument("null frequency");
  StripReport rep;
  rep.epsilon = eps;
  LEstimate L = estimate_L(*freq);
  rep.L = L.value;
  if (L.value < 0.1) {
    rep.skipped = true;
    return rep;
  }
  if (!(eps > 0) || !(eps < L.value / 2))
    throw std::invalid_argument("need 0 < eps < L/2");
  rep.target = L.value / 2 - eps;

  CoefficientRule rule;
  rule.freq = freq;
  rule.kind = RuleKind::exp_decay;
  rule.c = L.value / 2 + eps;

  // membership check: |a_n|^2 window masses must shrink
  double t1 = 0, t2 = 0;
  for (std::size_t n = N / 4; n < N / 2; ++n)
    t1 += std::norm(rule.at(n));
  for (std::size_t n = N / 2; n < N; ++n)
    t2 += std::norm(rule.at(n));
  rep.h2_convergent = t2 < t1;

  rep.sigma_a = sigma_a_estimate(rule, N);
  return rep;
}

}  // namespace gds
