#pragma once

#include <complex>
#include <cstddef>
#include <map>

#include "gds/characters.hpp"
#include "gds/frequency.hpp"
#include "gds/lattice.hpp"

namespace gds {

using Complex = std::complex<double>;

/// Finitely supported sum a_n e^{-lambda_n s} over one fixed frequency.
/// Zero coefficients are pruned; arithmetic across different frequency
/// objects is rejected rather than merged.
class DirichletPolynomial {
 public:
  explicit DirichletPolynomial(FrequencyPtr freq) : freq_(std::move(freq)) {}
  DirichletPolynomial(FrequencyPtr freq,
                      std::map<std::size_t, Complex> terms);

  const FrequencyPtr& freq() const { return freq_; }
  const std::map<std::size_t, Complex>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /// Largest 0-based support index plus one, 0 for the zero polynomial.
  std::size_t support_end() const;

  void set(std::size_t n, Complex a);
  Complex coeff(std::size_t n) const;

  DirichletPolynomial& operator+=(const DirichletPolynomial& other);
  DirichletPolynomial& operator-=(const DirichletPolynomial& other);
  DirichletPolynomial& operator*=(Complex c);
  friend DirichletPolynomial operator+(DirichletPolynomial a,
                                       const DirichletPolynomial& b) {
    a += b;
    return a;
  }
  friend DirichletPolynomial operator-(DirichletPolynomial a,
                                       const DirichletPolynomial& b) {
    a -= b;
    return a;
  }

 private:
  FrequencyPtr freq_;
  std::map<std::size_t, Complex> terms_;
};

/// a_n -> a_n e^{-lambda_n z}; real z = u > 0 is Poisson smoothing.
DirichletPolynomial translate(const DirichletPolynomial& d, Complex z);

/// a_n -> a_n omega(lambda_n); the character's prefix must cover the support.
DirichletPolynomial vertical_limit(const DirichletPolynomial& d,
                                   const Character& omega);

/// Keeps lambda_n < x with coefficient a_n (1 - lambda_n / x); x > 0.
DirichletPolynomial riesz_mean(const DirichletPolynomial& d, double x);

/// Keeps terms whose decomposition row is supported in the first N basis
/// columns; dec must cover the support of d.
DirichletPolynomial abschnitt(const DirichletPolynomial& d, std::size_t N,
                              const BohrDecomposition& dec);

/// Keeps 1-based indices n <= N (i.e. 0-based indices < N).
DirichletPolynomial partial_sum(const DirichletPolynomial& d, std::size_t N);

Complex evaluate(const DirichletPolynomial& d, Complex s);

}  // namespace gds
