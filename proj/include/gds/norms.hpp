#pragma once

#include <cstdint>
#include <vector>

#include "gds/lattice.hpp"
#include "gds/polynomial.hpp"

namespace gds {

enum class NormMethod {
  parseval,
  even_exact,
  besicovitch_quadrature,
  periodic_exact,
  torus_grid,
  line_search,
};

const char* to_string(NormMethod m);

struct NormEstimate {
  double value = 0;
  NormMethod method = NormMethod::parseval;
  double error = 0;
  bool lower_bound = false;  ///< value only certifies a lower bound
  bool converged = true;     ///< quadrature schedule error was decreasing
};

/// Number of worker threads for the quadrature loops (default 1).
void set_norm_threads(unsigned n);
unsigned norm_threads();

/// sqrt(sum |a_n|^2); exact by Parseval.
NormEstimate norm2(const DirichletPolynomial& d);

/// Exact even norm: the Besicovitch mean of |f|^{2k} is the sum over
/// size-k index multiset pairs with equal frequency sum of the paired
/// coefficient products. Throws std::length_error past `budget` pairs.
/// `lat` may pre-supply the coordinate lattice of the support prefix.
NormEstimate norm_even_exact(const DirichletPolynomial& d, unsigned p,
                             const FrequencyLattice* lat = nullptr,
                             std::uint64_t budget = 10'000'000);

/// (1/2T) int_{-T}^{T} |f|^p dt along an increasing schedule of T values;
/// composite Gauss-Legendre with panel width pi / max lambda.
NormEstimate norm_besicovitch(const DirichletPolynomial& d, double p,
                              const std::vector<double>& schedule);

/// Schedule sized from the pairwise cross-term bound so that the p=2 mean
/// at the final T is within target_rel * norm2(d) of the true norm.
std::vector<double> default_schedule(const DirichletPolynomial& d,
                                     double target_rel = 1e-3);

/// Single-period mean for rank-1 lattices; uniform grid, exact for even p.
NormEstimate norm_periodic(const DirichletPolynomial& d, double p,
                           const FrequencyLattice& lat);

/// Mean of |lift F|^p over a product grid on the torus of the decomposition;
/// rows must be integral and the basis at most 6 columns. Exact for even p
/// once the resolution clears the lifted degree; otherwise error is taken
/// from two consecutive resolutions.
NormEstimate norm_torus(const DirichletPolynomial& d, double p,
                        const BohrDecomposition& dec, std::size_t resolution);

struct SupOptions {
  double t_max = 1e4;        ///< line-search window for the fallback strategy
  std::size_t grid = 4096;   ///< periodic / line-search grid size
  std::size_t torus_budget = 2'000'000;  ///< total torus grid points
  std::uint64_t seed = 1;
};

/// Supremum of |D(it)| over t. Strategy by lattice rank: rank <= 6 gives a
/// certified torus bound (flow closure is the full torus since the
/// generators are rationally independent), with an exact shortcut when the
/// coordinate rows are distinct signed unit vectors; otherwise a line
/// search reporting a lower bound.
NormEstimate norm_sup(const DirichletPolynomial& d, const SupOptions& opts = {});

}  // namespace gds
