#pragma once

#include <complex>
#include <vector>

#include "gds/lattice.hpp"
#include "gds/polynomial.hpp"

namespace gds {

/// Polynomial on the torus T^B: F(z) = sum_n a_n z^{rows[n]}, the image of a
/// Dirichlet polynomial under its Bohr decomposition. Monomials keep the
/// order of the source terms.
struct TorusLift {
  std::size_t basis_size = 0;
  std::vector<std::vector<Int>> rows;   // one exponent vector per term
  std::vector<Complex> coeffs;
  std::vector<std::size_t> indices;     // source term index, 0-based
};

/// Requires every decomposition row on the support to be integral.
TorusLift lift(const DirichletPolynomial& d, const BohrDecomposition& dec);

/// Reconstructs the polynomial from a lift; exponent vectors are matched
/// against dec rows, coefficients are carried over bit-exactly.
DirichletPolynomial inverse_lift(const TorusLift& f, const FrequencyPtr& freq,
                                 const BohrDecomposition& dec);

/// For a natural-type row over the ordinary basis (log p_j): the integer
/// n = prod p_j^{alpha_j} indexed by the exponent vector.
Int ordinary_index(const std::vector<Int>& row,
                   const std::vector<Int>& primes);

/// Primes backing the symbols of an ordinary frequency, in symbol order.
std::vector<Int> ordinary_primes(const Frequency& freq);

}  // namespace gds
