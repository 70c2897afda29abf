#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "gds/frequency.hpp"
#include "gds/rational.hpp"

namespace gds {

/// Bohr decomposition of a frequency prefix: a basis chosen greedily as a
/// subsequence of lambda, plus one rational row per frequency entry such
/// that lambda_n = sum_k rows[n][k] * lambda_{basis_indices[k]} exactly.
struct BohrDecomposition {
  std::vector<std::size_t> basis_indices;     // 0-based frequency indices
  std::vector<std::vector<Rational>> rows;    // dense, rows[n].size() == basis size
};

BohrDecomposition extract_basis(const Frequency& freq, std::size_t M);

/// HNF basis of the subgroup of R generated by lambda_1..lambda_M, with
/// exact integer coordinates of every entry over the generators.
struct FrequencyLattice {
  FrequencyPtr freq;
  std::size_t prefix = 0;  // M
  BohrDecomposition dec;
  /// generator j as a rational vector over the decomposition basis
  std::vector<std::vector<Rational>> generators;
  /// coords[n][j] with lambda_n = sum_j coords[n][j] * generator_j, exact
  std::vector<std::vector<Int>> coords;

  std::size_t rank() const { return generators.size(); }
  Real generator_exact(std::size_t j) const;
  double generator_value(std::size_t j) const;
};

FrequencyLattice lattice_basis(const FrequencyPtr& freq, std::size_t M);

enum class PrefixType { natural, integer, strictly_rational };

struct TypeReport {
  PrefixType type = PrefixType::strictly_rational;
  bool rescaled = false;   // integer only after passing to a rescaled basis
  bool prefix_only = true; // the verdict never extends to the full sequence
  /// when rescaled: witness basis elements over the original basis columns
  std::vector<std::vector<Rational>> witness_basis;
};

TypeReport classify_prefix_type(const BohrDecomposition& dec);

/// True iff sum over A of lambda equals sum over B exactly; indices 1-based.
bool equal_frequency_sum(const FrequencyLattice& lat,
                         const std::vector<std::size_t>& A,
                         const std::vector<std::size_t>& B);

/// Row-style Hermite normal form of the lattice spanned by the rows of `a`;
/// returns the reduced basis rows (rank many, pivots positive, entries above
/// a pivot reduced into [0, pivot)).
std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> a);

/// Integer coordinates of `v` over HNF rows `h`; throws if v is outside.
std::vector<Int> hnf_solve(const std::vector<std::vector<Int>>& h,
                           std::vector<Int> v);

}  // namespace gds
