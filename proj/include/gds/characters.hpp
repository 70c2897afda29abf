#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "gds/lattice.hpp"

namespace gds {

using LatticePtr = std::shared_ptr<const FrequencyLattice>;

/// A character of the free group generated by a frequency prefix, given by
/// one angle per HNF generator. Multiplicative on every exact additive
/// relation among the frequencies by construction.
struct Character {
  LatticePtr lattice;
  std::vector<double> angles;  // theta_j in [0, 2*pi)
};

/// The vertical-translation character beta(tau): apply(., n) = e^{-i tau lambda_n}.
Character character_from_real(const LatticePtr& lat, double tau);

/// Haar-random character: independent uniform angles, deterministic per seed.
Character random_character(const LatticePtr& lat, std::uint64_t seed);

/// Pointwise product (angle sum); both characters must share a lattice.
Character compose(const Character& a, const Character& b);

/// omega(lambda_n) = exp(i sum_j coords[n][j] * theta_j); n is 0-based.
std::complex<double> apply(const Character& chi, std::size_t n);

}  // namespace gds
