#include "gds/characters.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace gds {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

}  // namespace

Character character_from_real(const LatticePtr& lat, double tau) {
  if (!lat) throw std::invalid_argument("null lattice");
  Character chi;
  chi.lattice = lat;
  chi.angles.reserve(lat->rank());
  for (std::size_t j = 0; j < lat->rank(); ++j)
    chi.angles.push_back(wrap_angle(-tau * lat->generator_value(j)));
  return chi;
}

Character random_character(const LatticePtr& lat, std::uint64_t seed) {
  if (!lat) throw std::invalid_argument("null lattice");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, kTwoPi);
  Character chi;
  chi.lattice = lat;
  chi.angles.reserve(lat->rank());
  for (std::size_t j = 0; j < lat->rank(); ++j) chi.angles.push_back(unif(rng));
  return chi;
}

Character compose(const Character& a, const Character& b) {
  if (a.lattice != b.lattice)
    throw std::invalid_argument("characters live on different lattices");
  Character chi;
  chi.lattice = a.lattice;
  chi.angles.reserve(a.angles.size());
  for (std::size_t j = 0; j < a.angles.size(); ++j)
    chi.angles.push_back(wrap_angle(a.angles[j] + b.angles[j]));
  return chi;
}

std::complex<double> apply(const Character& chi, std::size_t n) {
  const auto& lat = *chi.lattice;
  if (n >= lat.prefix) throw std::out_of_range("index outside lattice prefix");
  double phase = 0;
  const auto& c = lat.coords[n];
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    phase += c[j].convert_to<double>() * chi.angles[j];
  }
  return std::polar(1.0, phase);
}

}  // namespace gds
