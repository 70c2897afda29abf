#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace gds {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(std::size_t npoints);

/// Integral of f over [a, b] with `panels` equal panels of an n-point rule.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::size_t panels, std::size_t npoints = 8);

}  // namespace gds
