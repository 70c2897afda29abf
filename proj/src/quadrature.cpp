#include "gds/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace gds {

namespace {

GaussRule build_rule(std::size_t n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1 - x * x) * pp * pp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t npoints) {
  if (npoints < 1) throw std::invalid_argument("npoints >= 1 required");
  static std::map<std::size_t, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(npoints);
  if (it == cache.end()) it = cache.emplace(npoints, build_rule(npoints)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::size_t panels, std::size_t npoints) {
  if (panels < 1) throw std::invalid_argument("panels >= 1 required");
  const GaussRule& rule = gauss_legendre(npoints);
  const double h = (b - a) / static_cast<double>(panels);
  double acc = 0;
  for (std::size_t p = 0; p < panels; ++p) {
    double mid = a + (p + 0.5) * h;
    double half = 0.5 * h;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    // weights sum to 2, scale by half-width
  }
  return acc * (0.5 * h);
}

}  // namespace gds
