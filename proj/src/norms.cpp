#include "gds/norms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "gds/quadrature.hpp"

namespace gds {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

unsigned g_threads = 1;

struct Term {
  double lambda;
  Complex a;
};

std::vector<Term> flatten(const DirichletPolynomial& d) {
  std::vector<Term> t;
  t.reserve(d.term_count());
  for (const auto& [n, a] : d.terms()) t.push_back({d.freq()->lambda(n), a});
  return t;
}

double abs2(Complex z) { return std::norm(z); }

/// (1/2T) int_{-T}^{T} |f|^p dt by composite Gauss-Legendre, panel width
/// about pi / max lambda.
double mean_pow(const std::vector<Term>& terms, double p, double T) {
  double maxlam = 0;
  for (const auto& t : terms) maxlam = std::max(maxlam, t.lambda);
  if (maxlam == 0 || terms.empty()) {
    Complex c = 0;
    for (const auto& t : terms) c += t.a;
    return std::pow(abs2(c), p / 2);
  }
  const std::size_t panels =
      std::max<std::size_t>(16, static_cast<std::size_t>(2 * T * maxlam / std::numbers::pi) + 1);
  const double h = 2 * T / static_cast<double>(panels);
  const GaussRule& rule = gauss_legendre(8);

  auto panel_sum = [&](std::size_t lo, std::size_t hi) {
    double acc = 0;
    for (std::size_t pi_ = lo; pi_ < hi; ++pi_) {
      double mid = -T + (pi_ + 0.5) * h;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double t = mid + 0.5 * h * rule.nodes[i];
        Complex f = 0;
        for (const auto& tm : terms) f += tm.a * std::polar(1.0, -tm.lambda * t);
        acc += rule.weights[i] * std::pow(abs2(f), p / 2);
      }
    }
    return acc;
  };

  double total = 0;
  unsigned nt = std::min<unsigned>(g_threads, 32);
  if (nt <= 1 || panels < 64) {
    total = panel_sum(0, panels);
  } else {
    std::vector<double> part(nt, 0.0);
    std::vector<std::thread> pool;
    std::size_t chunk = (panels + nt - 1) / nt;
    for (unsigned k = 0; k < nt; ++k) {
      std::size_t lo = k * chunk, hi = std::min(panels, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, k, lo, hi] { part[k] = panel_sum(lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (double x : part) total += x;
  }
  // each panel integral carries the half-width factor; divide by 2T
  return total * (0.5 * h) / (2 * T);
}

double multiset_count(std::size_t m, unsigned k) {
  double c = 1;
  for (unsigned i = 1; i <= k; ++i)
    c = c * static_cast<double>(m + i - 1) / static_cast<double>(i);
  return c;
}

}  // namespace

const char* to_string(NormMethod m) {
  switch (m) {
    case NormMethod::parseval: return "parseval";
    case NormMethod::even_exact: return "even_exact";
    case NormMethod::besicovitch_quadrature: return "besicovitch_quadrature";
    case NormMethod::periodic_exact: return "periodic_exact";
    case NormMethod::torus_grid: return "torus_grid";
    case NormMethod::line_search: return "line_search";
  }
  return "?";
}

void set_norm_threads(unsigned n) { g_threads = std::max(1u, n); }
unsigned norm_threads() { return g_threads; }

NormEstimate norm2(const DirichletPolynomial& d) {
  double s = 0;
  for (const auto& [n, a] : d.terms()) s += abs2(a);
  return {std::sqrt(s), NormMethod::parseval, 0.0, false, true};
}

NormEstimate norm_even_exact(const DirichletPolynomial& d, unsigned p,
                             const FrequencyLattice* lat,
                             std::uint64_t budget) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("p must be even, >= 2");
  const unsigned k = p / 2;
  if (d.empty()) return {0.0, NormMethod::even_exact, 0.0, false, true};

  std::vector<std::size_t> support;
  std::vector<Complex> coeff;
  for (const auto& [n, a] : d.terms()) {
    support.push_back(n);
    coeff.push_back(a);
  }
  const std::size_t m = support.size();
  double count = multiset_count(m, k);
  if (count * count > static_cast<double>(budget))
    throw std::length_error("even-norm multiset budget exceeded");

  FrequencyLattice local;
  if (!lat) {
    local = lattice_basis(d.freq(), d.support_end());
    lat = &local;
  }
  if (d.support_end() > lat->prefix)
    throw std::out_of_range("support outside lattice prefix");

  double kfact = 1;
  for (unsigned i = 2; i <= k; ++i) kfact *= i;

  // accumulate sum over size-k multisets of (k!/prod mult!) prod a_n,
  // grouped by the total frequency as an exact coordinate vector
  std::map<std::vector<Int>, Complex> groups;
  const std::size_t rank = lat->rank();
  std::vector<Int> key(rank, Int(0));

  auto recurse = [&](auto&& self, std::size_t i, unsigned left,
                     Complex factor) -> void {
    if (left == 0) {
      groups[key] += factor * kfact;
      return;
    }
    if (i == m) return;
    self(self, i + 1, left, factor);
    const auto& c = lat->coords[support[i]];
    Complex f = factor;
    for (unsigned cnt = 1; cnt <= left; ++cnt) {
      f *= coeff[i] / static_cast<double>(cnt);
      for (std::size_t j = 0; j < rank; ++j) key[j] += c[j];
      self(self, i + 1, left - cnt, f);
    }
    for (unsigned cnt = 1; cnt <= left; ++cnt)
      for (std::size_t j = 0; j < rank; ++j) key[j] -= c[j];
  };
  recurse(recurse, 0, k, Complex(1.0));

  double s = 0;
  for (const auto& [kk, c] : groups) s += abs2(c);
  return {std::pow(s, 1.0 / p), NormMethod::even_exact, 0.0, false, true};
}

NormEstimate norm_besicovitch(const DirichletPolynomial& d, double p,
                              const std::vector<double>& schedule) {
  if (p < 1) throw std::invalid_argument("p >= 1 required");
  if (schedule.size() < 3 ||
      !std::is_sorted(schedule.begin(), schedule.end()) ||
      schedule.front() <= 0)
    throw std::invalid_argument("schedule must be >= 3 increasing positive T");
  if (d.empty())
    return {0.0, NormMethod::besicovitch_quadrature, 0.0, false, true};

  auto terms = flatten(d);
  std::vector<double> roots;
  roots.reserve(schedule.size());
  for (double T : schedule)
    roots.push_back(std::pow(mean_pow(terms, p, T), 1.0 / p));

  NormEstimate est;
  est.method = NormMethod::besicovitch_quadrature;
  est.value = roots.back();
  est.error = std::abs(roots[roots.size() - 1] - roots[roots.size() - 2]);
  double prev_diff = std::abs(roots[roots.size() - 2] - roots[roots.size() - 3]);
  est.converged = est.error <= prev_diff + 1e-15;
  return est;
}

std::vector<double> default_schedule(const DirichletPolynomial& d,
                                     double target_rel) {
  auto terms = flatten(d);
  double n2sq = 0;
  for (const auto& t : terms) n2sq += abs2(t.a);
  double cross = 0;
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      double gap = std::abs(terms[i].lambda - terms[j].lambda);
      cross += 2 * std::abs(terms[i].a) * std::abs(terms[j].a) / gap;
    }
  double T = 50;
  if (n2sq > 0 && cross > 0)
    T = std::max(T, cross / (0.5 * target_rel * n2sq));
  return {T / 4, T / 2, T};
}

NormEstimate norm_periodic(const DirichletPolynomial& d, double p,
                           const FrequencyLattice& lat) {
  if (lat.rank() != 1) throw std::invalid_argument("rank-1 lattice required");
  if (d.support_end() > lat.prefix)
    throw std::out_of_range("support outside lattice prefix");
  if (d.empty()) return {0.0, NormMethod::periodic_exact, 0.0, false, true};

  // multiples of the generator carried by the support
  long cmin = 0, cmax = 0;
  std::vector<std::pair<long, Complex>> mult;
  for (const auto& [n, a] : d.terms()) {
    long c = lat.coords[n][0].convert_to<long>();
    cmin = std::min(cmin, c);
    cmax = std::max(cmax, c);
    mult.push_back({c, a});
  }
  bool even = p >= 2 && std::floor(p) == p && std::fmod(p, 2.0) == 0;
  unsigned k = even ? static_cast<unsigned>(p / 2) : 0;

  auto grid_mean = [&](std::size_t npts) {
    double acc = 0;
    for (std::size_t j = 0; j < npts; ++j) {
      double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(npts);
      Complex f = 0;
      for (const auto& [c, a] : mult)
        f += a * std::polar(1.0, -static_cast<double>(c) * theta);
      acc += std::pow(abs2(f), p / 2);
    }
    return acc / static_cast<double>(npts);
  };

  NormEstimate est;
  est.method = NormMethod::periodic_exact;
  if (even) {
    // uniform grid averages are exact once the grid outruns every frequency
    // present in |f|^{2k}
    std::size_t npts = static_cast<std::size_t>(k) * (cmax - cmin) + 1;
    npts = std::max<std::size_t>(npts, 8);
    est.value = std::pow(grid_mean(npts), 1.0 / p);
    est.error = 0;
  } else {
    std::size_t base = 64 + 4 * static_cast<std::size_t>((cmax - cmin) * std::ceil(p));
    double v1 = std::pow(grid_mean(base), 1.0 / p);
    double v2 = std::pow(grid_mean(2 * base + 1), 1.0 / p);
    est.value = v2;
    est.error = std::abs(v2 - v1);
  }
  return est;
}

NormEstimate norm_torus(const DirichletPolynomial& d, double p,
                        const BohrDecomposition& dec, std::size_t resolution) {
  if (d.empty()) return {0.0, NormMethod::torus_grid, 0.0, false, true};
  if (d.support_end() > dec.rows.size())
    throw std::out_of_range("support outside decomposition");
  const std::size_t B = dec.rows.empty() ? 0 : dec.rows.front().size();
  if (B > 6) throw std::invalid_argument("basis length must be at most 6");
  if (resolution < 2) throw std::invalid_argument("resolution >= 2 required");

  std::vector<std::vector<long>> rows;
  std::vector<Complex> coeff;
  for (const auto& [n, a] : d.terms()) {
    std::vector<long> r(B);
    for (std::size_t k = 0; k < B; ++k) {
      const Rational& x = dec.rows[n][k];
      if (denominator(x) != 1)
        throw std::invalid_argument("non-integer decomposition row");
      r[k] = numerator(x).convert_to<long>();
    }
    rows.push_back(std::move(r));
    coeff.push_back(a);
  }

  auto grid_mean = [&](std::size_t res) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < B; ++k) total *= res;
    if (B == 0) total = 1;
    double acc = 0;
    std::vector<std::size_t> idx(B, 0);
    for (std::size_t g = 0; g < total; ++g) {
      Complex f = 0;
      for (std::size_t t = 0; t < rows.size(); ++t) {
        double phase = 0;
        for (std::size_t k = 0; k < B; ++k)
          phase += rows[t][k] * (kTwoPi * static_cast<double>(idx[k]) /
                                 static_cast<double>(res));
        f += coeff[t] * std::polar(1.0, phase);
      }
      acc += std::pow(abs2(f), p / 2);
      for (std::size_t k = 0; k < B; ++k) {
        if (++idx[k] < res) break;
        idx[k] = 0;
      }
    }
    return acc / static_cast<double>(total);
  };

  double v1 = std::pow(grid_mean(resolution), 1.0 / p);
  double v2 = std::pow(grid_mean(resolution + 1), 1.0 / p);
  NormEstimate est;
  est.method = NormMethod::torus_grid;
  est.value = v2;
  est.error = std::abs(v2 - v1);
  return est;
}

NormEstimate norm_sup(const DirichletPolynomial& d, const SupOptions& opts) {
  if (d.empty()) return {0.0, NormMethod::torus_grid, 0.0, false, true};
  FrequencyLattice lat = lattice_basis(d.freq(), d.support_end());
  const std::size_t rank = lat.rank();

  std::vector<std::vector<long>> rows;
  std::vector<Complex> coeff;
  bool small_coords = true;
  for (const auto& [n, a] : d.terms()) {
    std::vector<long> r(rank);
    for (std::size_t j = 0; j < rank; ++j) {
      const Int& c = lat.coords[n][j];
      if (c > 1'000'000'000 || c < -1'000'000'000) small_coords = false;
      else r[j] = c.convert_to<long>();
    }
    rows.push_back(std::move(r));
    coeff.push_back(a);
  }

  double abssum = 0;
  for (Complex a : coeff) abssum += std::abs(a);

  if (rank == 0)
    return {abssum, NormMethod::torus_grid, 0.0, false, true};

  if (small_coords) {
    // signed unit rows hitting distinct generators: phases align exactly
    bool unit_rows = true;
    std::vector<int> used(rank, 0);
    for (const auto& r : rows) {
      int nz = 0;
      std::size_t dim = 0;
      for (std::size_t j = 0; j < rank; ++j)
        if (r[j] != 0) {
          ++nz;
          dim = j;
          if (r[j] != 1 && r[j] != -1) unit_rows = false;
        }
      if (nz > 1) unit_rows = false;
      if (nz == 1 && used[dim]++) unit_rows = false;
      if (!unit_rows) break;
    }
    if (unit_rows)
      return {abssum, NormMethod::torus_grid, 0.0, false, true};
  }

  auto eval_torus = [&](const std::vector<double>& theta) {
    Complex f = 0;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      double phase = 0;
      for (std::size_t j = 0; j < rank; ++j) phase += rows[t][j] * theta[j];
      f += coeff[t] * std::polar(1.0, phase);
    }
    return std::abs(f);
  };

  if (small_coords && rank <= 6) {
    // flow closure is the full torus (generator values are rationally
    // independent), so the torus sup equals the line sup
    std::size_t res = static_cast<std::size_t>(
        std::pow(static_cast<double>(opts.torus_budget), 1.0 / rank));
    res = std::clamp<std::size_t>(res, 5, 1 << 16);
    std::size_t total = 1;
    for (std::size_t j = 0; j < rank; ++j) total *= res;

    std::vector<std::size_t> idx(rank, 0);
    std::vector<double> theta(rank, 0.0), best_theta(rank, 0.0);
    double best = 0;
    for (std::size_t g = 0; g < total; ++g) {
      for (std::size_t j = 0; j < rank; ++j)
        theta[j] = kTwoPi * static_cast<double>(idx[j]) / static_cast<double>(res);
      double v = eval_torus(theta);
      if (v > best) {
        best = v;
        best_theta = theta;
      }
      for (std::size_t j = 0; j < rank; ++j) {
        if (++idx[j] < res) break;
        idx[j] = 0;
      }
    }
    // local refinement only raises the lower end; the certificate stays
    // pinned to the coarse grid step
    double step = kTwoPi / static_cast<double>(res) / 2;
    std::vector<double> cur = best_theta;
    for (int iter = 0; iter < 60; ++iter) {
      bool improved = false;
      for (std::size_t j = 0; j < rank; ++j) {
        for (double sgn : {1.0, -1.0}) {
          std::vector<double> cand = cur;
          cand[j] += sgn * step;
          double v = eval_torus(cand);
          if (v > best) {
            best = v;
            cur = cand;
            improved = true;
          }
        }
      }
      if (!improved) step /= 2;
      if (step < 1e-12) break;
    }
    double lip = 0;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      double l1 = 0;
      for (long c : rows[t]) l1 += std::abs(static_cast<double>(c));
      lip += std::abs(coeff[t]) * l1;
    }
    double err = lip * (kTwoPi / static_cast<double>(res)) / 2;
    return {best, NormMethod::torus_grid, err, false, true};
  }

  // fallback: search |D(it)| over a window, certifying only a lower bound
  std::vector<Term> terms = flatten(d);
  auto eval_line = [&](double t) {
    Complex f = 0;
    for (const auto& tm : terms) f += tm.a * std::polar(1.0, -tm.lambda * t);
    return std::abs(f);
  };
  double best = 0, best_t = 0;
  std::size_t grid = std::max<std::size_t>(opts.grid, 64);
  for (std::size_t i = 0; i < grid; ++i) {
    double t = opts.t_max * static_cast<double>(i) / static_cast<double>(grid);
    double v = eval_line(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  double step = opts.t_max / static_cast<double>(grid) / 2;
  double cur = best_t;
  for (int iter = 0; iter < 80; ++iter) {
    bool improved = false;
    for (double sgn : {1.0, -1.0}) {
      double v = eval_line(cur + sgn * step);
      if (v > best) {
        best = v;
        cur += sgn * step;
        improved = true;
      }
    }
    if (!improved) step /= 2;
    if (step < 1e-12) break;
  }
  return {best, NormMethod::line_search, 0.0, true, true};
}

}  // namespace gds
