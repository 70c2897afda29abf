#include "gds/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gds {

namespace {

// Smallest-prime-factor sieve for 2..N.
std::vector<std::size_t> spf_sieve(std::size_t N) {
  std::vector<std::size_t> spf(N + 1, 0);
  for (std::size_t i = 2; i <= N; ++i) {
    if (spf[i] == 0) {
      for (std::size_t j = i; j <= N; j += i)
        if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

std::vector<std::size_t> primes_up_to(std::size_t N) {
  std::vector<std::size_t> out;
  if (N < 2) return out;
  auto spf = spf_sieve(N);
  for (std::size_t i = 2; i <= N; ++i)
    if (spf[i] == i) out.push_back(i);
  return out;
}

std::vector<std::size_t> first_primes(std::size_t count) {
  std::size_t bound = 16;
  for (;;) {
    auto p = primes_up_to(bound);
    if (p.size() >= count) {
      p.resize(count);
      return p;
    }
    bound *= 2;
  }
}

bool is_square_free(std::size_t m, const std::vector<std::size_t>& spf) {
  while (m > 1) {
    std::size_t p = spf[m];
    m /= p;
    if (m % p == 0) return false;
  }
  return true;
}

}  // namespace

Frequency::Frequency(std::vector<Symbol> symbols, std::vector<SparseRow> rows,
                     FamilyTag family)
    : symbols_(std::move(symbols)), rows_(std::move(rows)), family_(family) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    double sv = to_double(symbols_[i].value);
    if (!std::isfinite(sv) || symbols_[i].value == 0)
      throw std::invalid_argument("symbol value must be finite and nonzero");
    for (std::size_t j = i + 1; j < symbols_.size(); ++j)
      if (symbols_[i].name == symbols_[j].name)
        throw std::invalid_argument("duplicate symbol name: " +
                                    symbols_[i].name);
  }
  numeric_.reserve(rows_.size());
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    for (auto& [k, r] : rows_[n])
      if (k >= symbols_.size())
        throw std::invalid_argument("row references unknown symbol");
    Real v = exact_value(n);
    double d = to_double(v);
    if (!std::isfinite(d)) throw std::invalid_argument("non-finite lambda");
    numeric_.push_back(d);
  }
  if (!numeric_.empty() && numeric_.front() < 0)
    throw std::invalid_argument("lambda_1 must be nonnegative");
  // Strictly increasing; numeric ties are broken by the exact rows.
  for (std::size_t n = 0; n + 1 < numeric_.size(); ++n) {
    double a = numeric_[n], b = numeric_[n + 1];
    if (b > a + 1e-12 * std::max(1.0, std::abs(a))) continue;
    if (rows_[n] == rows_[n + 1])
      throw std::invalid_argument("frequency not strictly increasing");
    if (exact_value(n + 1) <= exact_value(n))
      throw std::invalid_argument("frequency not strictly increasing");
  }
}

Real Frequency::exact_value(std::size_t i) const {
  Real acc = 0;
  for (const auto& [k, r] : rows_[i]) {
    Real num(numerator(r).str());
    Real den(denominator(r).str());
    acc += symbols_[k].value * num / den;
  }
  return acc;
}

FrequencyPtr make_ordinary(std::size_t N) {
  if (N < 1) throw std::invalid_argument("N >= 1 required");
  auto spf = spf_sieve(std::max<std::size_t>(N, 2));
  std::vector<Symbol> symbols;
  std::vector<std::size_t> prime_index(N + 1, 0);
  for (std::size_t p = 2; p <= N; ++p) {
    if (spf[p] == p) {
      prime_index[p] = symbols.size();
      symbols.push_back({"log" + std::to_string(p), log(Real(p)), 0});
    }
  }
  std::vector<SparseRow> rows;
  rows.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) {
    SparseRow row;
    std::size_t m = n;
    while (m > 1) {
      std::size_t p = spf[m];
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      row.emplace_back(prime_index[p], Rational(e));
    }
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  return std::make_shared<Frequency>(std::move(symbols), std::move(rows),
                                     FamilyTag::ordinary);
}

FrequencyPtr make_family(FamilyTag tag, std::size_t N) {
  if (N < 1) throw std::invalid_argument("N >= 1 required");
  switch (tag) {
    case FamilyTag::ordinary:
      return make_ordinary(N);
    case FamilyTag::linear: {
      std::vector<Symbol> symbols{{"one", Real(1), 0}};
      std::vector<SparseRow> rows;
      rows.push_back({});  // lambda_1 = 0
      for (std::size_t n = 2; n <= N; ++n)
        rows.push_back({{0, Rational(n - 1)}});
      return std::make_shared<Frequency>(std::move(symbols), std::move(rows),
                                         FamilyTag::linear);
    }
    case FamilyTag::padic_example: {
      std::vector<Symbol> symbols{{"one", Real(1), 0}};
      std::vector<SparseRow> rows;
      rows.push_back({{0, Rational(1)}});  // lambda_1 = 1
      if (N > 1) {
        auto primes = first_primes(N - 1);
        for (std::size_t i = 0; i + 1 < N; ++i) {
          Int p(primes[i]);
          rows.push_back({{0, Rational(p * p + 1, p)}});
        }
      }
      return std::make_shared<Frequency>(std::move(symbols), std::move(rows),
                                         FamilyTag::padic_example);
    }
    case FamilyTag::qli: {
      // sqrt(m) for the square-free m >= 2, declared independent by
      // construction; no numerical independence test is attempted.
      std::vector<Symbol> symbols;
      std::vector<SparseRow> rows;
      std::size_t bound = std::max<std::size_t>(4 * N, 16);
      auto spf = spf_sieve(bound);
      for (std::size_t m = 2; symbols.size() < N; ++m) {
        if (m > bound) {
          bound *= 2;
          spf = spf_sieve(bound);
        }
        if (!is_square_free(m, spf)) continue;
        symbols.push_back({"sqrt" + std::to_string(m), sqrt(Real(m)), 0});
        rows.push_back({{rows.size(), Rational(1)}});
      }
      return std::make_shared<Frequency>(std::move(symbols), std::move(rows),
                                         FamilyTag::qli);
    }
    case FamilyTag::custom:
      break;
  }
  throw std::invalid_argument("unknown family tag");
}

FrequencyPtr make_custom(std::vector<Symbol> symbols,
                         std::vector<SparseRow> rows) {
  return std::make_shared<Frequency>(std::move(symbols), std::move(rows),
                                     FamilyTag::custom);
}

FrequencyPtr scale_frequency(const Frequency& freq, const Rational& factor) {
  if (factor <= 0) throw std::invalid_argument("scale factor must be > 0");
  std::vector<Symbol> symbols = freq.symbols();
  Real num(numerator(factor).str()), den(denominator(factor).str());
  for (auto& s : symbols) s.value *= num / den;
  std::vector<SparseRow> rows;
  rows.reserve(freq.size());
  for (std::size_t i = 0; i < freq.size(); ++i) rows.push_back(freq.row(i));
  return std::make_shared<Frequency>(std::move(symbols), std::move(rows),
                                     FamilyTag::custom);
}

LEstimate estimate_L(const Frequency& freq) {
  const std::size_t N = freq.size();
  if (N < 100) throw std::invalid_argument("estimate_L needs >= 100 terms");
  auto window_max = [&](std::size_t lo, std::size_t hi) {
    // max of log(n)/lambda_n over 1-based n in (lo, hi]
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t n = lo + 1; n <= hi; ++n) {
      double lam = freq.lambda(n - 1);
      if (lam <= 0) continue;  // n = 1 in particular
      m = std::max(m, std::log(static_cast<double>(n)) / lam);
    }
    return m;
  };
  double m0 = window_max(N / 2, N);
  double m1 = window_max(N / 4, N / 2);
  double value = m0;
  double error = std::abs(m0 - m1) + 0.01 * std::max(1.0, std::abs(m0));
  return {value, error};
}

namespace {

GapWitness scan_gaps(const Frequency& freq, std::size_t N,
                     double (*weight)(double lambda, double a, double b),
                     double a, double b) {
  if (N > freq.size()) throw std::invalid_argument("N exceeds frequency length");
  if (N < 2) throw std::invalid_argument("need at least two terms");
  double best = std::numeric_limits<double>::infinity();
  std::size_t argmin = 1, last_change = 1;
  for (std::size_t n = 1; n + 1 <= N; ++n) {
    double gap = freq.lambda(n) - freq.lambda(n - 1);
    // work in log space so huge weights do not overflow
    double lc = std::log(gap) + weight(freq.lambda(n - 1), a, b);
    if (lc < best) {
      best = lc;
      argmin = n;
      last_change = n;
    }
  }
  GapWitness w;
  w.c_star = std::exp(best);
  w.argmin = argmin;
  w.last_change = last_change;
  w.stabilized = last_change <= N / 2;
  return w;
}

}  // namespace

GapWitness check_BC(const Frequency& freq, double l, double delta,
                    std::size_t N) {
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  return scan_gaps(
      freq, N, [](double lam, double l_, double d_) { return (l_ + d_) * lam; },
      l, delta);
}

GapWitness check_LC(const Frequency& freq, double delta, std::size_t N) {
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  return scan_gaps(
      freq, N,
      [](double lam, double d_, double) {
        double e = d_ * lam;
        return e > 700 ? std::numeric_limits<double>::infinity()
                       : std::exp(e);
      },
      delta, 0);
}

}  // namespace gds
