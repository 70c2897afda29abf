#include "gds/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace gds {

namespace {

bool negligible(Complex a) { return a == Complex(0.0, 0.0); }

void require_same_freq(const DirichletPolynomial& a,
                       const DirichletPolynomial& b) {
  if (a.freq() != b.freq())
    throw std::invalid_argument("polynomials bound to different frequencies");
}

}  // namespace

DirichletPolynomial::DirichletPolynomial(FrequencyPtr freq,
                                         std::map<std::size_t, Complex> terms)
    : freq_(std::move(freq)) {
  if (!freq_) throw std::invalid_argument("null frequency");
  for (auto& [n, a] : terms) {
    if (n >= freq_->size())
      throw std::out_of_range("term index outside frequency");
    if (!negligible(a)) terms_.emplace(n, a);
  }
}

std::size_t DirichletPolynomial::support_end() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first + 1;
}

void DirichletPolynomial::set(std::size_t n, Complex a) {
  if (n >= freq_->size())
    throw std::out_of_range("term index outside frequency");
  if (negligible(a))
    terms_.erase(n);
  else
    terms_[n] = a;
}

Complex DirichletPolynomial::coeff(std::size_t n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Complex(0) : it->second;
}

DirichletPolynomial& DirichletPolynomial::operator+=(
    const DirichletPolynomial& other) {
  require_same_freq(*this, other);
  for (const auto& [n, a] : other.terms_) set(n, coeff(n) + a);
  return *this;
}

DirichletPolynomial& DirichletPolynomial::operator-=(
    const DirichletPolynomial& other) {
  require_same_freq(*this, other);
  for (const auto& [n, a] : other.terms_) set(n, coeff(n) - a);
  return *this;
}

DirichletPolynomial& DirichletPolynomial::operator*=(Complex c) {
  if (negligible(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [n, a] : terms_) a *= c;
  return *this;
}

DirichletPolynomial translate(const DirichletPolynomial& d, Complex z) {
  DirichletPolynomial out(d.freq());
  for (const auto& [n, a] : d.terms())
    out.set(n, a * std::exp(-d.freq()->lambda(n) * z));
  return out;
}

DirichletPolynomial vertical_limit(const DirichletPolynomial& d,
                                   const Character& omega) {
  if (!omega.lattice || omega.lattice->freq != d.freq())
    throw std::invalid_argument("character lattice does not match frequency");
  if (d.support_end() > omega.lattice->prefix)
    throw std::out_of_range("support outside character prefix");
  DirichletPolynomial out(d.freq());
  for (const auto& [n, a] : d.terms()) out.set(n, a * apply(omega, n));
  return out;
}

DirichletPolynomial riesz_mean(const DirichletPolynomial& d, double x) {
  if (!(x > 0)) throw std::invalid_argument("x > 0 required");
  DirichletPolynomial out(d.freq());
  for (const auto& [n, a] : d.terms()) {
    double lam = d.freq()->lambda(n);
    if (lam < x) out.set(n, a * (1.0 - lam / x));
  }
  return out;
}

DirichletPolynomial abschnitt(const DirichletPolynomial& d, std::size_t N,
                              const BohrDecomposition& dec) {
  if (d.support_end() > dec.rows.size())
    throw std::out_of_range("support outside decomposition");
  DirichletPolynomial out(d.freq());
  for (const auto& [n, a] : d.terms()) {
    const auto& row = dec.rows[n];
    bool keep = true;
    for (std::size_t k = N; k < row.size(); ++k)
      if (row[k] != 0) {
        keep = false;
        break;
      }
    if (keep) out.set(n, a);
  }
  return out;
}

DirichletPolynomial partial_sum(const DirichletPolynomial& d, std::size_t N) {
  DirichletPolynomial out(d.freq());
  for (const auto& [n, a] : d.terms())
    if (n < N) out.set(n, a);
  return out;
}

Complex evaluate(const DirichletPolynomial& d, Complex s) {
  Complex acc = 0;
  for (const auto& [n, a] : d.terms())
    acc += a * std::exp(-d.freq()->lambda(n) * s);
  return acc;
}

}  // namespace gds
