#include <doctest.h>

#include <cmath>

#include "gds/polynomial.hpp"

using namespace gds;

namespace {

DirichletPolynomial sample_poly(const FrequencyPtr& f) {
  DirichletPolynomial d(f);
  d.set(0, Complex(1.0, 0.5));
  d.set(2, Complex(-0.25, 0.0));
  d.set(3, Complex(0.0, 1.0));
  return d;
}

}  // namespace

TEST_CASE("term storage prunes zeros and validates indices") {
  auto f = make_family(FamilyTag::linear, 4);
  DirichletPolynomial d(f);
  d.set(1, Complex(2.0, 0.0));
  d.set(1, Complex(0.0, 0.0));
  CHECK(d.empty());
  CHECK_THROWS_AS(d.set(7, Complex(1.0, 0.0)), std::out_of_range);
  CHECK_THROWS_AS(
      DirichletPolynomial(f, {{9, Complex(1.0, 0.0)}}), std::out_of_range);
}

TEST_CASE("translation") {
  auto f = make_family(FamilyTag::linear, 4);
  DirichletPolynomial d = sample_poly(f);

  auto same = translate(d, Complex(0.0, 0.0));
  CHECK(same.terms() == d.terms());

  // single term at lambda = 1, z = ln 2 halves the coefficient
  DirichletPolynomial one(f);
  one.set(1, Complex(1.0, 0.0));
  auto halved = translate(one, Complex(std::log(2.0), 0.0));
  CHECK(halved.coeff(1).real() == doctest::Approx(0.5).epsilon(1e-14));

  // composition of translations
  auto ab = translate(translate(d, Complex(0.3, -0.2)), Complex(0.1, 0.7));
  auto once = translate(d, Complex(0.4, 0.5));
  for (const auto& [n, a] : once.terms())
    CHECK(std::abs(a - ab.coeff(n)) < 1e-14);

  // termwise contraction for real u > 0
  auto shrunk = translate(d, Complex(0.9, 0.0));
  for (const auto& [n, a] : shrunk.terms())
    CHECK(std::abs(a) <= std::abs(d.coeff(n)) + 1e-15);
}

TEST_CASE("vertical limits") {
  auto f = make_ordinary(8);
  DirichletPolynomial d = sample_poly(f);
  auto lat = std::make_shared<FrequencyLattice>(lattice_basis(f, 8));

  // beta(tau) acts as translation by i tau
  double tau = 0.77;
  auto via_char = vertical_limit(d, character_from_real(lat, tau));
  auto via_tr = translate(d, Complex(0.0, tau));
  for (const auto& [n, a] : via_tr.terms())
    CHECK(std::abs(a - via_char.coeff(n)) < 1e-10);

  // identity character
  auto idc = vertical_limit(d, character_from_real(lat, 0.0));
  CHECK(idc.terms() == d.terms());

  // moduli preserved
  auto tw = vertical_limit(d, random_character(lat, 5));
  for (const auto& [n, a] : d.terms())
    CHECK(std::abs(tw.coeff(n)) == doctest::Approx(std::abs(a)).epsilon(1e-14));

  // multiplicative over characters
  auto c1 = random_character(lat, 9), c2 = random_character(lat, 10);
  auto two_step = vertical_limit(vertical_limit(d, c1), c2);
  auto joint = vertical_limit(d, compose(c1, c2));
  for (const auto& [n, a] : joint.terms())
    CHECK(std::abs(a - two_step.coeff(n)) < 1e-13);

  // prefix must cover the support
  auto small = std::make_shared<FrequencyLattice>(lattice_basis(f, 2));
  CHECK_THROWS_AS(vertical_limit(d, character_from_real(small, 1.0)),
                  std::out_of_range);
}

TEST_CASE("riesz means") {
  auto f = make_family(FamilyTag::linear, 3);
  DirichletPolynomial d(f);
  d.set(0, Complex(1, 0));
  d.set(1, Complex(1, 0));
  d.set(2, Complex(1, 0));
  auto r = riesz_mean(d, 1.5);
  CHECK(r.coeff(0).real() == doctest::Approx(1.0));
  CHECK(r.coeff(1).real() == doctest::Approx(1.0 / 3.0));
  CHECK(r.coeff(2) == Complex(0.0, 0.0));

  // x below the first positive frequency empties the polynomial
  auto q = make_family(FamilyTag::qli, 2);
  DirichletPolynomial dq(q);
  dq.set(0, Complex(1, 0));
  CHECK(riesz_mean(dq, 1.0).empty());

  // factors approach 1
  auto big = riesz_mean(d, 1e9);
  for (const auto& [n, a] : d.terms())
    CHECK(std::abs(big.coeff(n) - a) < 1e-8);

  CHECK_THROWS_AS(riesz_mean(d, 0.0), std::invalid_argument);
}

TEST_CASE("abschnitt keeps rows supported in leading basis columns") {
  auto f = make_ordinary(10);
  BohrDecomposition dec = extract_basis(*f, 10);
  DirichletPolynomial d(f);
  for (std::size_t n = 0; n < 10; ++n) d.set(n, Complex(1.0, 0.0));

  auto a1 = abschnitt(d, 1, dec);
  std::vector<std::size_t> kept;
  for (const auto& [n, a] : a1.terms()) kept.push_back(n + 1);
  CHECK(kept == std::vector<std::size_t>{1, 2, 4, 8});

  auto a0 = abschnitt(d, 0, dec);
  std::vector<std::size_t> kept0;
  for (const auto& [n, a] : a0.terms()) kept0.push_back(n + 1);
  CHECK(kept0 == std::vector<std::size_t>{1});

  auto afull = abschnitt(d, dec.basis_indices.size(), dec);
  CHECK(afull.terms() == d.terms());

  // idempotent and commutes with partial sums
  auto twice = abschnitt(abschnitt(d, 2, dec), 2, dec);
  CHECK(twice.terms() == abschnitt(d, 2, dec).terms());
  CHECK(partial_sum(abschnitt(d, 2, dec), 6).terms() ==
        abschnitt(partial_sum(d, 6), 2, dec).terms());
}

TEST_CASE("partial sums and evaluation") {
  auto f = make_family(FamilyTag::linear, 4);
  DirichletPolynomial d = sample_poly(f);
  CHECK(partial_sum(d, 0).empty());

  DirichletPolynomial two(f);
  two.set(0, Complex(1, 0));
  two.set(1, Complex(1, 0));
  CHECK(evaluate(two, Complex(0, 0)).real() == doctest::Approx(2.0));

  double u = 0.37;
  CHECK(std::abs(evaluate(d, Complex(u, 0.0)) -
                 evaluate(translate(d, Complex(u, 0.0)), Complex(0, 0))) <
        1e-14);
}

TEST_CASE("cross-frequency arithmetic is rejected") {
  auto f1 = make_family(FamilyTag::linear, 4);
  auto f2 = make_family(FamilyTag::linear, 4);
  DirichletPolynomial a(f1), b(f2);
  a.set(0, Complex(1, 0));
  b.set(0, Complex(1, 0));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  DirichletPolynomial c(f1);
  c.set(1, Complex(2, 0));
  auto s = a + c;
  CHECK(s.coeff(0) == Complex(1, 0));
  CHECK(s.coeff(1) == Complex(2, 0));
  auto z = s - s;
  CHECK(z.empty());
}
