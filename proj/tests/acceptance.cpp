// End-to-end acceptance checks; prints one pass/fail line per criterion.
// argv[1] is the path of the command-line binary (for the determinism check).

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gds/abscissa.hpp"
#include "gds/io.hpp"
#include "gds/lattice.hpp"
#include "gds/lift.hpp"
#include "gds/norms.hpp"
#include "gds/verify.hpp"

using namespace gds;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  (%s)\n", id, ok ? "pass" : "FAIL",
              detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

DirichletPolynomial rand_poly(const FrequencyPtr& f, std::size_t prefix,
                              std::size_t max_terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  DirichletPolynomial d(f);
  std::size_t k = 2 + rng() % (max_terms - 1);
  for (std::size_t i = 0; i < k; ++i)
    d.set(rng() % prefix, Complex(unif(rng), unif(rng)));
  if (d.empty()) d.set(0, Complex(1, 0));
  return d;
}

// 1: quadrature matches Parseval on 200 random polynomials within 0.1%
void criterion1() {
  auto t0 = Clock::now();
  set_norm_threads(4);
  std::vector<FrequencyPtr> freqs{make_ordinary(16),
                                  make_family(FamilyTag::linear, 16),
                                  make_family(FamilyTag::qli, 8)};
  std::size_t total = 0, bad = 0;
  double worst = 0;
  for (std::size_t fi = 0; fi < freqs.size(); ++fi) {
    std::size_t count = fi == 0 ? 67 : fi == 1 ? 67 : 66;
    std::size_t prefix = fi == 2 ? 8 : 16;
    for (std::size_t trial = 0; trial < count; ++trial) {
      auto d = rand_poly(freqs[fi], prefix, 8, 4000 + 100 * fi + trial);
      double n2 = norm2(d).value;
      auto est = norm_besicovitch(d, 2, default_schedule(d));
      double rel = std::abs(est.value - n2) / n2;
      worst = std::max(worst, rel);
      ++total;
      if (rel > 1e-3) ++bad;
    }
  }
  set_norm_threads(1);
  double dt = seconds_since(t0);
  report(1, bad == 0 && dt <= 60.0,
         "polys=" + std::to_string(total) + " worst_rel=" + format_num(worst) +
             " time=" + format_num(dt) + "s");
}

// 2: exact even norm equals single-period quadrature on all small
// unimodular-coefficient polynomials over lambda = (0, 1, 2)
void criterion2() {
  auto f = make_family(FamilyTag::linear, 3);
  FrequencyLattice lat = lattice_basis(f, 3);
  const Complex choices[5] = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  double worst = 0;
  std::size_t count = 0;
  for (int c0 = 0; c0 < 5; ++c0)
    for (int c1 = 0; c1 < 5; ++c1)
      for (int c2 = 0; c2 < 5; ++c2) {
        DirichletPolynomial d(f);
        d.set(0, choices[c0]);
        d.set(1, choices[c1]);
        d.set(2, choices[c2]);
        if (d.empty()) continue;
        double exact = norm_even_exact(d, 4).value;
        double quad = norm_periodic(d, 4, lat).value;
        worst = std::max(worst, std::abs(exact - quad));
        ++count;
      }
  DirichletPolynomial two(f);
  two.set(0, Complex(1, 0));
  two.set(1, Complex(1, 0));
  double fixed = norm_even_exact(two, 4).value;
  bool fixed_ok = std::abs(fixed - std::pow(6.0, 0.25)) < 1e-12;
  report(2, worst <= 1e-8 && fixed_ok,
         "cases=" + std::to_string(count) + " worst=" + format_num(worst) +
             " |1+e^-s|_4=" + format_num(fixed));
}

// 3: exact even norms are invariant under vertical limits
void criterion3() {
  std::vector<FrequencyPtr> freqs{make_ordinary(16)};
  auto rep = suite_vertical_isometry(freqs, 20, {2, 4}, 2024);
  report(3, rep.pass && rep.max_deviation <= 1e-9,
         "cases=" + std::to_string(rep.cases) +
             " max_dev=" + format_num(rep.max_deviation));
}

// 4: the l2 norm never exceeds the certified sup bound
void criterion4() {
  std::vector<FrequencyPtr> freqs{make_ordinary(16),
                                  make_family(FamilyTag::linear, 16),
                                  make_family(FamilyTag::qli, 6)};
  auto rep = suite_parseval_vs_sup(freqs, 34, 99);
  report(4, rep.pass && rep.cases >= 100,
         "cases=" + std::to_string(rep.cases) +
             " violations_dev=" + format_num(rep.max_deviation));
}

// 5: both L estimators hit 1 on log n and 0 on n-1
void criterion5() {
  auto ord = make_ordinary(100000);
  LEstimate direct = estimate_L(*ord);
  auto dual = estimate_L_via_sigma_c(*ord, 100000);
  auto lin = make_family(FamilyTag::linear, 2000);
  LEstimate dl = estimate_L(*lin);
  auto ql = estimate_L_via_sigma_c(*lin, 2000);
  bool ok = direct.value >= 0.95 && direct.value <= 1.05 &&
            dual.value >= 0.95 && dual.value <= 1.05 && dl.value <= 0.05 &&
            ql.value <= 0.05 &&
            std::abs(direct.value - dual.value) <= direct.error + dual.band;
  report(5, ok,
         "logn: " + format_num(direct.value) + "/" + format_num(dual.value) +
             " linear: " + format_num(dl.value) + "/" + format_num(ql.value));
}

// 6: the strip experiment reproduces sigma_a = L/2 - eps on log n
void criterion6() {
  auto t0 = Clock::now();
  auto ord = make_ordinary(100000);
  StripReport rep = strip_experiment(ord, 0.1, 100000);
  double dt = seconds_since(t0);
  bool ok = !rep.skipped && rep.sigma_a.value >= 0.35 &&
            rep.sigma_a.value <= 0.45 && dt <= 30.0;
  report(6, ok,
         "sigma_a=" + format_num(rep.sigma_a.value) +
             " target=" + format_num(rep.target) + " time=" + format_num(dt) +
             "s");
}

// 7: Poisson convolution of boundary values matches interior evaluation
void criterion7() {
  auto ord = make_ordinary(8);
  DirichletPolynomial d(ord);
  d.set(0, Complex(0.8, 0.1));
  d.set(1, Complex(-0.5, 0.4));
  d.set(2, Complex(0.3, -0.7));
  auto rep = suite_helson_formula(ord, d, {1.0}, {0.0, 1.0}, 100, 1e3, 31);
  report(7, rep.pass && rep.max_deviation <= 1e-3,
         "cases=" + std::to_string(rep.cases) +
             " max_dev=" + format_num(rep.max_deviation));
}

// 8: the exact arithmetic layer
void criterion8() {
  auto half = make_custom({{"one", Real(1), 0}},
                          {{{0, Rational(1)}}, {{0, Rational(3, 2)}}});
  FrequencyLattice lat = lattice_basis(half, 2);
  bool gen_ok = lat.rank() == 1 &&
                lat.generators[0] == std::vector<Rational>{Rational(1, 2)} &&
                lat.coords[0] == std::vector<Int>{2} &&
                lat.coords[1] == std::vector<Int>{3};

  auto pad = make_family(FamilyTag::padic_example, 3);
  TypeReport tp = classify_prefix_type(extract_basis(*pad, 3));
  bool pad_ok =
      tp.type == PrefixType::integer && tp.rescaled && tp.prefix_only;

  auto ord = make_ordinary(10000);
  std::vector<Int> primes = ordinary_primes(*ord);
  bool recon_ok = true;
  for (std::size_t n = 0; n < ord->size() && recon_ok; ++n) {
    std::vector<Int> row(primes.size(), Int(0));
    for (const auto& [k, r] : ord->row(n)) row[k] = numerator(r);
    if (ordinary_index(row, primes) != Int(n + 1)) recon_ok = false;
  }
  report(8, gen_ok && pad_ok && recon_ok,
         std::string("generator_half=") + (gen_ok ? "y" : "n") +
             " padic_integer_caveat=" + (pad_ok ? "y" : "n") +
             " reconstruct_1e4=" + (recon_ok ? "y" : "n"));
}

// 9: abschnitt and translation suites across every family; Riesz-mean
// deviations strictly decreasing
void criterion9() {
  std::vector<FrequencyPtr> freqs{make_ordinary(32),
                                  make_family(FamilyTag::linear, 32),
                                  make_family(FamilyTag::padic_example, 16),
                                  make_family(FamilyTag::qli, 8)};
  auto ab = suite_abschnitt(freqs, 25, 7);
  auto tr = suite_translation_sup(freqs, 25, 8);

  auto ord = freqs[0];
  DirichletPolynomial d(ord);
  d.set(0, Complex(1.0, 0.0));
  d.set(1, Complex(0.5, -0.5));
  d.set(3, Complex(-0.25, 0.0));
  d.set(5, Complex(0.0, 0.75));
  d.set(7, Complex(0.4, 0.2));
  auto rz = suite_riesz_mean(ord, d, 0.5, {10, 100, 1000, 10000});
  report(9, ab.pass && tr.pass && rz.pass,
         "abschnitt_dev=" + format_num(ab.max_deviation) +
             " translation_dev=" + format_num(tr.max_deviation) +
             " riesz=" + (rz.pass ? std::string("decreasing")
                                  : std::string("non-monotone")));
}

// 10: a fixed seed reproduces verify CSVs byte for byte
void criterion10(const char* cli) {
  if (!cli) {
    report(10, false, "cli path not provided");
    return;
  }
  std::string base1 = "acc_det_a", base2 = "acc_det_b";
  std::string cmd1 = std::string(cli) + " verify --seed 1234 --out " + base1 +
                     " > acc_det_a.log 2>&1";
  std::string cmd2 = std::string(cli) + " verify --seed 1234 --out " + base2 +
                     " > acc_det_b.log 2>&1";
  int r1 = std::system(cmd1.c_str());
  int r2 = std::system(cmd2.c_str());
  const char* suites[] = {"vertical_isometry", "translation_sup",
                          "parseval_vs_sup",   "helson_formula",
                          "projection_growth", "abschnitt",
                          "riesz_mean"};
  bool identical = r1 == 0 && r2 == 0;
  for (const char* s : suites) {
    std::ifstream a(base1 + "_" + s + ".csv", std::ios::binary);
    std::ifstream b(base2 + "_" + s + ".csv", std::ios::binary);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    if (!a || !b || sa.str().empty() || sa.str() != sb.str())
      identical = false;
  }
  report(10, identical,
         std::string("exit=") + std::to_string(r1) + "/" +
             std::to_string(r2) + " csv=" +
             (identical ? "byte-identical" : "mismatch"));
}

}  // namespace

int main(int argc, char** argv) {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10(argc > 1 ? argv[1] : nullptr);
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
