#include "gds/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gds/abscissa.hpp"
#include "gds/io.hpp"
#include "gds/lift.hpp"
#include "gds/norms.hpp"
#include "gds/verify.hpp"

namespace gds {

namespace {

using nlohmann::json;

int fail(const std::string& what) {
  // one machine-readable line on stderr
  std::cerr << "error: " << what << "\n";
  return 2;
}

struct Options {
  std::string spec;
  std::string out;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  double tolerance = 1e-3;
};

int cmd_freq_analyze(const Options& opt, std::size_t prefix, double bc_l,
                     double delta) {
  FrequencyPtr freq = frequency_from_json(load_json_file(opt.spec));
  if (prefix == 0) prefix = std::min<std::size_t>(freq->size(), 16);
  prefix = std::min(prefix, freq->size());

  FrequencyLattice lat = lattice_basis(freq, prefix);
  TypeReport type = classify_prefix_type(lat.dec);

  std::cout << "n_terms: " << freq->size() << "\n";
  std::cout << "prefix: " << prefix << "\n";
  std::cout << "basis_indices:";
  for (std::size_t i : lat.dec.basis_indices) std::cout << " " << (i + 1);
  std::cout << "\n";
  std::cout << "matrix_head:\n";
  for (std::size_t n = 0; n < std::min<std::size_t>(prefix, 10); ++n) {
    std::cout << "  " << (n + 1) << ":";
    for (const auto& r : lat.dec.rows[n]) std::cout << " " << to_pq(r);
    std::cout << "\n";
  }
  const char* tname = type.type == PrefixType::natural ? "natural"
                      : type.type == PrefixType::integer ? "integer"
                                                         : "strictly_rational";
  std::cout << "type: " << tname << (type.rescaled ? " (rescaled basis)" : "")
            << " [prefix-only]\n";
  std::cout << "lattice_rank: " << lat.rank() << "\n";
  std::cout << "generators:";
  for (std::size_t g = 0; g < lat.rank(); ++g)
    std::cout << " " << format_num(lat.generator_value(g));
  std::cout << "\n";

  if (freq->size() >= 100) {
    LEstimate L = estimate_L(*freq);
    std::cout << "L_estimate: " << format_num(L.value) << " +- "
              << format_num(L.error) << "\n";
  }
  std::size_t wN = freq->size();
  GapWitness bc = check_BC(*freq, bc_l, delta, wN);
  GapWitness lc = check_LC(*freq, delta, wN);
  std::cout << "BC(l=" << format_num(bc_l) << ",delta=" << format_num(delta)
            << "): C*=" << format_num(bc.c_star) << " argmin=" << bc.argmin
            << (bc.stabilized ? " stabilized" : " not-stabilized") << "\n";
  std::cout << "LC(delta=" << format_num(delta)
            << "): C*=" << format_num(lc.c_star) << " argmin=" << lc.argmin
            << (lc.stabilized ? " stabilized" : " not-stabilized") << "\n";

  if (!opt.out.empty()) {
    std::vector<std::string> rows;
    for (std::size_t n = 0; n < prefix; ++n) {
      std::string row = std::to_string(n + 1) + "," +
                        format_num(freq->lambda(n));
      for (const auto& r : lat.dec.rows[n]) row += "," + to_pq(r);
      rows.push_back(std::move(row));
    }
    std::string header = "n,lambda";
    for (std::size_t k = 0; k < lat.dec.basis_indices.size(); ++k)
      header += ",r" + std::to_string(k + 1);
    write_csv(opt.out, header, rows);
  }
  return 0;
}

int cmd_norm(const Options& opt, std::vector<unsigned> p_list,
             const std::string& method) {
  DirichletPolynomial d = series_from_json(load_json_file(opt.spec));
  if (p_list.empty()) p_list = {2};
  std::vector<std::string> rows;
  for (unsigned p : p_list) {
    NormEstimate est;
    if (method == "parseval" || (method == "auto" && p == 2)) {
      if (p != 2) return fail("parseval needs p=2");
      est = norm2(d);
    } else if (method == "even_exact" || (method == "auto" && p % 2 == 0)) {
      est = norm_even_exact(d, p);
    } else if (method == "besicovitch" || method == "auto") {
      est = norm_besicovitch(d, p, default_schedule(d, opt.tolerance));
    } else if (method == "sup") {
      est = norm_sup(d);
    } else {
      return fail("unknown method: " + method);
    }
    rows.push_back(opt.spec + "," + std::to_string(p) + "," +
                   to_string(est.method) + "," + format_num(est.value) + "," +
                   format_num(est.error) + "," +
                   (est.lower_bound ? "1" : "0"));
  }
  const std::string header = "series_id,p,method,value,error,lower_bound";
  if (!opt.out.empty())
    write_csv(opt.out, header, rows);
  else {
    std::cout << header << "\n";
    for (const auto& r : rows) std::cout << r << "\n";
  }
  return 0;
}

int cmd_abscissa(const Options& opt, std::size_t N, double strip_eps) {
  json j = load_json_file(opt.spec);
  FrequencyPtr freq = frequency_from_json(j.at("frequency"));
  if (N == 0) N = j.value("N", freq->size());
  N = std::min(N, freq->size());

  std::vector<std::string> rows;
  auto emit = [&](const std::string& est, const AbscissaEstimate& a) {
    std::string flags;
    if (a.finite_support) flags += "finite_support;";
    if (a.upper_only) flags += "upper_only;";
    rows.push_back(opt.spec + "," + est + "," + std::to_string(N) + "," +
                   format_num(a.value) + "," + format_num(a.band) + "," +
                   flags);
  };
  if (j.contains("rule")) {
    CoefficientRule rule = rule_from_json(j.at("rule"), freq);
    emit("sigma_a", sigma_a_estimate(rule, N));
    emit("sigma_c", sigma_c_estimate(rule, N));
  }
  emit("L_via_sigma_c", estimate_L_via_sigma_c(*freq, N));
  if (strip_eps > 0) {
    StripReport rep = strip_experiment(freq, strip_eps, N);
    std::string flags = rep.skipped ? "skipped;" : "";
    if (!rep.skipped && !rep.h2_convergent) flags += "not_h2;";
    rows.push_back(opt.spec + ",strip_sigma_a," + std::to_string(N) + "," +
                   format_num(rep.skipped ? 0.0 : rep.sigma_a.value) + "," +
                   format_num(rep.skipped ? 0.0 : rep.sigma_a.band) + "," +
                   flags);
    std::cout << "strip: L=" << format_num(rep.L)
              << " target=" << format_num(rep.target)
              << (rep.skipped ? " skipped" : "") << "\n";
  }
  const std::string header = "freq_id,estimator,N,value,band,flags";
  if (!opt.out.empty())
    write_csv(opt.out, header, rows);
  else {
    std::cout << header << "\n";
    for (const auto& r : rows) std::cout << r << "\n";
  }
  return 0;
}

int cmd_lift(const Options& opt) {
  DirichletPolynomial d = series_from_json(load_json_file(opt.spec));
  std::size_t prefix = std::max<std::size_t>(d.support_end(), 1);
  BohrDecomposition dec = extract_basis(*d.freq(), prefix);
  TorusLift f = lift(d, dec);

  json out;
  out["basis_size"] = f.basis_size;
  json terms = json::array();
  TypeReport type = classify_prefix_type(dec);
  std::vector<Int> primes;
  if (d.freq()->family() == FamilyTag::ordinary &&
      type.type == PrefixType::natural)
    primes = ordinary_primes(*d.freq());
  for (std::size_t t = 0; t < f.rows.size(); ++t) {
    json jt;
    jt["n"] = f.indices[t] + 1;
    std::vector<std::string> row;
    for (const auto& x : f.rows[t]) row.push_back(x.str());
    jt["exponents"] = row;
    jt["re"] = f.coeffs[t].real();
    jt["im"] = f.coeffs[t].imag();
    if (!primes.empty()) jt["index"] = ordinary_index(f.rows[t], primes).str();
    terms.push_back(std::move(jt));
  }
  out["terms"] = std::move(terms);

  DirichletPolynomial back = inverse_lift(f, d.freq(), dec);
  bool exact = back.terms() == d.terms();
  out["roundtrip_exact"] = exact;

  if (!opt.out.empty()) {
    std::ofstream os(opt.out, std::ios::binary);
    os << out.dump(2) << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return exact ? 0 : fail("lift round trip mismatch");
}

int cmd_verify(const Options& opt, const std::string& suite) {
  std::vector<SuiteReport> reports = run_all_suites(opt.seed);
  bool any = false, ok = true;
  for (const auto& rep : reports) {
    if (suite != "all" && rep.name != suite) continue;
    any = true;
    std::cout << rep.summary_line() << "\n";
    std::string base = opt.out.empty() ? "verify" : opt.out;
    rep.write_csv(base + "_" + rep.name + ".csv");
    ok = ok && rep.pass;
  }
  if (!any) return fail("unknown suite: " + suite);
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"general Dirichlet series toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  app.add_option("--threads", opt.threads, "worker threads")
      ->capture_default_str();
  app.add_option("--tolerance", opt.tolerance, "target relative tolerance")
      ->capture_default_str();

  auto add_common = [&](CLI::App* sub, bool need_spec) {
    auto* o = sub->add_option("--spec", opt.spec, "input spec file (JSON)");
    if (need_spec) o->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out, "output path");
  };

  std::size_t prefix = 0;
  double bc_l = 0, delta = 0.1;
  auto* fa = app.add_subcommand("freq-analyze",
                                "basis, Bohr matrix, type, L and gap reports");
  add_common(fa, true);
  fa->add_option("--prefix", prefix, "prefix length for the exact analysis");
  fa->add_option("--l", bc_l, "l parameter of the Bohr gap condition")
      ->capture_default_str();
  fa->add_option("--delta", delta, "delta of both gap conditions")
      ->capture_default_str();

  std::vector<unsigned> p_list;
  std::string method = "auto";
  auto* nm = app.add_subcommand("norm", "norm estimates for a series");
  add_common(nm, true);
  nm->add_option("-p,--p", p_list, "exponents (repeatable)");
  nm->add_option("--method", method,
                 "auto|parseval|even_exact|besicovitch|sup")
      ->capture_default_str();

  std::size_t absc_N = 0;
  double strip_eps = 0;
  auto* ab = app.add_subcommand("abscissa", "convergence abscissa estimators");
  add_common(ab, true);
  ab->add_option("-N,--N", absc_N, "truncation length");
  ab->add_option("--strip-eps", strip_eps,
                 "also run the strip experiment at this epsilon");

  auto* lf = app.add_subcommand("lift", "torus lift of a series");
  add_common(lf, true);

  std::string suite = "all";
  auto* vf = app.add_subcommand("verify", "theorem verification suites");
  add_common(vf, false);
  vf->add_option("--suite", suite, "suite name or 'all'")
      ->capture_default_str();

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return app.exit(e);
  }

  set_norm_threads(opt.threads);
  try {
    if (fa->parsed()) return cmd_freq_analyze(opt, prefix, bc_l, delta);
    if (nm->parsed()) return cmd_norm(opt, p_list, method);
    if (ab->parsed()) return cmd_abscissa(opt, absc_N, strip_eps);
    if (lf->parsed()) return cmd_lift(opt);
    if (vf->parsed()) return cmd_verify(opt, suite);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return fail("no command");
}

}  // namespace gds
