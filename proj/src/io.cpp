#include "gds/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gds {

using nlohmann::json;

std::string format_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << header << "\n";
  for (const auto& r : rows) out << r << "\n";
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return json::parse(in);
}

namespace {

FamilyTag family_from_name(const std::string& s) {
  if (s == "ordinary") return FamilyTag::ordinary;
  if (s == "linear") return FamilyTag::linear;
  if (s == "padic_example") return FamilyTag::padic_example;
  if (s == "qli") return FamilyTag::qli;
  throw std::invalid_argument("unknown family: " + s);
}

const char* family_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::ordinary: return "ordinary";
    case FamilyTag::linear: return "linear";
    case FamilyTag::padic_example: return "padic_example";
    case FamilyTag::qli: return "qli";
    case FamilyTag::custom: return "custom";
  }
  return "?";
}

}  // namespace

FrequencyPtr frequency_from_json(const json& j) {
  if (j.contains("family")) {
    FamilyTag tag = family_from_name(j.at("family").get<std::string>());
    std::size_t N = j.at("N").get<std::size_t>();
    if (tag == FamilyTag::ordinary) return make_ordinary(N);
    return make_family(tag, N);
  }
  std::vector<Symbol> symbols;
  for (const auto& js : j.at("symbols")) {
    Symbol s;
    s.name = js.at("name").get<std::string>();
    s.value = Real(js.at("value").get<std::string>());
    if (js.contains("independence_class"))
      s.independence_class = js.at("independence_class").get<int>();
    symbols.push_back(std::move(s));
  }
  std::vector<SparseRow> rows;
  for (const auto& jr : j.at("rows")) {
    SparseRow row;
    for (std::size_t k = 0; k < jr.size(); ++k) {
      Rational r = parse_pq(jr[k].get<std::string>());
      if (r != 0) row.emplace_back(k, r);
    }
    rows.push_back(std::move(row));
  }
  return make_custom(std::move(symbols), std::move(rows));
}

json frequency_to_json(const Frequency& freq) {
  json j;
  j["family"] = family_name(freq.family());
  j["N"] = freq.size();
  if (freq.family() != FamilyTag::custom) return j;
  j.erase("family");
  j.erase("N");
  json syms = json::array();
  for (const auto& s : freq.symbols()) {
    syms.push_back({{"name", s.name},
                    {"value", s.value.str(50)},
                    {"independence_class", s.independence_class}});
  }
  j["symbols"] = std::move(syms);
  json rows = json::array();
  for (std::size_t n = 0; n < freq.size(); ++n) {
    std::vector<std::string> dense(freq.symbols().size(), "0");
    for (const auto& [k, r] : freq.row(n)) dense[k] = to_pq(r);
    rows.push_back(dense);
  }
  j["rows"] = std::move(rows);
  return j;
}

DirichletPolynomial series_from_json(const json& j) {
  FrequencyPtr freq = frequency_from_json(j.at("frequency"));
  DirichletPolynomial d(freq);
  for (const auto& jt : j.at("terms")) {
    std::size_t n = jt.at("n").get<std::size_t>();
    if (n < 1) throw std::invalid_argument("term indices are 1-based");
    double re = jt.value("re", 0.0), im = jt.value("im", 0.0);
    d.set(n - 1, Complex(re, im));
  }
  return d;
}

json series_to_json(const DirichletPolynomial& d) {
  json j;
  j["frequency"] = frequency_to_json(*d.freq());
  json terms = json::array();
  for (const auto& [n, a] : d.terms())
    terms.push_back({{"n", n + 1}, {"re", a.real()}, {"im", a.imag()}});
  j["terms"] = std::move(terms);
  return j;
}

json decomposition_to_json(const BohrDecomposition& dec) {
  json j;
  json idx = json::array();
  for (std::size_t i : dec.basis_indices) idx.push_back(i + 1);
  j["basis_indices"] = std::move(idx);
  json rows = json::array();
  for (const auto& row : dec.rows) {
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(to_pq(x));
    rows.push_back(r);
  }
  j["rows"] = std::move(rows);
  return j;
}

json lattice_to_json(const FrequencyLattice& lat) {
  json j;
  j["prefix"] = lat.prefix;
  j["decomposition"] = decomposition_to_json(lat.dec);
  json gens = json::array();
  for (std::size_t g = 0; g < lat.rank(); ++g) {
    std::vector<std::string> row;
    for (const auto& x : lat.generators[g]) row.push_back(to_pq(x));
    gens.push_back({{"over_basis", row}, {"value", lat.generator_value(g)}});
  }
  j["generators"] = std::move(gens);
  json coords = json::array();
  for (const auto& c : lat.coords) {
    std::vector<std::string> row;
    for (const auto& x : c) row.push_back(x.str());
    coords.push_back(row);
  }
  j["coords"] = std::move(coords);
  return j;
}

json character_to_json(const Character& chi) {
  json j;
  j["prefix"] = chi.lattice ? chi.lattice->prefix : 0;
  j["angles"] = chi.angles;
  return j;
}

CoefficientRule rule_from_json(const json& j, FrequencyPtr freq) {
  CoefficientRule rule;
  rule.freq = std::move(freq);
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") {
    rule.kind = RuleKind::constant;
  } else if (kind == "exp_decay") {
    rule.kind = RuleKind::exp_decay;
    rule.c = j.at("c").get<double>();
  } else if (kind == "alternating") {
    rule.kind = RuleKind::alternating;
  } else if (kind == "table") {
    rule.kind = RuleKind::table;
    for (const auto& jt : j.at("table"))
      rule.table.emplace_back(jt.value("re", 0.0), jt.value("im", 0.0));
  } else {
    throw std::invalid_argument("unknown rule kind: " + kind);
  }
  if (j.contains("horizon")) rule.horizon = j.at("horizon").get<std::size_t>();
  return rule;
}

}  // namespace gds
