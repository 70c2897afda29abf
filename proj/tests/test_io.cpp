#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gds/io.hpp"

using namespace gds;
using nlohmann::json;

TEST_CASE("rational literals") {
  CHECK(to_pq(Rational(1, 2)) == "1/2");
  CHECK(to_pq(Rational(4, 2)) == "2");
  CHECK(to_pq(Rational(-3, 6)) == "-1/2");
  CHECK(parse_pq("7") == Rational(7));
  CHECK(parse_pq("-5/10") == Rational(-1, 2));
  CHECK(parse_pq(to_pq(Rational(22, 7))) == Rational(22, 7));
  CHECK_THROWS_AS(parse_pq("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pq("1/0"), std::invalid_argument);
}

TEST_CASE("frequency specs") {
  json j = {{"family", "ordinary"}, {"N", 10}};
  auto f = frequency_from_json(j);
  CHECK(f->size() == 10);
  CHECK(f->family() == FamilyTag::ordinary);

  json custom = {
      {"symbols", json::array({{{"name", "one"}, {"value", "1"}}})},
      {"rows", json::array({json::array({"1"}), json::array({"3/2"})})}};
  auto g = frequency_from_json(custom);
  CHECK(g->size() == 2);
  CHECK(g->lambda(1) == doctest::Approx(1.5));

  // custom frequencies round-trip through their serialization
  auto back = frequency_from_json(frequency_to_json(*g));
  CHECK(back->size() == g->size());
  CHECK(back->lambda(1) == g->lambda(1));
  CHECK(back->row(1) == g->row(1));

  CHECK_THROWS(frequency_from_json(json{{"family", "nope"}, {"N", 3}}));
}

TEST_CASE("series specs") {
  json j = {{"frequency", {{"family", "linear"}, {"N", 4}}},
            {"terms", json::array({{{"n", 1}, {"re", 1.0}},
                                   {{"n", 3}, {"re", -0.5}, {"im", 2.0}}})}};
  DirichletPolynomial d = series_from_json(j);
  CHECK(d.term_count() == 2);
  CHECK(d.coeff(0) == Complex(1.0, 0.0));
  CHECK(d.coeff(2) == Complex(-0.5, 2.0));

  auto round = series_from_json(series_to_json(d));
  CHECK(round.terms() == d.terms());

  json bad = j;
  bad["terms"][0]["n"] = 0;
  CHECK_THROWS(series_from_json(bad));
}

TEST_CASE("structural serialization") {
  auto f = make_ordinary(10);
  FrequencyLattice lat = lattice_basis(f, 10);
  json jd = decomposition_to_json(lat.dec);
  CHECK(jd["basis_indices"] == json::array({2, 3, 5, 7}));
  json jl = lattice_to_json(lat);
  CHECK(jl["prefix"] == 10);
  CHECK(jl["coords"].size() == 10);

  auto latp = std::make_shared<FrequencyLattice>(std::move(lat));
  json jc = character_to_json(random_character(latp, 3));
  CHECK(jc["angles"].size() == latp->rank());
}

TEST_CASE("coefficient rule specs") {
  auto f = make_ordinary(200);
  auto r1 = rule_from_json(json{{"kind", "exp_decay"}, {"c", 0.5}}, f);
  CHECK(r1.kind == RuleKind::exp_decay);
  CHECK(r1.at(1) == Complex(std::exp(-0.5 * f->lambda(1)), 0.0));
  auto r2 = rule_from_json(
      json{{"kind", "table"},
           {"table", json::array({{{"re", 1.0}}, {{"im", -1.0}}})}},
      f);
  CHECK(r2.at(1) == Complex(0.0, -1.0));
  CHECK(r2.at(5) == Complex(0.0, 0.0));
  CHECK_THROWS(rule_from_json(json{{"kind", "poly"}}, f));
}

TEST_CASE("csv output uses LF endings and stable formatting") {
  CHECK(format_num(0.5) == "0.5");
  CHECK(format_num(1.0 / 3.0) == "0.333333333333");
  CHECK(format_num(2.0) == "2");

  std::string path = "io_test_tmp.csv";
  write_csv(path, "a,b", {"1,2", "3,4"});
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "a,b\n1,2\n3,4\n");
  std::remove(path.c_str());
}
