#include <doctest.h>

#include "orbitcert/json_io.hpp"

using namespace orbitcert;

TEST_CASE("module spec json round trip") {
  ModuleSpec spec({{2, 2}, {3, 1}});
  std::string s = to_json(spec);
  ModuleSpec back = parse_module_spec(s);
  CHECK(back == spec);
  CHECK(s.find("\"degree\":2") != std::string::npos);
}

TEST_CASE("stratified vector json round trip") {
  StratifiedVector v;
  v.set(0, 3, BinaryForm::monomial(3, 0));
  BinaryForm f(2);
  f.set_coeff(0, Rational(1, 2));
  f.set_coeff(1, Rational(-3));
  v.set(1, 2, f);
  std::string s = to_json(v);
  StratifiedVector back = parse_stratified(s);
  CHECK(back.entries() == v.entries());
  CHECK(s.find("\"1/2\"") != std::string::npos);
}

TEST_CASE("stratified vector parses the documented schema") {
  auto v = parse_stratified(
      R"({"strata":[{"stratum":0,"degree":3,"coeffs":["1","0","0","0"]},)"
      R"({"stratum":1,"degree":2,"coeffs":["0","1","0"]}]})");
  CHECK(validate_stratified(v).empty());
  CHECK(v.find(0, 3) != nullptr);
}

TEST_CASE("raw components and torus module parse") {
  auto raw = parse_raw_components(
      R"({"components":[{"degree":1,"coeffs":["1","0"]},{"degree":1,"coeffs":["0","1"]}]})");
  CHECK(raw.at(1).size() == 2);

  auto tm = parse_torus_module(R"({"rank":2,"weights":[[1,0],[0,1]],"vector":["1","1"]})");
  CHECK(tm.rank == 2);
  CHECK(tm.weights.size() == 2);
  CHECK(tm.v[0] == Rational(1));
}

TEST_CASE("reports serialize with stable fields") {
  StratifiedVector v;
  v.set(0, 3, BinaryForm::monomial(3, 0));
  v.set(1, 2, BinaryForm::monomial(2, 1));
  AnalysisReport rep = analyze(v);
  std::string s = to_json(rep);
  CHECK(s.find("\"certified\"") != std::string::npos);
  CHECK(s.find("\"normalizer\"") != std::string::npos);
  CHECK(s.find("H_TORUS") != std::string::npos);
  // deterministic output
  CHECK(s == to_json(analyze(v)));
}

TEST_CASE("analysis pipeline end to end") {
  StratifiedVector v;
  v.set(0, 3, BinaryForm::monomial(3, 0));
  v.set(1, 2, BinaryForm::monomial(2, 1));
  AnalysisOptions opt;
  opt.p_max = 10;
  opt.run_oracle = true;
  AnalysisReport rep = analyze(v, opt);
  CHECK(rep.normal_form);
  CHECK(rep.generic);
  REQUIRE(rep.certificates.size() == 1);
  CHECK(rep.certificates[0].report.p == 1);
  CHECK(rep.checks_equivariance);
  CHECK(rep.checks_abelian_nilpotent);
  CHECK(rep.checks_tangency);
  REQUIRE(rep.oracle.has_value());
  CHECK(rep.oracle->dimension == 6);
  REQUIRE(rep.normalizer.has_value());
  CHECK(rep.normalizer->tag == NormalizerTag::H_TORUS);
}

TEST_CASE("raw analysis falls back to the oracle") {
  ModuleSpec spec({{2, 1}});
  BinaryForm f(2);
  f.set_coeff(0, Rational(1));
  f.set_coeff(1, Rational(1));
  ComponentMap raw{{2, {f}}};
  AnalysisOptions opt;
  opt.run_oracle = true;
  AnalysisReport rep = analyze_raw(spec, raw, opt);
  CHECK_FALSE(rep.normal_form);
  CHECK(rep.certificates.empty());
  CHECK(rep.oracle.has_value());
}
