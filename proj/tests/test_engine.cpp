#include <doctest.h>

#include "orbitcert/engine.hpp"

using namespace orbitcert;

namespace {

BinaryForm mono(long n, long k, Rational c = Rational(1)) {
  return BinaryForm::monomial(n, k, c);
}

BinaryForm form(long n, std::vector<long> cs) {
  BinaryForm f(n);
  for (long k = 0; k <= n; ++k) f.set_coeff(k, Rational(cs[static_cast<std::size_t>(k)]));
  return f;
}

// v = x^{l+p} (+) (a0 x^l + a1 x^{l-1} y)
StratifiedVector two_step(long l, long p, Rational a0 = Rational(0), Rational a1 = Rational(1)) {
  StratifiedVector v;
  v.set(0, l + p, mono(l + p, 0));
  BinaryForm low(l);
  low.set_coeff(0, a0);
  low.set_coeff(1, a1);
  v.set(1, l, low);
  return v;
}

// the four-summand vector with the pinned sub-leading value
StratifiedVector complicated32() {
  StratifiedVector v;
  v.set(0, 3, mono(3, 0));
  v.set(0, 7, mono(7, 0));
  BinaryForm v15(5);
  v15.set_coeff(0, Rational(3, 2));  // forced: a1 * u1 / (2 a2)
  v15.set_coeff(1, Rational(1));
  v.set(1, 5, v15);
  BinaryForm v23(3);
  v23.set_coeff(1, Rational(3));
  v23.set_coeff(2, Rational(1));
  v.set(2, 3, v23);
  return v;
}

}  // namespace

TEST_CASE("closed form c") {
  CHECK(closed_form_c(1, 1, 2, 0) == Rational(1));
  CHECK(closed_form_c(1, 1, 2, 1) == Rational(1, 3));
  CHECK(closed_form_c(5, 3, 9, 0) == Rational(1));
  // j > p gives zero through the binom(p, j) factor
  CHECK(closed_form_c(4, 2, 9, 3) == Rational(0));
}

TEST_CASE("eq-star triangular solve matches the closed form") {
  CHECK(solve_eq_star(0, 3, 5) == std::vector<Rational>{Rational(1)});
  auto c = solve_eq_star(1, 1, 2);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == Rational(1, 3));
  CHECK(c[1] == Rational(1));
  // c[j] corresponds to closed_form_c at index s - j
  for (long s = 1; s <= 6; ++s)
    for (long p = 1; p <= 6; ++p)
      for (long l = s; l <= 14; ++l) {
        auto sol = solve_eq_star(s, p, l);
        for (long j = 0; j <= s; ++j) {
          Rational want = (s - j) <= std::min(p, s) ? closed_form_c(s, p, l, s - j) : Rational(0);
          CHECK(sol[static_cast<std::size_t>(j)] == want);
        }
      }
}

TEST_CASE("combinatorial screen") {
  // F_0 = {3}, F_1 = {2}: p = 1 passes, p = 3 misses degree 5
  StratifiedVector v = two_step(2, 1);
  CHECK(check_condition_combinatorial(v, 1).satisfied);
  auto rep = check_condition_combinatorial(v, 3);
  CHECK_FALSE(rep.satisfied);
  REQUIRE(rep.missing_degrees.size() == 1);
  CHECK(rep.missing_degrees[0].required_degree == 5);
  CHECK(rep.missing_degrees[0].source_stratum == 0);

  CHECK(check_condition_combinatorial(complicated32(), 2).satisfied);

  StratifiedVector bad;
  bad.set(0, 3, mono(3, 1));
  CHECK(check_condition_combinatorial(bad, 1).failure == StarFailure::invalid_vector);
}

TEST_CASE("coefficient solve on the minimal example") {
  StratifiedVector v = two_step(2, 1);
  auto rep = solve_coefficients(v, 1);
  REQUIRE(rep.satisfied);
  REQUIRE(rep.coefficient_solution.size() == 1);
  CHECK(rep.coefficient_solution[0].coefficient == Rational(1));

  auto scaled = two_step(2, 1, Rational(0), Rational(5));
  auto rep5 = solve_coefficients(scaled, 1);
  REQUIRE(rep5.satisfied);
  CHECK(rep5.coefficient_solution[0].coefficient == Rational(5));
}

TEST_CASE("decide_gu on the minimal example") {
  StratifiedVector v = two_step(2, 1);
  Certificate cert = decide_gu(v, 1);
  REQUIRE(cert.report.satisfied);
  REQUIRE(cert.sigma.has_value());
  // coordinates: R_2 copy at offset 0, R_3 copy at offset 3
  // sigma(y (x) x^3) = x^2: x^3 column is coordinate 3, x^2 row is 0
  const QMatrix& mu = cert.sigma->mu();
  CHECK(mu.at(0, 3) == Rational(1));
  CHECK(mu.at(1, 3) == Rational(0));
  // sigma(x (x) x^3) = 0: the x^3 column of S_x vanishes
  for (std::size_t r = 0; r < 7; ++r) CHECK(cert.sigma->S[0].at(r, 3) == Rational(0));

  for (long q = 2; q <= 10; ++q) CHECK_FALSE(decide_gu(v, q).report.satisfied);
}

TEST_CASE("worked example with two targets and a pinned sub-leading value") {
  StratifiedVector v = complicated32();
  Certificate cert = decide_gu(v, 2);
  REQUIRE(cert.report.satisfied);
  // frozen from the hand solve: t(1,5 target) = 1, t(2,3 <- 1,5) = 2, t(2,3 <- 0,3) = 4/5
  Rational t15, t23a, t23b;
  for (const auto& b : cert.report.coefficient_solution) {
    if (b.target_degree == 5) t15 = b.coefficient;
    if (b.target_degree == 3 && b.source_degree == 5) t23a = b.coefficient;
    if (b.target_degree == 3 && b.source_degree == 3) t23b = b.coefficient;
  }
  CHECK(t15 == Rational(1));
  CHECK(t23a == Rational(2));
  CHECK(t23b == Rational(4, 5));

  // uniqueness: perturbing the pinned sub-leading coefficient breaks it
  StratifiedVector bad = v;
  BinaryForm v15(5);
  v15.set_coeff(0, Rational(2));
  v15.set_coeff(1, Rational(1));
  bad.set(1, 5, v15);
  auto rep = decide_gu(bad, 2).report;
  CHECK_FALSE(rep.satisfied);
  CHECK(rep.failure == StarFailure::unsolvable);
}

TEST_CASE("extension certifying both R_p and R_0") {
  // corrected extension: R_3 added to stratum 1, R_5 added to stratum 0
  StratifiedVector v = complicated32();
  v.set(1, 3, form(3, {5, 2, 0, 0}));
  v.set(0, 5, mono(5, 0, Rational(3)));
  v.set(1, 5, form(5, {7, 1, 0, 0, 0, 0}));  // sub-leading now free

  Certificate c2 = decide_gu(v, 2);
  CHECK(c2.report.satisfied);
  bool has_correction = false;
  for (const auto& b : c2.report.coefficient_solution) has_correction |= b.correction;
  CHECK(has_correction);

  Certificate c0 = decide_gu(v, 0, true);
  CHECK(c0.report.satisfied);
  // without the flag p = 0 is refused
  CHECK_FALSE(decide_gu(v, 0, false).report.satisfied);

  // frozen from the prototype: t(1,3 <- 0,3) = 2, t(1,5 <- 0,5) = 1/3,
  // t(2,3 <- 1,3) = 1 with correction -2 on (0,3)
  Rational t13, t15, t23, corr;
  for (const auto& b : c0.report.coefficient_solution) {
    if (b.target_degree == 3 && b.target_stratum == 1) t13 = b.coefficient;
    if (b.target_degree == 5) t15 = b.coefficient;
    if (b.target_degree == 3 && b.target_stratum == 2 && !b.correction) t23 = b.coefficient;
    if (b.target_degree == 3 && b.target_stratum == 2 && b.correction) corr = b.coefficient;
  }
  CHECK(t13 == Rational(2));
  CHECK(t15 == Rational(1, 3));
  CHECK(t23 == Rational(1));
  CHECK(corr == Rational(-2));
}

TEST_CASE("literal extension without the stratum-0 partner fails") {
  // adding only R_3 to stratum 1 breaks the shape for both p = 2 and p = 0
  StratifiedVector v = complicated32();
  v.set(1, 3, form(3, {5, 2, 0, 0}));
  auto r2 = decide_gu(v, 2).report;
  CHECK(r2.failure == StarFailure::combinatorial);
  auto r0 = decide_gu(v, 0, true).report;
  CHECK(r0.failure == StarFailure::combinatorial);
}

TEST_CASE("isotypic modules certify nothing") {
  for (long k = 1; k <= 6; ++k) {
    for (long m = 1; m <= k + 1; ++m) {
      StratifiedVector v;
      for (long i = 0; i < m; ++i) v.set(i, k, mono(k, i));
      REQUIRE(validate_stratified(v).empty());
      CHECK(enumerate_p(v, 10).empty());
    }
  }
}

TEST_CASE("multiplicity two at the top degree certifies nothing") {
  StratifiedVector v;
  v.set(0, 4, mono(4, 0));
  v.set(1, 4, mono(4, 1));
  v.set(0, 2, mono(2, 0));
  REQUIRE(validate_stratified(v).empty());
  CHECK(enumerate_p(v, 10).empty());
}

TEST_CASE("enumerate_p finds exactly the right p") {
  auto certs = enumerate_p(two_step(2, 1), 10);
  REQUIRE(certs.size() == 1);
  CHECK(certs[0].report.p == 1);

  CHECK(default_p_bound(ModuleSpec({{2, 1}, {3, 1}})) == 4);
}
