#include <doctest.h>

#include "orbitcert/stratified.hpp"

using namespace orbitcert;

namespace {
BinaryForm mono(long n, long k, Rational c = Rational(1)) {
  return BinaryForm::monomial(n, k, c);
}
}  // namespace

TEST_CASE("raising operator") {
  // y^n -> n x y^{n-1}
  for (long n = 1; n <= 6; ++n) CHECK(raise_op(mono(n, n)) == mono(n, n - 1, Rational(n)));
  // x^n -> 0
  for (long n = 1; n <= 6; ++n) CHECK(raise_op(mono(n, 0)).is_zero());
  // A(xy) = x^2
  CHECK(raise_op(mono(2, 1)) == mono(2, 0));
}

TEST_CASE("lowering and weight operators") {
  for (long n = 1; n <= 6; ++n) CHECK(lower_op(mono(n, 0)) == mono(n, 1, Rational(n)));
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(weight_op(mono(n, k)) == mono(n, k, Rational(n - 2 * k)));
}

TEST_CASE("sl2 relations as operator identities") {
  for (long n = 0; n <= 16; ++n) {
    for (long k = 0; k <= n; ++k) {
      BinaryForm e = mono(n, k);
      BinaryForm ab = raise_op(lower_op(e)) - lower_op(raise_op(e));
      CHECK(ab == weight_op(e));
      BinaryForm ha = weight_op(raise_op(e)) - raise_op(weight_op(e));
      CHECK(ha == raise_op(e).scaled(Rational(2)));
      BinaryForm hb = weight_op(lower_op(e)) - lower_op(weight_op(e));
      CHECK(hb == lower_op(e).scaled(Rational(-2)));
    }
  }
}

TEST_CASE("raise is nilpotent of order degree+1") {
  for (long n = 0; n <= 10; ++n) {
    BinaryForm f(n);
    for (long k = 0; k <= n; ++k) f.set_coeff(k, Rational(k + 1, n + 2));
    CHECK_FALSE(apply_raise(f, n).is_zero());
    CHECK(apply_raise(f, n + 1).is_zero());
  }
}

TEST_CASE("height") {
  CHECK(mono(3, 0).height() == 0);
  CHECK(mono(2, 1).height() == 1);
  BinaryForm f(2);
  f.set_coeff(0, Rational(1));
  f.set_coeff(1, Rational(1));
  CHECK(f.height() == 1);
  CHECK_THROWS(BinaryForm(4).height());
  // height drops by one under A
  for (long n = 1; n <= 8; ++n) {
    BinaryForm g(n);
    for (long k = 0; k <= n; ++k) g.set_coeff(k, Rational(2 * k + 1));
    for (long h = n; h >= 1; --h) {
      CHECK(g.height() == h);
      g = raise_op(g);
    }
  }
}

TEST_CASE("module spec shape rules") {
  CHECK_THROWS(ModuleSpec({{3, 1}, {3, 1}}));
  CHECK_THROWS(ModuleSpec({{3, 1}, {2, 1}}));
  CHECK_THROWS(ModuleSpec({{0, 1}}));
  CHECK_NOTHROW(ModuleSpec({{0, 1}}, true));
  ModuleSpec spec({{2, 2}, {3, 1}});
  CHECK(spec.dim() == 10);
  CHECK(spec.offset(2, 1) == 3);
  CHECK(spec.offset(3, 0) == 6);
}

TEST_CASE("genericity") {
  ModuleSpec two_r1({{1, 2}});
  ComponentMap ok{{1, {mono(1, 0), mono(1, 1)}}};
  CHECK(is_generic(two_r1, ok));
  ComponentMap dep{{1, {mono(1, 0), mono(1, 0, Rational(2))}}};
  CHECK_FALSE(is_generic(two_r1, dep));

  ModuleSpec mixed({{2, 1}, {3, 1}});
  ComponentMap comps{{3, {mono(3, 0)}}, {2, {mono(2, 1)}}};
  CHECK(is_generic(mixed, comps));
}

TEST_CASE("validate_stratified") {
  StratifiedVector good;
  good.set(0, 3, mono(3, 0));
  good.set(1, 2, mono(2, 1));
  CHECK(validate_stratified(good).empty());

  StratifiedVector bad_hw;
  bad_hw.set(0, 3, mono(3, 1));  // x^2 y is not a highest weight vector
  auto v1 = validate_stratified(bad_hw);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0].stratum == 0);
  CHECK(v1[0].rule.find("highest weight") != std::string::npos);

  StratifiedVector bad_height;
  bad_height.set(0, 3, mono(3, 0));
  bad_height.set(1, 2, mono(2, 0));  // height 0 in stratum 1
  CHECK(validate_stratified(bad_height).size() == 1);

  StratifiedVector gap;
  gap.set(0, 3, mono(3, 0));
  gap.set(2, 5, mono(5, 2));
  CHECK_FALSE(validate_stratified(gap).empty());
}

TEST_CASE("canonical stratification of raw vectors") {
  ModuleSpec spec({{2, 2}});
  // components (x^2 + xy, xy): the span contains x^2, canonical heights {0,1}
  BinaryForm f(2);
  f.set_coeff(0, Rational(1));
  f.set_coeff(1, Rational(1));
  ComponentMap raw{{2, {f, mono(2, 1)}}};
  auto sv = stratify(spec, raw);
  REQUIRE(sv.has_value());
  CHECK(validate_stratified(*sv).empty());
  CHECK(sv->find(0, 2) != nullptr);
  CHECK(sv->find(1, 2) != nullptr);
  CHECK(sv->find(0, 2)->height() == 0);

  // a lone height-1 component leaves stratum 0 empty
  ModuleSpec one({{2, 1}});
  ComponentMap raw2{{2, {f}}};
  std::string why;
  CHECK_FALSE(stratify(one, raw2, &why).has_value());
  CHECK(!why.empty());

  // (x^2 + xy) + x^4 is in normal form with strata {1, 0}
  ModuleSpec two({{2, 1}, {4, 1}});
  ComponentMap raw3{{2, {f}}, {4, {mono(4, 0)}}};
  auto sv3 = stratify(two, raw3);
  REQUIRE(sv3.has_value());
  CHECK(sv3->find(1, 2) != nullptr);
  CHECK(sv3->find(0, 4) != nullptr);
}
