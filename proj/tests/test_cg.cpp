#include <doctest.h>

#include "orbitcert/transvectant.hpp"

using namespace orbitcert;

namespace {
BinaryForm mono(long n, long k, Rational c = Rational(1)) {
  return BinaryForm::monomial(n, k, c);
}
}  // namespace

TEST_CASE("zeroth transvectant is the product") {
  BinaryForm f(2), g(3);
  for (long k = 0; k <= 2; ++k) f.set_coeff(k, Rational(k + 1));
  for (long k = 0; k <= 3; ++k) g.set_coeff(k, Rational(2 * k - 1));
  CHECK(transvectant(f, g, 0) == f * g);
}

TEST_CASE("first transvectant of f with itself vanishes") {
  for (long n = 1; n <= 8; ++n) {
    BinaryForm f(n);
    for (long k = 0; k <= n; ++k) f.set_coeff(k, Rational(3 * k + 2, k + 1));
    CHECK(transvectant(f, f, 1).is_zero());
  }
}

TEST_CASE("symplectic pairing") {
  BinaryForm x = mono(1, 0), y = mono(1, 1);
  BinaryForm c = transvectant(x, y, 1);
  CHECK(c.degree() == 0);
  CHECK_FALSE(c.is_zero());
}

TEST_CASE("tau normalization and paper image formula") {
  // tau(1,2,0)(y (x) x^3) = x^2
  CHECK(tau(1, 2, 0).apply(mono(1, 1), mono(3, 0)) == mono(2, 0));
  // tau(2,3,1)(y^2 (x) x^2 y) = (2/3) x y^2
  CHECK(tau(2, 3, 1).apply(mono(2, 2), mono(3, 1)) == mono(3, 2, Rational(2, 3)));
  // full image rule: tau(y^p (x) x^{m-k} y^k) = [binom(l-j,k)/binom(m,k)] x^{l-j-k} y^{j+k}
  for (long p = 1; p <= 5; ++p)
    for (long l = 1; l <= 6; ++l)
      for (long j = 0; j <= std::min(p, l); ++j) {
        long m = l + p - 2 * j;
        if (m < 0 || p - j > m) continue;
        CGMap t = tau(p, l, j);
        for (long k = 0; k <= std::min(l - j, m); ++k) {
          BinaryForm img = t.apply(mono(p, p), mono(m, k));
          BinaryForm want = mono(l, j + k, Rational(binom(l - j, k), binom(m, k)));
          CHECK(img == want);
        }
      }
}

TEST_CASE("equivariance sweep") {
  struct Op {
    BinaryForm (*f)(const BinaryForm&);
  };
  const Op ops[] = {{&raise_op}, {&lower_op}, {&weight_op}};
  for (long p = 1; p <= 8; ++p)
    for (long l = 1; l <= 8; ++l)
      for (long j = 0; j <= std::min(p, l); ++j) {
        long m = l + p - 2 * j;
        if (m < 0 || p - j > m) continue;
        CGMap t = tau(p, l, j);
        for (const auto& op : ops)
          for (long r = 0; r <= p; ++r)
            for (long s = 0; s <= m; ++s) {
              BinaryForm u = mono(p, r), w = mono(m, s);
              BinaryForm lhs = t.apply(op.f(u), w) + t.apply(u, op.f(w));
              BinaryForm rhs = op.f(t.apply(u, w));
              CHECK(lhs == rhs);
            }
      }
}

TEST_CASE("nonvanishing pattern on highest weight pairs") {
  // phi(x^{p-j} y^j (x) x^n) != 0 exactly when i <= j <= p
  for (long p = 1; p <= 8; ++p)
    for (long n = 1; n <= 8; ++n)
      for (long i = 0; i <= std::min(p, n); ++i) {
        long l = p + n - 2 * i;
        if (l < 0) continue;
        for (long j = 0; j <= p; ++j) {
          BinaryForm img = transvectant(mono(p, j), mono(n, 0), i);
          if (j >= i)
            CHECK_FALSE(img.is_zero());
          else
            CHECK(img.is_zero());
        }
        // mirror with x and y exchanged
        for (long j = 0; j <= p; ++j) {
          BinaryForm img = transvectant(mono(p, p - j), mono(n, n), i);
          if (j >= i)
            CHECK_FALSE(img.is_zero());
          else
            CHECK(img.is_zero());
        }
      }
}

TEST_CASE("weight additivity") {
  for (long p = 1; p <= 5; ++p)
    for (long l = 1; l <= 5; ++l)
      for (long j = 0; j <= std::min(p, l); ++j) {
        long m = l + p - 2 * j;
        if (m < 0 || p - j > m) continue;
        CGMap t = tau(p, l, j);
        for (long r = 0; r <= p; ++r)
          for (long s = 0; s <= m; ++s) {
            BinaryForm img = t.image(r, s);
            if (img.is_zero()) continue;
            long want = (p - 2 * r) + (m - 2 * s);  // sum of weights
            long h = img.height();
            // a weight vector has a single nonzero coefficient
            long nonzero = 0;
            for (long k = 0; k <= img.degree(); ++k)
              if (!img.coeff(k).is_zero()) ++nonzero;
            CHECK(nonzero == 1);
            CHECK(img.degree() - 2 * h == want);
          }
      }
}

TEST_CASE("out of range indices rejected") {
  CHECK_THROWS(transvectant(mono(2, 0), mono(3, 0), 3));
  CHECK_THROWS(transvectant(mono(2, 0), mono(3, 0), -1));
  CHECK_THROWS(tau(2, 3, 3));
}
