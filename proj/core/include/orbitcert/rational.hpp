#ifndef ORBITCERT_RATIONAL_HPP
#define ORBITCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace orbitcert {

using Int = mpz_class;

/// Exact rational number, always kept in lowest terms with positive denominator.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(const Int& n) : q_(n) {}
  Rational(const Int& num, const Int& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  /// Parses "p/q" or "p".
  static Rational parse(const std::string& s);

  const Int num() const { return q_.get_num(); }
  const Int den() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  int sign() const { return sgn(q_); }

  /// Renders as "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class q_;
};

/// Generalized binomial coefficient: 0 when k < 0 or (n >= 0 and k > n);
/// for negative n the usual falling-factorial extension.
Int binom(long n, long k);

Int factorial(long n);

}  // namespace orbitcert

#endif
