#include "orbitcert/rational.hpp"

#include <ostream>

namespace orbitcert {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  return Rational(num, den);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Int binom(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Int num = 1;
  for (long i = 0; i < k; ++i) num *= Int(n - i);
  Int den = factorial(k);
  return num / den;  // exact: product of k consecutive integers
}

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace orbitcert
