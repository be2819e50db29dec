#include "orbitcert/binary_form.hpp"

namespace orbitcert {

BinaryForm::BinaryForm(long degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
  if (coeffs_.size() != static_cast<std::size_t>(degree) + 1)
    throw std::invalid_argument("BinaryForm: coefficient count does not match degree");
}

BinaryForm BinaryForm::monomial(long degree, long k, Rational c) {
  BinaryForm f(degree);
  f.set_coeff(k, std::move(c));
  return f;
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

long BinaryForm::height() const {
  for (long k = degree_; k >= 0; --k)
    if (!coeff(k).is_zero()) return k;
  throw std::domain_error("height of the zero form is undefined");
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("BinaryForm: degree mismatch");
  BinaryForm r(degree_);
  for (long k = 0; k <= degree_; ++k) r.set_coeff(k, coeff(k) + o.coeff(k));
  return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("BinaryForm: degree mismatch");
  BinaryForm r(degree_);
  for (long k = 0; k <= degree_; ++k) r.set_coeff(k, coeff(k) - o.coeff(k));
  return r;
}

BinaryForm BinaryForm::scaled(const Rational& c) const {
  BinaryForm r(degree_);
  for (long k = 0; k <= degree_; ++k) r.set_coeff(k, coeff(k) * c);
  return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  BinaryForm r(degree_ + o.degree_);
  for (long i = 0; i <= degree_; ++i) {
    if (coeff(i).is_zero()) continue;
    for (long j = 0; j <= o.degree_; ++j)
      if (!o.coeff(j).is_zero()) r.set_coeff(i + j, r.coeff(i + j) + coeff(i) * o.coeff(j));
  }
  return r;
}

BinaryForm raise_op(const BinaryForm& f) {
  long n = f.degree();
  BinaryForm r(n);
  for (long k = 0; k < n; ++k) r.set_coeff(k, f.coeff(k + 1) * Rational(k + 1));
  return r;
}

BinaryForm lower_op(const BinaryForm& f) {
  long n = f.degree();
  BinaryForm r(n);
  for (long k = 1; k <= n; ++k) r.set_coeff(k, f.coeff(k - 1) * Rational(n - k + 1));
  return r;
}

BinaryForm weight_op(const BinaryForm& f) {
  long n = f.degree();
  BinaryForm r(n);
  for (long k = 0; k <= n; ++k) r.set_coeff(k, f.coeff(k) * Rational(n - 2 * k));
  return r;
}

BinaryForm apply_raise(const BinaryForm& f, long times) {
  BinaryForm r = f;
  for (long i = 0; i < times; ++i) r = raise_op(r);
  return r;
}

BinaryForm ddx(const BinaryForm& f) {
  long n = f.degree();
  if (n == 0) return BinaryForm(0);
  BinaryForm r(n - 1);
  for (long k = 0; k < n; ++k) r.set_coeff(k, f.coeff(k) * Rational(n - k));
  return r;
}

BinaryForm ddy(const BinaryForm& f) {
  long n = f.degree();
  if (n == 0) return BinaryForm(0);
  BinaryForm r(n - 1);
  for (long k = 0; k < n; ++k) r.set_coeff(k, f.coeff(k + 1) * Rational(k + 1));
  return r;
}

}  // namespace orbitcert
