#ifndef ORBITCERT_BINARY_FORM_HPP
#define ORBITCERT_BINARY_FORM_HPP

#include <vector>

#include "orbitcert/rational.hpp"

namespace orbitcert {

/// Binary form of degree n: sum of a_k x^{n-k} y^k, k = 0..n.
/// coeff(k) is a_k; the basis vector x^{n-k} y^k has weight n - 2k.
class BinaryForm {
public:
  explicit BinaryForm(long degree)
      : degree_(degree), coeffs_(static_cast<std::size_t>(degree) + 1) {
    if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
  }
  BinaryForm(long degree, std::vector<Rational> coeffs);

  static BinaryForm monomial(long degree, long k, Rational c = Rational(1));

  long degree() const { return degree_; }
  const Rational& coeff(long k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  void set_coeff(long k, Rational c) { coeffs_.at(static_cast<std::size_t>(k)) = std::move(c); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  /// Largest k with a_k != 0. Throws on the zero form.
  long height() const;

  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm scaled(const Rational& c) const;
  /// Polynomial product, degree adds.
  BinaryForm operator*(const BinaryForm& o) const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

private:
  long degree_;
  std::vector<Rational> coeffs_;
};

/// A = x d/dy, the raising operator: kills x^n, preserves degree.
BinaryForm raise_op(const BinaryForm& f);

/// B = y d/dx, the lowering operator.
BinaryForm lower_op(const BinaryForm& f);

/// [A, B]; scales the monomial x^{n-k} y^k by (n - 2k).
BinaryForm weight_op(const BinaryForm& f);

BinaryForm apply_raise(const BinaryForm& f, long times);

/// Partial derivatives (degree drops by one; derivative of a constant is the
/// zero form of degree 0).
BinaryForm ddx(const BinaryForm& f);
BinaryForm ddy(const BinaryForm& f);

}  // namespace orbitcert

#endif
