#include "orbitcert/transvectant.hpp"

namespace orbitcert {

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, long i) {
  long p = f.degree(), m = g.degree();
  if (i < 0 || i > p || i > m)
    throw std::invalid_argument("transvectant: index out of range");
  BinaryForm out(p + m - 2 * i);
  for (long r = 0; r <= i; ++r) {
    BinaryForm df = f;
    for (long t = 0; t < i - r; ++t) df = ddx(df);
    for (long t = 0; t < r; ++t) df = ddy(df);
    BinaryForm dg = g;
    for (long t = 0; t < r; ++t) dg = ddx(dg);
    for (long t = 0; t < i - r; ++t) dg = ddy(dg);
    Rational c(binom(i, r));
    if (r % 2 != 0) c = -c;
    out = out + (df * dg).scaled(c);
  }
  return out;
}

CGMap::CGMap(long p, long m, long l, std::vector<BinaryForm> table)
    : p_(p), m_(m), l_(l), table_(std::move(table)) {
  if (table_.size() != static_cast<std::size_t>((p_ + 1) * (m_ + 1)))
    throw std::invalid_argument("CGMap: bad table size");
}

BinaryForm CGMap::apply(const BinaryForm& w, const BinaryForm& u) const {
  if (w.degree() != p_ || u.degree() != m_)
    throw std::invalid_argument("CGMap: degree mismatch");
  BinaryForm out(l_);
  for (long r = 0; r <= p_; ++r) {
    if (w.coeff(r).is_zero()) continue;
    for (long s = 0; s <= m_; ++s) {
      if (u.coeff(s).is_zero()) continue;
      out = out + image(r, s).scaled(w.coeff(r) * u.coeff(s));
    }
  }
  return out;
}

QMatrix CGMap::matrix_for(const BinaryForm& w) const {
  if (w.degree() != p_) throw std::invalid_argument("CGMap: degree mismatch");
  QMatrix mat(static_cast<std::size_t>(l_ + 1), static_cast<std::size_t>(m_ + 1));
  for (long s = 0; s <= m_; ++s) {
    BinaryForm col(l_);
    for (long r = 0; r <= p_; ++r)
      if (!w.coeff(r).is_zero()) col = col + image(r, s).scaled(w.coeff(r));
    for (long k = 0; k <= l_; ++k)
      mat.at(static_cast<std::size_t>(k), static_cast<std::size_t>(s)) = col.coeff(k);
  }
  return mat;
}

CGMap tau(long p, long l, long j) {
  if (j < 0 || j > p || j > l)
    throw std::invalid_argument("tau: j out of range");
  long m = l + p - 2 * j;
  if (m < 0) throw std::invalid_argument("tau: source degree negative");
  long i = p - j;
  if (i > m) throw std::invalid_argument("tau: transvectant index exceeds source degree");
  // scale so that y^p (x) x^m maps exactly to x^{l-j} y^j
  BinaryForm probe = transvectant(BinaryForm::monomial(p, p), BinaryForm::monomial(m, 0), i);
  const Rational& c = probe.coeff(j);
  if (c.is_zero()) throw std::domain_error("tau: normalization impossible");
  Rational inv = Rational(1) / c;
  std::vector<BinaryForm> table;
  table.reserve(static_cast<std::size_t>((p + 1) * (m + 1)));
  for (long r = 0; r <= p; ++r)
    for (long s = 0; s <= m; ++s)
      table.push_back(
          transvectant(BinaryForm::monomial(p, r), BinaryForm::monomial(m, s), i).scaled(inv));
  return CGMap(p, m, l, std::move(table));
}

}  // namespace orbitcert
