#ifndef ORBITCERT_TRANSVECTANT_HPP
#define ORBITCERT_TRANSVECTANT_HPP

#include <vector>

#include "orbitcert/binary_form.hpp"
#include "orbitcert/linalg.hpp"

namespace orbitcert {

/// i-th transvectant of f in R_p and g in R_m, landing in R_{p+m-2i}:
///   sum_{r=0..i} (-1)^r binom(i,r) (d^i f / dx^{i-r} dy^r) (d^i g / dx^r dy^{i-r})
/// Bilinear and equivariant. Requires 0 <= i <= min(p, m).
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, long i);

/// Equivariant map R_p (x) R_m -> R_l, materialized on the monomial bases.
class CGMap {
public:
  CGMap(long p, long m, long l, std::vector<BinaryForm> table);

  long p() const { return p_; }
  long source_degree() const { return m_; }
  long target_degree() const { return l_; }

  /// Image of x^{p-r} y^r (x) x^{m-s} y^s.
  const BinaryForm& image(long r, long s) const {
    return table_[static_cast<std::size_t>(r) * static_cast<std::size_t>(m_ + 1) +
                  static_cast<std::size_t>(s)];
  }

  BinaryForm apply(const BinaryForm& w, const BinaryForm& u) const;

  /// (l+1) x (m+1) matrix of u -> map(w (x) u) for a fixed w in R_p.
  QMatrix matrix_for(const BinaryForm& w) const;

private:
  long p_, m_, l_;
  std::vector<BinaryForm> table_;
};

/// The unique equivariant map R_p (x) R_{l+p-2j} -> R_l normalized so that
/// y^p (x) x^{l+p-2j} maps to x^{l-j} y^j; realized by rescaling the
/// transvectant of index p - j. Requires 0 <= j <= min(p, l), l+p-2j >= 0.
CGMap tau(long p, long l, long j);

}  // namespace orbitcert

#endif
