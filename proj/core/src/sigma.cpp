#include "orbitcert/sigma.hpp"

namespace orbitcert {

Sl2Action realize_sl2(const ModuleSpec& spec) {
  long n = spec.dim();
  Sl2Action act{QMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n)),
                QMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n)),
                QMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n))};
  for (auto [deg, copy] : spec.copies()) {
    long off = spec.offset(deg, copy);
    for (long k = 0; k <= deg; ++k) {
      auto row = static_cast<std::size_t>(off + k);
      // A: coeff rule (A f)_k = (k+1) a_{k+1}
      if (k < deg) act.A.at(row, static_cast<std::size_t>(off + k + 1)) = Rational(k + 1);
      if (k > 0) act.B.at(row, static_cast<std::size_t>(off + k - 1)) = Rational(deg - k + 1);
      act.H.at(row, row) = Rational(deg - 2 * k);
    }
  }
  return act;
}

bool check_equivariance(const SigmaMap& sigma, const ModuleSpec& spec) {
  Sl2Action act = realize_sl2(spec);
  long p = sigma.p;
  if (sigma.S.size() != static_cast<std::size_t>(p + 1)) return false;
  struct Gen {
    const QMatrix* rho;
    BinaryForm (*op)(const BinaryForm&) ;
  };
  const Gen gens[] = {{&act.A, &raise_op}, {&act.B, &lower_op}, {&act.H, &weight_op}};
  for (const auto& g : gens) {
    for (long i = 0; i <= p; ++i) {
      QMatrix lhs = commutator(*g.rho, sigma.S[static_cast<std::size_t>(i)]);
      // X . (x^{p-i} y^i) expanded in the basis of R_p
      BinaryForm xw = g.op(BinaryForm::monomial(p, i));
      QMatrix rhs(lhs.rows(), lhs.cols());
      for (long r = 0; r <= p; ++r)
        if (!xw.coeff(r).is_zero())
          rhs = rhs + sigma.S[static_cast<std::size_t>(r)].scaled(xw.coeff(r));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

namespace {

bool strictly_lowering(const QMatrix& m, const std::vector<long>& strata) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero() && strata[r] <= strata[c]) return false;
  return true;
}

}  // namespace

bool check_abelian_nilpotent(const SigmaMap& sigma, const SigmaMap* other) {
  for (const auto& s : sigma.S)
    if (!strictly_lowering(s, sigma.coordinate_strata)) return false;
  for (std::size_t i = 0; i < sigma.S.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.S.size(); ++j)
      if (!commutator(sigma.S[i], sigma.S[j]).is_zero()) return false;
  if (other) {
    for (const auto& s : other->S)
      if (!strictly_lowering(s, other->coordinate_strata)) return false;
    for (std::size_t i = 0; i < other->S.size(); ++i)
      for (std::size_t j = i + 1; j < other->S.size(); ++j)
        if (!commutator(other->S[i], other->S[j]).is_zero()) return false;
    for (const auto& a : sigma.S)
      for (const auto& b : other->S)
        if (!commutator(a, b).is_zero()) return false;
  }
  return true;
}

bool check_tangency(const SigmaMap& sigma, const StratifiedVector& v) {
  ModuleSpec spec = v.induced_spec();
  Sl2Action act = realize_sl2(spec);
  std::vector<Rational> vec = v.flatten();
  auto is_zero_vec = [](const std::vector<Rational>& x) {
    for (const auto& c : x)
      if (!c.is_zero()) return false;
    return true;
  };
  // chase the A-chain: mu^j v must track A^j v, everything else annihilates it
  std::vector<Rational> achain = vec;
  std::vector<Rational> muchain = vec;
  long n = spec.dim();
  for (long depth = 0; depth <= n + 1; ++depth) {
    for (long i = 0; i + 1 <= sigma.p; ++i)
      if (!is_zero_vec(sigma.S[static_cast<std::size_t>(i)].apply(achain))) return false;
    std::vector<Rational> anext = act.A.apply(achain);
    std::vector<Rational> munext = sigma.mu().apply(muchain);
    if (munext != anext) return false;
    if (is_zero_vec(anext) && is_zero_vec(munext)) break;
    achain = std::move(anext);
    muchain = std::move(munext);
  }
  return true;
}

}  // namespace orbitcert
