#ifndef ORBITCERT_SIGMA_HPP
#define ORBITCERT_SIGMA_HPP

#include <optional>
#include <vector>

#include "orbitcert/linalg.hpp"
#include "orbitcert/module_spec.hpp"
#include "orbitcert/stratified.hpp"

namespace orbitcert {

/// Block-diagonal matrices of the standard sl2 triple acting on V.
struct Sl2Action {
  QMatrix A;  // raising
  QMatrix B;  // lowering
  QMatrix H;  // weight
};

Sl2Action realize_sl2(const ModuleSpec& spec);

/// One structural block of a sigma map: a tau-multiple sending the copy of
/// R_{source_degree} in stratum source_stratum into the copy of
/// R_{target_degree} in stratum target_stratum.
struct SigmaBlock {
  long target_stratum = 0;
  long target_degree = 0;
  long source_stratum = 0;
  long source_degree = 0;
  long j = 0;  // summation index; source_degree = target_degree + p - 2j
  Rational coefficient;
  bool correction = false;  // block induced by an admissible modification
};

/// An equivariant map sigma : R_p (x) V -> V realizing a copy of R_p,
/// materialized as one matrix per basis vector of R_p.
struct SigmaMap {
  long p = 0;
  std::vector<QMatrix> S;  // S[i] acts as sigma(x^{p-i} y^i (x) .)
  std::vector<SigmaBlock> blocks;
  std::vector<long> coordinate_strata;  // stratum label per coordinate of V

  const QMatrix& mu() const { return S.back(); }  // action of y^p
};

/// [rho(X), S_w] = S_{X.w} for X in {A, B, H} and all basis w of R_p.
bool check_equivariance(const SigmaMap& sigma, const ModuleSpec& spec);

/// All commutators vanish (within sigma, and across the pair when given) and
/// every S_w strictly lowers the stratum filtration.
bool check_abelian_nilpotent(const SigmaMap& sigma, const SigmaMap* other = nullptr);

/// S_{y^p} v = A v, the x^i y^{p-i} components annihilate the whole A-chain
/// of v, and mu^j v = A^j v up to the nilpotency depth.
bool check_tangency(const SigmaMap& sigma, const StratifiedVector& v);

}  // namespace orbitcert

#endif
