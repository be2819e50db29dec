#ifndef ORBITCERT_NORMALIZER_HPP
#define ORBITCERT_NORMALIZER_HPP

#include <map>
#include <vector>

#include "orbitcert/oracle.hpp"

namespace orbitcert {

enum class NormalizerTag { H_ONLY, H_TORUS, H_BOREL, H_HBAR };

const char* to_string(NormalizerTag tag);

/// Classification of the connected normalizer, with enough witness data to
/// reconstruct the extra symmetry.
struct NormalizerCase {
  NormalizerTag tag = NormalizerTag::H_ONLY;
  /// H_TORUS: per degree, the weights of the monomials spanning the component
  /// space (one per copy).
  std::map<long, std::vector<long>> weights;
  /// H_BOREL: per degree, the size of the detected top weight flag.
  std::map<long, long> flag_shape;
  /// H_HBAR: degrees whose components fill the full copy space.
  std::vector<long> full_degrees;
};

/// Span-based detection, invariant under mixing the copies of each degree:
/// commuting-partner case when every degree k carries k+1 spanning copies;
/// Borel case when some multiplicity is >= 2 and every component space is the
/// top weight flag; torus case when every component space is spanned by
/// monomials of not-all-zero weights. Requires a generic vector.
NormalizerCase classify_normalizer(const ModuleSpec& spec, const ComponentMap& components);

/// Copy-scalar matrix acting by the witness weight on each copy; tangent to
/// the orbit for torus-classified data.
QMatrix weight_compensator(const ModuleSpec& spec, const NormalizerCase& nc);

/// Torus module: diagonal torus of the given rank acting on coordinate lines
/// with the listed integer weights.
struct TorusModule {
  long rank = 1;
  std::vector<std::vector<long>> weights;  // one vector per coordinate
  std::vector<Rational> v;                 // coordinates of the vector
};

/// Lie algebra of matrices tangent to the torus orbit, sampled over
/// deterministic rational torus elements. When the orbit is dense (weight
/// matrix rank equals the dimension) the tangency conditions are vacuous and
/// the effective-torus dimension is returned with dense_orbit set.
OracleResult torus_stabilizer(const TorusModule& tm, long sample_budget = 64);

}  // namespace orbitcert

#endif
