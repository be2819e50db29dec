#ifndef ORBITCERT_ORACLE_HPP
#define ORBITCERT_ORACLE_HPP

#include <functional>
#include <vector>

#include "orbitcert/sigma.hpp"

namespace orbitcert {

/// Deterministic enumeration of positive rationals:
/// 1, 1/2, 2, 1/3, 3, 2/3, 3/2, 1/4, 4, 3/4, 4/3, ...
class RationalSequence {
public:
  Rational at(std::size_t k);

private:
  std::vector<Rational> cache_;
  long level_ = 1;
};

Rational rational_pow(const Rational& q, long w);

/// Group element of SL2 with exact entries and its representation matrix.
struct LieSample {
  QMatrix g2;   // 2 x 2, determinant 1
  QMatrix rho;  // dim V x dim V
};

/// Deterministic Zariski-dense samples: identity, then products
/// u(t) l(t') diag(q, 1/q) with parameters from the fixed sequence.
class SampleStream {
public:
  explicit SampleStream(const ModuleSpec& spec);
  LieSample at(std::size_t i);

private:
  ModuleSpec spec_;
  Sl2Action act_;
  RationalSequence seq_;
};

struct OracleResult {
  long dimension = 0;
  long samples_used = 0;
  bool stabilized = false;
  bool resample_ok = false;
  bool dense_orbit = false;
  /// False when the tangency characterization does not apply (dense orbit or
  /// an isolated weight direction); the dimension then comes from the
  /// structure theorem instead of sampling.
  bool tangency_applicable = true;
  std::vector<QMatrix> basis;
};

/// Core loop: intersect the tangency constraints X(g_i v) in span{T g_i v}
/// over deterministic samples until the solution space holds still for three
/// extra samples, then certify the reported basis on five fresh samples.
OracleResult sampled_tangency(const std::function<QMatrix(std::size_t)>& sample_at,
                              const std::vector<QMatrix>& tangent_generators,
                              const std::vector<Rational>& v, long sample_budget);

/// Lie algebra of all matrices tangent to the SL2-orbit of the (raw, generic)
/// vector. Contains the sl2 image and every certified nilradical copy.
OracleResult sampled_stabilizer(const ModuleSpec& spec, const ComponentMap& raw,
                                long sample_budget = 64);

/// Tangency of a single candidate matrix over the oracle's stabilized sample
/// set (plus the resampling tail).
bool verify_extra_generator(const ModuleSpec& spec, const ComponentMap& raw, const QMatrix& x,
                            long sample_budget = 64);

}  // namespace orbitcert

#endif
