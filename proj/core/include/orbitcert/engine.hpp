#ifndef ORBITCERT_ENGINE_HPP
#define ORBITCERT_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbitcert/sigma.hpp"
#include "orbitcert/stratified.hpp"

namespace orbitcert {

struct MissingDegree {
  long target_stratum = 0;  // s + 1
  long target_degree = 0;   // l
  long source_stratum = 0;  // s - j
  long required_degree = 0; // l + p - 2j
};

enum class StarFailure { none, invalid_vector, combinatorial, unsolvable, degenerate };

/// Outcome of testing whether the vector supports a copy of R_p.
struct StarReport {
  long p = 0;
  bool satisfied = false;
  std::vector<MissingDegree> missing_degrees;
  std::vector<SigmaBlock> coefficient_solution;  // corrections flagged
  StarFailure failure = StarFailure::none;
  std::string detail;
};

/// c_{s-j} = binom(s,j) binom(p,j) / binom(l+p-j+1, j); zero whenever the
/// numerator vanishes (j > p or j > s).
Rational closed_form_c(long s, long p, long l, long j);

/// Back-substitution solution of the triangular system
///   sum_j binom(j,m) c_j binom(l-s+j, j-m) / binom(l+p-2s+2j, j-m) = binom(s,m)
/// for m = s..0. A term whose denominator binomial vanishes corresponds to a
/// monomial that cannot exist; it is dropped when its (already solved)
/// coefficient is exactly zero and reported as a degenerate-denominator error
/// otherwise.
std::vector<Rational> solve_eq_star(long s, long p, long l);

/// Shape part of the condition: every entry v_{s+1,l} needs the degree
/// l+p-2j present in stratum s-j for 0 <= j <= min(p,s).
StarReport check_condition_combinatorial(const StratifiedVector& v, long p);

/// Full coefficient solve per target: leading multiples from the closed form,
/// sub-leading coefficients determined triangularly, admissible modifications
/// (lower-stratum same-degree corrections) recorded.
StarReport solve_coefficients(const StratifiedVector& v, long p);

struct Certificate {
  StarReport report;
  std::optional<SigmaMap> sigma;
};

/// Decides whether a copy of R_p embeds in the nilradical of the
/// orbit-preserving group, and builds the realizing map when it does.
/// p = 0 requires allow_p0 and is refused when the module is the
/// commuting-partner case (see normalizer.hpp).
Certificate decide_gu(const StratifiedVector& v, long p, bool allow_p0 = false);

/// All certified p in 0..p_max (0 included only when allow_p0).
std::vector<Certificate> enumerate_p(const StratifiedVector& v, long p_max,
                                     bool allow_p0 = false);

/// Sound search bound: any certified p embeds in some Hom(R_a, R_b) with a, b
/// degrees of V, so p <= 2*max degree - min degree.
long default_p_bound(const ModuleSpec& spec);

}  // namespace orbitcert

#endif
