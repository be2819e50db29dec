#ifndef ORBITCERT_ANALYSIS_HPP
#define ORBITCERT_ANALYSIS_HPP

#include <optional>

#include "orbitcert/engine.hpp"
#include "orbitcert/normalizer.hpp"

namespace orbitcert {

struct AnalysisOptions {
  long p_max = -1;  // < 0: use default_p_bound
  bool allow_p0 = false;
  bool run_oracle = false;
  long sample_budget = 64;
};

struct AnalysisReport {
  bool generic = false;
  bool normal_form = false;
  std::vector<Violation> violations;
  std::optional<NormalizerCase> normalizer;
  std::vector<Certificate> certificates;
  bool checks_equivariance = true;
  bool checks_abelian_nilpotent = true;
  bool checks_tangency = true;
  std::optional<OracleResult> oracle;
  long p_max_used = 0;
};

/// Full pipeline on a vector already in normal form.
AnalysisReport analyze(const StratifiedVector& v, const AnalysisOptions& opt = {});

/// Pipeline on a raw vector: normalizes to the canonical stratification when
/// possible; otherwise only the oracle runs (when requested).
AnalysisReport analyze_raw(const ModuleSpec& spec, const ComponentMap& raw,
                           const AnalysisOptions& opt = {});

}  // namespace orbitcert

#endif
