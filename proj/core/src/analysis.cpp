#include "orbitcert/analysis.hpp"

namespace orbitcert {

AnalysisReport analyze(const StratifiedVector& v, const AnalysisOptions& opt) {
  AnalysisReport rep;
  rep.violations = validate_stratified(v);
  rep.normal_form = rep.violations.empty();
  if (!rep.normal_form) return rep;

  ModuleSpec spec = v.induced_spec();
  ComponentMap comps = v.component_map();
  rep.generic = is_generic(spec, comps);  // normal form is triangular, so true
  rep.normalizer = classify_normalizer(spec, comps);

  rep.p_max_used = opt.p_max >= 0 ? opt.p_max : default_p_bound(spec);
  rep.certificates = enumerate_p(v, rep.p_max_used, opt.allow_p0);

  const SigmaMap* prev = nullptr;
  for (const auto& cert : rep.certificates) {
    if (!cert.sigma) continue;
    rep.checks_equivariance = rep.checks_equivariance && check_equivariance(*cert.sigma, spec);
    rep.checks_abelian_nilpotent =
        rep.checks_abelian_nilpotent && check_abelian_nilpotent(*cert.sigma, prev);
    rep.checks_tangency = rep.checks_tangency && check_tangency(*cert.sigma, v);
    prev = &*cert.sigma;
  }

  if (opt.run_oracle) rep.oracle = sampled_stabilizer(spec, comps, opt.sample_budget);
  return rep;
}

AnalysisReport analyze_raw(const ModuleSpec& spec, const ComponentMap& raw,
                           const AnalysisOptions& opt) {
  std::string why;
  if (auto sv = stratify(spec, raw, &why)) return analyze(*sv, opt);
  AnalysisReport rep;
  rep.normal_form = false;
  rep.violations.push_back({-1, -1, why});
  rep.generic = is_generic(spec, raw);
  if (opt.run_oracle && rep.generic)
    rep.oracle = sampled_stabilizer(spec, raw, opt.sample_budget);
  return rep;
}

}  // namespace orbitcert
