#ifndef ORBITCERT_JSON_IO_HPP
#define ORBITCERT_JSON_IO_HPP

#include <string>

#include "orbitcert/analysis.hpp"
#include "orbitcert/tables.hpp"

namespace orbitcert {

// Wire formats. Rationals travel as "p/q" strings ("p" when q = 1).
//   module spec:       {"components":[{"degree":3,"multiplicity":1},...]}
//   stratified vector: {"strata":[{"stratum":0,"degree":3,"coeffs":["1","0","0","0"]},...]}
//   raw vector:        {"components":[{"degree":3,"coeffs":[...]},...]}, repeated
//                      degrees fill successive copies
//   torus module:      {"rank":2,"weights":[[1,0],[0,1]],"vector":["1","1"]}

ModuleSpec parse_module_spec(const std::string& json_text, bool allow_degree0 = false);
std::string to_json(const ModuleSpec& spec, bool pretty = false);

StratifiedVector parse_stratified(const std::string& json_text);
std::string to_json(const StratifiedVector& v, bool pretty = false);

ComponentMap parse_raw_components(const std::string& json_text);

TorusModule parse_torus_module(const std::string& json_text);

std::string to_json(const StarReport& report, bool pretty = false);
std::string to_json(const NormalizerCase& nc, bool pretty = false);
std::string to_json(const OracleResult& res, bool pretty = false, bool include_basis = true);
std::string to_json(const AnalysisReport& report, bool pretty = false);
std::string to_json(const std::vector<CheckResult>& checks, bool pretty = false);

}  // namespace orbitcert

#endif
