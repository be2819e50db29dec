#include "orbitcert/json_io.hpp"

#include <json.hpp>

namespace orbitcert {

using nlohmann::json;

namespace {

json form_to_json(const BinaryForm& f) {
  json coeffs = json::array();
  for (long k = 0; k <= f.degree(); ++k) coeffs.push_back(f.coeff(k).str());
  return coeffs;
}

BinaryForm form_from_json(long degree, const json& coeffs) {
  if (static_cast<long>(coeffs.size()) != degree + 1)
    throw std::invalid_argument("coeffs length must be degree + 1");
  BinaryForm f(degree);
  for (long k = 0; k <= degree; ++k)
    f.set_coeff(k, Rational::parse(coeffs.at(static_cast<std::size_t>(k)).get<std::string>()));
  return f;
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) + "\n" : j.dump() + "\n"; }

const char* failure_name(StarFailure f) {
  switch (f) {
    case StarFailure::none: return "none";
    case StarFailure::invalid_vector: return "invalid_vector";
    case StarFailure::combinatorial: return "combinatorial";
    case StarFailure::unsolvable: return "unsolvable";
    case StarFailure::degenerate: return "degenerate";
  }
  return "?";
}

json matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ModuleSpec parse_module_spec(const std::string& text, bool allow_degree0) {
  auto j = json::parse(text);
  std::vector<ModuleComponent> comps;
  for (const auto& c : j.at("components"))
    comps.push_back({c.at("degree").get<long>(), c.value("multiplicity", 1L)});
  return ModuleSpec(std::move(comps), allow_degree0);
}

std::string to_json(const ModuleSpec& spec, bool pretty) {
  json comps = json::array();
  for (const auto& c : spec.components())
    comps.push_back({{"degree", c.degree}, {"multiplicity", c.multiplicity}});
  return dump(json{{"components", comps}}, pretty);
}

StratifiedVector parse_stratified(const std::string& text) {
  auto j = json::parse(text);
  StratifiedVector v;
  for (const auto& e : j.at("strata")) {
    long degree = e.at("degree").get<long>();
    v.set(e.at("stratum").get<long>(), degree, form_from_json(degree, e.at("coeffs")));
  }
  return v;
}

std::string to_json(const StratifiedVector& v, bool pretty) {
  json strata = json::array();
  for (const auto& [key, f] : v.entries())
    strata.push_back(
        {{"stratum", key.first}, {"degree", key.second}, {"coeffs", form_to_json(f)}});
  return dump(json{{"strata", strata}}, pretty);
}

ComponentMap parse_raw_components(const std::string& text) {
  auto j = json::parse(text);
  ComponentMap out;
  for (const auto& e : j.at("components")) {
    long degree = e.at("degree").get<long>();
    out[degree].push_back(form_from_json(degree, e.at("coeffs")));
  }
  return out;
}

TorusModule parse_torus_module(const std::string& text) {
  auto j = json::parse(text);
  TorusModule tm;
  tm.rank = j.at("rank").get<long>();
  for (const auto& w : j.at("weights")) tm.weights.push_back(w.get<std::vector<long>>());
  for (const auto& x : j.at("vector")) tm.v.push_back(Rational::parse(x.get<std::string>()));
  return tm;
}

std::string to_json(const StarReport& report, bool pretty) {
  json missing = json::array();
  for (const auto& m : report.missing_degrees)
    missing.push_back({{"target_stratum", m.target_stratum},
                       {"target_degree", m.target_degree},
                       {"source_stratum", m.source_stratum},
                       {"required_degree", m.required_degree}});
  json coeffs = json::array();
  for (const auto& b : report.coefficient_solution)
    coeffs.push_back({{"target_stratum", b.target_stratum},
                      {"target_degree", b.target_degree},
                      {"source_stratum", b.source_stratum},
                      {"source_degree", b.source_degree},
                      {"j", b.j},
                      {"t", b.coefficient.str()},
                      {"correction", b.correction}});
  json j{{"p", report.p},
         {"satisfied", report.satisfied},
         {"missing_degrees", missing},
         {"coefficient_solution", coeffs},
         {"failure", failure_name(report.failure)},
         {"detail", report.detail}};
  return dump(j, pretty);
}

std::string to_json(const NormalizerCase& nc, bool pretty) {
  json j{{"tag", to_string(nc.tag)}};
  if (nc.tag == NormalizerTag::H_TORUS) {
    json w = json::object();
    for (const auto& [deg, ws] : nc.weights) w[std::to_string(deg)] = ws;
    j["weights"] = w;
  } else if (nc.tag == NormalizerTag::H_BOREL) {
    json f = json::object();
    for (const auto& [deg, m] : nc.flag_shape) f[std::to_string(deg)] = m;
    j["flag_shape"] = f;
  } else if (nc.tag == NormalizerTag::H_HBAR) {
    j["full_degrees"] = nc.full_degrees;
  }
  return dump(j, pretty);
}

std::string to_json(const OracleResult& res, bool pretty, bool include_basis) {
  json j{{"dimension", res.dimension},
         {"samples", res.samples_used},
         {"stabilized", res.stabilized},
         {"resample_ok", res.resample_ok},
         {"dense_orbit", res.dense_orbit},
         {"tangency_applicable", res.tangency_applicable}};
  if (include_basis) {
    json basis = json::array();
    for (const auto& m : res.basis) basis.push_back(matrix_to_json(m));
    j["basis"] = basis;
  }
  return dump(j, pretty);
}

std::string to_json(const AnalysisReport& report, bool pretty) {
  json j;
  j["generic"] = report.generic;
  j["normal_form"] = report.normal_form;
  json viols = json::array();
  for (const auto& v : report.violations)
    viols.push_back({{"stratum", v.stratum}, {"degree", v.degree}, {"rule", v.rule}});
  j["violations"] = viols;
  if (report.normalizer)
    j["normalizer"] = json::parse(to_json(*report.normalizer));
  else
    j["normalizer"] = nullptr;
  json certs = json::array();
  for (const auto& c : report.certificates) {
    json e = json::parse(to_json(c.report));
    certs.push_back(std::move(e));
  }
  j["certified"] = certs;
  j["p_max"] = report.p_max_used;
  j["checks"] = {{"equivariance", report.checks_equivariance},
                 {"abelian_nilpotent", report.checks_abelian_nilpotent},
                 {"tangency", report.checks_tangency}};
  if (report.oracle)
    j["oracle"] = json::parse(to_json(*report.oracle, false, false));
  else
    j["oracle"] = nullptr;
  return dump(j, pretty);
}

std::string to_json(const std::vector<CheckResult>& checks, bool pretty) {
  json rows = json::array();
  bool all_ok = true;
  for (const auto& c : checks) {
    json e{{"row", c.row}, {"ok", c.ok}, {"skipped", c.skipped}, {"detail", c.detail}};
    if (c.n > 0) e["n"] = c.n;
    if (c.k >= 0) e["k"] = c.k;
    rows.push_back(std::move(e));
    all_ok = all_ok && (c.ok || c.skipped);
  }
  return dump(json{{"pass", all_ok}, {"rows", rows}}, pretty);
}

}  // namespace orbitcert
