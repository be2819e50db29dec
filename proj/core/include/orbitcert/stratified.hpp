#ifndef ORBITCERT_STRATIFIED_HPP
#define ORBITCERT_STRATIFIED_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitcert/module_spec.hpp"

namespace orbitcert {

struct Violation {
  long stratum = -1;
  long degree = -1;
  std::string rule;
};

/// The normal form of a vector: entries v_{i,l} indexed by (stratum i,
/// degree l), each of height exactly i, stratum 0 made of highest weight
/// vectors, strata contiguous from 0.
class StratifiedVector {
public:
  using Key = std::pair<long, long>;  // (stratum, degree)

  StratifiedVector() = default;
  explicit StratifiedVector(std::map<Key, BinaryForm> entries) : entries_(std::move(entries)) {}

  const std::map<Key, BinaryForm>& entries() const { return entries_; }
  void set(long stratum, long degree, BinaryForm f);
  const BinaryForm* find(long stratum, long degree) const;

  long depth() const;

  /// Degrees present in each stratum, index = stratum.
  std::vector<std::vector<long>> degree_sets() const;

  /// Module underlying the vector; copies of a repeated degree are ordered by
  /// stratum.
  ModuleSpec induced_spec() const;

  /// Component forms grouped by degree (copy order = stratum order).
  ComponentMap component_map() const;

  /// Coordinates of the vector in the induced module.
  std::vector<Rational> flatten() const;

  /// Stratum label of every coordinate of the induced module.
  std::vector<long> coordinate_strata() const;

private:
  std::map<Key, BinaryForm> entries_;
};

/// Empty iff the vector is in normal form. Violations are data, not errors.
std::vector<Violation> validate_stratified(const StratifiedVector& v);

/// Canonical stratification of a raw generic vector: echelonizes each
/// isotypic block by height (the height filtration jumps are canonical) and
/// assigns stratum = height. Fails, with a reason, when the result is not a
/// valid normal form (gap in the strata, non-generic input, ...).
std::optional<StratifiedVector> stratify(const ModuleSpec& spec, const ComponentMap& raw,
                                         std::string* why = nullptr);

}  // namespace orbitcert

#endif
