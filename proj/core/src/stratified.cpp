#include "orbitcert/stratified.hpp"

#include <algorithm>
#include <set>

#include "orbitcert/linalg.hpp"

namespace orbitcert {

void StratifiedVector::set(long stratum, long degree, BinaryForm f) {
  if (f.degree() != degree) throw std::invalid_argument("StratifiedVector: degree mismatch");
  entries_.insert_or_assign({stratum, degree}, std::move(f));
}

const BinaryForm* StratifiedVector::find(long stratum, long degree) const {
  auto it = entries_.find({stratum, degree});
  return it == entries_.end() ? nullptr : &it->second;
}

long StratifiedVector::depth() const {
  long d = -1;
  for (const auto& [key, f] : entries_) d = std::max(d, key.first);
  return d;
}

std::vector<std::vector<long>> StratifiedVector::degree_sets() const {
  std::vector<std::vector<long>> out(static_cast<std::size_t>(depth() + 1));
  for (const auto& [key, f] : entries_) {
    if (key.first >= 0 && key.first <= depth())
      out[static_cast<std::size_t>(key.first)].push_back(key.second);
  }
  return out;
}

ModuleSpec StratifiedVector::induced_spec() const {
  std::map<long, long> mult;
  for (const auto& [key, f] : entries_) ++mult[key.second];
  std::vector<ModuleComponent> comps;
  bool has0 = false;
  for (const auto& [deg, m] : mult) {
    comps.push_back({deg, m});
    if (deg == 0) has0 = true;
  }
  return ModuleSpec(std::move(comps), has0);
}

ComponentMap StratifiedVector::component_map() const {
  ComponentMap out;
  for (const auto& [key, f] : entries_) out[key.second].push_back(f);  // map order: stratum asc
  return out;
}

std::vector<Rational> StratifiedVector::flatten() const {
  return orbitcert::flatten(induced_spec(), component_map());
}

std::vector<long> StratifiedVector::coordinate_strata() const {
  ModuleSpec spec = induced_spec();
  std::vector<long> strata(static_cast<std::size_t>(spec.dim()), -1);
  std::map<long, long> next_copy;
  for (const auto& [key, f] : entries_) {
    long copy = next_copy[key.second]++;
    long off = spec.offset(key.second, copy);
    for (long k = 0; k <= key.second; ++k) strata[static_cast<std::size_t>(off + k)] = key.first;
  }
  return strata;
}

std::vector<Violation> validate_stratified(const StratifiedVector& v) {
  std::vector<Violation> out;
  if (v.entries().empty()) {
    out.push_back({-1, -1, "empty vector"});
    return out;
  }
  std::set<long> strata;
  for (const auto& [key, f] : v.entries()) {
    auto [i, l] = key;
    strata.insert(i);
    if (i < 0) out.push_back({i, l, "negative stratum"});
    if (f.is_zero()) {
      out.push_back({i, l, "zero entry"});
      continue;
    }
    long h = f.height();
    if (h != i) {
      if (i == 0)
        out.push_back({i, l, "stratum-0 entry is not a highest weight vector"});
      else
        out.push_back({i, l, "height " + std::to_string(h) + " != stratum " + std::to_string(i)});
    }
  }
  long expect = 0;
  for (long s : strata) {
    if (s != expect) {
      out.push_back({s, -1, "strata not contiguous from 0"});
      break;
    }
    ++expect;
  }
  return out;
}

std::optional<StratifiedVector> stratify(const ModuleSpec& spec, const ComponentMap& raw,
                                         std::string* why) {
  auto fail = [&](const std::string& msg) -> std::optional<StratifiedVector> {
    if (why) *why = msg;
    return std::nullopt;
  };
  if (!is_generic(spec, raw)) return fail("vector is not generic");
  StratifiedVector out;
  for (const auto& c : spec.components()) {
    // reduce until the leading (height) positions are pairwise distinct; the
    // resulting height multiset is the canonical one (filtration jumps)
    std::vector<BinaryForm> work = raw.at(c.degree);
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t a = 0; a < work.size() && !again; ++a) {
        if (work[a].is_zero()) return fail("dependent components in degree " + std::to_string(c.degree));
        for (std::size_t b = a + 1; b < work.size() && !again; ++b) {
          if (work[b].is_zero()) return fail("dependent components in degree " + std::to_string(c.degree));
          long ha = work[a].height(), hb = work[b].height();
          if (ha != hb) continue;
          work[b] = work[b] - work[a].scaled(work[b].coeff(hb) / work[a].coeff(ha));
          again = true;
        }
      }
    }
    for (auto& f : work) {
      if (f.is_zero()) return fail("dependent components in degree " + std::to_string(c.degree));
      long h = f.height();
      out.set(h, c.degree, std::move(f));
    }
  }
  auto violations = validate_stratified(out);
  if (!violations.empty()) return fail("not in normal form: " + violations.front().rule);
  return out;
}

}  // namespace orbitcert
