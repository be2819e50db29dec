#ifndef ORBITCERT_TABLES_HPP
#define ORBITCERT_TABLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbitcert/weyl.hpp"

namespace orbitcert {

/// Rank linear in the table parameter: coeff_n * n + offset.
struct RankExpr {
  long coeff_n = 0;
  long offset = 0;
  long eval(long n) const { return coeff_n * n + offset; }
};

struct GroupExpr {
  Family family = Family::A;
  RankExpr rank;
};

/// One weight term: fundamental index (linear in n), power multiplied by k or
/// fixed at 1.
struct WeightTerm {
  RankExpr index;
  bool times_k = false;
};

/// Factorization row: group dimension identity dim G = dim H + dim K - dim(H cap K).
struct Table1Row {
  std::string row;
  std::optional<std::pair<long, long>> range_n;  // inclusive; nullopt = fixed groups
  std::vector<GroupExpr> G, H, K, HK;
};

/// Branching row: restriction identities at the dimension level.
struct Table2Row {
  std::string row;
  std::optional<std::pair<long, long>> range_n;
  bool uses_k = true;
  GroupExpr G;
  std::vector<WeightTerm> V;
  std::vector<GroupExpr> H;                     // product factors
  std::vector<std::vector<WeightTerm>> VH;      // weight per factor
  GroupExpr K;
  bool vk_star = false;
  struct CartanSpec {
    std::vector<RankExpr> fixed_indices;
    std::optional<RankExpr> start, end;  // start/step are plain longs below
    long step = 2;
    long start_index = 0;
    long theta = 0;
    bool patterned = false;
  } VK;
  std::string VSK;  // theta1 | symC2 | symC3 | symCn1 | sf23 | sf4 | zero
};

struct Tables {
  long version = 0;
  std::vector<Table1Row> table1;
  std::vector<Table2Row> table2;
};

/// Parses the embedded versioned JSON resource.
const Tables& builtin_tables();

struct CheckResult {
  std::string row;
  long n = 0;
  long k = -1;
  bool ok = true;
  bool skipped = false;
  std::string detail;
};

/// dim G = dim H + dim K - dim(H cap K) at the given n.
CheckResult verify_table1(const Table1Row& row, long n);

/// (a) dim_G V = dim_H V|H; (b) the V|K dimension sum matches dim V (skipped
/// for star rows); (c) the V^K dimension matches its closed form, checked
/// against the trivial multiplicity of the V|K expansion when available.
CheckResult verify_table2(const Table2Row& row, long n, long k);

std::vector<CheckResult> run_table1(long n_max);
std::vector<CheckResult> run_table2(long n_max, long k_max);

/// Closed forms for the V^K column.
Int vsk_dimension(const std::string& form, long n, long k);

}  // namespace orbitcert

#endif
