#include "orbitcert/weyl.hpp"

#include <set>
#include <stdexcept>

namespace orbitcert {

Family family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "G" || s == "G2") return Family::G2;
  throw std::invalid_argument("unknown family: " + s);
}

const char* to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
  }
  return "?";
}

bool admissible(const SimpleType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 3;
    case Family::G2: return t.rank == 2;
  }
  return false;
}

HighestWeight HighestWeight::fundamental(long rank, long index, long power) {
  if (index < 1 || index > rank) throw std::invalid_argument("fundamental index out of range");
  HighestWeight w;
  w.coeffs.assign(static_cast<std::size_t>(rank), 0);
  w.coeffs[static_cast<std::size_t>(index - 1)] = power;
  return w;
}

HighestWeight HighestWeight::zero(long rank) {
  HighestWeight w;
  w.coeffs.assign(static_cast<std::size_t>(rank), 0);
  return w;
}

HighestWeight HighestWeight::operator+(const HighestWeight& o) const {
  if (coeffs.size() != o.coeffs.size()) throw std::invalid_argument("weight rank mismatch");
  HighestWeight w = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) w.coeffs[i] += o.coeffs[i];
  return w;
}

HighestWeight HighestWeight::scaled(long k) const {
  HighestWeight w = *this;
  for (auto& c : w.coeffs) c *= k;
  return w;
}

std::vector<std::vector<long>> cartan_matrix(const SimpleType& t) {
  if (!admissible(t)) throw std::invalid_argument("inadmissible simple type");
  long n = t.rank;
  std::vector<std::vector<long>> a(static_cast<std::size_t>(n),
                                   std::vector<long>(static_cast<std::size_t>(n), 0));
  auto at = [&](long i, long j) -> long& {
    return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  for (long i = 0; i < n; ++i) at(i, i) = 2;
  switch (t.family) {
    case Family::A:
      for (long i = 0; i + 1 < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      break;
    case Family::B:  // alpha_n short
      for (long i = 0; i + 1 < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      at(n - 2, n - 1) = -2;
      break;
    case Family::C:  // alpha_n long
      for (long i = 0; i + 1 < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      at(n - 1, n - 2) = -2;
      break;
    case Family::D:
      for (long i = 0; i + 2 < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      at(n - 3, n - 1) = at(n - 1, n - 3) = -1;
      break;
    case Family::G2:  // alpha_2 short (Dynkin ordering)
      at(0, 1) = -3;
      at(1, 0) = -1;
      break;
  }
  return a;
}

std::vector<std::vector<long>> positive_roots(const SimpleType& t) {
  auto a = cartan_matrix(t);
  long n = t.rank;
  std::set<std::vector<long>> roots;
  std::vector<std::vector<long>> frontier;
  for (long i = 0; i < n; ++i) {
    std::vector<long> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    roots.insert(e);
    frontier.push_back(std::move(e));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& beta : frontier) {
      for (long i = 0; i < n; ++i) {
        long pairing = 0;  // <beta, alpha_i^vee>
        for (long j = 0; j < n; ++j)
          pairing += beta[static_cast<std::size_t>(j)] *
                     a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        auto refl = beta;
        refl[static_cast<std::size_t>(i)] -= pairing;
        if (roots.insert(refl).second) next.push_back(std::move(refl));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<long>> pos;
  for (const auto& r : roots) {
    bool nonneg = true, nonzero = false;
    for (long c : r) {
      if (c < 0) nonneg = false;
      if (c != 0) nonzero = true;
    }
    if (nonneg && nonzero) pos.push_back(r);
  }
  return pos;
}

namespace {

// d_i with d_j a_ij = d_i a_ji ((alpha_i, alpha_j) symmetric), normalized to
// integers
std::vector<Rational> symmetrizer(const std::vector<std::vector<long>>& a) {
  std::size_t n = a.size();
  std::vector<Rational> d(n);
  d[0] = Rational(1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (a[i][j] == 0 || d[i].is_zero() || !d[j].is_zero()) continue;
        d[j] = d[i] * Rational(a[j][i]) / Rational(a[i][j]);
        changed = true;
      }
  }
  return d;
}

}  // namespace

Int weyl_dim(const SimpleType& t, const HighestWeight& lambda) {
  if (!admissible(t)) throw std::invalid_argument("inadmissible simple type");
  if (static_cast<long>(lambda.coeffs.size()) != t.rank)
    throw std::invalid_argument("weight rank mismatch");
  for (long c : lambda.coeffs)
    if (c < 0) throw std::invalid_argument("weight must be dominant");
  auto a = cartan_matrix(t);
  auto pos = positive_roots(t);
  auto d = symmetrizer(a);
  Rational num(1), den(1);
  for (const auto& r : pos) {
    Rational up(0), down(0);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (r[i] == 0) continue;
      Rational ri(r[i]);
      up += ri * Rational(lambda.coeffs[i] + 1) * d[i];
      down += ri * d[i];
    }
    num *= up;
    den *= down;
  }
  Rational dim = num / den;
  if (dim.den() != 1 || dim.sign() <= 0)
    throw std::logic_error("weyl_dim: non-integer result");
  return dim.num();
}

Int group_dim(const SimpleType& t) {
  return Int(2 * static_cast<long>(positive_roots(t).size()) + t.rank);
}

Int group_dim_closed(Family f, long rank) {
  switch (f) {
    case Family::A: return Int(rank * (rank + 2));
    case Family::B:
    case Family::C: return Int(rank * (2 * rank + 1));
    case Family::D: return Int(rank * (2 * rank - 1));
    case Family::G2: return Int(14);
  }
  throw std::invalid_argument("group_dim_closed: unknown family");
}

Int dim_cartan_power(const SimpleType& t, const std::vector<HighestWeight>& summands,
                     long trivial_dims, long k) {
  if (k < 0) throw std::invalid_argument("dim_cartan_power: negative power");
  Int total = 0;
  std::vector<long> degrees(summands.size(), 0);
  // enumerate all compositions of <= k over the summands; remainder goes to
  // the trivial part
  auto rec = [&](auto&& self, std::size_t idx, long remaining) -> void {
    if (idx == summands.size()) {
      HighestWeight lam = HighestWeight::zero(t.rank);
      for (std::size_t i = 0; i < summands.size(); ++i)
        lam = lam + summands[i].scaled(degrees[i]);
      Int mult = dim_cartan_power_trivial(trivial_dims, remaining);
      if (mult != 0) total += mult * weyl_dim(t, lam);
      return;
    }
    for (long take = 0; take <= remaining; ++take) {
      degrees[idx] = take;
      self(self, idx + 1, remaining - take);
    }
    degrees[idx] = 0;
  };
  rec(rec, 0, k);
  return total;
}

Int dim_cartan_power_trivial(long trivial_dims, long k) {
  if (k == 0) return 1;
  if (trivial_dims == 0) return 0;
  return binom(k + trivial_dims - 1, trivial_dims - 1);
}

}  // namespace orbitcert
