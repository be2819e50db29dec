#include "orbitcert/oracle.hpp"

#include <memory>
#include <numeric>

namespace orbitcert {

Rational RationalSequence::at(std::size_t k) {
  while (cache_.size() <= k) {
    if (level_ == 1) {
      cache_.emplace_back(1);
    } else {
      for (long a = 1; a < level_; ++a) {
        if (std::gcd(a, level_) != 1) continue;
        cache_.emplace_back(a, level_);
        cache_.emplace_back(level_, a);
      }
    }
    ++level_;
  }
  return cache_[k];
}

Rational rational_pow(const Rational& q, long w) {
  if (w == 0) return Rational(1);
  Rational base = q;
  if (w < 0) {
    base = Rational(1) / q;
    w = -w;
  }
  Rational r(1);
  for (long i = 0; i < w; ++i) r *= base;
  return r;
}

SampleStream::SampleStream(const ModuleSpec& spec) : spec_(spec), act_(realize_sl2(spec)) {}

LieSample SampleStream::at(std::size_t i) {
  long n = spec_.dim();
  if (i == 0) return {QMatrix::identity(2), QMatrix::identity(static_cast<std::size_t>(n))};
  std::size_t k = 3 * (i - 1);
  Rational t1 = seq_.at(k), t2 = seq_.at(k + 1), q = seq_.at(k + 2);

  QMatrix u2 = QMatrix::identity(2), l2 = QMatrix::identity(2), d2(2, 2);
  u2.at(0, 1) = t1;
  l2.at(1, 0) = t2;
  d2.at(0, 0) = q;
  d2.at(1, 1) = Rational(1) / q;

  QMatrix ru = exp_nilpotent(act_.A.scaled(t1));
  QMatrix rl = exp_nilpotent(act_.B.scaled(t2));
  QMatrix rd(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (auto [deg, copy] : spec_.copies()) {
    long off = spec_.offset(deg, copy);
    for (long kk = 0; kk <= deg; ++kk)
      rd.at(static_cast<std::size_t>(off + kk), static_cast<std::size_t>(off + kk)) =
          rational_pow(q, deg - 2 * kk);
  }
  return {u2 * l2 * d2, ru * rl * rd};
}

namespace {

bool tangent_at(const std::vector<QMatrix>& gens, const std::vector<Rational>& u,
                const QMatrix& x) {
  std::size_t n = u.size();
  QMatrix span(n, gens.size() + 1);
  for (std::size_t c = 0; c < gens.size(); ++c) {
    auto tu = gens[c].apply(u);
    for (std::size_t r = 0; r < n; ++r) span.at(r, c) = tu[r];
  }
  auto xu = x.apply(u);
  for (std::size_t r = 0; r < n; ++r) span.at(r, gens.size()) = xu[r];
  QMatrix without(n, gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) without.at(r, c) = span.at(r, c);
  return rank(std::move(span)) == rank(std::move(without));
}

void add_sample_constraints(SolutionSpace& sols, const std::vector<QMatrix>& gens,
                            const std::vector<Rational>& u) {
  std::size_t n = u.size();
  QMatrix tmat(gens.size(), n);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    auto tu = gens[g].apply(u);
    for (std::size_t c = 0; c < n; ++c) tmat.at(g, c) = tu[c];
  }
  // functionals vanishing on the tangent span
  for (const auto& f : nullspace(std::move(tmat))) {
    std::vector<Rational> row(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (f[r].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (!u[c].is_zero()) row[r * n + c] = f[r] * u[c];
    }
    sols.add_constraint(row);
  }
}

std::vector<QMatrix> basis_matrices(const SolutionSpace& sols, std::size_t n) {
  std::vector<QMatrix> out;
  for (const auto& b : sols.basis()) {
    QMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = b[r * n + c];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

OracleResult sampled_tangency(const std::function<QMatrix(std::size_t)>& sample_at,
                              const std::vector<QMatrix>& tangent_generators,
                              const std::vector<Rational>& v, long sample_budget) {
  std::size_t n = v.size();
  SolutionSpace sols(n * n);
  OracleResult res;
  long prev = -1, stable = 0;
  std::size_t i = 0;
  while (static_cast<long>(i) < sample_budget) {
    auto u = sample_at(i).apply(v);
    add_sample_constraints(sols, tangent_generators, u);
    ++i;
    long d = static_cast<long>(sols.dimension());
    if (d == prev) {
      if (++stable >= 3) {
        // certify the basis on fresh out-of-sample elements
        auto basis = basis_matrices(sols, n);
        bool ok = true;
        for (std::size_t extra = 0; extra < 5 && ok; ++extra) {
          auto u2 = sample_at(i + extra).apply(v);
          for (const auto& x : basis)
            if (!tangent_at(tangent_generators, u2, x)) {
              ok = false;
              break;
            }
        }
        if (ok) {
          res.dimension = d;
          res.samples_used = static_cast<long>(i);
          res.stabilized = true;
          res.resample_ok = true;
          res.basis = std::move(basis);
          return res;
        }
        // fold the offending samples in and keep going
        for (std::size_t extra = 0; extra < 5 && static_cast<long>(i) < sample_budget; ++extra) {
          add_sample_constraints(sols, tangent_generators, sample_at(i).apply(v));
          ++i;
        }
        stable = 0;
        prev = static_cast<long>(sols.dimension());
        continue;
      }
    } else {
      stable = 0;
    }
    prev = d;
  }
  res.dimension = prev;
  res.samples_used = static_cast<long>(i);
  res.stabilized = false;
  res.resample_ok = false;
  res.basis = basis_matrices(sols, n);
  return res;
}

OracleResult sampled_stabilizer(const ModuleSpec& spec, const ComponentMap& raw,
                                long sample_budget) {
  if (sample_budget < 1) throw std::invalid_argument("sampled_stabilizer: budget must be >= 1");
  if (!is_generic(spec, raw))
    throw std::invalid_argument("sampled_stabilizer: vector is not generic");
  auto v = flatten(spec, raw);
  Sl2Action act = realize_sl2(spec);
  auto stream = std::make_shared<SampleStream>(spec);
  return sampled_tangency([stream](std::size_t i) { return stream->at(i).rho; },
                          {act.A, act.B, act.H}, v, sample_budget);
}

bool verify_extra_generator(const ModuleSpec& spec, const ComponentMap& raw, const QMatrix& x,
                            long sample_budget) {
  if (!is_generic(spec, raw))
    throw std::invalid_argument("verify_extra_generator: vector is not generic");
  auto v = flatten(spec, raw);
  Sl2Action act = realize_sl2(spec);
  std::vector<QMatrix> gens{act.A, act.B, act.H};
  OracleResult base = sampled_stabilizer(spec, raw, sample_budget);
  long upto = base.samples_used + 5;
  SampleStream stream(spec);
  for (long i = 0; i < upto; ++i)
    if (!tangent_at(gens, stream.at(static_cast<std::size_t>(i)).rho.apply(v), x)) return false;
  return true;
}

}  // namespace orbitcert
