#include "orbitcert/engine.hpp"

#include <algorithm>
#include <map>

#include "orbitcert/normalizer.hpp"
#include "orbitcert/transvectant.hpp"

namespace orbitcert {

Rational closed_form_c(long s, long p, long l, long j) {
  if (j < 0) throw std::invalid_argument("closed_form_c: j out of range");
  // beyond min(p, s) the numerator vanishes identically
  Int num = binom(s, j) * binom(p, j);
  if (num == 0) return Rational(0);
  Int den = binom(l + p - j + 1, j);
  if (den == 0) throw std::domain_error("closed_form_c: degenerate denominator");
  return Rational(num, den);
}

std::vector<Rational> solve_eq_star(long s, long p, long l) {
  if (s < 0 || p < 1) throw std::invalid_argument("solve_eq_star: require s >= 0, p >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(s) + 1);
  for (long m = s; m >= 0; --m) {
    Rational rhs(binom(s, m));
    for (long j = m + 1; j <= s; ++j) {
      long d = l + p - 2 * s + 2 * j;  // degree of the stratum-j source
      long k = j - m;
      Int den = binom(d, k);
      const Rational& cj = c[static_cast<std::size_t>(j)];
      if (den == 0) {
        // the term would need the monomial x^{d-k} y^k with k > d >= 0;
        // no such vector exists, and the solved coefficient is zero there
        if (!cj.is_zero())
          throw std::domain_error("solve_eq_star: degenerate denominator at nonzero coefficient");
        continue;
      }
      if (cj.is_zero()) continue;
      rhs -= Rational(binom(j, m)) * cj * Rational(binom(l - s + j, k), den);
    }
    c[static_cast<std::size_t>(m)] = rhs;
  }
  return c;
}

namespace {

StarReport base_report(long p) {
  StarReport r;
  r.p = p;
  return r;
}

}  // namespace

StarReport check_condition_combinatorial(const StratifiedVector& v, long p) {
  StarReport rep = base_report(p);
  if (!validate_stratified(v).empty()) {
    rep.failure = StarFailure::invalid_vector;
    rep.detail = "vector is not in normal form";
    return rep;
  }
  if (v.depth() < 1) {
    // only highest weight components: nothing for the radical to move
    rep.failure = StarFailure::combinatorial;
    rep.detail = "no strata above 0";
    return rep;
  }
  for (const auto& [key, form] : v.entries()) {
    auto [sp1, l] = key;
    if (sp1 == 0) continue;
    long s = sp1 - 1;
    for (long j = 0; j <= std::min(p, s); ++j) {
      long need = l + p - 2 * j;
      if (need < 0 || !v.find(s - j, need))
        rep.missing_degrees.push_back({sp1, l, s - j, need});
    }
  }
  if (!rep.missing_degrees.empty()) {
    rep.failure = StarFailure::combinatorial;
    rep.detail = "required degrees missing";
    return rep;
  }
  rep.satisfied = true;
  return rep;
}

StarReport solve_coefficients(const StratifiedVector& v, long p) {
  StarReport rep = check_condition_combinatorial(v, p);
  if (!rep.satisfied) return rep;
  rep.satisfied = false;

  for (const auto& [key, target] : v.entries()) {
    auto [sp1, l] = key;
    if (sp1 == 0) continue;
    long s = sp1 - 1;
    long jmax = std::min(p, s);
    const Rational a_lead = target.coeff(s + 1);

    // leading multiples from the closed form
    std::vector<Rational> t(static_cast<std::size_t>(jmax) + 1);
    std::vector<CGMap> taus;
    taus.reserve(static_cast<std::size_t>(jmax) + 1);
    for (long j = 0; j <= jmax; ++j) {
      long m = l + p - 2 * j;
      const BinaryForm& src = *v.find(s - j, m);
      t[static_cast<std::size_t>(j)] =
          closed_form_c(s, p, l, j) * Rational(s + 1) * a_lead / src.coeff(s - j);
      taus.push_back(tau(p, l, j));
    }

    // unknowns: sub-leading coefficients of the modified sources v'_{s-j}
    std::vector<std::pair<long, long>> unknowns;  // (j, coefficient index)
    for (long j = 0; j <= jmax; ++j)
      for (long mm = 0; mm < s - j; ++mm) unknowns.emplace_back(j, mm);

    const BinaryForm yp = BinaryForm::monomial(p, p);
    std::size_t n_eq = static_cast<std::size_t>(s + 1) * static_cast<std::size_t>(l + 1);
    QMatrix mat(n_eq, unknowns.size());
    std::vector<Rational> rhs(n_eq);
    for (long r = 0; r <= s; ++r) {
      BinaryForm target_img = apply_raise(target, r + 1);
      BinaryForm lead_img(l);
      for (long j = 0; j <= jmax; ++j) {
        long m = l + p - 2 * j;
        BinaryForm lead = BinaryForm::monomial(m, s - j, v.find(s - j, m)->coeff(s - j));
        lead_img = lead_img +
                   taus[static_cast<std::size_t>(j)].apply(yp, apply_raise(lead, r))
                       .scaled(t[static_cast<std::size_t>(j)]);
      }
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        auto [j, mm] = unknowns[u];
        long m = l + p - 2 * j;
        BinaryForm img = taus[static_cast<std::size_t>(j)]
                             .apply(yp, apply_raise(BinaryForm::monomial(m, mm), r))
                             .scaled(t[static_cast<std::size_t>(j)]);
        for (long k = 0; k <= l; ++k)
          mat.at(static_cast<std::size_t>(r) * static_cast<std::size_t>(l + 1) +
                     static_cast<std::size_t>(k),
                 u) = img.coeff(k);
      }
      for (long k = 0; k <= l; ++k)
        rhs[static_cast<std::size_t>(r) * static_cast<std::size_t>(l + 1) +
            static_cast<std::size_t>(k)] = target_img.coeff(k) - lead_img.coeff(k);
    }

    auto sol = solve(mat, rhs);
    if (!sol) {
      rep.failure = StarFailure::unsolvable;
      rep.detail = "coefficient system inconsistent at target stratum " + std::to_string(sp1) +
                   ", degree " + std::to_string(l);
      return rep;
    }
    if (!sol->unique && !unknowns.empty()) {
      rep.failure = StarFailure::degenerate;
      rep.detail = "sub-leading coefficients not uniquely determined at target stratum " +
                   std::to_string(sp1) + ", degree " + std::to_string(l);
      return rep;
    }

    // caller's sources must match the required vectors up to admissible
    // modification by lower-stratum entries of the same degree
    for (long j = 0; j <= jmax; ++j) {
      long m = l + p - 2 * j;
      const BinaryForm& given = *v.find(s - j, m);
      BinaryForm required = BinaryForm::monomial(m, s - j, given.coeff(s - j));
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        if (unknowns[u].first == j) required.set_coeff(unknowns[u].second, sol->x[u]);
      BinaryForm diff = required - given;
      std::vector<const BinaryForm*> lowers;
      std::vector<long> lower_strata;
      for (long i = 0; i < s - j; ++i)
        if (const BinaryForm* low = v.find(i, m)) {
          lowers.push_back(low);
          lower_strata.push_back(i);
        }
      rep.coefficient_solution.push_back(
          {sp1, l, s - j, m, j, t[static_cast<std::size_t>(j)], false});
      if (diff.is_zero()) continue;
      QMatrix span(static_cast<std::size_t>(m + 1), lowers.size());
      for (std::size_t col = 0; col < lowers.size(); ++col)
        for (long k = 0; k <= m; ++k)
          span.at(static_cast<std::size_t>(k), col) = lowers[col]->coeff(k);
      std::vector<Rational> dv(static_cast<std::size_t>(m + 1));
      for (long k = 0; k <= m; ++k) dv[static_cast<std::size_t>(k)] = diff.coeff(k);
      auto mod = solve(span, dv);
      if (!mod) {
        rep.failure = StarFailure::unsolvable;
        rep.detail = "coefficients disagree with the unique solution and no admissible "
                     "modification closes the gap at target stratum " +
                     std::to_string(sp1) + ", degree " + std::to_string(l);
        rep.coefficient_solution.clear();
        return rep;
      }
      for (std::size_t col = 0; col < lowers.size(); ++col)
        if (!mod->x[col].is_zero())
          rep.coefficient_solution.push_back({sp1, l, lower_strata[col], m, j,
                                              t[static_cast<std::size_t>(j)] * mod->x[col],
                                              true});
    }
  }
  rep.satisfied = true;
  return rep;
}

namespace {

SigmaMap assemble_sigma(const StratifiedVector& v, long p,
                        const std::vector<SigmaBlock>& blocks) {
  ModuleSpec spec = v.induced_spec();
  long n = spec.dim();
  SigmaMap sigma;
  sigma.p = p;
  sigma.blocks = blocks;
  sigma.coordinate_strata = v.coordinate_strata();
  sigma.S.assign(static_cast<std::size_t>(p + 1),
                 QMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n)));

  // copy index of (stratum, degree): same-degree copies are ordered by stratum
  auto copy_index = [&](long stratum, long degree) {
    long idx = 0;
    for (const auto& [key, f] : v.entries())
      if (key.second == degree && key.first < stratum) ++idx;
    return idx;
  };

  for (const auto& b : blocks) {
    CGMap map = tau(p, b.target_degree, b.j);
    long roff = spec.offset(b.target_degree, copy_index(b.target_stratum, b.target_degree));
    long coff = spec.offset(b.source_degree, copy_index(b.source_stratum, b.source_degree));
    for (long i = 0; i <= p; ++i) {
      QMatrix blockm = map.matrix_for(BinaryForm::monomial(p, i));
      for (long r = 0; r <= b.target_degree; ++r)
        for (long c = 0; c <= b.source_degree; ++c) {
          const Rational& x = blockm.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
          if (x.is_zero()) continue;
          auto& cell = sigma.S[static_cast<std::size_t>(i)].at(
              static_cast<std::size_t>(roff + r), static_cast<std::size_t>(coff + c));
          cell += x * b.coefficient;
        }
    }
  }
  return sigma;
}

}  // namespace

Certificate decide_gu(const StratifiedVector& v, long p, bool allow_p0) {
  if (p < 0) throw std::invalid_argument("decide_gu: p must be nonnegative");
  Certificate cert;
  if (p == 0) {
    if (!allow_p0) {
      cert.report = base_report(0);
      cert.report.failure = StarFailure::invalid_vector;
      cert.report.detail = "p = 0 needs the explicit flag";
      return cert;
    }
    auto violations = validate_stratified(v);
    if (violations.empty()) {
      NormalizerCase nc = classify_normalizer(v.induced_spec(), v.component_map());
      if (nc.tag == NormalizerTag::H_HBAR) {
        cert.report = base_report(0);
        cert.report.failure = StarFailure::combinatorial;
        cert.report.detail = "commuting-partner module: the trivial summand is excluded";
        return cert;
      }
    }
  }
  cert.report = solve_coefficients(v, p);
  if (cert.report.satisfied)
    cert.sigma = assemble_sigma(v, p, cert.report.coefficient_solution);
  return cert;
}

std::vector<Certificate> enumerate_p(const StratifiedVector& v, long p_max, bool allow_p0) {
  std::vector<Certificate> out;
  for (long p = allow_p0 ? 0 : 1; p <= p_max; ++p) {
    Certificate c = decide_gu(v, p, allow_p0);
    if (c.report.satisfied) out.push_back(std::move(c));
  }
  return out;
}

long default_p_bound(const ModuleSpec& spec) {
  long lo = spec.components().front().degree;
  long hi = spec.components().back().degree;
  return 2 * hi - lo;
}

}  // namespace orbitcert
