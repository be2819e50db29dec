#include "orbitcert/normalizer.hpp"

#include <set>

namespace orbitcert {

const char* to_string(NormalizerTag tag) {
  switch (tag) {
    case NormalizerTag::H_ONLY: return "H_ONLY";
    case NormalizerTag::H_TORUS: return "H_TORUS";
    case NormalizerTag::H_BOREL: return "H_BOREL";
    case NormalizerTag::H_HBAR: return "H_HBAR";
  }
  return "?";
}

namespace {

QMatrix component_matrix(long degree, const std::vector<BinaryForm>& forms) {
  QMatrix m(forms.size(), static_cast<std::size_t>(degree) + 1);
  for (std::size_t j = 0; j < forms.size(); ++j)
    for (long k = 0; k <= degree; ++k)
      m.at(j, static_cast<std::size_t>(k)) = forms[j].coeff(k);
  return m;
}

bool contains_monomial(long degree, const std::vector<BinaryForm>& forms, long k) {
  QMatrix span(static_cast<std::size_t>(degree) + 1, forms.size());
  for (std::size_t j = 0; j < forms.size(); ++j)
    for (long r = 0; r <= degree; ++r) span.at(static_cast<std::size_t>(r), j) = forms[j].coeff(r);
  std::vector<Rational> mono(static_cast<std::size_t>(degree) + 1);
  mono[static_cast<std::size_t>(k)] = 1;
  return solve(std::move(span), std::move(mono)).has_value();
}

}  // namespace

NormalizerCase classify_normalizer(const ModuleSpec& spec, const ComponentMap& components) {
  if (!is_generic(spec, components))
    throw std::invalid_argument("classify_normalizer: vector is not generic");

  NormalizerCase out;

  // commuting-partner case: the identity tensor, every copy space full
  bool all_full = true;
  for (const auto& c : spec.components())
    if (c.multiplicity != c.degree + 1) {
      all_full = false;
      break;
    }
  if (all_full) {
    out.tag = NormalizerTag::H_HBAR;
    for (const auto& c : spec.components()) out.full_degrees.push_back(c.degree);
    return out;
  }

  // Borel case: component spans are the top weight flags, some of size >= 2
  bool any_multi = false, all_flags = true;
  for (const auto& c : spec.components()) {
    const auto& forms = components.at(c.degree);
    if (c.multiplicity >= 2) any_multi = true;
    for (const auto& f : forms)
      if (f.is_zero() || f.height() > c.multiplicity - 1) {
        all_flags = false;
        break;
      }
    if (!all_flags) break;
  }
  if (any_multi && all_flags) {
    out.tag = NormalizerTag::H_BOREL;
    for (const auto& c : spec.components()) out.flag_shape[c.degree] = c.multiplicity;
    return out;
  }

  // torus case: each component span is a sum of weight lines
  bool all_monomial = true;
  bool some_nonzero_weight = false;
  std::map<long, std::vector<long>> weights;
  for (const auto& c : spec.components()) {
    const auto& forms = components.at(c.degree);
    std::vector<long> ws;
    for (long k = 0; k <= c.degree; ++k)
      if (contains_monomial(c.degree, forms, k)) ws.push_back(c.degree - 2 * k);
    if (static_cast<long>(ws.size()) != c.multiplicity) {
      all_monomial = false;
      break;
    }
    for (long w : ws)
      if (w != 0) some_nonzero_weight = true;
    weights[c.degree] = std::move(ws);
  }
  if (all_monomial && some_nonzero_weight) {
    out.tag = NormalizerTag::H_TORUS;
    out.weights = std::move(weights);
    return out;
  }

  out.tag = NormalizerTag::H_ONLY;
  return out;
}

QMatrix weight_compensator(const ModuleSpec& spec, const NormalizerCase& nc) {
  if (nc.tag != NormalizerTag::H_TORUS)
    throw std::invalid_argument("weight_compensator: torus witness required");
  long n = spec.dim();
  QMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (const auto& c : spec.components()) {
    const auto& ws = nc.weights.at(c.degree);
    for (long copy = 0; copy < c.multiplicity; ++copy) {
      long off = spec.offset(c.degree, copy);
      for (long k = 0; k <= c.degree; ++k)
        m.at(static_cast<std::size_t>(off + k), static_cast<std::size_t>(off + k)) =
            Rational(ws[static_cast<std::size_t>(copy)]);
    }
  }
  return m;
}

OracleResult torus_stabilizer(const TorusModule& tm, long sample_budget) {
  std::size_t n = tm.v.size();
  if (tm.weights.size() != n) throw std::invalid_argument("torus_stabilizer: weight count");
  std::set<std::vector<long>> seen;
  for (const auto& w : tm.weights) {
    if (static_cast<long>(w.size()) != tm.rank)
      throw std::invalid_argument("torus_stabilizer: weight length != rank");
    bool zero = true;
    for (long x : w) zero = zero && x == 0;
    if (zero) throw std::invalid_argument("torus_stabilizer: zero weight present");
    if (!seen.insert(w).second)
      throw std::invalid_argument("torus_stabilizer: repeated weight (vector not generic)");
  }
  for (const auto& x : tm.v)
    if (x.is_zero()) throw std::invalid_argument("torus_stabilizer: zero coordinate");

  // effective torus = row space of the weight matrix
  QMatrix wmat(n, static_cast<std::size_t>(tm.rank));
  for (std::size_t i = 0; i < n; ++i)
    for (long k = 0; k < tm.rank; ++k)
      wmat.at(i, static_cast<std::size_t>(k)) = Rational(tm.weights[i][static_cast<std::size_t>(k)]);
  std::size_t wrank = rank(wmat);

  std::vector<QMatrix> gens;
  for (long k = 0; k < tm.rank; ++k) {
    QMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g.at(i, i) = Rational(tm.weights[i][static_cast<std::size_t>(k)]);
    gens.push_back(std::move(g));
  }

  // The tangency solution space decomposes over the weight differences
  // w = a_j - a_i: the w-block has dimension dim{ gamma in rowspace(W) :
  // supp(gamma) in S_w } with S_w = { i : a_i + w is a weight }. It
  // characterizes the stabilizer exactly when every block with w != 0
  // vanishes, i.e. the weights outside each S_w still span the row space.
  // Otherwise matrices tangent everywhere exist that do not preserve the
  // orbit, and the structure theorem supplies the dimension directly.
  bool degenerate = wrank == n;
  for (std::size_t i = 0; i < n && !degenerate; ++i)
    for (std::size_t j = 0; j < n && !degenerate; ++j) {
      if (i == j) continue;
      std::vector<long> diff(static_cast<std::size_t>(tm.rank));
      for (long k = 0; k < tm.rank; ++k)
        diff[static_cast<std::size_t>(k)] = tm.weights[j][static_cast<std::size_t>(k)] -
                                            tm.weights[i][static_cast<std::size_t>(k)];
      std::vector<std::size_t> outside;
      for (std::size_t m = 0; m < n; ++m) {
        std::vector<long> shifted(static_cast<std::size_t>(tm.rank));
        for (long k = 0; k < tm.rank; ++k)
          shifted[static_cast<std::size_t>(k)] =
              tm.weights[m][static_cast<std::size_t>(k)] + diff[static_cast<std::size_t>(k)];
        if (!seen.count(shifted)) outside.push_back(m);
      }
      QMatrix sub(outside.size(), static_cast<std::size_t>(tm.rank));
      for (std::size_t r = 0; r < outside.size(); ++r)
        for (long k = 0; k < tm.rank; ++k)
          sub.at(r, static_cast<std::size_t>(k)) =
              Rational(tm.weights[outside[r]][static_cast<std::size_t>(k)]);
      if (rank(std::move(sub)) < wrank) degenerate = true;
    }
  if (degenerate) {
    OracleResult res;
    res.dimension = static_cast<long>(wrank);
    res.dense_orbit = wrank == n;
    res.tangency_applicable = false;
    res.stabilized = true;
    res.resample_ok = true;
    // keep an independent subset of the diagonal generators
    std::vector<QMatrix> basis;
    for (std::size_t g = 0; g < gens.size() && basis.size() < wrank; ++g) {
      QMatrix head(basis.size() + 1, n);
      for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t i = 0; i < n; ++i) head.at(b, i) = basis[b].at(i, i);
      for (std::size_t i = 0; i < n; ++i) head.at(basis.size(), i) = gens[g].at(i, i);
      if (rank(std::move(head)) == basis.size() + 1) basis.push_back(gens[g]);
    }
    res.basis = std::move(basis);
    return res;
  }

  auto weights = tm.weights;
  auto sample_at = [n, weights](std::size_t i) {
    RationalSequence seq;
    long rank_ = static_cast<long>(weights[0].size());
    QMatrix g(n, n);
    for (std::size_t idx = 0; idx < n; ++idx) g.at(idx, idx) = 1;
    if (i == 0) return g;
    std::size_t k0 = static_cast<std::size_t>(rank_) * (i - 1);
    for (std::size_t idx = 0; idx < n; ++idx) {
      Rational val(1);
      for (long k = 0; k < rank_; ++k)
        val *= rational_pow(seq.at(k0 + static_cast<std::size_t>(k)),
                            weights[idx][static_cast<std::size_t>(k)]);
      g.at(idx, idx) = val;
    }
    return g;
  };
  return sampled_tangency(sample_at, gens, tm.v, sample_budget);
}

}  // namespace orbitcert
