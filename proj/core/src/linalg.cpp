#include "orbitcert/linalg.hpp"

#include <stdexcept>

namespace orbitcert {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch in *");
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& y = o.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch in +");
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch in -");
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

QMatrix QMatrix::scaled(const Rational& c) const {
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
  return r;
}

QMatrix QMatrix::transposed() const {
  QMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("QMatrix: shape mismatch in apply");
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& x = at(i, j);
      if (!x.is_zero()) r[i] += x * v[j];
    }
  return r;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix exp_nilpotent(const QMatrix& n, std::size_t max_power) {
  if (n.rows() != n.cols()) throw std::invalid_argument("exp_nilpotent: not square");
  if (max_power == 0) max_power = n.rows() + 1;
  QMatrix result = QMatrix::identity(n.rows());
  QMatrix term = QMatrix::identity(n.rows());
  for (std::size_t k = 1; k <= max_power + 1; ++k) {
    term = term * n;
    term = term.scaled(Rational(1, static_cast<long>(k)));
    if (term.is_zero()) return result;
    result = result + term;
  }
  throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
}

namespace {

// In-place row echelon; returns pivot columns. Augmented width `aug` columns
// at the right never get pivots.
std::vector<std::size_t> echelon(QMatrix& m, std::size_t aug = 0) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c + aug < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(QMatrix m) { return echelon(m).size(); }

std::optional<LinearSolution> solve(QMatrix a, std::vector<Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = echelon(aug, 1);
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    if (!aug.at(i, a.cols()).is_zero()) return std::nullopt;
  LinearSolution sol;
  sol.x.assign(a.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.x[pivots[i]] = aug.at(i, a.cols());
  sol.unique = pivots.size() == a.cols();
  return sol;
}

std::vector<std::vector<Rational>> nullspace(QMatrix m) {
  std::size_t n = m.cols();
  auto pivots = echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(n);
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolutionSpace::SolutionSpace(std::size_t n) : n_(n) {
  basis_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> e(n);
    e[i] = 1;
    basis_.push_back(std::move(e));
  }
}

namespace {

void normalize_integer(std::vector<Rational>& v) {
  Int lcm = 1, gcd = 0;
  for (const auto& x : v)
    if (!x.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
  for (auto& x : v) x *= Rational(lcm);
  for (const auto& x : v)
    if (!x.is_zero()) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.num().get_mpz_t());
  if (gcd > 1)
    for (auto& x : v) x /= Rational(gcd);
}

}  // namespace

bool SolutionSpace::add_constraint(const std::vector<Rational>& row) {
  if (row.size() != n_) throw std::invalid_argument("SolutionSpace: bad row length");
  // w_j = <row, basis_j>; pivot on the first nonzero and fold it into the rest
  std::vector<Rational> w(basis_.size());
  std::size_t piv = basis_.size();
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    Rational dot;
    for (std::size_t i = 0; i < n_; ++i)
      if (!row[i].is_zero() && !basis_[j][i].is_zero()) dot += row[i] * basis_[j][i];
    w[j] = dot;
    if (piv == basis_.size() && !dot.is_zero()) piv = j;
  }
  if (piv == basis_.size()) return false;
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (j == piv || w[j].is_zero()) continue;
    Rational f = w[j] / w[piv];
    for (std::size_t i = 0; i < n_; ++i)
      if (!basis_[piv][i].is_zero()) basis_[j][i] -= f * basis_[piv][i];
    normalize_integer(basis_[j]);
  }
  basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(piv));
  return true;
}

bool SolutionSpace::contains(const std::vector<Rational>& v) const {
  if (v.size() != n_) return false;
  QMatrix m(n_, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j)
    for (std::size_t i = 0; i < n_; ++i) m.at(i, j) = basis_[j][i];
  return solve(std::move(m), v).has_value();
}

}  // namespace orbitcert
