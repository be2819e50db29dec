#ifndef ORBITCERT_LINALG_HPP
#define ORBITCERT_LINALG_HPP

#include <optional>
#include <vector>

#include "orbitcert/rational.hpp"

namespace orbitcert {

/// Dense matrix over exact rationals, row major.
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const Rational& c) const;
  QMatrix transposed() const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// exp of a nilpotent matrix, exact (throws if the series does not terminate).
QMatrix exp_nilpotent(const QMatrix& n, std::size_t max_power = 0);

std::size_t rank(QMatrix m);

/// Solves A x = b. Returns nullopt when inconsistent. `unique` reports whether
/// the solution space is a point; free coordinates are set to zero.
struct LinearSolution {
  std::vector<Rational> x;
  bool unique = false;
};
std::optional<LinearSolution> solve(QMatrix a, std::vector<Rational> b);

/// Basis of the right nullspace, one vector per column of the result.
std::vector<std::vector<Rational>> nullspace(QMatrix m);

/// Incrementally maintained solution space of a growing homogeneous system.
/// Starts as all of Q^n; each constraint row intersects it with a hyperplane.
class SolutionSpace {
public:
  explicit SolutionSpace(std::size_t n);

  std::size_t ambient() const { return n_; }
  std::size_t dimension() const { return basis_.size(); }

  /// Adds the constraint <row, x> = 0. Returns true if the dimension dropped.
  bool add_constraint(const std::vector<Rational>& row);

  /// Current basis vectors (length-n, integer-normalized).
  const std::vector<std::vector<Rational>>& basis() const { return basis_; }

  /// Checks whether `v` satisfies every previously added constraint is not
  /// tracked; this only tests membership in the current span.
  bool contains(const std::vector<Rational>& v) const;

private:
  std::size_t n_;
  std::vector<std::vector<Rational>> basis_;
};

}  // namespace orbitcert

#endif
