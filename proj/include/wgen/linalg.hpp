#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wgen/rational.hpp"

namespace wgen {

// Dense matrix over Q. Used for End V (box-indexed scalar matrices) and
// for the small exact linear systems scattered through the engine.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const Rational& c) const;
  bool operator==(const QMatrix& o) const;
  bool operator!=(const QMatrix& o) const { return !(*this == o); }
  bool is_zero() const;
  QMatrix transpose() const;

  int rank() const;
  std::optional<QMatrix> inverse() const;
  // Basis of {v : A v = 0}, one vector per column of the result.
  QMatrix nullspace() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Box-indexed square matrices (entries (a,b), boxes 1..n) share QMatrix with
// a one-based accessor layer.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  explicit ScalarMatrix(int n) : m_(n, n) {}
  explicit ScalarMatrix(QMatrix m) : m_(std::move(m)) {}
  static ScalarMatrix identity(int n) { return ScalarMatrix(QMatrix::identity(n)); }
  static ScalarMatrix elementary(int n, int a, int b);
  static ScalarMatrix projection(int n, const std::vector<int>& boxes);

  int n() const { return m_.rows(); }
  Rational& at(int a, int b) { return m_(a - 1, b - 1); }
  const Rational& at(int a, int b) const { return m_(a - 1, b - 1); }
  const QMatrix& q() const { return m_; }

  ScalarMatrix operator*(const ScalarMatrix& o) const { return ScalarMatrix(m_ * o.m_); }
  ScalarMatrix operator+(const ScalarMatrix& o) const { return ScalarMatrix(m_ + o.m_); }
  ScalarMatrix operator-(const ScalarMatrix& o) const { return ScalarMatrix(m_ - o.m_); }
  ScalarMatrix operator*(const Rational& c) const { return ScalarMatrix(m_ * c); }
  bool operator==(const ScalarMatrix& o) const { return m_ == o.m_; }
  bool operator!=(const ScalarMatrix& o) const { return !(m_ == o.m_); }
  bool is_zero() const { return m_.is_zero(); }
  ScalarMatrix transpose() const { return ScalarMatrix(m_.transpose()); }
  ScalarMatrix pow(int k) const;
  Rational trace() const;

 private:
  QMatrix m_;
};

using SparseVec = std::map<int, Rational>;

// Incremental row echelon form; insert() reports linear independence.
class Echelon {
 public:
  bool insert(SparseVec v);
  // Reduce v against the current basis (in place); returns true if it became 0.
  bool reduce(SparseVec& v) const;
  int rank() const { return int(rows_.size()); }

 private:
  std::map<int, SparseVec> rows_;  // pivot column -> row with leading 1
};

// Solve a sparse linear system A x = b (rows given as SparseVec over unknowns).
// Returns nullopt if inconsistent; free unknowns are set to zero and reported.
struct SparseSolution {
  std::vector<Rational> x;
  int nullity = 0;
};
std::optional<SparseSolution> solve_sparse(const std::vector<SparseVec>& rows,
                                           const std::vector<Rational>& rhs, int unknowns);

}  // namespace wgen
