#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wgen/pyramid.hpp"
#include "wgen/uea.hpp"

namespace wgen {

// Floor value of an exact (untruncated) series.
constexpr int kExact = INT_MIN / 4;

// Laurent series in z with coefficients in U(gl_N) (or in a module U(g)/I).
// Every exponent >= lo() is exact; lower exponents are unknown and not stored.
class ZSeries {
 public:
  ZSeries() = default;
  explicit ZSeries(int lo) : lo_(lo) {}
  static ZSeries constant(const EnvElement& c, int zpow = 0);

  int lo() const { return lo_; }
  bool exact() const { return lo_ == kExact; }
  const std::map<int, EnvElement>& coeffs() const { return c_; }
  const EnvElement& coeff(int k) const;
  bool is_zero() const { return c_.empty(); }
  // Highest exponent with a nonzero coefficient.
  std::optional<int> top() const;
  // An upper bound for the true top degree (includes the unknown tail).
  int top_bound() const;

  void set(int k, EnvElement v);
  void add(int k, const EnvElement& v);
  void axpy(int k, const Rational& c, const EnvElement& v);
  // Raise the floor, discarding exponents below it.
  void truncate(int lo);

  ZSeries& operator+=(const ZSeries& o);
  ZSeries& operator-=(const ZSeries& o);
  ZSeries operator+(const ZSeries& o) const { ZSeries r = *this; return r += o; }
  ZSeries operator-(const ZSeries& o) const { ZSeries r = *this; return r -= o; }
  ZSeries operator*(const Rational& c) const;
  ZSeries operator-() const { return *this * Rational(-1); }
  // Multiply by z^k.
  ZSeries shifted(int k) const;
  bool operator==(const ZSeries& o) const { return lo_ == o.lo_ && c_ == o.c_; }

  std::string str() const;

 private:
  int lo_ = kExact;
  std::map<int, EnvElement> c_;
};

// x * y where the coefficients of x act on those of y through the orderer.
ZSeries mul(const ZSeries& x, const ZSeries& y, const Orderer& ord = plain_orderer());
// Coefficientwise [x_a, y_b].
ZSeries bracket(const ZSeries& x, const ZSeries& y);

struct SeriesComparison {
  bool equal = true;
  int checked_lo = kExact;  // exponents >= checked_lo were compared
  int checked_hi = kExact;
  int witness_exponent = 0;
  EnvElement residual;
};
SeriesComparison compare(const ZSeries& a, const ZSeries& b);

// Matrix of z-series indexed by a row box set and a column box set inside {1..n}.
class EnvMatrix {
 public:
  EnvMatrix() = default;
  EnvMatrix(int n, BoxSubset rows, BoxSubset cols);
  static EnvMatrix from_scalar(const ScalarMatrix& s, const BoxSubset& rows, const BoxSubset& cols,
                               int zpow = 0);
  static EnvMatrix from_g(const GMatrix& g, const BoxSubset& rows, const BoxSubset& cols, int zpow = 0);
  static EnvMatrix identity(int n, const BoxSubset& set);
  static BoxSubset full(int n);

  int n() const { return n_; }
  const BoxSubset& rows() const { return rows_; }
  const BoxSubset& cols() const { return cols_; }
  ZSeries& at(int a, int b);
  const ZSeries& at(int a, int b) const;

  // Submatrix on the given sets (which need not be contained in the declared shape;
  // entries outside the old shape are zero).
  EnvMatrix restrict(const BoxSubset& rows, const BoxSubset& cols) const;
  EnvMatrix operator+(const EnvMatrix& o) const;
  EnvMatrix operator-(const EnvMatrix& o) const;
  EnvMatrix operator*(const Rational& c) const;
  EnvMatrix shifted(int k) const;
  void truncate(int lo);
  // Highest floor over the entries (the common guaranteed range).
  int lo() const;
  int top_bound() const;
  bool is_zero() const;
  // Every entry normal-ordered for the orderer (x * 1 or x * 1bar).
  EnvMatrix apply_one(const Orderer& ord) const;
  // Coefficients of z^k as a GMatrix over n boxes.
  GMatrix coeff(int k) const;
  std::string str() const;
  bool operator==(const EnvMatrix& o) const;

 private:
  int n_ = 0;
  BoxSubset rows_, cols_;
  std::vector<ZSeries> e_;  // n x n, only declared rows/cols used
};

EnvMatrix mul(const EnvMatrix& a, const EnvMatrix& b, const Orderer& ord = plain_orderer());
EnvMatrix mul(const ScalarMatrix& s, const EnvMatrix& b, const BoxSubset& rows);
EnvMatrix mul(const EnvMatrix& a, const ScalarMatrix& s, const BoxSubset& cols);
// [A, B]^1: (a,d) entry sum_b [A_ab, B_bd].
EnvMatrix bracket1(const EnvMatrix& a, const EnvMatrix& b);

struct MatrixComparison {
  bool equal = true;
  int checked_lo = kExact;
  int checked_hi = kExact;
  int witness_row = 0, witness_col = 0, witness_exponent = 0;
  EnvElement residual;
  std::string describe() const;
};
MatrixComparison compare(const EnvMatrix& a, const EnvMatrix& b);

// Scaling for the z-adic solver: with z = u^s and shifts alpha (rows) / beta (cols),
// u^{-alpha_r - beta_c} A_rc(u^s) has only non-positive u-powers and its u^0
// coefficient is P + N0 with P scalar invertible and P^{-1} N0 nilpotent.
struct Scaling {
  int s = 1;
  std::map<int, int> alpha;  // by row box
  std::map<int, int> beta;   // by column box
};
enum class ScalingStrategy { Auto, RowDegree, ColDegree, Given };

struct SolveResult {
  EnvMatrix y;
  Scaling scaling;
};

// Solve A Y = X for Y (rows = A.cols, cols = X.cols). The coefficients of A act on
// those of X and Y through the orderer: plain for U(g), module for U(g)/I.
// Coefficients are produced for exponents >= target_lo where the data allows;
// the floor of each entry records what was actually obtained.
SolveResult solve_left(const EnvMatrix& a, const EnvMatrix& x, const Orderer& ord, int target_lo,
                       ScalingStrategy strategy = ScalingStrategy::Auto, const Scaling& given = {});

// The scaling adapted to a good grading for blocks of z + F + E_p + D.
Scaling grading_scaling(const Pyramid& p);

// Inverse by series expansion; both one-sided products are checked against the identity.
EnvMatrix geometric_inverse(const EnvMatrix& m, int target_lo,
                            ScalingStrategy strategy = ScalingStrategy::Auto, const Scaling& given = {});
// Inverse of M = P + N with P scalar invertible and P^{-1} N nilpotent: the finite sum
// sum_k (-P^{-1} N)^k P^{-1}. Exact; throws if the series does not terminate.
EnvMatrix geometric_inverse_nilpotent(const EnvMatrix& m, const ScalarMatrix& p);

// Generalized quasideterminant |A|_{U,W} via the Schur-complement form
// 1_W (A - A 1_{U'} (1_{W'} A 1_{U'})^{-1} 1_{W'} A) 1_U; complements are taken inside
// A's column and row sets. Computed as a left action on 1 (or 1bar), so with a module
// orderer the result is the reduced quasideterminant.
EnvMatrix quasideterminant(const EnvMatrix& a, const BoxSubset& u, const BoxSubset& w, int target_lo,
                           const Orderer& ord = plain_orderer(),
                           ScalingStrategy strategy = ScalingStrategy::Auto, const Scaling& given = {});
// Definition form (1_U A^{-1} 1_W)^{-1}, raw U(g) only.
EnvMatrix quasideterminant_definition(const EnvMatrix& a, const BoxSubset& u, const BoxSubset& w,
                                      int target_lo);

// Polynomial in an auxiliary variable x with matrix coefficients.
using XPolyMatrix = std::map<int, EnvMatrix>;
// Res_x x^m A(x): the coefficient of x^{-1-m}.
EnvMatrix residue(const XPolyMatrix& a, int m, const EnvMatrix& zero_shape);

}  // namespace wgen
