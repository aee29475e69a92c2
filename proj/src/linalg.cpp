#include "wgen/linalg.hpp"

#include <stdexcept>

namespace wgen {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) r(i, j) += aik * o(k, j);
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
  QMatrix r = *this;
  for (auto& v : r.a_) v *= c;
  return r;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool QMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (int j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (int j = 0; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

int QMatrix::rank() const {
  QMatrix m = *this;
  return int(rref(m).size());
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  int n = rows_;
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (int(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

QMatrix QMatrix::nullspace() const {
  QMatrix m = *this;
  auto piv = rref(m);
  std::vector<char> is_piv(cols_, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<int> free;
  for (int c = 0; c < cols_; ++c)
    if (!is_piv[c]) free.push_back(c);
  QMatrix ns(cols_, int(free.size()));
  for (size_t k = 0; k < free.size(); ++k) {
    ns(free[k], int(k)) = 1;
    for (size_t r = 0; r < piv.size(); ++r) ns(piv[r], int(k)) = -m(int(r), free[k]);
  }
  return ns;
}

ScalarMatrix ScalarMatrix::elementary(int n, int a, int b) {
  ScalarMatrix m(n);
  m.at(a, b) = 1;
  return m;
}

ScalarMatrix ScalarMatrix::projection(int n, const std::vector<int>& boxes) {
  ScalarMatrix m(n);
  for (int b : boxes) m.at(b, b) = 1;
  return m;
}

ScalarMatrix ScalarMatrix::pow(int k) const {
  ScalarMatrix r = identity(n());
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Rational ScalarMatrix::trace() const {
  Rational t = 0;
  for (int i = 1; i <= n(); ++i) t += at(i, i);
  return t;
}

bool Echelon::reduce(SparseVec& v) const {
  // Rows have leading 1 at their pivot and are processed in increasing pivot order;
  // eliminating pivot p can only introduce columns > p.
  for (auto it = v.begin(); it != v.end();) {
    auto r = rows_.find(it->first);
    if (r == rows_.end()) {
      ++it;
      continue;
    }
    Rational f = it->second;
    int col = it->first;
    for (const auto& [c, val] : r->second) {
      auto& slot = v[c];
      slot -= f * val;
    }
    // drop zeros produced at or after col
    for (auto jt = v.lower_bound(col); jt != v.end();) {
      if (jt->second == 0)
        jt = v.erase(jt);
      else
        ++jt;
    }
    it = v.lower_bound(col);
  }
  return v.empty();
}

bool Echelon::insert(SparseVec v) {
  for (auto it = v.begin(); it != v.end();)
    if (it->second == 0)
      it = v.erase(it);
    else
      ++it;
  if (reduce(v)) return false;
  int p = v.begin()->first;
  Rational inv = 1 / v.begin()->second;
  for (auto& [c, val] : v) val *= inv;
  // keep rows fully reduced w.r.t. the new pivot
  for (auto& [pc, row] : rows_) {
    auto it = row.find(p);
    if (it == row.end()) continue;
    Rational f = it->second;
    for (const auto& [c, val] : v) row[c] -= f * val;
    for (auto jt = row.begin(); jt != row.end();)
      if (jt->second == 0)
        jt = row.erase(jt);
      else
        ++jt;
  }
  rows_.emplace(p, std::move(v));
  return true;
}

std::optional<SparseSolution> solve_sparse(const std::vector<SparseVec>& rows,
                                           const std::vector<Rational>& rhs, int unknowns) {
  // Augmented column index = unknowns.
  std::map<int, SparseVec> piv;
  for (size_t i = 0; i < rows.size(); ++i) {
    SparseVec v;
    for (const auto& [c, val] : rows[i])
      if (val != 0) v[c] = val;
    if (rhs[i] != 0) v[unknowns] = rhs[i];
    // eliminate
    for (auto it = v.begin(); it != v.end() && it->first < unknowns;) {
      auto r = piv.find(it->first);
      if (r == piv.end()) {
        ++it;
        continue;
      }
      int col = it->first;
      Rational f = it->second;
      for (const auto& [c, val] : r->second) v[c] -= f * val;
      for (auto jt = v.lower_bound(col); jt != v.end();)
        if (jt->second == 0)
          jt = v.erase(jt);
        else
          ++jt;
      it = v.lower_bound(col);
    }
    if (v.empty()) continue;
    if (v.begin()->first == unknowns) return std::nullopt;
    int p = v.begin()->first;
    Rational inv = 1 / v.begin()->second;
    for (auto& [c, val] : v) val *= inv;
    piv.emplace(p, std::move(v));
  }
  SparseSolution sol;
  sol.x.assign(unknowns, Rational(0));
  sol.nullity = unknowns - int(piv.size());
  // back substitution, highest pivot first
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    Rational val = 0;
    for (const auto& [c, a] : it->second) {
      if (c == it->first) continue;
      if (c == unknowns)
        val += a;
      else
        val -= a * sol.x[c];
    }
    sol.x[it->first] = val;
  }
  return sol;
}

}  // namespace wgen
