#include "wgen/envmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wgen {

namespace {

const EnvElement& zero_element() {
  static const EnvElement z;
  return z;
}

const ZSeries& zero_series() {
  static const ZSeries z;
  return z;
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

std::string zpower(int k) {
  if (k == 1) return "z";
  if (k >= 0 && k < 10) return "z^" + std::to_string(k);
  return "z^{" + std::to_string(k) + "}";
}

}  // namespace

ZSeries ZSeries::constant(const EnvElement& c, int zpow) {
  ZSeries s;
  if (!c.is_zero()) s.c_.emplace(zpow, c);
  return s;
}

const EnvElement& ZSeries::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? zero_element() : it->second;
}

std::optional<int> ZSeries::top() const {
  if (c_.empty()) return std::nullopt;
  return c_.rbegin()->first;
}

int ZSeries::top_bound() const {
  int t = c_.empty() ? kExact : c_.rbegin()->first;
  if (!exact()) t = std::max(t, lo_ - 1);
  return t;
}

void ZSeries::set(int k, EnvElement v) {
  if (k < lo_) return;
  if (v.is_zero())
    c_.erase(k);
  else
    c_[k] = std::move(v);
}

void ZSeries::add(int k, const EnvElement& v) {
  if (k < lo_ || v.is_zero()) return;
  auto& slot = c_[k];
  slot += v;
  if (slot.is_zero()) c_.erase(k);
}

void ZSeries::axpy(int k, const Rational& c, const EnvElement& v) {
  if (k < lo_ || v.is_zero() || c == 0) return;
  auto& slot = c_[k];
  slot.axpy(c, v);
  if (slot.is_zero()) c_.erase(k);
}

void ZSeries::truncate(int lo) {
  if (lo <= lo_) return;
  lo_ = lo;
  c_.erase(c_.begin(), c_.lower_bound(lo));
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
  truncate(o.lo_);
  for (const auto& [k, v] : o.c_) add(k, v);
  return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) {
  truncate(o.lo_);
  for (const auto& [k, v] : o.c_) axpy(k, Rational(-1), v);
  return *this;
}

ZSeries ZSeries::operator*(const Rational& c) const {
  ZSeries r(lo_);
  if (c == 0) return r;
  for (const auto& [k, v] : c_) r.c_.emplace(k, v * c);
  return r;
}

ZSeries ZSeries::shifted(int k) const {
  ZSeries r(exact() ? kExact : lo_ + k);
  for (const auto& [e, v] : c_) r.c_.emplace(e + k, v);
  return r;
}

std::string ZSeries::str() const {
  std::string s;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    int k = it->first;
    const EnvElement& c = it->second;
    std::string term;
    bool neg = false;
    if (k == 0) {
      term = c.str();
      if (term[0] == '-') {
        neg = true;
        term = term.substr(1);
      }
      if (c.size() > 1) {
        neg = false;
        term = c.str();
      }
    } else if (c.size() == 1) {
      const auto& [m, v] = *c.terms().begin();
      neg = v < 0;
      Rational a = abs(v);
      if (m.empty())
        term = (a == 1 ? "" : to_string(a)) + zpower(k);
      else
        term = zpower(k) + " " + EnvElement::monomial(m, a).str();
    } else {
      term = zpower(k) + "(" + c.str() + ")";
    }
    if (s.empty())
      s = (neg ? "-" : "") + term;
    else
      s += (neg ? " - " : " + ") + term;
  }
  if (s.empty()) s = "0";
  if (!exact()) s += " + O(" + zpower(lo_ - 1) + ")";
  return s;
}

ZSeries mul(const ZSeries& x, const ZSeries& y, const Orderer& ord) {
  if ((x.is_zero() && x.exact()) || (y.is_zero() && y.exact())) return ZSeries();
  int lo = kExact;
  if (!x.exact()) lo = std::max(lo, x.lo() + y.top_bound());
  if (!y.exact()) lo = std::max(lo, y.lo() + x.top_bound());
  ZSeries r(lo);
  for (const auto& [b, yb] : y.coeffs())
    for (const auto& [a, xa] : x.coeffs()) {
      if (a + b < lo) continue;
      r.add(a + b, ord.act(xa, yb));
    }
  return r;
}

ZSeries bracket(const ZSeries& x, const ZSeries& y) { return mul(x, y) - mul(y, x); }

SeriesComparison compare(const ZSeries& a, const ZSeries& b) {
  SeriesComparison r;
  r.checked_lo = std::max(a.lo(), b.lo());
  r.checked_hi = std::max(a.top_bound(), b.top_bound());
  std::vector<int> keys;
  for (const auto& [k, v] : a.coeffs()) keys.push_back(k);
  for (const auto& [k, v] : b.coeffs()) keys.push_back(k);
  std::sort(keys.rbegin(), keys.rend());
  for (int k : keys) {
    if (k < r.checked_lo) break;
    if (a.coeff(k) != b.coeff(k)) {
      r.equal = false;
      r.witness_exponent = k;
      r.residual = a.coeff(k) - b.coeff(k);
      return r;
    }
  }
  return r;
}

EnvMatrix::EnvMatrix(int n, BoxSubset rows, BoxSubset cols)
    : n_(n), rows_(std::move(rows)), cols_(std::move(cols)), e_(size_t(n) * n) {}

BoxSubset EnvMatrix::full(int n) {
  BoxSubset s;
  for (int b = 1; b <= n; ++b) s.boxes.push_back(b);
  s.tag = "V";
  return s;
}

EnvMatrix EnvMatrix::from_scalar(const ScalarMatrix& s, const BoxSubset& rows, const BoxSubset& cols,
                                 int zpow) {
  EnvMatrix m(s.n(), rows, cols);
  for (int a : rows.boxes)
    for (int b : cols.boxes)
      if (s.at(a, b) != 0) m.at(a, b) = ZSeries::constant(EnvElement(s.at(a, b)), zpow);
  return m;
}

EnvMatrix EnvMatrix::from_g(const GMatrix& g, const BoxSubset& rows, const BoxSubset& cols, int zpow) {
  EnvMatrix m(g.n(), rows, cols);
  for (int a : rows.boxes)
    for (int b : cols.boxes)
      if (!g.at(a, b).is_zero()) m.at(a, b) = ZSeries::constant(g.at(a, b), zpow);
  return m;
}

EnvMatrix EnvMatrix::identity(int n, const BoxSubset& set) {
  EnvMatrix m(n, set, set);
  for (int a : set.boxes) m.at(a, a) = ZSeries::constant(EnvElement(Rational(1)));
  return m;
}

ZSeries& EnvMatrix::at(int a, int b) { return e_[size_t(a - 1) * n_ + (b - 1)]; }

const ZSeries& EnvMatrix::at(int a, int b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_) return zero_series();
  return e_[size_t(a - 1) * n_ + (b - 1)];
}

EnvMatrix EnvMatrix::restrict(const BoxSubset& rows, const BoxSubset& cols) const {
  EnvMatrix m(n_, rows, cols);
  for (int a : rows.boxes) {
    if (!rows_.contains(a)) continue;
    for (int b : cols.boxes)
      if (cols_.contains(b)) m.at(a, b) = at(a, b);
  }
  return m;
}

EnvMatrix EnvMatrix::operator+(const EnvMatrix& o) const {
  if (!(rows_ == o.rows_) || !(cols_ == o.cols_)) throw std::invalid_argument("EnvMatrix +: shape mismatch");
  EnvMatrix r = *this;
  for (int a : rows_.boxes)
    for (int b : cols_.boxes) r.at(a, b) += o.at(a, b);
  return r;
}

EnvMatrix EnvMatrix::operator-(const EnvMatrix& o) const {
  if (!(rows_ == o.rows_) || !(cols_ == o.cols_)) throw std::invalid_argument("EnvMatrix -: shape mismatch");
  EnvMatrix r = *this;
  for (int a : rows_.boxes)
    for (int b : cols_.boxes) r.at(a, b) -= o.at(a, b);
  return r;
}

EnvMatrix EnvMatrix::operator*(const Rational& c) const {
  EnvMatrix r = *this;
  for (int a : rows_.boxes)
    for (int b : cols_.boxes) r.at(a, b) = at(a, b) * c;
  return r;
}

EnvMatrix EnvMatrix::shifted(int k) const {
  EnvMatrix r = *this;
  for (int a : rows_.boxes)
    for (int b : cols_.boxes) r.at(a, b) = at(a, b).shifted(k);
  return r;
}

void EnvMatrix::truncate(int lo) {
  for (int a : rows_.boxes)
    for (int b : cols_.boxes) at(a, b).truncate(lo);
}

int EnvMatrix::lo() const {
  int lo = kExact;
  for (int a : rows_.boxes)
    for (int b : cols_.boxes) lo = std::max(lo, at(a, b).lo());
  return lo;
}

int EnvMatrix::top_bound() const {
  int t = kExact;
  for (int a : rows_.boxes)
    for (int b : cols_.boxes) t = std::max(t, at(a, b).top_bound());
  return t;
}

bool EnvMatrix::is_zero() const {
  for (int a : rows_.boxes)
    for (int b : cols_.boxes)
      if (!at(a, b).is_zero()) return false;
  return true;
}

EnvMatrix EnvMatrix::apply_one(const Orderer& ord) const {
  EnvMatrix r(n_, rows_, cols_);
  for (int a : rows_.boxes)
    for (int b : cols_.boxes) {
      const ZSeries& s = at(a, b);
      ZSeries t(s.lo());
      for (const auto& [k, v] : s.coeffs()) t.set(k, ord.normal_form(v));
      r.at(a, b) = std::move(t);
    }
  return r;
}

GMatrix EnvMatrix::coeff(int k) const {
  GMatrix g(n_);
  for (int a : rows_.boxes)
    for (int b : cols_.boxes) g.at(a, b) = at(a, b).coeff(k);
  return g;
}

std::string EnvMatrix::str() const {
  std::ostringstream os;
  for (int a : rows_.boxes)
    for (int b : cols_.boxes) {
      const ZSeries& s = at(a, b);
      if (s.is_zero() && s.exact()) continue;
      os << "(" << a << "," << b << "): " << s.str() << "\n";
    }
  return os.str();
}

bool EnvMatrix::operator==(const EnvMatrix& o) const {
  if (!(rows_ == o.rows_) || !(cols_ == o.cols_) || n_ != o.n_) return false;
  for (int a : rows_.boxes)
    for (int b : cols_.boxes)
      if (!(at(a, b) == o.at(a, b))) return false;
  return true;
}

EnvMatrix mul(const EnvMatrix& a, const EnvMatrix& b, const Orderer& ord) {
  if (!(a.cols() == b.rows()))
    throw std::invalid_argument("EnvMatrix product: shape mismatch (" + a.cols().tag + " vs " + b.rows().tag + ")");
  EnvMatrix r(a.n(), a.rows(), b.cols());
  for (int i : a.rows().boxes)
    for (int k : a.cols().boxes) {
      const ZSeries& x = a.at(i, k);
      if (x.is_zero() && x.exact()) continue;
      for (int j : b.cols().boxes) {
        const ZSeries& y = b.at(k, j);
        if (y.is_zero() && y.exact()) continue;
        r.at(i, j) += mul(x, y, ord);
      }
    }
  return r;
}

EnvMatrix mul(const ScalarMatrix& s, const EnvMatrix& b, const BoxSubset& rows) {
  EnvMatrix r(b.n(), rows, b.cols());
  for (int i : rows.boxes)
    for (int k : b.rows().boxes) {
      if (s.at(i, k) == 0) continue;
      for (int j : b.cols().boxes) {
        ZSeries t = b.at(k, j) * s.at(i, k);
        r.at(i, j) += t;
      }
    }
  return r;
}

EnvMatrix mul(const EnvMatrix& a, const ScalarMatrix& s, const BoxSubset& cols) {
  EnvMatrix r(a.n(), a.rows(), cols);
  for (int i : a.rows().boxes)
    for (int k : a.cols().boxes) {
      const ZSeries& x = a.at(i, k);
      if (x.is_zero() && x.exact()) continue;
      for (int j : cols.boxes)
        if (s.at(k, j) != 0) r.at(i, j) += x * s.at(k, j);
    }
  return r;
}

EnvMatrix bracket1(const EnvMatrix& a, const EnvMatrix& b) {
  if (!(a.cols() == b.rows())) throw std::invalid_argument("bracket1: shape mismatch");
  EnvMatrix r(a.n(), a.rows(), b.cols());
  for (int i : a.rows().boxes)
    for (int k : a.cols().boxes) {
      const ZSeries& x = a.at(i, k);
      if (x.is_zero() && x.exact()) continue;
      for (int j : b.cols().boxes) {
        const ZSeries& y = b.at(k, j);
        if (y.is_zero() && y.exact()) continue;
        r.at(i, j) += bracket(x, y);
      }
    }
  return r;
}

std::string MatrixComparison::describe() const {
  std::ostringstream os;
  if (equal)
    os << "equal on exponents >= " << (checked_lo == kExact ? std::string("-inf") : std::to_string(checked_lo));
  else
    os << "differ at entry (" << witness_row << "," << witness_col << "), z^" << witness_exponent
       << ": residual " << residual.str();
  return os.str();
}

MatrixComparison compare(const EnvMatrix& a, const EnvMatrix& b) {
  MatrixComparison r;
  if (!(a.rows() == b.rows()) || !(a.cols() == b.cols()))
    throw std::invalid_argument("compare: shape mismatch");
  for (int i : a.rows().boxes)
    for (int j : a.cols().boxes) {
      SeriesComparison c = compare(a.at(i, j), b.at(i, j));
      r.checked_lo = std::max(r.checked_lo, c.checked_lo);
      r.checked_hi = std::max(r.checked_hi, c.checked_hi);
      if (!c.equal && r.equal) {
        r.equal = false;
        r.witness_row = i;
        r.witness_col = j;
        r.witness_exponent = c.witness_exponent;
        r.residual = c.residual;
      }
    }
  return r;
}

Scaling grading_scaling(const Pyramid& p) {
  Scaling s;
  s.s = 2;
  for (int b = 1; b <= p.N(); ++b) {
    s.alpha[b] = p.x2(b) + 2;
    s.beta[b] = -p.x2(b);
  }
  return s;
}

namespace {

struct Hat {
  std::map<int, EnvElement> c;  // u-exponent -> coefficient
  int lo = kExact;              // u-floor, kExact when exact
};

// Scalar parts of the u^0 coefficients, inverted; nullopt when singular.
std::optional<QMatrix> top_inverse(const std::vector<Hat>& ahat, int n, std::vector<EnvElement>& n0) {
  QMatrix p(n, n);
  n0.assign(size_t(n) * n, EnvElement());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Hat& h = ahat[size_t(r) * n + c];
      auto it = h.c.find(0);
      if (it == h.c.end()) continue;
      for (const auto& [m, v] : it->second.terms()) {
        if (m.empty())
          p(r, c) = v;
        else
          n0[size_t(r) * n + c].add_term(m, v);
      }
    }
  return p.inverse();
}

bool build_hat(const EnvMatrix& a, const Scaling& sc, std::vector<Hat>& ahat) {
  const auto& R = a.rows().boxes;
  const auto& C = a.cols().boxes;
  int n = int(R.size());
  ahat.assign(size_t(n) * n, Hat());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const ZSeries& s = a.at(R[r], C[c]);
      int shift = -sc.alpha.at(R[r]) - sc.beta.at(C[c]);
      Hat& h = ahat[size_t(r) * n + c];
      for (const auto& [k, v] : s.coeffs()) {
        int e = sc.s * k + shift;
        if (e > 0) return false;
        h.c.emplace(e, v);
      }
      if (!s.exact()) {
        h.lo = sc.s * s.lo() + shift;
        if (h.lo > 0) return false;
      }
    }
  return true;
}

Scaling degree_scaling(const EnvMatrix& a, bool rows) {
  Scaling sc;
  for (int r : a.rows().boxes) sc.alpha[r] = 0;
  for (int c : a.cols().boxes) sc.beta[c] = 0;
  if (rows) {
    for (int r : a.rows().boxes) {
      int t = kExact;
      for (int c : a.cols().boxes) t = std::max(t, a.at(r, c).top_bound());
      sc.alpha[r] = t == kExact ? 0 : t;
    }
  } else {
    for (int c : a.cols().boxes) {
      int t = kExact;
      for (int r : a.rows().boxes) t = std::max(t, a.at(r, c).top_bound());
      sc.beta[c] = t == kExact ? 0 : t;
    }
  }
  return sc;
}

}  // namespace

SolveResult solve_left(const EnvMatrix& a, const EnvMatrix& x, const Orderer& ord, int target_lo,
                       ScalingStrategy strategy, const Scaling& given) {
  const auto& R = a.rows().boxes;
  const auto& C = a.cols().boxes;
  int n = int(R.size());
  if (int(C.size()) != n) throw std::invalid_argument("solve: block " + a.rows().tag + " x " + a.cols().tag + " is not square");
  if (!(x.rows() == a.rows())) throw std::invalid_argument("solve: right-hand side rows do not match");

  std::vector<Scaling> candidates;
  switch (strategy) {
    case ScalingStrategy::Auto:
      candidates = {degree_scaling(a, true), degree_scaling(a, false)};
      break;
    case ScalingStrategy::RowDegree: candidates = {degree_scaling(a, true)}; break;
    case ScalingStrategy::ColDegree: candidates = {degree_scaling(a, false)}; break;
    case ScalingStrategy::Given: candidates = {given}; break;
  }
  std::vector<Hat> ahat;
  std::vector<EnvElement> n0;
  std::optional<QMatrix> pinv;
  Scaling sc;
  for (const Scaling& cand : candidates) {
    if (!build_hat(a, cand, ahat)) continue;
    pinv = top_inverse(ahat, n, n0);
    if (pinv) {
      sc = cand;
      break;
    }
  }
  if (!pinv)
    throw std::runtime_error("solve: leading term of block " + a.rows().tag + " x " + a.cols().tag +
                             " is not invertible");
  bool has_n0 = false;
  for (const auto& e : n0) has_n0 = has_n0 || !e.is_zero();
  int max_ahat_lo = kExact;
  for (const auto& h : ahat) max_ahat_lo = std::max(max_ahat_lo, h.lo);
  int min_beta = INT_MAX;
  for (int c : C) min_beta = std::min(min_beta, sc.beta.at(c));

  SolveResult out{EnvMatrix(a.n(), a.cols(), x.cols()), sc};
  for (int q : x.cols().boxes) {
    // X-hat column
    std::vector<std::map<int, EnvElement>> xh(n);
    bool all_exact_zero = true;
    int lo_bound = kExact;
    int top = kExact;
    for (int r = 0; r < n; ++r) {
      const ZSeries& s = x.at(R[r], q);
      int shift = -sc.alpha.at(R[r]);
      for (const auto& [k, v] : s.coeffs()) {
        xh[r].emplace(sc.s * k + shift, v);
        top = std::max(top, sc.s * k + shift);
      }
      if (!s.exact()) {
        lo_bound = std::max(lo_bound, sc.s * s.lo() + shift);
        top = std::max(top, sc.s * (s.lo() - 1) + shift);
      }
      if (!(s.is_zero() && s.exact())) all_exact_zero = false;
    }
    if (all_exact_zero) continue;
    if (max_ahat_lo != kExact) lo_bound = std::max(lo_bound, top + max_ahat_lo);
    int m_min = std::max(lo_bound, sc.s * target_lo + min_beta);
    std::vector<std::map<int, EnvElement>> yh(n);
    for (int m = top; m >= m_min; --m) {
      std::vector<EnvElement> rhs(n);
      for (int r = 0; r < n; ++r) {
        auto it = xh[r].find(m);
        if (it != xh[r].end()) rhs[r] = it->second;
        for (int c = 0; c < n; ++c) {
          const Hat& h = ahat[size_t(r) * n + c];
          for (auto jt = h.c.begin(); jt != h.c.end() && jt->first < 0; ++jt) {
            auto yt = yh[c].find(m - jt->first);
            if (yt == yh[c].end()) continue;
            rhs[r] -= ord.act(jt->second, yt->second);
          }
        }
      }
      auto apply_pinv = [&](const std::vector<EnvElement>& v) {
        std::vector<EnvElement> w(n);
        for (int c = 0; c < n; ++c)
          for (int r = 0; r < n; ++r)
            if ((*pinv)(c, r) != 0) w[c].axpy((*pinv)(c, r), v[r]);
        return w;
      };
      std::vector<EnvElement> v = apply_pinv(rhs), acc = v;
      if (has_n0) {
        for (int iter = 0;; ++iter) {
          if (iter > 64) throw std::runtime_error("solve: leading correction is not nilpotent");
          std::vector<EnvElement> nv(n);
          for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
              if (!n0[size_t(r) * n + c].is_zero() && !v[c].is_zero())
                nv[r] += ord.act(n0[size_t(r) * n + c], v[c]);
          v = apply_pinv(nv);
          bool zero = true;
          for (auto& e : v) {
            e *= Rational(-1);
            zero = zero && e.is_zero();
          }
          if (zero) break;
          for (int c = 0; c < n; ++c) acc[c] += v[c];
        }
      }
      for (int c = 0; c < n; ++c)
        if (!acc[c].is_zero()) yh[c].emplace(m, std::move(acc[c]));
    }
    for (int c = 0; c < n; ++c) {
      int b = sc.beta.at(C[c]);
      ZSeries y(ceil_div(m_min - b, sc.s));
      for (auto& [e, v] : yh[c]) {
        if ((e - b) % sc.s != 0)
          throw std::runtime_error("solve: fractional power of z in the solution");
        y.set((e - b) / sc.s, std::move(v));
      }
      out.y.at(C[c], q) = std::move(y);
    }
  }
  return out;
}

EnvMatrix geometric_inverse(const EnvMatrix& m, int target_lo, ScalingStrategy strategy, const Scaling& given) {
  EnvMatrix id = EnvMatrix::identity(m.n(), m.rows());
  EnvMatrix inv = solve_left(m, id, plain_orderer(), target_lo, strategy, given).y;
  MatrixComparison left = compare(mul(m, inv), id);
  MatrixComparison right = compare(mul(inv, m), EnvMatrix::identity(m.n(), m.cols()));
  if (!left.equal || !right.equal)
    throw std::runtime_error("geometric_inverse: identity check failed: " +
                             (left.equal ? right.describe() : left.describe()));
  return inv;
}

EnvMatrix geometric_inverse_nilpotent(const EnvMatrix& m, const ScalarMatrix& p) {
  const auto& R = m.rows().boxes;
  const auto& C = m.cols().boxes;
  int n = int(R.size());
  if (int(C.size()) != n) throw std::invalid_argument("geometric_inverse: block is not square");
  QMatrix pq(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) pq(r, c) = p.at(R[r], C[c]);
  auto pinv = pq.inverse();
  if (!pinv) throw std::runtime_error("geometric_inverse: leading scalar block is not invertible");
  ScalarMatrix pinv_full(m.n());
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) pinv_full.at(C[c], R[r]) = (*pinv)(c, r);
  EnvMatrix pe = EnvMatrix::from_scalar(p, m.rows(), m.cols());
  EnvMatrix ne = m - pe;
  EnvMatrix pinv_e = EnvMatrix::from_scalar(pinv_full, m.cols(), m.rows());
  EnvMatrix k = mul(pinv_e, ne) * Rational(-1);
  EnvMatrix term = pinv_e, acc = pinv_e;
  for (int iter = 0;; ++iter) {
    if (iter > 64) throw std::runtime_error("geometric_inverse: series does not terminate");
    term = mul(k, term);
    if (term.is_zero()) break;
    acc = acc + term;
  }
  MatrixComparison left = compare(mul(m, acc), EnvMatrix::identity(m.n(), m.rows()));
  MatrixComparison right = compare(mul(acc, m), EnvMatrix::identity(m.n(), m.cols()));
  if (!left.equal || !right.equal)
    throw std::runtime_error("geometric_inverse: identity check failed: " +
                             (left.equal ? right.describe() : left.describe()));
  return acc;
}

EnvMatrix quasideterminant(const EnvMatrix& a, const BoxSubset& u, const BoxSubset& w, int target_lo,
                           const Orderer& ord, ScalingStrategy strategy, const Scaling& given) {
  BoxSubset wc = set_minus(a.rows(), w);
  BoxSubset uc = set_minus(a.cols(), u);
  EnvMatrix head = a.restrict(w, u).apply_one(ord);
  if (wc.boxes.empty() && uc.boxes.empty()) return head;
  if (wc.size() != uc.size())
    throw std::invalid_argument("quasideterminant: complementary block " + wc.tag + " x " + uc.tag +
                                " is not square");
  EnvMatrix awu = a.restrict(w, uc);
  int t = awu.top_bound();
  int inner_lo = t == kExact ? target_lo : target_lo - t;
  EnvMatrix x = a.restrict(wc, u).apply_one(ord);
  EnvMatrix y;
  try {
    y = solve_left(a.restrict(wc, uc), x, ord, inner_lo, strategy, given).y;
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(std::string("quasideterminant: complementary block not invertible: ") + e.what());
  }
  return head - mul(awu, y, ord);
}

EnvMatrix quasideterminant_definition(const EnvMatrix& a, const BoxSubset& u, const BoxSubset& w,
                                      int target_lo) {
  int want = target_lo;
  for (int attempt = 0; attempt < 6; ++attempt) {
    EnvMatrix ainv = geometric_inverse(a, want);
    EnvMatrix q = ainv.restrict(u, w);
    EnvMatrix r = geometric_inverse(q, target_lo);
    if (r.lo() <= target_lo) return r;
    want -= r.lo() - target_lo;
  }
  throw std::runtime_error("quasideterminant_definition: could not reach the requested floor");
}

EnvMatrix residue(const XPolyMatrix& a, int m, const EnvMatrix& zero_shape) {
  auto it = a.find(-1 - m);
  if (it == a.end()) return EnvMatrix(zero_shape.n(), zero_shape.rows(), zero_shape.cols());
  return it->second;
}

}  // namespace wgen
