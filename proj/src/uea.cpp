#include "wgen/uea.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wgen {

bool monomial_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

EnvElement::EnvElement(const Rational& c) {
  if (c != 0) t_.emplace(Monomial(), c);
}

EnvElement EnvElement::generator(Gen g) { return monomial(Monomial(1, char(g))); }

EnvElement EnvElement::monomial(const Monomial& m, const Rational& c) {
  EnvElement e;
  if (c != 0) e.t_.emplace(m, c);
  return e;
}

Rational EnvElement::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

int EnvElement::degree() const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, int(m.size()));
  return d;
}

void EnvElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

EnvElement& EnvElement::operator+=(const EnvElement& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

EnvElement& EnvElement::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, v] : t_) v *= c;
  return *this;
}

void EnvElement::axpy(const Rational& c, const EnvElement& o) {
  if (c == 0) return;
  Rational tmp;
  for (const auto& [m, v] : o.t_) {
    mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), v.get_mpq_t());
    add_term(m, tmp);
  }
}

std::vector<std::pair<Monomial, Rational>> EnvElement::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return monomial_less(a.first, b.first); });
  return v;
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (size_t k = 0; k < m.size();) {
    size_t e = k;
    while (e < m.size() && m[e] == m[k]) ++e;
    Gen g = Gen(m[k]);
    s += "e_{" + std::to_string(gen_i(g)) + std::to_string(gen_j(g)) + "}";
    if (e - k > 1) s += "^" + std::to_string(e - k);
    k = e;
  }
  return s;
}

template <class Terms, class MonoStr>
std::string render_terms(const Terms& terms, MonoStr mono_str) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational a = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (m.empty())
      s += to_string(a);
    else {
      if (a != 1) s += to_string(a);
      s += mono_str(m);
    }
  }
  return s;
}

}  // namespace

std::string EnvElement::str() const { return render_terms(sorted_terms(), monomial_str); }

EnvElement lie_bracket(Gen a, Gen b) {
  int i = gen_i(a), j = gen_j(a), h = gen_i(b), k = gen_j(b);
  EnvElement r;
  if (j == h) r.add_term(Monomial(1, char(gen(i, k))), 1);
  if (k == i) r.add_term(Monomial(1, char(gen(h, j))), -1);
  return r;
}

Orderer::Orderer() {
  for (int g = 0; g < kNumIds; ++g) rank_[g] = g;
}

Orderer::Orderer(const std::array<int, kNumIds>& rank, const std::vector<Gen>& m,
                 const std::map<Gen, Rational>& chi)
    : rank_(rank), module_(true) {
  for (Gen g : m) in_m_[g] = true;
  for (const auto& [g, c] : chi) chi_[g] = c;
  for (Gen g : m)
    for (int h = 0; h < kNumIds; ++h)
      if (!in_m_[h] && rank_[h] >= rank_[g])
        throw std::invalid_argument("Orderer: m generators must rank last");
}

namespace {

// Adds c * (g * u) to out for the cases that need no rewriting; returns false otherwise.
inline bool trivial_left_mul(const Orderer& o, Gen g, const Monomial& u, const Rational& c,
                             EnvElement& out) {
  if (u.empty()) {
    if (o.module_mode() && o.in_m(g)) {
      if (o.chi(g) != 0) out.add_term(Monomial(), c * o.chi(g));
      return true;
    }
    out.add_term(Monomial(1, char(g)), c);
    return true;
  }
  if (o.module_mode() && o.in_m(g)) return false;
  if (o.rank(g) <= o.rank(Gen(u[0]))) {
    Monomial w;
    w.reserve(u.size() + 1);
    w.push_back(char(g));
    w += u;
    out.add_term(w, c);
    return true;
  }
  return false;
}

}  // namespace

EnvElement Orderer::compute(Gen g, const Monomial& u) const {
  // g u1 rest = u1 (g rest) + [g,u1] rest
  Gen u1 = Gen(u[0]);
  Monomial rest = u.substr(1);
  EnvElement out;
  EnvElement grest;
  if (!trivial_left_mul(*this, g, rest, Rational(1), grest)) grest = *left_mul(g, rest);
  for (const auto& [m, c] : grest.terms()) {
    if (trivial_left_mul(*this, u1, m, c, out)) continue;
    out.axpy(c, *left_mul(u1, m));
  }
  EnvElement br = lie_bracket(g, u1);
  for (const auto& [m, c] : br.terms()) {
    Gen h = Gen(m[0]);
    if (trivial_left_mul(*this, h, rest, c, out)) continue;
    out.axpy(c, *left_mul(h, rest));
  }
  return out;
}

std::shared_ptr<const EnvElement> Orderer::left_mul(Gen g, const Monomial& u) const {
  std::string key;
  key.reserve(u.size() + 1);
  key.push_back(char(g));
  key += u;
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  EnvElement triv;
  std::shared_ptr<const EnvElement> res;
  if (trivial_left_mul(*this, g, u, Rational(1), triv))
    res = std::make_shared<const EnvElement>(std::move(triv));
  else
    res = std::make_shared<const EnvElement>(compute(g, u));
  std::lock_guard<std::mutex> lk(mu_);
  if (memo_.size() >= kMemoCap) memo_.clear();
  memo_.emplace(std::move(key), res);
  return res;
}

EnvElement Orderer::left_mul(Gen g, const EnvElement& v) const {
  EnvElement out;
  for (const auto& [m, c] : v.terms()) {
    if (trivial_left_mul(*this, g, m, c, out)) continue;
    out.axpy(c, *left_mul(g, m));
  }
  return out;
}

namespace {

struct Trie {
  Rational coeff = 0;
  std::map<Gen, std::unique_ptr<Trie>> child;
};

void eval_trie(const Orderer& o, const Trie& t, const EnvElement& v, EnvElement& out) {
  if (t.coeff != 0) out.axpy(t.coeff, v);
  for (const auto& [g, sub] : t.child) {
    EnvElement w = o.left_mul(g, v);
    if (w.is_zero()) continue;
    eval_trie(o, *sub, w, out);
  }
}

}  // namespace

EnvElement Orderer::act(const EnvElement& x, const EnvElement& v) const {
  if (x.is_zero() || v.is_zero()) return EnvElement();
  Trie root;
  for (const auto& [m, c] : x.terms()) {
    Trie* t = &root;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      auto& slot = t->child[Gen(*it)];
      if (!slot) slot = std::make_unique<Trie>();
      t = slot.get();
    }
    t->coeff += c;
  }
  EnvElement out;
  eval_trie(*this, root, v, out);
  return out;
}

EnvElement Orderer::normal_form(const EnvElement& x) const { return act(x, EnvElement(Rational(1))); }

size_t Orderer::memo_size() const {
  std::lock_guard<std::mutex> lk(mu_);
  return memo_.size();
}

void Orderer::clear_memo() const {
  std::lock_guard<std::mutex> lk(mu_);
  memo_.clear();
}

const Orderer& plain_orderer() {
  static const Orderer o;
  return o;
}

EnvElement multiply(const EnvElement& x, const EnvElement& y) { return plain_orderer().act(x, y); }

EnvElement bracket(const EnvElement& x, const EnvElement& y) { return multiply(x, y) - multiply(y, x); }

Rational trace_form(const EnvElement& a, const EnvElement& b) {
  auto linear = [](const EnvElement& x) {
    for (const auto& [m, c] : x.terms())
      if (m.size() != 1) throw std::invalid_argument("trace_form: argument is not linear in the generators");
  };
  linear(a);
  linear(b);
  Rational r = 0;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Gen x = Gen(ma[0]), y = Gen(mb[0]);
      if (gen_j(x) == gen_i(y) && gen_i(x) == gen_j(y)) r += ca * cb;
    }
  return r;
}

ScalarMatrix to_scalar_matrix(int n, const EnvElement& a) {
  ScalarMatrix s(n);
  for (const auto& [m, c] : a.terms()) {
    if (m.size() != 1) throw std::invalid_argument("to_scalar_matrix: element is not linear");
    s.at(gen_i(Gen(m[0])), gen_j(Gen(m[0]))) += c;
  }
  return s;
}

EnvElement from_scalar_matrix(const ScalarMatrix& a) {
  EnvElement e;
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 1; j <= a.n(); ++j)
      if (a.at(i, j) != 0) e.add_term(Monomial(1, char(gen(i, j))), a.at(i, j));
  return e;
}

std::optional<int> gamma_degree2(const EnvElement& x, const Pyramid& p) {
  std::optional<int> d;
  for (const auto& [m, c] : x.terms()) {
    int s = 0;
    for (char g : m) s += p.deg2(Gen(g));
    if (d && *d != s) return std::nullopt;
    d = s;
  }
  return d.value_or(0);
}

std::optional<Rational> g_degree(const EnvElement& x, const std::vector<Rational>& h) {
  std::optional<Rational> d;
  for (const auto& [m, c] : x.terms()) {
    Rational s = 0;
    for (char g : m) s += h[gen_i(Gen(g))] - h[gen_j(Gen(g))];
    if (d && *d != s) return std::nullopt;
    d = s;
  }
  return d.value_or(Rational(0));
}

int kazhdan_weight2(const Monomial& m, const Pyramid& p) {
  int w = 0;
  for (char g : m) w += 2 - p.deg2(Gen(g));
  return w;
}

int kazhdan_degree2(const EnvElement& x, const Pyramid& p) {
  int d = kZeroDegree;
  for (const auto& [m, c] : x.terms()) d = std::max(d, kazhdan_weight2(m, p));
  return d;
}

CommPoly::CommPoly(const Rational& c) {
  if (c != 0) t_.emplace(Monomial(), c);
}

CommPoly CommPoly::variable(Gen g) {
  CommPoly p;
  p.t_.emplace(Monomial(1, char(g)), 1);
  return p;
}

void CommPoly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  std::sort(m.begin(), m.end(), [](char a, char b) { return Gen(a) < Gen(b); });
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(std::move(m), c);
    return;
  }
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

CommPoly CommPoly::operator*(const CommPoly& o) const {
  CommPoly r;
  for (const auto& [a, ca] : t_)
    for (const auto& [b, cb] : o.t_) r.add_term(a + b, ca * cb);
  return r;
}

CommPoly CommPoly::operator*(const Rational& c) const {
  CommPoly r;
  if (c == 0) return r;
  r = *this;
  for (auto& [m, v] : r.t_) v *= c;
  return r;
}

std::string CommPoly::str() const {
  std::vector<std::pair<Monomial, Rational>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return monomial_less(a.first, b.first); });
  return render_terms(v, monomial_str);
}

CommPoly symbol(const EnvElement& x, int delta2, const Pyramid& p) {
  CommPoly s;
  for (const auto& [m, c] : x.terms()) {
    int w = kazhdan_weight2(m, p);
    if (w > delta2)
      throw std::invalid_argument("symbol: element has Kazhdan degree above the requested level");
    if (w == delta2) s.add_term(m, c);
  }
  return s;
}

CommPoly commutative_image(const EnvElement& x) {
  CommPoly s;
  for (const auto& [m, c] : x.terms()) s.add_term(m, c);
  return s;
}

GMatrix GMatrix::from_scalar(const ScalarMatrix& s) {
  GMatrix g(s.n());
  for (int a = 1; a <= s.n(); ++a)
    for (int b = 1; b <= s.n(); ++b)
      if (s.at(a, b) != 0) g.at(a, b) = EnvElement(s.at(a, b));
  return g;
}

GMatrix GMatrix::operator+(const GMatrix& o) const {
  GMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

GMatrix GMatrix::operator-(const GMatrix& o) const {
  GMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

GMatrix GMatrix::operator*(const GMatrix& o) const {
  GMatrix r(n_);
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b) {
      if (at(a, b).is_zero()) continue;
      for (int c = 1; c <= n_; ++c)
        if (!o.at(b, c).is_zero()) r.at(a, c) += multiply(at(a, b), o.at(b, c));
    }
  return r;
}

GMatrix GMatrix::operator*(const Rational& c) const {
  GMatrix r = *this;
  for (auto& e : r.a_) e *= c;
  return r;
}

GMatrix operator*(const ScalarMatrix& s, const GMatrix& g) {
  GMatrix r(g.n());
  for (int a = 1; a <= g.n(); ++a)
    for (int b = 1; b <= g.n(); ++b) {
      if (s.at(a, b) == 0) continue;
      for (int c = 1; c <= g.n(); ++c) r.at(a, c).axpy(s.at(a, b), g.at(b, c));
    }
  return r;
}

GMatrix operator*(const GMatrix& g, const ScalarMatrix& s) {
  GMatrix r(g.n());
  for (int a = 1; a <= g.n(); ++a)
    for (int b = 1; b <= g.n(); ++b) {
      if (g.at(a, b).is_zero()) continue;
      for (int c = 1; c <= g.n(); ++c)
        if (s.at(b, c) != 0) r.at(a, c).axpy(s.at(b, c), g.at(a, b));
    }
  return r;
}

bool GMatrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

std::optional<ScalarMatrix> GMatrix::as_scalar() const {
  ScalarMatrix s(n_);
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b) {
      const EnvElement& e = at(a, b);
      if (e.is_zero()) continue;
      if (e.size() != 1 || !e.terms().begin()->first.empty()) return std::nullopt;
      s.at(a, b) = e.constant();
    }
  return s;
}

GMatrix bracket1(const GMatrix& a, const GMatrix& b) {
  GMatrix r(a.n());
  for (int i = 1; i <= a.n(); ++i)
    for (int k = 1; k <= a.n(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 1; j <= a.n(); ++j)
        if (!b.at(k, j).is_zero()) r.at(i, j) += bracket(a.at(i, k), b.at(k, j));
    }
  return r;
}

GMatrix build_E(const Pyramid& p, ESelect which, int j2, const std::vector<Gen>& set) {
  int n = p.N();
  GMatrix e(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      Gen g = gen(b, a);
      bool keep = which == ESelect::All || (which == ESelect::Degree && p.deg2(g) == j2) ||
                  (which == ESelect::Set && std::find(set.begin(), set.end(), g) != set.end());
      if (keep) e.at(a, b) = EnvElement::generator(g);
    }
  return e;
}

GMatrix build_E_le0(const Pyramid& p) {
  int n = p.N();
  GMatrix e(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (p.deg2(b, a) <= 0) e.at(a, b) = EnvElement::generator(b, a);
  return e;
}

}  // namespace wgen
