#pragma once

#include <array>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wgen/linalg.hpp"
#include "wgen/pyramid.hpp"

namespace wgen {

constexpr int kNumIds = kMaxN * kMaxN;

// A PBW monomial: generator ids, non-decreasing for the order in use.
using Monomial = std::string;

inline Monomial mono(std::initializer_list<Gen> g) { return Monomial(g.begin(), g.end()); }

// Canonical order for printing and serialization: shorter first, then bytewise.
bool monomial_less(const Monomial& a, const Monomial& b);

class EnvElement {
 public:
  using Table = std::unordered_map<Monomial, Rational>;

  EnvElement() = default;
  explicit EnvElement(const Rational& c);
  static EnvElement generator(Gen g);
  static EnvElement generator(int i, int j) { return generator(gen(i, j)); }
  static EnvElement monomial(const Monomial& m, const Rational& c = 1);

  const Table& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  Rational coeff(const Monomial& m) const;
  Rational constant() const { return coeff(Monomial()); }
  // Highest monomial length present (0 for scalars and for zero).
  int degree() const;

  void add_term(const Monomial& m, const Rational& c);
  EnvElement& operator+=(const EnvElement& o);
  EnvElement& operator-=(const EnvElement& o);
  EnvElement& operator*=(const Rational& c);
  // this += c * o
  void axpy(const Rational& c, const EnvElement& o);

  friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
  friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
  friend EnvElement operator*(EnvElement a, const Rational& c) { return a *= c; }
  friend EnvElement operator*(const Rational& c, EnvElement a) { return a *= c; }
  EnvElement operator-() const { return *this * Rational(-1); }
  bool operator==(const EnvElement& o) const { return t_ == o.t_; }
  bool operator!=(const EnvElement& o) const { return !(t_ == o.t_); }

  // Terms in canonical order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;
  // e_{ij} notation, e.g. "e_{21} + e_{11} - e_{11}e_{22}".
  std::string str() const;

 private:
  Table t_;
};

// Normal ordering engine. Monomials are kept non-decreasing for a rank on the
// generator ids. With an optional set m (ranked after everything else) and a
// character chi on m, the engine computes in the left module U(g)/I where
// I = U(g){b - chi(b) : b in m}; a normal-form vector then only contains
// generators outside m.
class Orderer {
 public:
  // Plain U(gl_N) with lexicographic order on (i,j).
  Orderer();
  Orderer(const std::array<int, kNumIds>& rank, const std::vector<Gen>& m,
          const std::map<Gen, Rational>& chi);

  bool module_mode() const { return module_; }
  int rank(Gen g) const { return rank_[g]; }
  bool in_m(Gen g) const { return in_m_[g]; }
  const Rational& chi(Gen g) const { return chi_[g]; }

  // g * u with u a normal monomial; result in normal form.
  std::shared_ptr<const EnvElement> left_mul(Gen g, const Monomial& u) const;
  EnvElement left_mul(Gen g, const EnvElement& v) const;
  // x * v: the words of x act right to left on the normal-form element v.
  EnvElement act(const EnvElement& x, const EnvElement& v) const;
  // Bring an arbitrary word into normal form (x * 1 or x * 1bar).
  EnvElement normal_form(const EnvElement& x) const;

  size_t memo_size() const;
  void clear_memo() const;

 private:
  EnvElement compute(Gen g, const Monomial& u) const;

  std::array<int, kNumIds> rank_{};
  std::array<bool, kNumIds> in_m_{};
  std::array<Rational, kNumIds> chi_{};
  bool module_ = false;

  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, std::shared_ptr<const EnvElement>> memo_;
  static constexpr size_t kMemoCap = 4'000'000;
};

// The shared plain orderer.
const Orderer& plain_orderer();

// [e_{ij}, e_{hk}] = delta_{jh} e_{ik} - delta_{ki} e_{hj}
EnvElement lie_bracket(Gen a, Gen b);

EnvElement multiply(const EnvElement& x, const EnvElement& y);
EnvElement bracket(const EnvElement& x, const EnvElement& y);

// (e_{ij}|e_{hk}) = delta_{jh} delta_{ik}; throws on non-linear arguments.
Rational trace_form(const EnvElement& a, const EnvElement& b);
// The linear part of a degree-one element as a scalar matrix A with a = sum A_{ij} e_{ij}.
ScalarMatrix to_scalar_matrix(int n, const EnvElement& a);
EnvElement from_scalar_matrix(const ScalarMatrix& a);

// Twice the Γ-degree; nullopt when x is not homogeneous.
std::optional<int> gamma_degree2(const EnvElement& x, const Pyramid& p);
// Degree for a diagonal grading h (deg e_{ij} = h_i - h_j); h indexed 1..N.
std::optional<Rational> g_degree(const EnvElement& x, const std::vector<Rational>& h);

constexpr int kZeroDegree = std::numeric_limits<int>::min();
// Twice the Kazhdan degree: max over monomials of sum (2 - deg2 of factor).
// Returns kZeroDegree for x = 0.
int kazhdan_degree2(const EnvElement& x, const Pyramid& p);
int kazhdan_weight2(const Monomial& m, const Pyramid& p);

// Commutative polynomial in S(gl_N); monomials sorted by id.
class CommPoly {
 public:
  CommPoly() = default;
  explicit CommPoly(const Rational& c);
  static CommPoly variable(Gen g);
  void add_term(Monomial m, const Rational& c);
  const std::map<Monomial, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly operator*(const CommPoly& o) const;
  CommPoly operator*(const Rational& c) const;
  CommPoly operator+(const CommPoly& o) const { CommPoly r = *this; return r += o; }
  CommPoly operator-(const CommPoly& o) const { CommPoly r = *this; return r -= o; }
  bool operator==(const CommPoly& o) const { return t_ == o.t_; }
  bool operator!=(const CommPoly& o) const { return !(t_ == o.t_); }
  std::string str() const;

 private:
  std::map<Monomial, Rational> t_;
};

// Top part of x at twice-Kazhdan degree delta2 with the order forgotten.
// Throws if x has a monomial of Kazhdan degree above delta2.
CommPoly symbol(const EnvElement& x, int delta2, const Pyramid& p);
// Commutative image of an element (all monomials).
CommPoly commutative_image(const EnvElement& x);

// Box-indexed n x n matrix with entries in U(gl_N).
class GMatrix {
 public:
  GMatrix() = default;
  explicit GMatrix(int n) : n_(n), a_(size_t(n) * n) {}
  static GMatrix from_scalar(const ScalarMatrix& s);

  int n() const { return n_; }
  EnvElement& at(int a, int b) { return a_[size_t(a - 1) * n_ + (b - 1)]; }
  const EnvElement& at(int a, int b) const { return a_[size_t(a - 1) * n_ + (b - 1)]; }

  GMatrix operator+(const GMatrix& o) const;
  GMatrix operator-(const GMatrix& o) const;
  GMatrix operator*(const GMatrix& o) const;
  GMatrix operator*(const Rational& c) const;
  friend GMatrix operator*(const ScalarMatrix& s, const GMatrix& g);
  friend GMatrix operator*(const GMatrix& g, const ScalarMatrix& s);
  bool operator==(const GMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const GMatrix& o) const { return !(*this == o); }
  bool is_zero() const;
  // Entries are all scalars: return them.
  std::optional<ScalarMatrix> as_scalar() const;

 private:
  int n_ = 0;
  std::vector<EnvElement> a_;
};

// [A, B]^1 with (a,d) entry sum_b [A_{ab}, B_{bd}].
GMatrix bracket1(const GMatrix& a, const GMatrix& b);

enum class ESelect { All, Degree, Set };
// E (all), E_j (Γ-degree j: e_{ba} with deg2(e_{ba}) = j2), or E restricted to a set of generators.
GMatrix build_E(const Pyramid& p, ESelect which, int j2 = 0, const std::vector<Gen>& set = {});
// E_{<=0}: entries e_{ba} with deg(e_{ba}) <= 0.
GMatrix build_E_le0(const Pyramid& p);

}  // namespace wgen
