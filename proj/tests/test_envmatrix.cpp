#include <doctest.h>

#include "wgen/envmatrix.hpp"
#include "wgen/lax.hpp"
#include "wgen/pyramid.hpp"

using namespace wgen;

namespace {

EnvElement e(int i, int j) { return EnvElement::generator(i, j); }
EnvElement c(long v) { return EnvElement(Rational(v)); }

BoxSubset boxes(std::vector<int> b) { return BoxSubset{std::move(b), ""}; }

// z 1 + E on gl_n with E_ab = e_ba.
EnvMatrix z_plus_e(int n) {
  BoxSubset all = EnvMatrix::full(n);
  EnvMatrix a(n, all, all);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      a.at(i, j).set(0, e(j, i));
      if (i == j) a.at(i, j).add(1, c(1));
    }
  return a;
}

}  // namespace

TEST_CASE("series arithmetic keeps the known range") {
  ZSeries a(-3), b;
  a.set(2, e(1, 1));
  a.set(-3, c(4));
  b.set(0, e(1, 2));
  b.set(-5, c(1));
  ZSeries s = a + b;
  CHECK(s.lo() == -3);
  CHECK(s.coeff(-5).is_zero());
  CHECK(s.coeff(0) == e(1, 2));
  CHECK(s.top() == 2);
  ZSeries sh = a.shifted(2);
  CHECK(sh.lo() == -1);
  CHECK(sh.coeff(4) == e(1, 1));
  a.truncate(0);
  CHECK(a.lo() == 0);
  CHECK(a.coeff(-3).is_zero());
  CHECK(b.exact());
}

TEST_CASE("series products use the orderer") {
  ZSeries x, y;
  x.set(1, c(1));
  x.set(0, e(2, 1));
  y.set(0, e(1, 1));
  ZSeries p = mul(x, y);
  CHECK(p.coeff(1) == e(1, 1));
  CHECK(p.coeff(0) == multiply(e(2, 1), e(1, 1)));
  CHECK(bracket(x, y).coeff(0) == bracket(e(2, 1), e(1, 1)));
}

TEST_CASE("comparison reports the first difference inside the common range") {
  ZSeries a(-4), b(-2);
  a.set(1, e(1, 1));
  b.set(1, e(1, 1));
  a.set(-3, c(1));
  SeriesComparison cmp = compare(a, b);
  CHECK(cmp.equal);
  CHECK(cmp.checked_lo == -2);
  b.set(-1, c(2));
  cmp = compare(a, b);
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.witness_exponent == -1);
}

TEST_CASE("inverse of z + N for nilpotent scalar N") {
  // (z + N)^{-1} = sum_k (-1)^k N^k z^{-1-k}, finite for N strictly upper triangular.
  BoxSubset all = EnvMatrix::full(3);
  ScalarMatrix n(3);
  n.at(1, 2) = 1;
  n.at(2, 3) = 2;
  EnvMatrix a = EnvMatrix::from_scalar(n, all, all) + EnvMatrix::identity(3, all).shifted(1);
  EnvMatrix inv = geometric_inverse(a, -8);
  CHECK(inv.at(1, 1).coeff(-1) == c(1));
  CHECK(inv.at(1, 2).coeff(-2) == c(-1));
  CHECK(inv.at(1, 3).coeff(-3) == c(2));
  CHECK(inv.at(2, 3).coeff(-2) == c(-2));
  for (int k = -8; k <= 1; ++k)
    if (k != -1 && k != -2 && k != -3) CHECK(inv.at(1, 3).coeff(k).is_zero());
  EnvMatrix prod = mul(a, inv);
  prod.truncate(-6);
  EnvMatrix id = EnvMatrix::identity(3, all);
  id.truncate(-6);
  CHECK(compare(prod, id).equal);
}

TEST_CASE("2 x 2 quasideterminant of z + E matches the Schur complement") {
  // |z + E|_{11} = z + e_11 - e_21 (z + e_22)^{-1} e_12
  //             = z + e_11 - sum_k (-1)^k z^{-1-k} e_21 e_22^k e_12
  const int K = 6;
  EnvMatrix a = z_plus_e(2);
  EnvMatrix q = quasideterminant(a, boxes({1}), boxes({1}), -K);
  ZSeries expected(-K);
  expected.set(1, c(1));
  expected.set(0, e(1, 1));
  EnvElement pw(Rational(1));
  for (int k = 0; -1 - k >= -K; ++k) {
    EnvElement term = multiply(multiply(e(2, 1), pw), e(1, 2));
    expected.axpy(-1 - k, k % 2 ? Rational(1) : Rational(-1), term);
    pw = multiply(pw, e(2, 2));
  }
  CHECK(compare(q.at(1, 1), expected).equal);
  CHECK(compare(q.at(1, 1), expected).checked_lo <= -K);
}

TEST_CASE("Schur complement form agrees with the definition form") {
  for (auto lengths : {std::vector<int>{2, 1}, std::vector<int>{2, 2}, std::vector<int>{3, 1}}) {
    Pyramid p = build_pyramid(Partition::from_lengths(lengths), Alignment::Right);
    EnvMatrix a = t_matrix(p);
    BoxSubset u = p.subspace(Sub::VMinusD), w = p.subspace(Sub::VPlusD);
    EnvMatrix schur = quasideterminant(a, u, w, -6);
    EnvMatrix def = quasideterminant_definition(a, u, w, -6);
    MatrixComparison cmp = compare(schur, def);
    CHECK_MESSAGE(cmp.equal, cmp.describe());
    CHECK(cmp.checked_lo <= -4);
  }
}

TEST_CASE("matrix products are associative on the common range") {
  EnvMatrix a = z_plus_e(2), b = z_plus_e(2).shifted(-1), d = z_plus_e(2);
  EnvMatrix l = mul(mul(a, b), d), r = mul(a, mul(b, d));
  CHECK(compare(l, r).equal);
  EnvMatrix br = bracket1(a, d);
  CHECK(br.at(1, 2).coeff(0) == bracket(e(1, 1), e(2, 1)) + bracket(e(2, 1), e(2, 2)));
}

TEST_CASE("restriction pads with zeros outside the shape") {
  EnvMatrix a = z_plus_e(2);
  EnvMatrix r = a.restrict(boxes({2}), boxes({1, 2}));
  CHECK(r.at(2, 1).coeff(0) == e(1, 2));
  EnvMatrix small(3, boxes({1}), boxes({1}));
  small.at(1, 1).set(0, c(3));
  EnvMatrix big = small.restrict(boxes({1, 3}), boxes({1, 3}));
  CHECK(big.at(3, 3).is_zero());
  CHECK(big.at(1, 1).coeff(0) == c(3));
}

TEST_CASE("residues pick the coefficient of x^{-1-m}") {
  EnvMatrix shape(1, boxes({1}), boxes({1}));
  XPolyMatrix f;
  EnvMatrix c2 = shape, c3 = shape;
  c2.at(1, 1).set(0, e(1, 1));
  c3.at(1, 1).set(0, c(5));
  f[-2] = c2;
  f[-3] = c3;
  CHECK(residue(f, 1, shape).at(1, 1).coeff(0) == e(1, 1));
  CHECK(residue(f, 2, shape).at(1, 1).coeff(0) == c(5));
  CHECK(residue(f, 0, shape).is_zero());
}

TEST_CASE("matrices render entry by entry") {
  EnvMatrix a = z_plus_e(2);
  std::string s = a.str();
  CHECK(s.find("(1,1): z + e_{11}") != std::string::npos);
  CHECK(s == z_plus_e(2).str());
}

TEST_CASE("scalar 2 x 2 quasideterminant is a - b d^{-1} c") {
  BoxSubset all = EnvMatrix::full(2);
  ScalarMatrix s(2);
  s.at(1, 1) = 3;
  s.at(1, 2) = 2;
  s.at(2, 1) = 5;
  s.at(2, 2) = 4;
  EnvMatrix a = EnvMatrix::from_scalar(s, all, all);
  EnvMatrix q = quasideterminant(a, boxes({1}), boxes({1}), -2);
  CHECK(q.at(1, 1).coeff(0) == EnvElement(Rational(3) - Rational(2) * Rational(5) / Rational(4)));
  for (int k = -2; k <= 1; ++k)
    if (k != 0) CHECK(q.at(1, 1).coeff(k).is_zero());
}

TEST_CASE("quasideterminant over the full index sets is the matrix itself") {
  EnvMatrix a = z_plus_e(2);
  BoxSubset all = EnvMatrix::full(2);
  EnvMatrix q = quasideterminant(a, all, all, -4);
  CHECK(compare(q, a).equal);
}

TEST_CASE("the column block of z + F + E_p + D has a polynomial inverse for 2,1") {
  // T(z) is built from that finite inverse, so it must come out exact.
  Pyramid p = build_pyramid(Partition::from_lengths({2, 1}), Alignment::Right);
  EnvMatrix t = t_matrix(p);
  for (int a : t.rows().boxes)
    for (int b : t.cols().boxes) CHECK(t.at(a, b).exact());
}
