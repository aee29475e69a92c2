#include <doctest.h>

#include "wgen/centralizer.hpp"
#include "wgen/linalg.hpp"
#include "wgen/pyramid.hpp"

using namespace wgen;

namespace {

// dim {X : XF = FX} from the N^2 x N^2 linear system.
int brute_force_centralizer_dim(const Pyramid& p) {
  int n = p.N();
  ScalarMatrix f = p.F();
  QMatrix sys(n * n, n * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      ScalarMatrix x = ScalarMatrix::elementary(n, a, b);
      ScalarMatrix c = x * f - f * x;
      int col = (a - 1) * n + (b - 1);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) sys((i - 1) * n + (j - 1), col) = c.at(i, j);
    }
  return n * n - sys.rank();
}

QMatrix flatten(const std::vector<CentralizerElement>& els, int n) {
  QMatrix m(int(els.size()), n * n);
  for (size_t r = 0; r < els.size(); ++r)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) m(int(r), (i - 1) * n + (j - 1)) = els[r].phi.at(i, j);
  return m;
}

}  // namespace

TEST_CASE("3,3,2,1 has a 29 dimensional centralizer") {
  Partition part = Partition::from_lengths({3, 3, 2, 1});
  CHECK(centralizer_dimension_formula(part) == 29);
  CHECK(build_basis(build_pyramid(part, Alignment::Right)).dim() == 29);
  CHECK(build_basis(build_pyramid(part, Alignment::Dynkin)).dim() == 29);
}

TEST_CASE("principal nilpotent in gl_2: f = E_21") {
  Pyramid p = build_pyramid(Partition::from_lengths({2}), Alignment::Right);
  ScalarMatrix f = p.F();
  CHECK(f == ScalarMatrix::elementary(2, 2, 1));
  CentralizerBasis b = build_basis(p);
  REQUIRE(b.dim() == 2);
  // u = E_21 with phi_1(u) = 1
  CHECK(b.elements[0].ell == 0);
  CHECK(b.elements[0].phi == ScalarMatrix::elementary(2, 2, 1));
  CHECK(b.elements[1].ell == 1);
  CHECK(b.elements[1].phi == ScalarMatrix::identity(2));
}

TEST_CASE("dimension formula against the brute force centralizer") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& part : partitions_of(n)) {
      Pyramid p = build_pyramid(part, Alignment::Right);
      CAPTURE(part.str());
      CHECK(centralizer_dimension_formula(part) == brute_force_centralizer_dim(p));
      CHECK(build_basis(p).dim() == centralizer_dimension_formula(part));
    }
}

TEST_CASE("basis elements commute with F, are independent and vanish past the row length") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& part : partitions_of(n))
      for (Alignment al : {Alignment::Right, Alignment::Dynkin, Alignment::Left}) {
        Pyramid p = build_pyramid(part, al);
        CentralizerBasis b = build_basis(p);
        ScalarMatrix f = p.F();
        for (const auto& e : b.elements) {
          CHECK(e.phi * f == f * e.phi);
          CHECK(e.ell <= std::min(e.h, e.k));
          CHECK(phi_ell(p, e.u, std::min(e.h, e.k) + 1).is_zero());
          CHECK(e.u == ScalarMatrix::elementary(p.N(), e.target, e.source));
          CHECK(e.dual == e.u.transpose());
        }
        CHECK(flatten(b.elements, p.N()).rank() == b.dim());
      }
}

TEST_CASE("phi_0 is the identity on Hom(V_+, V_-)") {
  Pyramid p = build_pyramid(Partition::from_lengths({3, 2}), Alignment::Right);
  for (int a : p.subspace(Sub::VPlus).boxes)
    for (int b : p.subspace(Sub::VMinus).boxes) {
      ScalarMatrix u = ScalarMatrix::elementary(p.N(), b, a);
      CHECK(phi_ell(p, u, 0) == u);
    }
}

TEST_CASE("g = g^f + U^perp and pi^f projects along U^perp") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& part : partitions_of(n)) {
      Pyramid p = build_pyramid(part, Alignment::Right);
      CentralizerBasis b = build_basis(p);
      ComplementData cd = complement_data(p, b);
      CHECK(int(cd.u_perp.size()) + b.dim() == p.N() * p.N());
      // pi^f vanishes on U^perp and fixes g^f.
      for (Gen g : cd.u_perp) CHECK(cd.pi_f[g].is_zero());
      for (const auto& e : b.elements) {
        EnvElement x = from_scalar_matrix(e.phi), image;
        for (const auto& [m, c] : x.terms()) image.axpy(c, cd.pi_f[Gen(m[0])]);
        CHECK(image == x);
      }
      // eta^f shifts by the pairing with f.
      for (int i = 1; i <= p.N(); ++i)
        for (int j = 1; j <= p.N(); ++j) {
          Gen g = gen(i, j);
          CommPoly expected = commutative_image(cd.pi_f[g]) + CommPoly(f_pairing(p, g));
          CHECK(cd.eta_gen[g] == expected);
        }
    }
}

TEST_CASE("eta^f is multiplicative") {
  Pyramid p = build_pyramid(Partition::from_lengths({2, 1}), Alignment::Right);
  ComplementData cd = complement_data(p, build_basis(p));
  CommPoly a = CommPoly::variable(gen(1, 2)), b = CommPoly::variable(gen(3, 1)) + CommPoly(Rational(2));
  CHECK(eta_f(a * b, cd) == eta_f(a, cd) * eta_f(b, cd));
  CHECK(eta_f(a + b, cd) == eta_f(a, cd) + eta_f(b, cd));
}

TEST_CASE("Z(z) for the principal nilpotent of gl_2") {
  Pyramid p = build_pyramid(Partition::from_lengths({2}), Alignment::Right);
  EnvMatrix z = z_matrix(p);
  CHECK(z.rows() == p.subspace(Sub::VPlus));
  CHECK(z.cols() == p.subspace(Sub::VMinus));
  // Z(z) = -(-z)^2 + sum_ell (-z)^ell phi_ell(u) paired with U = E_12: -z^2 + e_21 - z (e_11 + e_22).
  const ZSeries& s = z.at(1, 2);
  CHECK(s.exact());
  CHECK(s.coeff(2) == EnvElement(Rational(-1)));
  CHECK(s.coeff(1) == -(EnvElement::generator(1, 1) + EnvElement::generator(2, 2)));
  CHECK(s.coeff(0) == EnvElement::generator(2, 1));
}
