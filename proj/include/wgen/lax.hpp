#pragma once

#include "wgen/envmatrix.hpp"
#include "wgen/generators.hpp"
#include "wgen/pyramid.hpp"
#include "wgen/reduction.hpp"

namespace wgen {

struct LaxOperator {
  Pyramid pyramid;
  IsotropicSet isotropic;
  EnvMatrix matrix;  // Hom(V_-^d, V_+^d): rows V_+^d, columns V_-^d
  bool reduced = true;  // entries are normal forms in U(g)/I rather than U(g) representatives
  // Every entry is known on exponents >= floor().
  int floor() const { return matrix.lo(); }
};

// z 1_V + F + E_p + D_m on V x V for the context (p, l).
EnvMatrix a_matrix(const Pyramid& p, const IsotropicSet& l = {});

// T(z) = |z 1 + F + E_p + D|_{V_-, V_+} for a right aligned pyramid; polynomial, built with
// the finite inverse of the block 1_{FV}(...)1_{F^tV}.
EnvMatrix t_matrix(const Pyramid& p);

// L(z) = |z 1 + F + E_p + D_m|_{V_-^d, V_+^d} 1bar to exponents >= -k.
// Right aligned with l = 0 goes through |T(z)|_{V_-^d, V_+^d}; with reduced = false the
// entries are the U(g) representatives L~(z). Other contexts use the module form with the
// scaling of the good grading.
LaxOperator l_matrix(const Pyramid& p, const IsotropicSet& l, int k, bool reduced = true);

// |W(z)|_{V_-^d, V_+^d} for a generator set (right aligned W~ or transported W^{Γ,l}).
LaxOperator quasidet_of_W(const GeneratorSet& gs, int k, bool reduced = true);

// Both sides of a recursion identity, for comparison on the common range.
struct RecursionSides {
  EnvMatrix direct;
  EnvMatrix recursive;
};

// T(z) against T'(z) 1_{V_-^u} - (1/r_1)[T', 1_{F^tV_-^d} E_{-1}]^1 - T' F^t (z + E_0 + D) 1_{V_-^d}.
RecursionSides t_recursion(const Pyramid& p);
// L~(z) against the same step applied to |L~'(z)|_{F^tV_-^d, V_+^d}, raw, to exponents >= -k.
RecursionSides l_recursion(const Pyramid& p, int k);
// Z(z) against its column recursion.
RecursionSides z_recursion(const Pyramid& p);
// |W~(z)|_{V_-^d, V_+^d} against the step applied to |W~'(z)|_{F^tV_-^d, V_+^d}, raw.
RecursionSides w_quasidet_recursion(const Pyramid& p, int k);
// |W~'|_{F^tV_-^d, V_+^d} directly and through | |W~'|_{V'^d_-, V'^d_+} |_{F^tV_-^d, V_+^d}.
RecursionSides w_hereditary(const Pyramid& p, int k);

}  // namespace wgen
