#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wgen/centralizer.hpp"
#include "wgen/envmatrix.hpp"
#include "wgen/pyramid.hpp"
#include "wgen/reduction.hpp"

namespace wgen {

// The matrix W~(z) in U(g)[z] ⊗ Hom(V_-, V_+) (rows V_+, columns V_-) of a right
// aligned pyramid, built by the column-removal recursion. Results are cached per
// partition.
EnvMatrix w_tilde(const Pyramid& p);

// The same matrix inside n >= m.n() boxes (the reduced pyramids keep their labels).
EnvMatrix embed(const EnvMatrix& m, int n);

// One column step shared by the recursions for W~, T, L~ and |W~|:
//   X' 1_{V_-^u} - (1/r_1)[X', 1_{F^t V_-^d} E_{-1}]^1 - X' F^t (z + E_0 + D) 1_{V_-^d}
//   (+ Res_x x^{-1} X'(z) 1_{V_-^u} (1 + x^{-1} F)^{-1} X'(x) F^t 1_{V_-^d} if residue_term),
// with X' given inside the N boxes of p; the result has shape V x V.
EnvMatrix column_step(const Pyramid& p, const EnvMatrix& x_prime, bool residue_term);

struct Generator {
  CentralizerElement element;  // carries (h, k, ell), source a, target b
  EnvElement w_tilde;          // representative in U(g)
  EnvElement w;                // normal form in the context of the set
  std::string label() const { return element.label(); }
};

struct GeneratorSet {
  Pyramid pyramid;
  IsotropicSet isotropic;
  // W~(z) for the right aligned case; W^{Γ,l}(z) with transported entries otherwise.
  EnvMatrix matrix;
  std::vector<Generator> generators;
  int size() const { return int(generators.size()); }
};

// Read off the w~_{i,ell} from the block structure of W~(z):
// entry (a,b) = -delta(-z)^{k+1} + sum_{ell <= min(h,k)} (-z)^ell w~_{i,ell}.
// Throws std::logic_error if the entry has any other shape.
GeneratorSet extract(const EnvMatrix& wt, const Pyramid& p, const IdealContext* ctx = nullptr);

// z 1_{V_+}(1 + z F^t)^{-1} 1_{V_-} + sum_i sum_ell (-z)^ell w_{i,ell} U^i, using the w fields.
EnvMatrix generator_matrix(const Pyramid& p, const std::vector<Generator>& gens);

// Relabel boxes: e_{ij} -> e_{s(i) s(j)}, result brought back to PBW normal form.
EnvElement relabel(const EnvElement& x, const std::vector<int>& sigma);
// sigma[b] for boxes of the canonical pyramid with the same geometry as target.
std::vector<int> relabelling(const Pyramid& canonical, const Pyramid& target);

// Generators for an arbitrary good grading and isotropic set: the right aligned
// generators, relabelled to the boxes of p and transported to W(g,f,p,l).
// Asserts target membership, W^{Γ,l}(z) in F_1 and G-degree 0 for the sampled
// neutral gradings; throws std::runtime_error on any failure.
GeneratorSet w_general(const Pyramid& p, const IsotropicSet& l = {}, unsigned seed = 1);

// The first entry/exponent where the extended Kazhdan degree of M exceeds 1, if any.
// z counts 1 and the coefficient of E_{ab} is shifted by -(x(a) - x(b)).
std::optional<std::string> filtration_violation(const EnvMatrix& m, const Pyramid& p);
// The first entry/exponent whose coefficient is not of G-degree h_b - h_a.
std::optional<std::string> g_degree_violation(const EnvMatrix& m, const std::vector<Rational>& h);

// Neutral semisimple gradings (diagonal h, constant on the rectangles of the
// pyramid): the difference to the right aligned grading first, then seeded random
// ones. Each h is indexed by box, h[0] unused.
std::vector<std::vector<Rational>> neutral_gradings(const Pyramid& p, int count, unsigned seed);
bool is_neutral(const Pyramid& p, const std::vector<Rational>& h);

}  // namespace wgen
