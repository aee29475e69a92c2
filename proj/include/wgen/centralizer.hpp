#pragma once

#include <string>
#include <vector>

#include "wgen/envmatrix.hpp"
#include "wgen/pyramid.hpp"
#include "wgen/uea.hpp"

namespace wgen {

// phi_ell(A) = sum_{i=0}^{ell} F^i (F^t)^ell A (F^t)^ell F^{ell-i}; A must lie in Hom(V_+, V_-).
ScalarMatrix phi_ell(const Pyramid& p, const ScalarMatrix& a, int ell);

struct CentralizerElement {
  int h = 0, k = 0;  // u is in Hom(V_+ ∩ (F^t)^h V_-, V_- ∩ F^k V_+)
  int ell = 0;
  int source = 0;  // box a: rightmost box of a row of length h+1
  int target = 0;  // box b: leftmost box of a row of length k+1
  ScalarMatrix u;     // E_{ba}
  ScalarMatrix dual;  // U^i = E_{ab}
  ScalarMatrix phi;   // phi_ell(u)
  std::string label() const;
};

struct CentralizerBasis {
  Pyramid pyramid;
  // The u_i (ell = 0 entries) and all phi_ell(u_i), ordered by (target row, source row, ell).
  std::vector<CentralizerElement> elements;
  int dim() const { return int(elements.size()); }
};

CentralizerBasis build_basis(const Pyramid& p);
// sum_{i,j} r_i r_j min(p_i, p_j) over the parts of the partition.
int centralizer_dimension_formula(const Partition& part);

// Z(z) in Hom(V_-, V_+) (rows V_+, columns V_-).
EnvMatrix z_matrix(const Pyramid& p);

// U^perp = 1_{F^t V} End V + 1_{V_-} (End V)[>0], as elementary matrices, and the
// projection pi^f onto g^f along it.
struct ComplementData {
  Pyramid pyramid;
  std::vector<Gen> u_perp;
  // pi^f(e_{ij}) for every generator, as a linear element of U(g).
  std::vector<EnvElement> pi_f;  // indexed by Gen id
  // eta^f(e_{ij}) = pi^f(e_{ij}) + (f|e_{ij}).
  std::vector<CommPoly> eta_gen;
};

ComplementData complement_data(const Pyramid& p, const CentralizerBasis& basis);
// Algebra homomorphism S(g) -> S(g^f) extending eta^f on generators.
CommPoly eta_f(const CommPoly& s, const ComplementData& cd);

}  // namespace wgen
