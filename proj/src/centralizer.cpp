#include "wgen/centralizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace wgen {

ScalarMatrix phi_ell(const Pyramid& p, const ScalarMatrix& a, int ell) {
  BoxSubset vp = p.subspace(Sub::VPlus), vm = p.subspace(Sub::VMinus);
  for (int i = 1; i <= p.N(); ++i)
    for (int j = 1; j <= p.N(); ++j)
      if (a.at(i, j) != 0 && (!vm.contains(i) || !vp.contains(j)))
        throw std::invalid_argument("phi_ell: argument is not in Hom(V_+, V_-)");
  ScalarMatrix f = p.F(), ft = p.Ft();
  ScalarMatrix ftl = ft.pow(ell);
  ScalarMatrix mid = ftl * a * ftl;
  ScalarMatrix out(p.N());
  for (int i = 0; i <= ell; ++i) out = out + f.pow(i) * mid * f.pow(ell - i);
  return out;
}

std::string CentralizerElement::label() const {
  return "(h=" + std::to_string(h) + ",k=" + std::to_string(k) + ",e_{" + std::to_string(target) +
         std::to_string(source) + "},l=" + std::to_string(ell) + ")";
}

CentralizerBasis build_basis(const Pyramid& p) {
  CentralizerBasis basis{p, {}};
  int n = p.N();
  std::vector<std::tuple<int, int, int, int>> pairs;  // target row, source row, target, source
  for (int h = 0; h < p.p1(); ++h)
    for (int k = 0; k < p.p1(); ++k)
      for (int a : p.subspace(Sub::VPlusFthVMinus, h).boxes)
        for (int b : p.subspace(Sub::VMinusFkVPlus, k).boxes) pairs.emplace_back(p.row_of(b), p.row_of(a), b, a);
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [rb, ra, b, a] : pairs) {
    int h = p.row_length(ra) - 1, k = p.row_length(rb) - 1;
    for (int ell = 0; ell <= std::min(h, k); ++ell) {
      CentralizerElement e;
      e.h = h;
      e.k = k;
      e.ell = ell;
      e.source = a;
      e.target = b;
      e.u = ScalarMatrix::elementary(n, b, a);
      e.dual = ScalarMatrix::elementary(n, a, b);
      e.phi = phi_ell(p, e.u, ell);
      basis.elements.push_back(std::move(e));
    }
  }
  return basis;
}

int centralizer_dimension_formula(const Partition& part) {
  int d = 0;
  for (const auto& a : part.parts())
    for (const auto& b : part.parts()) d += a.mult * b.mult * std::min(a.length, b.length);
  return d;
}

EnvMatrix z_matrix(const Pyramid& p) {
  BoxSubset vp = p.subspace(Sub::VPlus), vm = p.subspace(Sub::VMinus);
  EnvMatrix z(p.N(), vp, vm);
  // z 1_{V_+} (1 + z F^t)^{-1} 1_{V_-}
  ScalarMatrix ft = p.Ft();
  for (int k = 0; k < p.p1(); ++k) {
    ScalarMatrix ftk = ft.pow(k);
    for (int a : vp.boxes)
      for (int b : vm.boxes)
        if (ftk.at(a, b) != 0) z.at(a, b).add(k + 1, EnvElement(ftk.at(a, b) * (k % 2 ? -1 : 1)));
  }
  for (const auto& e : build_basis(p).elements)
    z.at(e.source, e.target).add(e.ell, from_scalar_matrix(e.phi) * Rational(e.ell % 2 ? -1 : 1));
  return z;
}

ComplementData complement_data(const Pyramid& p, const CentralizerBasis& basis) {
  int n = p.N();
  ComplementData cd;
  cd.pyramid = p;
  BoxSubset ftv = p.subspace(Sub::FtV), vm = p.subspace(Sub::VMinus);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (ftv.contains(i) || (vm.contains(i) && p.deg2(i, j) > 0)) cd.u_perp.push_back(gen(i, j));
  int nb = basis.dim(), nu = int(cd.u_perp.size());
  if (nb + nu != n * n)
    throw std::runtime_error("complement_data: dim g^f + dim U^perp != N^2");
  // columns: g^f basis then U^perp basis, rows: coordinates (i,j)
  QMatrix m(n * n, n * n);
  auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  for (int c = 0; c < nb; ++c)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) m(idx(i, j), c) = basis.elements[c].phi.at(i, j);
  for (int c = 0; c < nu; ++c) m(idx(gen_i(cd.u_perp[c]), gen_j(cd.u_perp[c])), nb + c) = 1;
  auto inv = m.inverse();
  if (!inv) throw std::runtime_error("complement_data: g^f + U^perp is not a direct sum");
  cd.pi_f.assign(kNumIds, EnvElement());
  cd.eta_gen.assign(kNumIds, CommPoly());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      ScalarMatrix proj(n);
      for (int c = 0; c < nb; ++c) {
        Rational coef = (*inv)(c, idx(i, j));
        if (coef != 0) proj = proj + basis.elements[c].phi * coef;
      }
      Gen g = gen(i, j);
      cd.pi_f[g] = from_scalar_matrix(proj);
      cd.eta_gen[g] = commutative_image(cd.pi_f[g]) + CommPoly(f_pairing(p, g));
    }
  return cd;
}

CommPoly eta_f(const CommPoly& s, const ComplementData& cd) {
  CommPoly out;
  for (const auto& [m, c] : s.terms()) {
    CommPoly t(c);
    for (char g : m) {
      t = t * cd.eta_gen[Gen(g)];
      if (t.is_zero()) break;
    }
    out += t;
  }
  return out;
}

}  // namespace wgen
