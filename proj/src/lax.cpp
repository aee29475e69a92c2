#include "wgen/lax.hpp"

#include <stdexcept>

#include "wgen/centralizer.hpp"

namespace wgen {

namespace {

// Extra depth requested from inner solves so that products keep the wanted floor.
constexpr int kHeadroom = 4;

Pyramid reduced_pyramid(const Pyramid& p) {
  ColumnRemoval cr = remove_left_column(p);
  for (int b = 1; b <= cr.reduced.N(); ++b)
    if (cr.embedding[b] != b) throw std::logic_error("column removal does not keep box labels");
  return cr.reduced;
}

void require_right(const Pyramid& p, const char* what) {
  if (!p.is_right_aligned()) throw std::invalid_argument(std::string(what) + ": pyramid is not right aligned");
  if (p.p1() < 2) throw std::invalid_argument(std::string(what) + ": needs at least two columns");
}

}  // namespace

EnvMatrix a_matrix(const Pyramid& p, const IsotropicSet& l) {
  IdealIndexSets sets = ideal_index_sets(p, l);
  int n = p.N();
  BoxSubset v = EnvMatrix::full(n);
  GMatrix g = build_E(p, ESelect::Set, 0, sets.p) + GMatrix::from_scalar(p.F() + d_matrix(p, sets.m));
  EnvMatrix a = EnvMatrix::from_g(g, v, v);
  for (int b = 1; b <= n; ++b) a.at(b, b).add(1, EnvElement(Rational(1)));
  return a;
}

EnvMatrix t_matrix(const Pyramid& p) {
  if (!p.is_right_aligned()) throw std::invalid_argument("t_matrix: pyramid is not right aligned");
  EnvMatrix a = a_matrix(p);
  BoxSubset vp = p.subspace(Sub::VPlus), vm = p.subspace(Sub::VMinus);
  BoxSubset fv = p.subspace(Sub::FV), ftv = p.subspace(Sub::FtV);
  EnvMatrix head = a.restrict(vp, vm);
  if (fv.boxes.empty()) return head;
  EnvMatrix inv = geometric_inverse_nilpotent(a.restrict(fv, ftv), p.F());
  return head - mul(mul(a.restrict(vp, ftv), inv), a.restrict(fv, vm));
}

LaxOperator l_matrix(const Pyramid& p, const IsotropicSet& l, int k, bool reduced) {
  LaxOperator out{p, l, {}, reduced};
  BoxSubset vmd = p.subspace(Sub::VMinusD), vpd = p.subspace(Sub::VPlusD);
  std::optional<IdealContext> ctx;
  if (reduced) ctx.emplace(p, l);
  const Orderer& ord = reduced ? ctx->orderer() : plain_orderer();
  if (p.is_right_aligned() && l.empty()) {
    out.matrix = quasideterminant(t_matrix(p), vmd, vpd, -k, ord);
  } else {
    out.matrix = quasideterminant(a_matrix(p, l), vmd, vpd, -k, ord, ScalingStrategy::Given, grading_scaling(p));
  }
  out.matrix.truncate(-k);
  return out;
}

LaxOperator quasidet_of_W(const GeneratorSet& gs, int k, bool reduced) {
  const Pyramid& p = gs.pyramid;
  LaxOperator out{p, gs.isotropic, {}, reduced};
  std::optional<IdealContext> ctx;
  if (reduced) ctx.emplace(p, gs.isotropic);
  const Orderer& ord = reduced ? ctx->orderer() : plain_orderer();
  out.matrix = quasideterminant(gs.matrix, p.subspace(Sub::VMinusD), p.subspace(Sub::VPlusD), -k, ord);
  out.matrix.truncate(-k);
  return out;
}

RecursionSides t_recursion(const Pyramid& p) {
  require_right(p, "t_recursion");
  Pyramid q = reduced_pyramid(p);
  EnvMatrix step = column_step(p, t_matrix(q), false);
  return {t_matrix(p), step.restrict(p.subspace(Sub::VPlus), p.subspace(Sub::VMinus))};
}

RecursionSides l_recursion(const Pyramid& p, int k) {
  require_right(p, "l_recursion");
  Pyramid q = reduced_pyramid(p);
  int deep = k + kHeadroom;
  LaxOperator lp = l_matrix(q, {}, deep, false);
  EnvMatrix inner =
      quasideterminant(embed(lp.matrix, p.N()), p.subspace(Sub::FtVMinusD), p.subspace(Sub::VPlusD), -deep);
  EnvMatrix step = column_step(p, inner, false).restrict(p.subspace(Sub::VPlusD), p.subspace(Sub::VMinusD));
  EnvMatrix direct = l_matrix(p, {}, k, false).matrix;
  step.truncate(-k);
  return {direct, step};
}

RecursionSides z_recursion(const Pyramid& p) {
  require_right(p, "z_recursion");
  Pyramid q = reduced_pyramid(p);
  int n = p.N();
  BoxSubset v = EnvMatrix::full(n);
  EnvMatrix zp = embed(z_matrix(q), n).restrict(v, v);
  ScalarMatrix ft = p.Ft(), f = p.F();
  ScalarMatrix pu = p.proj(Sub::VMinusU), pd = p.proj(Sub::VMinusD), pftd = p.proj(Sub::FtVMinusD);
  ScalarMatrix pplus = p.proj(Sub::VPlus);
  int r1 = p.subspace(Sub::VMinusD).size();
  EnvMatrix em1 = EnvMatrix::from_g(pftd * build_E(p, ESelect::Degree, -2), v, v);
  EnvMatrix e0 = EnvMatrix::from_g(build_E(p, ESelect::Degree, 0), v, v);
  // z 1_{V_+}(1 + z F^t)^{-1} = sum_k (-1)^k z^{k+1} 1_{V_+} (F^t)^k
  EnvMatrix geo(n, v, v);
  ScalarMatrix ftk = ScalarMatrix::identity(n);
  for (int j = 0; j < p.p1(); ++j, ftk = ftk * ft)
    geo = geo + EnvMatrix::from_scalar(pplus * ftk, v, v, j + 1) * Rational(j % 2 ? -1 : 1);

  EnvMatrix out = mul(zp, pu, v);
  out = out - bracket1(zp, em1) * Rational(1, r1);
  out = out - mul(zp, ft * pd, v).shifted(1);
  out = out - mul(mul(geo, ft, v), mul(e0, pd, v));
  std::optional<int> top;
  for (int a : zp.rows().boxes)
    for (int b : zp.cols().boxes)
      if (auto t = zp.at(a, b).top()) top = std::max(top.value_or(*t), *t);
  EnvMatrix res(n, v, v);
  ScalarMatrix fk = ScalarMatrix::identity(n);
  for (int j = 0; top && j <= *top; ++j, fk = fk * f) {
    EnvMatrix t = mul(mul(fk, EnvMatrix::from_g(zp.coeff(j), v, v), v), ft * pd, v);
    res = res + (j % 2 ? t * Rational(-1) : t);
  }
  out = out + mul(mul(geo, pu, v), res);
  return {z_matrix(p), out.restrict(p.subspace(Sub::VPlus), p.subspace(Sub::VMinus))};
}

RecursionSides w_quasidet_recursion(const Pyramid& p, int k) {
  require_right(p, "w_quasidet_recursion");
  Pyramid q = reduced_pyramid(p);
  int deep = k + kHeadroom;
  EnvMatrix wq = embed(w_tilde(q), p.N());
  EnvMatrix inner = quasideterminant(wq, p.subspace(Sub::FtVMinusD), p.subspace(Sub::VPlusD), -deep);
  EnvMatrix step = column_step(p, inner, false).restrict(p.subspace(Sub::VPlusD), p.subspace(Sub::VMinusD));
  step.truncate(-k);
  EnvMatrix direct = quasideterminant(w_tilde(p), p.subspace(Sub::VMinusD), p.subspace(Sub::VPlusD), -k);
  direct.truncate(-k);
  return {direct, step};
}

RecursionSides w_hereditary(const Pyramid& p, int k) {
  require_right(p, "w_hereditary");
  Pyramid q = reduced_pyramid(p);
  EnvMatrix wq = embed(w_tilde(q), p.N());
  BoxSubset u = p.subspace(Sub::FtVMinusD), w = p.subspace(Sub::VPlusD);
  EnvMatrix direct = quasideterminant(wq, u, w, -k);
  EnvMatrix outer = quasideterminant(wq, q.subspace(Sub::VMinusD), q.subspace(Sub::VPlusD), -k - kHeadroom);
  EnvMatrix twice = quasideterminant(outer, u, w, -k);
  direct.truncate(-k);
  twice.truncate(-k);
  return {direct, twice};
}

}  // namespace wgen
