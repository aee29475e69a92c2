#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wgen/envmatrix.hpp"
#include "wgen/pyramid.hpp"
#include "wgen/uea.hpp"

namespace wgen {

// A good grading with an isotropic set: the ideal I = U(g){b - (f|b) : b in m}, the
// normal form of U(g)/I (monomials in the p-generators) and the W-algebra test.
class IdealContext {
 public:
  IdealContext(const Pyramid& p, const IsotropicSet& l = {});

  const Pyramid& pyramid() const { return p_; }
  const IsotropicSet& isotropic() const { return l_; }
  const IdealIndexSets& sets() const { return sets_; }
  const Orderer& orderer() const { return *ord_; }
  Rational chi(Gen g) const { return f_pairing(p_, g); }
  bool in_m(Gen g) const { return ord_->in_m(g); }

  // Normal form of x * 1bar.
  EnvElement reduce(const EnvElement& x) const { return ord_->normal_form(x); }
  // x * v for v already in normal form.
  EnvElement act(const EnvElement& x, const EnvElement& v) const { return ord_->act(x, v); }
  EnvMatrix reduce(const EnvMatrix& m) const { return m.apply_one(*ord_); }

  // Basis of n as elements of U(g).
  const std::vector<EnvElement>& n_basis() const { return n_basis_; }
  // reduce([a, x]) for a in n.
  EnvElement reduce_bracket(const EnvElement& a, const EnvElement& x) const;
  bool is_w_element(const EnvElement& x) const;
  // First basis element a of n with reduce([a,x]) != 0, with the residual.
  std::optional<std::pair<EnvElement, EnvElement>> membership_witness(const EnvElement& x) const;

  std::string str() const;

 private:
  Pyramid p_;
  IsotropicSet l_;
  IdealIndexSets sets_;
  std::shared_ptr<Orderer> ord_;
  std::vector<EnvElement> n_basis_;
};

using ContextPtr = std::shared_ptr<const IdealContext>;
ContextPtr make_context(const Pyramid& p, const IsotropicSet& l = {});

// Preimage under W(Γ,0) -> W(Γ,l): the unique x in W(Γ,0) (in the normal form of the l = 0
// context) with x = y mod I_l. Found by an exact linear solve over normal monomials of
// Kazhdan degree at most that of y and the same row charges. Throws if no unique solution.
EnvElement lift_to_zero(const EnvElement& y, const IdealContext& from, const IdealContext& zero);

// Transport of a W-algebra element from one (Γ,l) context to another, composed from
// Gan-Ginzburg steps (change of l at a fixed grading) and the identifications
// W(Γ_i,l_i) = W(Γ_{i+1},l~_i) along the adjacency chain of the target pyramid.
// The source grading must lie on that chain. Membership is asserted at both ends.
EnvElement transport(const EnvElement& x, const IdealContext& from, const IdealContext& to);

// Row charge of a monomial: for each row, (#factors e_ij with i in the row) - (# with j in it).
std::vector<int> row_charge(const Monomial& m, const Pyramid& p);

}  // namespace wgen
