#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wgen/pyramid.hpp"

namespace wgen {

enum class CheckStatus { Pass, Fail, Skip };
std::string to_string(CheckStatus s);

struct CheckReport {
  std::string name;
  std::string context;
  CheckStatus status = CheckStatus::Pass;
  // Series identities record the compared exponent range; polynomial identities are exact.
  bool exact = true;
  int checked_lo = 0;
  int checked_hi = 0;
  double elapsed = 0;  // seconds
  int cases = 0;       // number of individual comparisons made
  std::string witness;  // offending entry, exponent and residual on failure; reason on skip
  std::vector<std::string> notes;

  bool pass() const { return status == CheckStatus::Pass; }
  bool failed() const { return status == CheckStatus::Fail; }
  std::string range() const;
  std::string summary() const;
};

// What a check runs on. Checks that only make sense for some pyramids report Skip otherwise.
struct CheckInput {
  Pyramid pyramid;
  IsotropicSet isotropic;
  int truncation = 0;  // K; 0 means 2 p_1 + 4
  unsigned seed = 1;
  int resolved_truncation() const { return truncation > 0 ? truncation : 2 * pyramid.p1() + 4; }
};

// Every generator of the context lies in the W-algebra: reduce([a, w]) = 0 for a in n.
// Right aligned pyramids with l = 0 use the extracted W~ coefficients; other contexts the
// transported generators.
CheckReport check_membership(const CheckInput& in);
// Kazhdan bound on W(z) and eta^f(gr W~(z)) = Z(z).
CheckReport check_premet(const CheckInput& in);
// |W(z)|_{V_-^d, V_+^d} = L(z) on exponents >= -K.
CheckReport check_main(const CheckInput& in);
// (z-w)[L_ij(z), L_hk(w)] = L_hj(w)L_ik(z) - L_hj(z)L_ik(w) on the range where both sides are known.
CheckReport check_yangian(const CheckInput& in);
// Column recursions of T, L~, Z and |W~|, and hereditarity of quasideterminants.
CheckReport check_recursions(const CheckInput& in);
// Closed forms for the partition 2^p 1^q (matrix and componentwise W~, generator formulas).
CheckReport check_section8(int p, int q);
CheckReport check_section8(const CheckInput& in);
// Identities in U(g) ⊗ End V for the given pyramid: exhaustive elementary inputs plus
// seeded random combinations.
CheckReport check_identity_lemmas(const CheckInput& in, int random_cases = 100);
// Kazhdan filtration against differences of good gradings, neutral G-degree of W~ and
// of the generators, and homogeneous components of W-elements.
CheckReport check_grading_compat(const CheckInput& in);
// Adjacency chain to the right aligned pyramid with its Lagrangian pairs.
CheckReport check_adjacency(const CheckInput& in);
// Centralizer dimension, [F, phi] = 0, vanishing of phi_ell, independence and g = g^f + U^perp.
CheckReport check_centralizer(const CheckInput& in);
// Ordered monomials in the generators of Kazhdan weight <= max_weight are independent in U(g)/I.
CheckReport check_pbw(const CheckInput& in, int max_weight = 3);

struct NamedCheck {
  std::string name;
  std::function<CheckReport(const CheckInput&)> run;
};
// All checks in report order.
const std::vector<NamedCheck>& check_registry();
bool is_check_name(const std::string& name);

// Run the named checks ("all" selects every one) on the input. Independent checks run on up
// to WGEN_THREADS workers (default: hardware concurrency); reports come back ordered by name.
std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const CheckInput& in);

// Worker cap from WGEN_THREADS, at least 1.
int worker_limit();

// Map f over items with the worker cap; results keep the input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F f) -> std::vector<decltype(f(items.front()))>;

}  // namespace wgen

#include "wgen/detail/parallel.hpp"
