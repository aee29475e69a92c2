#include "wgen/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wgen {

IdealContext::IdealContext(const Pyramid& p, const IsotropicSet& l)
    : p_(p), l_(l), sets_(ideal_index_sets(p, l)) {
  std::array<int, kNumIds> rank{};
  std::set<Gen> m(sets_.m.begin(), sets_.m.end());
  for (int g = 0; g < kNumIds; ++g) rank[g] = m.count(Gen(g)) ? kNumIds + g : g;
  std::map<Gen, Rational> chi;
  for (Gen g : sets_.m) chi[g] = f_pairing(p, g);
  ord_ = std::make_shared<Orderer>(rank, sets_.m, chi);
  for (const auto& v : sets_.n_basis) {
    EnvElement a;
    for (const auto& [g, c] : v) a.add_term(Monomial(1, char(g)), c);
    n_basis_.push_back(a);
  }
}

EnvElement IdealContext::reduce_bracket(const EnvElement& a, const EnvElement& x) const {
  return act(a, reduce(x)) - act(x, reduce(a));
}

bool IdealContext::is_w_element(const EnvElement& x) const { return !membership_witness(x).has_value(); }

std::optional<std::pair<EnvElement, EnvElement>> IdealContext::membership_witness(const EnvElement& x) const {
  EnvElement rx = reduce(x);
  for (const auto& a : n_basis_) {
    EnvElement r = act(a, rx) - act(x, reduce(a));
    if (!r.is_zero()) return std::make_pair(a, r);
  }
  return std::nullopt;
}

std::string IdealContext::str() const {
  std::ostringstream os;
  os << "partition=" << p_.partition().str() << " align=" << to_string(p_.alignment()) << " l={";
  for (size_t k = 0; k < l_.size(); ++k) os << (k ? "," : "") << "(" << l_[k].first << "," << l_[k].second << ")";
  os << "}";
  return os.str();
}

ContextPtr make_context(const Pyramid& p, const IsotropicSet& l) {
  return std::make_shared<const IdealContext>(p, l);
}

std::vector<int> row_charge(const Monomial& m, const Pyramid& p) {
  std::vector<int> c(p.num_rows(), 0);
  for (char g : m) {
    c[p.row_of(gen_i(Gen(g)))] += 1;
    c[p.row_of(gen_j(Gen(g)))] -= 1;
  }
  return c;
}

namespace {

// Normal monomials of the context (p-generators in increasing id order) with twice-Kazhdan
// weight <= w2 and a prescribed row charge.
std::vector<Monomial> normal_monomials(const IdealContext& ctx, int w2, const std::vector<int>& charge) {
  const Pyramid& p = ctx.pyramid();
  std::vector<Gen> gens = ctx.sets().p;
  std::sort(gens.begin(), gens.end());
  std::vector<Monomial> out;
  Monomial cur;
  std::vector<int> ch(p.num_rows(), 0);
  std::function<void(size_t, int)> rec = [&](size_t start, int left) {
    if (ch == charge) out.push_back(cur);
    for (size_t k = start; k < gens.size(); ++k) {
      int w = 2 - p.deg2(gens[k]);
      if (w > left) continue;
      Gen g = gens[k];
      cur.push_back(char(g));
      ch[p.row_of(gen_i(g))] += 1;
      ch[p.row_of(gen_j(g))] -= 1;
      rec(k, left - w);
      ch[p.row_of(gen_i(g))] -= 1;
      ch[p.row_of(gen_j(g))] += 1;
      cur.pop_back();
    }
  };
  rec(0, w2);
  return out;
}

bool contains_all(const IsotropicSet& big, const IsotropicSet& small) {
  for (const auto& e : small)
    if (std::find(big.begin(), big.end(), e) == big.end()) return false;
  return true;
}

}  // namespace

EnvElement lift_to_zero(const EnvElement& y, const IdealContext& from, const IdealContext& zero) {
  if (!from.pyramid().same_grading(zero.pyramid()) || !zero.isotropic().empty())
    throw std::invalid_argument("lift: target must be the l = 0 context of the same grading");
  if (y.is_zero()) return y;
  const Pyramid& p = from.pyramid();
  int w2 = kazhdan_degree2(y, p);
  // split y by row charge; each component lifts separately
  std::map<std::vector<int>, EnvElement> parts;
  for (const auto& [m, c] : y.terms()) parts[row_charge(m, p)].add_term(m, c);
  EnvElement result;
  for (const auto& [charge, yc] : parts) {
    std::vector<Monomial> basis = normal_monomials(zero, w2, charge);
    int nu = int(basis.size());
    std::map<Monomial, int> eq_index;
    std::vector<SparseVec> rows;
    std::vector<Rational> rhs;
    auto row_for = [&](const std::string& key) -> SparseVec& {
      auto it = eq_index.find(key);
      if (it != eq_index.end()) return rows[it->second];
      eq_index.emplace(key, int(rows.size()));
      rows.emplace_back();
      rhs.emplace_back(0);
      return rows.back();
    };
    // reduce_from(x) = y
    for (int k = 0; k < nu; ++k) {
      EnvElement r = from.reduce(EnvElement::monomial(basis[k]));
      for (const auto& [m, c] : r.terms()) row_for("r" + m)[k] += c;
    }
    for (const auto& [m, c] : yc.terms()) {
      row_for("r" + m);
      rhs[eq_index.at("r" + m)] += c;
    }
    // reduce_zero([a, x]) = 0 for a in n
    for (size_t ai = 0; ai < zero.n_basis().size(); ++ai) {
      const EnvElement& a = zero.n_basis()[ai];
      EnvElement ra = zero.reduce(a);
      std::string prefix = "n" + std::to_string(ai) + ":";
      for (int k = 0; k < nu; ++k) {
        EnvElement mk = EnvElement::monomial(basis[k]);
        EnvElement r = zero.act(a, mk) - zero.act(mk, ra);
        for (const auto& [m, c] : r.terms()) row_for(prefix + m)[k] += c;
      }
    }
    auto sol = solve_sparse(rows, rhs, nu);
    if (!sol) throw std::runtime_error("lift: no preimage among normal monomials of bounded Kazhdan degree");
    if (sol->nullity != 0) throw std::runtime_error("lift: preimage is not unique");
    for (int k = 0; k < nu; ++k) result.add_term(basis[k], sol->x[k]);
  }
  return result;
}

namespace {

// Change of isotropic set at a fixed grading.
EnvElement move_l(const EnvElement& x, const IdealContext& from, const IdealContext& to) {
  if (contains_all(to.isotropic(), from.isotropic())) return to.reduce(x);
  IdealContext zero(from.pyramid());
  EnvElement lifted = lift_to_zero(from.reduce(x), from, zero);
  return to.reduce(lifted);
}

}  // namespace

EnvElement transport(const EnvElement& x, const IdealContext& from, const IdealContext& to) {
  if (!(from.pyramid().partition() == to.pyramid().partition()))
    throw std::invalid_argument("transport: contexts have different partitions");
  if (auto w = from.membership_witness(x))
    throw std::runtime_error("transport: source element is not in the W-algebra (bracket with " +
                             w->first.str() + " gives " + w->second.str() + ")");
  EnvElement cur;
  if (from.pyramid().same_grading(to.pyramid())) {
    cur = move_l(x, from, to);
  } else {
    std::vector<ChainStep> chain = adjacency_chain(to.pyramid());
    int start = -1;
    for (int i = 0; i <= int(chain.size()); ++i) {
      const Pyramid& gi = i < int(chain.size()) ? chain[i].from : chain.back().to;
      if (gi.same_grading(from.pyramid())) start = i;
    }
    if (start < 0) throw std::invalid_argument("transport: source grading is not on the adjacency chain of the target");
    if (!from.pyramid().same_labels(to.pyramid()))
      throw std::invalid_argument("transport: source and target pyramids use different box labels");
    cur = from.reduce(x);
    IdealContext here = from;
    for (int j = start - 1; j >= 0; --j) {
      IdealContext right(chain[j].to, chain[j].l_tilde);
      cur = move_l(cur, here, right);
      IdealContext left(chain[j].from, chain[j].l);
      cur = left.reduce(cur);
      here = left;
    }
    cur = move_l(cur, here, to);
  }
  if (auto w = to.membership_witness(cur))
    throw std::runtime_error("transport: image is not in the target W-algebra (bracket with " +
                             w->first.str() + " gives " + w->second.str() + ")");
  return cur;
}

}  // namespace wgen
