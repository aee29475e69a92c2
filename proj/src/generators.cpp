#include "wgen/generators.hpp"

#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wgen {

EnvMatrix embed(const EnvMatrix& m, int n) {
  if (n < m.n()) throw std::invalid_argument("embed: target has fewer boxes");
  EnvMatrix out(n, m.rows(), m.cols());
  for (int a : m.rows().boxes)
    for (int b : m.cols().boxes) out.at(a, b) = m.at(a, b);
  return out;
}

namespace {

EnvMatrix z_plus(const Pyramid& p, const GMatrix& g) {
  BoxSubset v = EnvMatrix::full(p.N());
  EnvMatrix m = EnvMatrix::from_g(g, v, v);
  for (int b = 1; b <= p.N(); ++b) m.at(b, b).add(1, EnvElement(Rational(1)));
  return m;
}

std::mutex cache_mu;
std::map<std::string, EnvMatrix> cache;

}  // namespace

EnvMatrix column_step(const Pyramid& p, const EnvMatrix& w_prime, bool residue_term) {
  int n = p.N();
  BoxSubset v = EnvMatrix::full(n);
  EnvMatrix wp = embed(w_prime, n).restrict(v, v);
  ScalarMatrix ft = p.Ft(), f = p.F();
  ScalarMatrix pu = p.proj(Sub::VMinusU), pd = p.proj(Sub::VMinusD), pftd = p.proj(Sub::FtVMinusD);
  int r1 = p.subspace(Sub::VMinusD).size();

  EnvMatrix em1 = EnvMatrix::from_g(pftd * build_E(p, ESelect::Degree, -2), v, v);
  GMatrix zed_g = build_E(p, ESelect::Degree, 0) + GMatrix::from_scalar(d_matrix(p, ideal_index_sets(p, {}).m));
  EnvMatrix zed = z_plus(p, zed_g);

  EnvMatrix out = mul(wp, pu, v);
  out = out - bracket1(wp, em1) * Rational(1, r1);
  out = out - mul(mul(mul(wp, ft, v), zed), pd, v);
  // Res_x x^{-1} W~'(z) 1_{V_-^u} (1 + x^{-1} F)^{-1} W~'(x) F^t 1_{V_-^d}
  EnvMatrix inner(n, v, v);
  std::optional<int> top;
  for (int a : wp.rows().boxes)
    for (int b : wp.cols().boxes)
      if (auto t = wp.at(a, b).top()) top = std::max(top.value_or(*t), *t);
  ScalarMatrix fk = ScalarMatrix::identity(n);
  for (int k = 0; residue_term && top && k <= *top; ++k, fk = fk * f) {
    EnvMatrix wk = EnvMatrix::from_g(wp.coeff(k), v, v);
    EnvMatrix t = mul(mul(pu * fk, wk, v), ft * pd, v);
    inner = inner + (k % 2 ? t * Rational(-1) : t);
  }
  if (residue_term) out = out + mul(wp, inner);
  return out;
}

EnvMatrix w_tilde(const Pyramid& p) {
  if (!p.is_right_aligned()) throw std::invalid_argument("w_tilde: pyramid is not right aligned");
  std::string key = p.partition().str();
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end() && p.same_labels(build_pyramid(p.partition(), Alignment::Right))) return it->second;
  }
  if (!p.same_labels(build_pyramid(p.partition(), Alignment::Right)))
    throw std::invalid_argument("w_tilde: pyramid does not use the canonical box numbering");
  EnvMatrix result;
  if (p.p1() == 1) {
    result = z_plus(p, build_E(p, ESelect::All)).restrict(p.subspace(Sub::VPlus), p.subspace(Sub::VMinus));
  } else {
    ColumnRemoval cr = remove_left_column(p);
    for (int b = 1; b <= cr.reduced.N(); ++b)
      if (cr.embedding[b] != b) throw std::logic_error("w_tilde: column removal does not keep box labels");
    EnvMatrix wp = embed(w_tilde(cr.reduced), p.N());
    result = column_step(p, wp, true).restrict(p.subspace(Sub::VPlus), p.subspace(Sub::VMinus));
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  cache.emplace(key, result);
  return result;
}

GeneratorSet extract(const EnvMatrix& wt, const Pyramid& p, const IdealContext* ctx) {
  std::optional<IdealContext> own;
  if (!ctx) ctx = &own.emplace(p);
  GeneratorSet gs{p, ctx->isotropic(), wt, {}};
  CentralizerBasis basis = build_basis(p);
  std::map<std::pair<int, int>, bool> seen;
  for (const auto& e : basis.elements) {
    int a = e.source, b = e.target;
    ZSeries entry = wt.at(a, b);
    if (!entry.exact()) throw std::logic_error("extract: W~ entry is not an exact polynomial");
    if (e.h == e.k && p.row_of(a) == p.row_of(b)) {
      // remove -(-z)^{k+1}
      entry.add(e.k + 1, EnvElement(Rational(e.k % 2 ? 1 : -1)));
    }
    int bound = std::min(e.h, e.k);
    if (!seen[{a, b}]) {
      seen[{a, b}] = true;
      for (const auto& [m, c] : entry.coeffs())
        if (m < 0 || m > bound) {
          std::ostringstream os;
          os << "extract: entry (" << a << "," << b << ") has a z^" << m << " term beyond degree " << bound
             << ": " << c.str();
          throw std::logic_error(os.str());
        }
    }
    Generator g;
    g.element = e;
    g.w_tilde = entry.coeff(e.ell) * Rational(e.ell % 2 ? -1 : 1);
    g.w = ctx->reduce(g.w_tilde);
    gs.generators.push_back(std::move(g));
  }
  BoxSubset vp = p.subspace(Sub::VPlus), vm = p.subspace(Sub::VMinus);
  for (int a : vp.boxes)
    for (int b : vm.boxes)
      if (!seen.count({a, b}) && !wt.at(a, b).is_zero())
        throw std::logic_error("extract: entry outside the centralizer blocks");
  return gs;
}

EnvMatrix generator_matrix(const Pyramid& p, const std::vector<Generator>& gens) {
  BoxSubset vp = p.subspace(Sub::VPlus), vm = p.subspace(Sub::VMinus);
  EnvMatrix out(p.N(), vp, vm);
  ScalarMatrix ft = p.Ft(), ftk = ScalarMatrix::identity(p.N());
  for (int k = 0; k < p.p1(); ++k, ftk = ftk * ft)
    for (int a : vp.boxes)
      for (int b : vm.boxes)
        if (ftk.at(a, b) != 0) out.at(a, b).add(k + 1, EnvElement(ftk.at(a, b) * (k % 2 ? -1 : 1)));
  for (const auto& g : gens)
    out.at(g.element.source, g.element.target).add(g.element.ell, g.w * Rational(g.element.ell % 2 ? -1 : 1));
  return out;
}

EnvElement relabel(const EnvElement& x, const std::vector<int>& sigma) {
  EnvElement words;
  for (const auto& [m, c] : x.terms()) {
    Monomial w;
    for (char g : m) w.push_back(char(gen(sigma[gen_i(Gen(g))], sigma[gen_j(Gen(g))])));
    words.add_term(w, c);
  }
  return plain_orderer().normal_form(words);
}

std::vector<int> relabelling(const Pyramid& canonical, const Pyramid& target) {
  if (!(canonical.partition() == target.partition())) throw std::invalid_argument("relabelling: partitions differ");
  std::vector<int> s(canonical.N() + 1, 0);
  for (int b = 1; b <= canonical.N(); ++b) {
    const Box& bx = canonical.box(b);
    s[b] = target.number(bx.row, bx.pos);
  }
  return s;
}

std::optional<std::string> filtration_violation(const EnvMatrix& m, const Pyramid& p) {
  for (int a : m.rows().boxes)
    for (int b : m.cols().boxes)
      for (const auto& [ell, c] : m.at(a, b).coeffs()) {
        int bound = 2 - 2 * ell + p.x2(a) - p.x2(b);
        int d = kazhdan_degree2(c, p);
        if (d > bound) {
          std::ostringstream os;
          os << "entry (" << a << "," << b << ") z^" << ell << ": twice Kazhdan degree " << d << " > " << bound
             << " in " << c.str();
          return os.str();
        }
      }
  return std::nullopt;
}

std::optional<std::string> g_degree_violation(const EnvMatrix& m, const std::vector<Rational>& h) {
  for (int a : m.rows().boxes)
    for (int b : m.cols().boxes)
      for (const auto& [ell, c] : m.at(a, b).coeffs()) {
        auto d = g_degree(c, h);
        if (!d || *d != h[b] - h[a]) {
          std::ostringstream os;
          os << "entry (" << a << "," << b << ") z^" << ell << ": G-degree "
             << (d ? to_string(*d) : std::string("mixed")) << ", expected " << to_string(h[b] - h[a]);
          return os.str();
        }
      }
  return std::nullopt;
}

bool is_neutral(const Pyramid& p, const std::vector<Rational>& h) {
  std::map<int, Rational> by_length;
  for (int b = 1; b <= p.N(); ++b) {
    int len = p.row_length(p.row_of(b));
    auto [it, fresh] = by_length.emplace(len, h[b]);
    if (!fresh && it->second != h[b]) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> neutral_gradings(const Pyramid& p, int count, unsigned seed) {
  std::vector<std::vector<Rational>> out;
  if (count <= 0) return out;
  Pyramid right = build_pyramid(p.partition(), Alignment::Right).relabelled_like(p);
  std::vector<Rational> diff(p.N() + 1, Rational(0));
  for (int b = 1; b <= p.N(); ++b) diff[b] = Rational(right.x2(b) - p.x2(b), 2);
  if (is_neutral(p, diff)) out.push_back(diff);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-6, 6);
  while (int(out.size()) < count) {
    std::map<int, Rational> value;
    for (const auto& part : p.partition().parts()) value[part.length] = Rational(dist(rng), 2);
    std::vector<Rational> h(p.N() + 1, Rational(0));
    for (int b = 1; b <= p.N(); ++b) h[b] = value[p.row_length(p.row_of(b))];
    out.push_back(h);
  }
  return out;
}

GeneratorSet w_general(const Pyramid& p, const IsotropicSet& l, unsigned seed) {
  Pyramid canon = build_pyramid(p.partition(), Alignment::Right);
  GeneratorSet base = extract(w_tilde(canon), canon);
  Pyramid right = canon.relabelled_like(p);
  std::vector<int> sigma = relabelling(canon, p);
  IdealContext from(right);
  IdealContext to(p, l);
  CentralizerBasis basis = build_basis(p);
  if (basis.dim() != base.size()) throw std::logic_error("w_general: basis size mismatch");
  GeneratorSet gs{p, l, {}, {}};
  for (int i = 0; i < base.size(); ++i) {
    const Generator& g0 = base.generators[i];
    const CentralizerElement& e = basis.elements[i];
    if (e.source != sigma[g0.element.source] || e.target != sigma[g0.element.target] || e.ell != g0.element.ell)
      throw std::logic_error("w_general: centralizer bases do not correspond");
    Generator g;
    g.element = e;
    g.w_tilde = transport(relabel(g0.w_tilde, sigma), from, to);
    g.w = g.w_tilde;
    gs.generators.push_back(std::move(g));
  }
  gs.matrix = generator_matrix(p, gs.generators);
  if (auto v = filtration_violation(gs.matrix, p))
    throw std::runtime_error("w_general: W(z) is not in F_1: " + *v);
  for (const auto& h : neutral_gradings(p, 5, seed))
    if (auto v = g_degree_violation(gs.matrix, h))
      throw std::runtime_error("w_general: W(z) is not of G-degree 0: " + *v);
  return gs;
}

}  // namespace wgen
