#include "wgen/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "wgen/centralizer.hpp"
#include "wgen/generators.hpp"
#include "wgen/lax.hpp"
#include "wgen/reduction.hpp"

namespace wgen {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skip:
      return "SKIP";
  }
  return "?";
}

std::string CheckReport::range() const {
  if (exact) return "exact";
  std::ostringstream os;
  os << "z^" << checked_lo << "..z^" << checked_hi;
  return os.str();
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << "[" << to_string(status) << "] " << name << " (" << context << ") " << range() << ", " << cases << " cases, ";
  os.precision(3);
  os << std::fixed << elapsed << " s";
  if (!witness.empty()) os << ": " << witness;
  return os.str();
}

int worker_limit() {
  if (const char* s = std::getenv("WGEN_THREADS")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Clock = std::chrono::steady_clock;

std::string context_of(const Pyramid& p, const IsotropicSet& l) {
  std::ostringstream os;
  os << p.partition().str() << " " << to_string(p.alignment());
  if (!l.empty()) {
    os << " l={";
    for (size_t k = 0; k < l.size(); ++k) os << (k ? "," : "") << "e_{" << l[k].first << l[k].second << "}";
    os << "}";
  }
  return os.str();
}

void fail(CheckReport& r, const std::string& witness) {
  if (r.status == CheckStatus::Fail) return;
  r.status = CheckStatus::Fail;
  r.witness = witness;
}

void skip(CheckReport& r, const std::string& why) {
  r.status = CheckStatus::Skip;
  r.witness = why;
}

// Widen the recorded range by one series comparison.
void note_series(CheckReport& r, const MatrixComparison& c) {
  if (c.checked_lo == kExact) return;
  if (r.exact) {
    r.exact = false;
    r.checked_lo = c.checked_lo;
    r.checked_hi = c.checked_hi;
    return;
  }
  r.checked_lo = std::max(r.checked_lo, c.checked_lo);
  r.checked_hi = std::max(r.checked_hi, c.checked_hi);
}

// Runs body, turning exceptions into failures and recording the elapsed time.
template <class Body>
CheckReport guarded(const std::string& name, const std::string& context, Body body) {
  CheckReport r;
  r.name = name;
  r.context = context;
  auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    fail(r, std::string("exception: ") + e.what());
  }
  r.elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  if (r.status == CheckStatus::Fail && r.witness.empty()) r.witness = "failed without a witness";
  return r;
}

bool canonical_right(const Pyramid& p) {
  return p.is_right_aligned() && p.same_labels(build_pyramid(p.partition(), Alignment::Right));
}

GeneratorSet generators_for(const CheckInput& in, const IdealContext& ctx) {
  if (canonical_right(in.pyramid) && in.isotropic.empty()) return extract(w_tilde(in.pyramid), in.pyramid, &ctx);
  return w_general(in.pyramid, in.isotropic, in.seed);
}

std::string entry_name(int a, int b, int m) {
  return "entry (" + std::to_string(a) + "," + std::to_string(b) + ") z^" + std::to_string(m);
}

// ---------------------------------------------------------------- GMatrix helpers

EnvElement trace(const GMatrix& m) {
  EnvElement t;
  for (int a = 1; a <= m.n(); ++a) t += m.at(a, a);
  return t;
}

GMatrix times(const EnvElement& c, const ScalarMatrix& s) {
  GMatrix g(s.n());
  for (int a = 1; a <= s.n(); ++a)
    for (int b = 1; b <= s.n(); ++b)
      if (s.at(a, b) != 0) g.at(a, b) = c * s.at(a, b);
  return g;
}

// Entrywise [x, M].
GMatrix ad(const EnvElement& x, const GMatrix& m) {
  GMatrix g(m.n());
  for (int a = 1; a <= m.n(); ++a)
    for (int b = 1; b <= m.n(); ++b)
      if (!m.at(a, b).is_zero()) g.at(a, b) = bracket(x, m.at(a, b));
  return g;
}

GMatrix reduce_entries(const GMatrix& m, const IdealContext& ctx) {
  GMatrix g(m.n());
  for (int a = 1; a <= m.n(); ++a)
    for (int b = 1; b <= m.n(); ++b) g.at(a, b) = ctx.reduce(m.at(a, b));
  return g;
}

std::optional<std::string> gmatrix_diff(const GMatrix& x, const GMatrix& y) {
  for (int a = 1; a <= x.n(); ++a)
    for (int b = 1; b <= x.n(); ++b)
      if (x.at(a, b) != y.at(a, b))
        return "entry (" + std::to_string(a) + "," + std::to_string(b) + "): residual " +
               (x.at(a, b) - y.at(a, b)).str();
  return std::nullopt;
}

std::optional<std::string> scalar_diff(const ScalarMatrix& x, const ScalarMatrix& y) {
  for (int a = 1; a <= x.n(); ++a)
    for (int b = 1; b <= x.n(); ++b)
      if (x.at(a, b) != y.at(a, b))
        return "entry (" + std::to_string(a) + "," + std::to_string(b) + "): " + to_string(x.at(a, b)) + " vs " +
               to_string(y.at(a, b));
  return std::nullopt;
}

ScalarMatrix proj_of(int n, const std::vector<int>& boxes) { return ScalarMatrix::projection(n, boxes); }

// Twice the Γ-degrees that occur on boxes, and on elementary matrices.
std::vector<int> box_degrees(const Pyramid& p) {
  std::set<int> s;
  for (int b = 1; b <= p.N(); ++b) s.insert(p.x2(b));
  return {s.begin(), s.end()};
}
std::vector<int> matrix_degrees(const Pyramid& p) {
  std::set<int> s;
  for (int a = 1; a <= p.N(); ++a)
    for (int b = 1; b <= p.N(); ++b) s.insert(p.deg2(a, b));
  return {s.begin(), s.end()};
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Rational coeff() {
    int v = 0;
    while (v == 0) v = uniform(-5, 5);
    Rational q(v, uniform(1, 3));
    q.canonicalize();
    return q;
  }
};

// Random invertible d x d rational matrix.
QMatrix random_invertible(int d, Rng& rng) {
  for (;;) {
    QMatrix c(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) c(i, j) = Rational(rng.uniform(-3, 3));
    if (c.inverse()) return c;
  }
}

// ------------------------------------------------------------ identity lemma parts

struct LemmaRun {
  const Pyramid& p;
  const IdealContext& ctx;
  CheckReport& r;
  void expect(const std::optional<std::string>& d, const std::string& what) {
    ++r.cases;
    if (d) fail(r, what + ": " + *d);
  }
};

int n_of(const Pyramid& p) { return p.N(); }

// 1_U E 1_W = sum_i q_i Q^i for dual bases of Hom(U, W) and Hom(W, U); the basis of
// Hom(U, W) is the elementary one changed by c.
void lemma_hom_basis(LemmaRun& run, const BoxSubset& u, const BoxSubset& w, const std::optional<QMatrix>& c,
                     const std::string& what) {
  int n = n_of(run.p);
  GMatrix lhs = proj_of(n, u.boxes) * build_E(run.p, ESelect::All) * proj_of(n, w.boxes);
  std::vector<std::pair<int, int>> pairs;  // (a in U, b in W): e_{ba}
  for (int a : u.boxes)
    for (int b : w.boxes) pairs.push_back({a, b});
  int d = int(pairs.size());
  GMatrix rhs(n);
  if (d == 0) {
    run.expect(gmatrix_diff(lhs, rhs), what);
    return;
  }
  QMatrix cm = c ? *c : QMatrix::identity(d);
  QMatrix dual = cm.inverse()->transpose();
  for (int i = 0; i < d; ++i) {
    EnvElement q;
    ScalarMatrix big_q(n);
    for (int t = 0; t < d; ++t) {
      auto [a, b] = pairs[t];
      if (cm(i, t) != 0) q.add_term(Monomial(1, char(gen(b, a))), cm(i, t));
      big_q.at(a, b) += dual(i, t);
    }
    rhs = rhs + times(q, big_q);
  }
  run.expect(gmatrix_diff(lhs, rhs), what);
}

// sum_i U_i A U^i = tr(A) 1 for dual bases of End V (elementary basis changed by c).
void lemma_completeness(LemmaRun& run, const ScalarMatrix& a, const std::optional<QMatrix>& c,
                        const std::string& what) {
  int n = n_of(run.p);
  int d = n * n;
  QMatrix cm = c ? *c : QMatrix::identity(d);
  QMatrix dual = cm.inverse()->transpose();
  ScalarMatrix sum(n);
  for (int i = 0; i < d; ++i) {
    ScalarMatrix ui(n), uii(n);
    for (int t = 0; t < d; ++t) {
      int x = t / n + 1, y = t % n + 1;
      ui.at(x, y) += cm(i, t);
      uii.at(y, x) += dual(i, t);
    }
    sum = sum + ui * a * uii;
  }
  run.expect(scalar_diff(sum, ScalarMatrix::identity(n) * a.trace()), what);
}

// [E_i, X E_j]^1 for X in (End V)[k].
void lemma_e_a(LemmaRun& run, int i2, int j2, int k2, const ScalarMatrix& x, const std::string& what) {
  const Pyramid& p = run.p;
  int n = p.N();
  GMatrix lhs = bracket1(build_E(p, ESelect::Degree, i2), x * build_E(p, ESelect::Degree, j2));
  GMatrix rhs(n);
  GMatrix eij = build_E(p, ESelect::Degree, i2 + j2);
  for (int l2 : box_degrees(p)) {
    ScalarMatrix pl = p.proj(Sub::VDegree, l2), plj = p.proj(Sub::VDegree, l2 + j2);
    if (k2 == i2 + j2) rhs = rhs + times(trace(eij * x * pl), plj);
    if (k2 == 0) rhs = rhs - eij * plj * (x * pl).trace();
  }
  run.expect(gmatrix_diff(lhs, rhs), what);
}

// [E_i, 1_U E_j]^1 for U inside V[k].
void lemma_e_b(LemmaRun& run, int i2, int j2, int k2, const std::vector<int>& u, const std::string& what) {
  const Pyramid& p = run.p;
  int n = p.N();
  ScalarMatrix pu = proj_of(n, u), pkj = p.proj(Sub::VDegree, k2 + j2);
  GMatrix lhs = bracket1(build_E(p, ESelect::Degree, i2), pu * build_E(p, ESelect::Degree, j2));
  GMatrix rhs = build_E(p, ESelect::Degree, i2 + j2) * pkj * Rational(-int(u.size()));
  if (i2 + j2 == 0) rhs = rhs + times(trace(build_E(p, ESelect::Degree, 0) * pu), pkj);
  run.expect(gmatrix_diff(lhs, rhs), what);
}

// [E_i, 1_U F^t E_j]^1 for U inside V[k], exactly and modulo I.
void lemma_e_c(LemmaRun& run, int i2, int j2, int k2, const std::vector<int>& u, const std::string& what) {
  const Pyramid& p = run.p;
  int n = p.N();
  ScalarMatrix pu = proj_of(n, u), target = p.proj(Sub::VDegree, k2 + j2 - 2);
  GMatrix lhs = bracket1(build_E(p, ESelect::Degree, i2), (pu * p.Ft()) * build_E(p, ESelect::Degree, j2));
  GMatrix rhs(n);
  if (i2 + j2 == 2) rhs = times(trace((pu * p.Ft()) * build_E(p, ESelect::Degree, 2)), target);
  run.expect(gmatrix_diff(lhs, rhs), what);
  GMatrix reduced(n);
  if (i2 + j2 == 2) {
    int count = 0;
    for (int b : u) count += p.left(b) != 0;
    reduced = GMatrix::from_scalar(target * Rational(count));
  }
  run.expect(gmatrix_diff(reduce_entries(lhs, run.ctx), reduced), what + " mod I");
}

// [q, E_{<=0}](w) = 0 for q in Hom(F^t V_-^d, V_-^d) and w in F^t V' + V_-^u.
void lemma_e2(LemmaRun& run, const EnvElement& q, const std::string& what) {
  const Pyramid& p = run.p;
  GMatrix m = ad(q, build_E_le0(p));
  std::set<int> ws;
  for (int b : p.subspace(Sub::VPrime).boxes)
    if (p.right(b)) ws.insert(p.right(b));
  for (int b : p.subspace(Sub::VMinusU).boxes) ws.insert(b);
  std::optional<std::string> d;
  for (int w : ws)
    for (int a = 1; a <= p.N() && !d; ++a)
      if (!m.at(a, w).is_zero())
        d = "column " + std::to_string(w) + " row " + std::to_string(a) + ": " + m.at(a, w).str();
  run.expect(d, what);
}

// [a, E_i] = [E_{i+k}, A], and modulo I the value delta_{i+k,1}[F, A] when i + k >= 1.
void lemma_ad_e(LemmaRun& run, int i2, int k2, const ScalarMatrix& a, const std::string& what) {
  const Pyramid& p = run.p;
  EnvElement x = from_scalar_matrix(a);
  GMatrix lhs = ad(x, build_E(p, ESelect::Degree, i2));
  GMatrix e = build_E(p, ESelect::Degree, i2 + k2);
  run.expect(gmatrix_diff(lhs, e * a - a * e), what);
  if (i2 + k2 >= 2) {
    ScalarMatrix v = i2 + k2 == 2 ? p.F() * a - a * p.F() : ScalarMatrix(p.N());
    run.expect(gmatrix_diff(reduce_entries(lhs, run.ctx), GMatrix::from_scalar(v)), what + " mod I");
  }
}

std::string deg_name(int d2) {
  if (d2 % 2 == 0) return std::to_string(d2 / 2);
  return std::to_string(d2) + "/2";
}

std::vector<std::vector<int>> nonempty_subsets(const std::vector<int>& s) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
    std::vector<int> u;
    for (size_t t = 0; t < s.size(); ++t)
      if (mask & (1u << t)) u.push_back(s[t]);
    out.push_back(u);
  }
  return out;
}

std::vector<BoxSubset> named_subspaces(const Pyramid& p) {
  std::vector<BoxSubset> out;
  for (Sub s : {Sub::V, Sub::VPlus, Sub::VMinus, Sub::Vd, Sub::Vu, Sub::VPlusD, Sub::VPlusU, Sub::VMinusD,
                Sub::VMinusU, Sub::FV, Sub::FtV})
    out.push_back(p.subspace(s));
  for (int d2 : box_degrees(p)) out.push_back(p.subspace(Sub::VDegree, d2));
  return out;
}

// ----------------------------------------------------------------- section 8 forms

EnvElement e_(int i, int j) { return EnvElement::generator(i, j); }
EnvElement k_(const Rational& c) { return c == 0 ? EnvElement() : EnvElement(c); }

// c0 + c1 z as a series.
ZSeries lin(const EnvElement& c0, const Rational& c1 = 0) {
  ZSeries s;
  if (!c0.is_zero()) s.add(0, c0);
  if (c1 != 0) s.add(1, EnvElement(c1));
  return s;
}

}  // namespace

// ---------------------------------------------------------------------- the checks

CheckReport check_membership(const CheckInput& in) {
  return guarded("membership", context_of(in.pyramid, in.isotropic), [&](CheckReport& r) {
    IdealContext ctx(in.pyramid, in.isotropic);
    GeneratorSet gs = generators_for(in, ctx);
    for (const auto& g : gs.generators) {
      ++r.cases;
      if (auto w = ctx.membership_witness(g.w_tilde))
        fail(r, "generator " + g.label() + ": [" + w->first.str() + ", w] reduces to " + w->second.str());
    }
    r.notes.push_back(std::to_string(gs.size()) + " generators against " + std::to_string(ctx.n_basis().size()) +
                      " elements of n");
  });
}

CheckReport check_premet(const CheckInput& in) {
  return guarded("premet", context_of(in.pyramid, in.isotropic), [&](CheckReport& r) {
    const Pyramid& p = in.pyramid;
    IdealContext ctx(p, in.isotropic);
    GeneratorSet gs = generators_for(in, ctx);
    // W~ itself in the right aligned case, the transported W(z) otherwise
    const EnvMatrix& w = gs.matrix;
    ++r.cases;
    if (auto v = filtration_violation(w, p)) {
      fail(r, "Kazhdan bound: " + *v);
      return;
    }
    if (!p.is_right_aligned()) {
      r.notes.push_back("symbol identity uses the complement U^perp of the right aligned grading; not run");
      return;
    }
    EnvMatrix z = z_matrix(p);
    ComplementData cd = complement_data(p, build_basis(p));
    for (int a : w.rows().boxes)
      for (int b : w.cols().boxes) {
        std::set<int> ex;
        for (const auto& [m, c] : w.at(a, b).coeffs()) ex.insert(m);
        for (const auto& [m, c] : z.at(a, b).coeffs()) ex.insert(m);
        for (int m : ex) {
          ++r.cases;
          int d2 = 2 - 2 * m + p.x2(a) - p.x2(b);
          CommPoly lhs = eta_f(symbol(w.at(a, b).coeff(m), d2, p), cd);
          CommPoly rhs = commutative_image(z.at(a, b).coeff(m));
          if (lhs != rhs) fail(r, "symbol at " + entry_name(a, b, m) + ": " + lhs.str() + " vs " + rhs.str());
        }
      }
  });
}

CheckReport check_main(const CheckInput& in) {
  return guarded("main", context_of(in.pyramid, in.isotropic), [&](CheckReport& r) {
    const Pyramid& p = in.pyramid;
    int k = in.resolved_truncation();
    IdealContext ctx(p, in.isotropic);
    GeneratorSet gs = generators_for(in, ctx);
    LaxOperator qw = quasidet_of_W(gs, k);
    LaxOperator l = l_matrix(p, in.isotropic, k);
    MatrixComparison c = compare(qw.matrix, l.matrix);
    ++r.cases;
    note_series(r, c);
    if (!c.equal) fail(r, c.describe());
    if (!r.exact && r.checked_lo > -k)
      fail(r, "compared only down to z^" + std::to_string(r.checked_lo) + ", wanted z^" + std::to_string(-k));
  });
}

CheckReport check_yangian(const CheckInput& in) {
  return guarded("yangian", context_of(in.pyramid, in.isotropic), [&](CheckReport& r) {
    const Pyramid& p = in.pyramid;
    int k = in.resolved_truncation();
    IdealContext ctx(p, in.isotropic);
    LaxOperator lax = l_matrix(p, in.isotropic, k);
    const EnvMatrix& l = lax.matrix;
    // common known range [lo, hi]; below lo nothing is known unless the entries are exact
    bool exact = true;
    int lo = 0, hi = 0;
    bool any = false;
    for (int a : l.rows().boxes)
      for (int b : l.cols().boxes) {
        const ZSeries& s = l.at(a, b);
        if (!s.exact()) {
          exact = false;
        }
        for (const auto& [m, c] : s.coeffs()) {
          lo = any ? std::min(lo, m) : m;
          hi = any ? std::max(hi, m) : m;
          any = true;
        }
      }
    if (!any) return;
    int floor = exact ? lo - 1 : l.lo();
    if (!exact) {
      r.exact = false;
      r.checked_lo = floor + 1;
      r.checked_hi = hi + 1;
    }
    auto mul_w = [&](const EnvElement& x, const EnvElement& y) {
      if (x.is_zero() || y.is_zero()) return EnvElement();
      return ctx.act(x, y);
    };
    const auto& rows = l.rows().boxes;
    const auto& cols = l.cols().boxes;
    for (int i : rows)
      for (int j : cols)
        for (int h : rows)
          for (int kk : cols) {
            const ZSeries &lij = l.at(i, j), &lhk = l.at(h, kk), &lhj = l.at(h, j), &lik = l.at(i, kk);
            // C[a][b] = [L_ij;a, L_hk;b] for a, b in [floor, hi]
            std::map<std::pair<int, int>, EnvElement> comm;
            for (int a = floor; a <= hi; ++a)
              for (int b = floor; b <= hi; ++b) {
                const EnvElement &x = lij.coeff(a), &y = lhk.coeff(b);
                comm[{a, b}] = mul_w(x, y) - mul_w(y, x);
              }
            auto cval = [&](int a, int b) -> EnvElement {
              auto it = comm.find({a, b});
              return it == comm.end() ? EnvElement() : it->second;
            };
            for (int a = floor + 1; a <= hi + 1; ++a)
              for (int b = floor + 1; b <= hi + 1; ++b) {
                ++r.cases;
                EnvElement lhs = cval(a - 1, b) - cval(a, b - 1);
                EnvElement rhs = mul_w(lhj.coeff(b), lik.coeff(a)) - mul_w(lhj.coeff(a), lik.coeff(b));
                if (lhs != rhs) {
                  std::ostringstream os;
                  os << "i=" << i << " j=" << j << " h=" << h << " k=" << kk << " at z^" << a << " w^" << b
                     << ": residual " << (lhs - rhs).str();
                  fail(r, os.str());
                }
              }
          }
  });
}

CheckReport check_recursions(const CheckInput& in) {
  return guarded("recursions", context_of(in.pyramid, in.isotropic), [&](CheckReport& r) {
    const Pyramid& p = in.pyramid;
    if (!canonical_right(p) || !in.isotropic.empty() || p.p1() < 2) {
      skip(r, "needs a right aligned pyramid with at least two columns and l = 0");
      return;
    }
    int k = in.resolved_truncation();
    auto one = [&](const std::string& what, const RecursionSides& s) {
      MatrixComparison c = compare(s.direct, s.recursive);
      ++r.cases;
      note_series(r, c);
      if (!c.equal) fail(r, what + ": " + c.describe());
      r.notes.push_back(what + ": " + c.describe());
    };
    one("T", t_recursion(p));
    one("Z", z_recursion(p));
    one("L~", l_recursion(p, k));
    one("|W~|", w_quasidet_recursion(p, k));
    one("hereditary", w_hereditary(p, k));
  });
}

CheckReport check_section8(int pp, int q) {
  std::string ctx_name = "2^" + std::to_string(pp) + " 1^" + std::to_string(q) + " right";
  return guarded("section8", ctx_name, [&](CheckReport& r) {
    if (pp < 1 || q < 0) throw std::invalid_argument("section8: needs p >= 1 and q >= 0");
    std::vector<int> lens(pp, 2);
    lens.insert(lens.end(), q, 1);
    Pyramid p = build_pyramid(Partition::from_lengths(lens), Alignment::Right);
    int n = p.N(), rr = pp + q;
    BoxSubset v = EnvMatrix::full(n), vp = p.subspace(Sub::VPlus), vm = p.subspace(Sub::VMinus);
    if (vp.size() != rr || p.subspace(Sub::VMinusD).size() != pp)
      throw std::logic_error("section8: unexpected pyramid layout");
    for (int i = 1; i <= rr; ++i)
      if (p.x2(i) != 1 || (i <= pp && p.left(i) != i + rr))
        throw std::logic_error("section8: boxes are not numbered right column first");
    EnvMatrix recursion = w_tilde(p);

    // Matrix form:
    // (z+E_0)1_{V_-^u} + E_{-1} - (z+E_0)F^t(z-r+E_0)1_{V_-^d} + (z+E_0)1_{V_-^u}E_0F^t1_{V_-^d}
    GMatrix e0 = build_E(p, ESelect::Degree, 0);
    EnvMatrix ze0 = EnvMatrix::from_g(e0, v, v) + EnvMatrix::from_scalar(ScalarMatrix::identity(n), v, v, 1);
    EnvMatrix zre0 = ze0 - EnvMatrix::from_scalar(ScalarMatrix::identity(n) * Rational(rr), v, v);
    ScalarMatrix pu = p.proj(Sub::VMinusU), pd = p.proj(Sub::VMinusD), ft = p.Ft();
    EnvMatrix closed = mul(ze0, pu, v);
    closed = closed + EnvMatrix::from_g(build_E(p, ESelect::Degree, -2), v, v);
    closed = closed - mul(mul(mul(ze0, ft, v), zre0), pd, v);
    closed = closed + mul(mul(mul(ze0, pu, v), EnvMatrix::from_g(e0, v, v)), ft * pd, v);
    closed = closed.restrict(vp, vm);
    MatrixComparison c1 = compare(recursion, closed);
    ++r.cases;
    if (!c1.equal) fail(r, "matrix form: " + c1.describe());

    // Componentwise form; column j <= p is the box j + r of V_-^d, column j > p the box j.
    EnvMatrix comp(n, vp, vm);
    for (int i = 1; i <= rr; ++i)
      for (int j = 1; j <= rr; ++j) {
        if (j > pp) {
          comp.at(i, j) = lin(e_(j, i), i == j ? 1 : 0);
          continue;
        }
        ZSeries s = lin(e_(j + rr, i));
        for (int h = 1; h <= pp; ++h)
          s -= mul(lin(e_(h, i), i == h ? 1 : 0), lin(e_(j + rr, h + rr) + k_(h == j ? -rr : 0), h == j ? 1 : 0));
        for (int h = pp + 1; h <= rr; ++h) s += mul(lin(e_(h, i), i == h ? 1 : 0), lin(e_(j, h)));
        comp.at(i, j + rr) = s;
      }
    MatrixComparison c2 = compare(recursion, comp);
    ++r.cases;
    if (!c2.equal) fail(r, "componentwise form: " + c2.describe());

    // Generators, compared modulo I.
    IdealContext ctx(p);
    GeneratorSet gs = extract(recursion, p, &ctx);
    BoxSubset vmu = p.subspace(Sub::VMinusU);
    // Sum over the degree zero part: elementary u = e_{xy} with dual U = E_{yx}.
    std::vector<std::pair<int, int>> deg0;
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        if (p.deg2(x, y) == 0) deg0.push_back({x, y});
    for (const auto& g : gs.generators) {
      const CentralizerElement& e = g.element;
      int i = e.source, b = e.target;
      ScalarMatrix a = e.u;  // A in Hom(V_+, V_-)
      EnvElement abstract, component;
      if (vmu.contains(b)) {
        if (e.ell != 0) throw std::logic_error("section8: unexpected generator " + g.label());
        abstract = from_scalar_matrix(a);
        component = e_(b, i);
      } else {
        int j = b - rr;
        if (e.ell == 1) {
          abstract = from_scalar_matrix(phi_ell(p, a, 1)) - k_(Rational(rr) * (ft * a).trace());
          component = e_(j, i) + e_(j + rr, i + rr) - k_(i == j ? rr : 0);
        } else {
          abstract = from_scalar_matrix(a) + from_scalar_matrix(ft * a) * Rational(rr);
          for (auto [x, y] : deg0) {
            ScalarMatrix ux = ScalarMatrix::elementary(n, y, x);
            EnvElement u = e_(x, y);
            abstract -= multiply(u, from_scalar_matrix(a * ux * ft));
            abstract += multiply(u, from_scalar_matrix(ft * a * ux * pu));
          }
          component = e_(j + rr, i) + e_(j, i) * Rational(rr);
          for (int h = 1; h <= pp; ++h) component -= multiply(e_(h, i), e_(j + rr, h + rr));
          for (int h = pp + 1; h <= rr; ++h) component += multiply(e_(h, i), e_(j, h));
        }
      }
      ++r.cases;
      EnvElement ra = ctx.reduce(abstract), rc = ctx.reduce(component);
      if (ra != g.w) fail(r, "generator " + g.label() + " against the trace form: residual " + (g.w - ra).str());
      if (rc != g.w) fail(r, "generator " + g.label() + " against the e_ij form: residual " + (g.w - rc).str());
    }
  });
}

CheckReport check_section8(const CheckInput& in) {
  const Partition& part = in.pyramid.partition();
  int twos = 0, ones = 0;
  bool shape = true;
  for (const auto& pt : part.parts()) {
    if (pt.length == 2)
      twos = pt.mult;
    else if (pt.length == 1)
      ones = pt.mult;
    else
      shape = false;
  }
  if (!shape || twos == 0) {
    CheckReport r;
    r.name = "section8";
    r.context = context_of(in.pyramid, in.isotropic);
    skip(r, "needs a partition 2^p 1^q with p >= 1");
    return r;
  }
  return check_section8(twos, ones);
}

CheckReport check_identity_lemmas(const CheckInput& in, int random_cases) {
  return guarded("identity-lemmas", context_of(in.pyramid, {}), [&](CheckReport& r) {
    const Pyramid& p = in.pyramid;
    int n = p.N();
    IdealContext ctx(p);
    LemmaRun run{p, ctx, r};
    std::vector<int> vdeg = box_degrees(p), mdeg = matrix_degrees(p);
    std::vector<BoxSubset> subs = named_subspaces(p);

    // exhaustive inputs
    for (const auto& u : subs)
      for (const auto& w : subs) lemma_hom_basis(run, u, w, std::nullopt, "1_U E 1_W, U=" + u.tag + " W=" + w.tag);
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        lemma_completeness(run, ScalarMatrix::elementary(n, x, y), std::nullopt,
                           "sum U_i A U^i, A=E_" + std::to_string(x) + std::to_string(y));
    for (const auto& u : subs)
      lemma_completeness(run, proj_of(n, u.boxes), std::nullopt, "sum U_i 1_U U^i, U=" + u.tag);
    for (int i2 : mdeg)
      for (int j2 : mdeg) {
        std::string ij = "i=" + deg_name(i2) + " j=" + deg_name(j2);
        for (int x = 1; x <= n; ++x)
          for (int y = 1; y <= n; ++y)
            lemma_e_a(run, i2, j2, p.deg2(x, y), ScalarMatrix::elementary(n, x, y),
                      "[E_i, X E_j]^1, " + ij + " X=E_" + std::to_string(x) + std::to_string(y));
        for (int k2 : vdeg)
          for (const auto& u : nonempty_subsets(p.subspace(Sub::VDegree, k2).boxes)) {
            lemma_e_b(run, i2, j2, k2, u, "[E_i, 1_U E_j]^1, " + ij + " k=" + deg_name(k2));
            lemma_e_c(run, i2, j2, k2, u, "[E_i, 1_U F^t E_j]^1, " + ij + " k=" + deg_name(k2));
          }
      }
    bool right = p.is_right_aligned();
    BoxSubset ftvd = p.subspace(Sub::FtVMinusD), vmd = p.subspace(Sub::VMinusD);
    if (right)
      for (int a : ftvd.boxes)
        for (int b : vmd.boxes)
          lemma_e2(run, e_(b, a), "[q, E_<=0](w), q=e_" + std::to_string(b) + std::to_string(a));
    for (int i2 : mdeg)
      for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
          lemma_ad_e(run, i2, p.deg2(x, y), ScalarMatrix::elementary(n, x, y),
                     "[a, E_i], i=" + deg_name(i2) + " a=e_" + std::to_string(x) + std::to_string(y));

    // seeded random inputs, cycling through the lemmas
    Rng rng(in.seed);
    auto random_in_degree = [&](int k2) {
      ScalarMatrix x(n);
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          if (p.deg2(a, b) == k2 && rng.uniform(0, 2) > 0) x.at(a, b) = rng.coeff();
      return x;
    };
    auto pick = [&](const std::vector<int>& v) { return v[rng.uniform(0, int(v.size()) - 1)]; };
    for (int t = 0; t < random_cases; ++t) {
      std::string tag = "random case " + std::to_string(t) + ": ";
      switch (t % 6) {
        case 0: {
          const BoxSubset& u = subs[rng.uniform(0, int(subs.size()) - 1)];
          const BoxSubset& w = subs[rng.uniform(0, int(subs.size()) - 1)];
          int d = u.size() * w.size();
          if (d == 0) break;
          lemma_hom_basis(run, u, w, random_invertible(d, rng), tag + "1_U E 1_W, U=" + u.tag + " W=" + w.tag);
          break;
        }
        case 1: {
          ScalarMatrix a(n);
          for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) a.at(x, y) = Rational(rng.uniform(-4, 4));
          lemma_completeness(run, a, random_invertible(n * n, rng), tag + "sum U_i A U^i");
          break;
        }
        case 2: {
          int i2 = pick(mdeg), j2 = pick(mdeg), k2 = pick(mdeg);
          lemma_e_a(run, i2, j2, k2, random_in_degree(k2), tag + "[E_i, X E_j]^1");
          break;
        }
        case 3: {
          int i2 = pick(mdeg), j2 = pick(mdeg), k2 = pick(vdeg);
          auto subsets = nonempty_subsets(p.subspace(Sub::VDegree, k2).boxes);
          const auto& u = subsets[rng.uniform(0, int(subsets.size()) - 1)];
          lemma_e_b(run, i2, j2, k2, u, tag + "[E_i, 1_U E_j]^1");
          lemma_e_c(run, i2, j2, k2, u, tag + "[E_i, 1_U F^t E_j]^1");
          break;
        }
        case 4: {
          if (!right || ftvd.boxes.empty() || vmd.boxes.empty()) break;
          EnvElement q;
          for (int a : ftvd.boxes)
            for (int b : vmd.boxes) q.add_term(Monomial(1, char(gen(b, a))), rng.coeff());
          lemma_e2(run, q, tag + "[q, E_<=0](w)");
          break;
        }
        case 5: {
          int i2 = pick(mdeg), k2 = pick(mdeg);
          lemma_ad_e(run, i2, k2, random_in_degree(k2), tag + "[a, E_i]");
          break;
        }
      }
    }
    if (!right) r.notes.push_back("[q, E_<=0] part needs a right aligned pyramid; not run");
  });
}

CheckReport check_grading_compat(const CheckInput& in) {
  return guarded("grading", context_of(in.pyramid, in.isotropic), [&](CheckReport& r) {
    const Pyramid& p = in.pyramid;
    int n = p.N();
    Rng rng(in.seed);

    // Kazhdan filtrations of two good gradings on homogeneous pieces of their difference.
    std::vector<Pyramid> others;
    for (Alignment al : {Alignment::Right, Alignment::Left, Alignment::Dynkin}) {
      Pyramid q = build_pyramid(p.partition(), al).relabelled_like(p);
      if (!q.same_grading(p)) others.push_back(q);
    }
    std::vector<Gen> gens;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) gens.push_back(gen(i, j));
    for (const Pyramid& q : others) {
      auto shift2 = [&](const Monomial& m) {
        int s = 0;
        for (char g : m) s += p.deg2(Gen(g)) - q.deg2(Gen(g));
        return s;
      };
      std::vector<Monomial> span{Monomial()};
      for (Gen a : gens) {
        span.push_back(Monomial(1, char(a)));
        for (Gen b : gens)
          if (a <= b) span.push_back(mono({a, b}));
      }
      for (int t = 0; t < 200; ++t) {
        Monomial m;
        for (int s = 0; s < 3; ++s) m.push_back(char(gens[rng.uniform(0, int(gens.size()) - 1)]));
        std::sort(m.begin(), m.end());
        span.push_back(m);
      }
      for (const auto& m : span) {
        ++r.cases;
        if (kazhdan_weight2(m, q) != kazhdan_weight2(m, p) + shift2(m))
          fail(r, "Kazhdan weights of a monomial against " + to_string(q.alignment()) + " do not shift by the degree");
        // extended: z^ell m ⊗ E_ab
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            if (m.size() > 1 && rng.uniform(0, 7) != 0) continue;
            for (int ell = 0; ell <= 1; ++ell) {
              ++r.cases;
              int ext_p = 2 * ell + kazhdan_weight2(m, p) - p.deg2(a, b);
              int ext_q = 2 * ell + kazhdan_weight2(m, q) - q.deg2(a, b);
              int g2 = shift2(m) + p.deg2(a, b) - q.deg2(a, b);
              if (ext_q != ext_p + g2)
                fail(r, "extended Kazhdan degree of z^ell m E_ab does not shift by the degree");
            }
          }
      }
    }

    // W~ of the right aligned pyramid: G-degree 0 for neutral gradings, and its homogeneous
    // coefficients shift Kazhdan degree between good gradings by their degree.
    Pyramid canon = build_pyramid(p.partition(), Alignment::Right);
    EnvMatrix wt = w_tilde(canon);
    for (const auto& h : neutral_gradings(canon, 5, in.seed)) {
      ++r.cases;
      if (!is_neutral(canon, h)) fail(r, "sampled grading is not neutral");
      if (auto v = g_degree_violation(wt, h)) fail(r, "W~ not of G-degree 0: " + *v);
    }
    for (Alignment al : {Alignment::Left, Alignment::Dynkin}) {
      Pyramid q = build_pyramid(p.partition(), al).relabelled_like(canon);
      std::vector<Rational> h2(n + 1, Rational(0));
      for (int b = 1; b <= n; ++b) h2[b] = Rational(canon.x2(b) - q.x2(b));
      for (int a : wt.rows().boxes)
        for (int b : wt.cols().boxes)
          for (const auto& [m, c] : wt.at(a, b).coeffs()) {
            ++r.cases;
            auto g = g_degree(c, h2);
            if (!g || g->get_den() != 1) {
              fail(r, "W~ coefficient at " + entry_name(a, b, m) + " is not homogeneous");
              continue;
            }
            int shift = int(g->get_num().get_si());
            if (kazhdan_degree2(c, q) != kazhdan_degree2(c, canon) + shift)
              fail(r, "Kazhdan degree of the W~ coefficient at " + entry_name(a, b, m) + " against " +
                          to_string(al) + " does not shift by its degree");
          }
    }

    // W(g, f, Γ, l): generators of G-degree h_b - h_a and W-elements split into W-elements.
    IdealContext ctx(p, in.isotropic);
    GeneratorSet gs = generators_for(in, ctx);
    std::vector<std::vector<Rational>> hs = neutral_gradings(p, 5, in.seed);
    for (const auto& h : hs) {
      ++r.cases;
      if (auto v = g_degree_violation(gs.matrix, h)) fail(r, "W(z) not of G-degree 0: " + *v);
    }
    for (int t = 0; t < 5 && gs.size() > 0; ++t) {
      EnvElement x;
      for (int s = 0; s < 3; ++s) x.axpy(rng.coeff(), gs.generators[rng.uniform(0, gs.size() - 1)].w);
      const EnvElement& y = gs.generators[rng.uniform(0, gs.size() - 1)].w;
      const EnvElement& yy = gs.generators[rng.uniform(0, gs.size() - 1)].w;
      x += ctx.act(y, yy) * rng.coeff();
      const auto& h = hs[t % hs.size()];
      std::map<Rational, EnvElement> parts;
      for (const auto& [m, c] : x.terms()) parts[*g_degree(EnvElement::monomial(m, c), h)].add_term(m, c);
      for (const auto& [d, part] : parts) {
        ++r.cases;
        if (auto w = ctx.membership_witness(part))
          fail(r, "G-degree " + to_string(d) + " component is not a W-element: [" + w->first.str() + ", x] gives " +
                      w->second.str());
      }
    }
  });
}

CheckReport check_adjacency(const CheckInput& in) {
  return guarded("adjacency", context_of(in.pyramid, in.isotropic), [&](CheckReport& r) {
    const Pyramid& p = in.pyramid;
    int n = p.N();
    std::vector<ChainStep> chain = adjacency_chain(p);
    Pyramid right = build_pyramid(p.partition(), Alignment::Right).relabelled_like(p);
    const Pyramid& last = chain.empty() ? p : chain.back().to;
    ++r.cases;
    if (!last.same_grading(right)) fail(r, "chain does not end at the right aligned pyramid");
    auto set_of = [](const IsotropicSet& l) { return std::set<std::pair<int, int>>(l.begin(), l.end()); };
    for (size_t s = 0; s < chain.size(); ++s) {
      const ChainStep& st = chain[s];
      std::string at = "step " + std::to_string(s) + ": ";
      ++r.cases;
      if (!st.from.check_good_grading() || !st.to.check_good_grading()) fail(r, at + "grading is not good");
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (std::abs(st.from.deg2(i, j) - st.to.deg2(i, j)) > 1) fail(r, at + "gradings are not adjacent");
      auto half_from = elements_of_degree2(st.from, 1), half_to = elements_of_degree2(st.to, 1);
      ++r.cases;
      if (!is_isotropic(st.from, st.l) || !is_isotropic(st.to, st.l_tilde)) fail(r, at + "l is not isotropic");
      if (2 * st.l.size() != half_from.size() || 2 * st.l_tilde.size() != half_to.size())
        fail(r, at + "l is not Lagrangian");
      // l + g[>=1] = l~ + g~[>=1]
      auto lhs = set_of(st.l), rhs = set_of(st.l_tilde);
      for (Gen g : elements_with_degree2_at_least(st.from, 2)) lhs.insert({gen_i(g), gen_j(g)});
      for (Gen g : elements_with_degree2_at_least(st.to, 2)) rhs.insert({gen_i(g), gen_j(g)});
      ++r.cases;
      if (lhs != rhs) fail(r, at + "l + g[>=1] differs from l~ + g~[>=1]");
      // gray arrows carry a nondegenerate form, red and green arrows pair off
      std::vector<Gen> gray = gray_arrows(st.from, st.to);
      QMatrix w(int(gray.size()), int(gray.size()));
      for (size_t a = 0; a < gray.size(); ++a)
        for (size_t b = 0; b < gray.size(); ++b) w(int(a), int(b)) = omega(st.from, gray[a], gray[b]);
      ++r.cases;
      if (w.rank() != int(gray.size())) fail(r, at + "omega is degenerate on the gray arrows");
      int red = 0, green = 0;
      for (Gen g : half_from) {
        red += st.to.deg2(g) == 0;
        green += st.to.deg2(g) == 2;
      }
      ++r.cases;
      if (red != green) fail(r, at + "red and green arrows have different counts");
    }
    // transported generators at every grading of the chain and in the requested context
    std::vector<std::pair<Pyramid, IsotropicSet>> targets{{p, in.isotropic}};
    for (const auto& st : chain) targets.push_back({st.to, st.l_tilde});
    for (const auto& [q, l] : targets) {
      IdealContext ctx(q, l);
      GeneratorSet gs = w_general(q, l, in.seed);
      for (const auto& g : gs.generators) {
        ++r.cases;
        if (auto w = ctx.membership_witness(g.w))
          fail(r, "transported generator " + g.label() + " in " + ctx.str() + " fails membership against " +
                      w->first.str());
      }
    }
    r.notes.push_back(std::to_string(chain.size()) + " adjacency steps");
  });
}

CheckReport check_centralizer(const CheckInput& in) {
  return guarded("centralizer", context_of(in.pyramid, {}), [&](CheckReport& r) {
    const Pyramid& p = in.pyramid;
    int n = p.N();
    CentralizerBasis basis = build_basis(p);
    int formula = centralizer_dimension_formula(p.partition());
    ++r.cases;
    if (basis.dim() != formula)
      fail(r, "dimension " + std::to_string(basis.dim()) + " against the formula " + std::to_string(formula));
    ScalarMatrix f = p.F();
    auto flat = [&](const ScalarMatrix& m) {
      SparseVec v;
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          if (m.at(a, b) != 0) v[(a - 1) * n + (b - 1)] = m.at(a, b);
      return v;
    };
    Echelon span_f;
    for (const auto& e : basis.elements) {
      ++r.cases;
      if (f * e.phi != e.phi * f) fail(r, "[F, phi] != 0 for " + e.label());
      if (e.ell == std::min(e.h, e.k) && !phi_ell(p, e.u, e.ell + 1).is_zero())
        fail(r, "phi_ell does not vanish beyond min(h,k) for " + e.label());
      if (!span_f.insert(flat(e.phi))) fail(r, "basis element " + e.label() + " is linearly dependent");
    }
    // g = g^f + U^perp and the projection along U^perp
    if (!p.is_right_aligned()) {
      r.notes.push_back("U^perp is defined for the right aligned grading; complement not run");
      r.notes.push_back("dim g^f = " + std::to_string(basis.dim()));
      return;
    }
    ComplementData cd = complement_data(p, basis);
    Echelon all = span_f;
    Echelon span_perp;
    for (Gen g : cd.u_perp) {
      SparseVec v{{(gen_i(g) - 1) * n + (gen_j(g) - 1), Rational(1)}};
      span_perp.insert(v);
      all.insert(v);
    }
    ++r.cases;
    if (all.rank() != n * n) fail(r, "g^f + U^perp has rank " + std::to_string(all.rank()));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        ++r.cases;
        ScalarMatrix pi = to_scalar_matrix(n, cd.pi_f[gen(i, j)]);
        SparseVec in_f = flat(pi);
        SparseVec rest = flat(ScalarMatrix::elementary(n, i, j) - pi);
        if (!span_f.reduce(in_f) || !span_perp.reduce(rest))
          fail(r, "pi^f(e_" + std::to_string(i) + std::to_string(j) + ") is not the projection along U^perp");
      }
    r.notes.push_back("dim g^f = " + std::to_string(basis.dim()));
  });
}

CheckReport check_pbw(const CheckInput& in, int max_weight) {
  return guarded("pbw", context_of(in.pyramid, in.isotropic), [&](CheckReport& r) {
    const Pyramid& p = in.pyramid;
    IdealContext ctx(p, in.isotropic);
    GeneratorSet gs = generators_for(in, ctx);
    std::vector<int> w2;
    for (const auto& g : gs.generators) {
      int d = 2 - 2 * g.element.ell + p.x2(g.element.source) - p.x2(g.element.target);
      if (d <= 0) throw std::logic_error("generator " + g.label() + " has non-positive Kazhdan weight");
      w2.push_back(d);
    }
    std::map<Monomial, int> index;
    Echelon ech;
    auto insert = [&](const EnvElement& x) {
      SparseVec v;
      for (const auto& [m, c] : x.terms()) {
        auto [it, fresh] = index.emplace(m, int(index.size()));
        v[it->second] = c;
      }
      ++r.cases;
      return ech.insert(std::move(v));
    };
    std::vector<int> word;
    std::optional<std::string> dependent;
    // products w_{i_1} ... w_{i_s} with i_1 <= ... <= i_s, built from the right
    std::function<void(const EnvElement&, int, int)> dfs = [&](const EnvElement& value, int max_index, int budget) {
      for (int i = 0; i <= max_index && !dependent; ++i) {
        if (w2[i] > budget) continue;
        EnvElement next = ctx.act(gs.generators[i].w, value);
        word.push_back(i);
        if (!insert(next)) {
          std::ostringstream os;
          os << "ordered monomial";
          for (auto it = word.rbegin(); it != word.rend(); ++it) os << " " << gs.generators[*it].label();
          os << " depends on smaller ones";
          dependent = os.str();
        }
        dfs(next, i, budget - w2[i]);
        word.pop_back();
      }
    };
    insert(EnvElement(Rational(1)));
    dfs(EnvElement(Rational(1)), gs.size() - 1, 2 * max_weight);
    if (dependent) fail(r, *dependent);
    r.notes.push_back(std::to_string(r.cases) + " ordered monomials of weight <= " + std::to_string(max_weight));
  });
}

const std::vector<NamedCheck>& check_registry() {
  static const std::vector<NamedCheck> reg{
      {"adjacency", [](const CheckInput& in) { return check_adjacency(in); }},
      {"centralizer", [](const CheckInput& in) { return check_centralizer(in); }},
      {"grading", [](const CheckInput& in) { return check_grading_compat(in); }},
      {"identity-lemmas", [](const CheckInput& in) { return check_identity_lemmas(in); }},
      {"main", [](const CheckInput& in) { return check_main(in); }},
      {"membership", [](const CheckInput& in) { return check_membership(in); }},
      {"pbw", [](const CheckInput& in) { return check_pbw(in); }},
      {"premet", [](const CheckInput& in) { return check_premet(in); }},
      {"recursions", [](const CheckInput& in) { return check_recursions(in); }},
      {"section8", [](const CheckInput& in) { return check_section8(in); }},
      {"yangian", [](const CheckInput& in) { return check_yangian(in); }},
  };
  return reg;
}

bool is_check_name(const std::string& name) {
  for (const auto& c : check_registry())
    if (c.name == name) return true;
  return false;
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const CheckInput& in) {
  std::vector<const NamedCheck*> selected;
  for (const auto& c : check_registry()) {
    bool want = false;
    for (const auto& n : names) want = want || n == "all" || n == c.name;
    if (want) selected.push_back(&c);
  }
  for (const auto& n : names)
    if (n != "all" && !is_check_name(n)) throw std::invalid_argument("unknown check: " + n);
  std::vector<CheckReport> out = parallel_map(selected, [&](const NamedCheck* c) { return c->run(in); });
  std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  return out;
}

}  // namespace wgen
