#include "wgen/json_io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace wgen {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json to_json(const EnvElement& x) {
  Json out = Json::array();
  for (const auto& [m, c] : x.sorted_terms()) {
    Json factors = Json::array();
    for (size_t k = 0; k < m.size();) {
      size_t e = k;
      while (e < m.size() && m[e] == m[k]) ++e;
      Gen g = Gen(m[k]);
      factors.push_back({gen_i(g), gen_j(g), int(e - k)});
      k = e;
    }
    out.push_back({{"coeff", to_json(c)}, {"monomial", factors}});
  }
  return out;
}

EnvElement env_element_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("EnvElement must be a list of terms");
  EnvElement x;
  for (const auto& t : j) {
    Monomial m;
    for (const auto& f : t.at("monomial")) {
      int i = f.at(0).get<int>(), jj = f.at(1).get<int>(), e = f.at(2).get<int>();
      if (i < 1 || jj < 1 || i > kMaxN || jj > kMaxN || e < 1)
        throw std::invalid_argument("bad monomial factor in EnvElement");
      m.append(size_t(e), char(gen(i, jj)));
    }
    x.add_term(m, rational_from_json(t.at("coeff")));
  }
  return x;
}

Json to_json(const ZSeries& s) {
  Json terms = Json::array();
  for (auto it = s.coeffs().rbegin(); it != s.coeffs().rend(); ++it)
    terms.push_back({{"z", it->first}, {"coeff", to_json(it->second)}});
  Json out;
  out["floor"] = s.exact() ? Json(nullptr) : Json(s.lo());
  out["terms"] = terms;
  return out;
}

ZSeries zseries_from_json(const Json& j) {
  ZSeries s = j.at("floor").is_null() ? ZSeries() : ZSeries(j.at("floor").get<int>());
  for (const auto& t : j.at("terms")) s.add(t.at("z").get<int>(), env_element_from_json(t.at("coeff")));
  return s;
}

namespace {

Json boxes_json(const BoxSubset& b) { return {{"tag", b.tag}, {"boxes", b.boxes}}; }

BoxSubset boxes_from_json(const Json& j) {
  BoxSubset b;
  b.tag = j.at("tag").get<std::string>();
  b.boxes = j.at("boxes").get<std::vector<int>>();
  return b;
}

std::string x_str(int x2) { return x2 % 2 == 0 ? std::to_string(x2 / 2) : std::to_string(x2) + "/2"; }

}  // namespace

Json to_json(const EnvMatrix& m) {
  Json entries = Json::array();
  for (int a : m.rows().boxes)
    for (int b : m.cols().boxes) {
      const ZSeries& s = m.at(a, b);
      if (s.is_zero() && s.exact()) continue;
      Json e = to_json(s);
      e["row"] = a;
      e["col"] = b;
      entries.push_back(e);
    }
  return {{"n", m.n()}, {"rows", boxes_json(m.rows())}, {"cols", boxes_json(m.cols())}, {"entries", entries}};
}

EnvMatrix env_matrix_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  if (n < 0 || n > kMaxN) throw std::invalid_argument("EnvMatrix size out of range");
  EnvMatrix m(n, boxes_from_json(j.at("rows")), boxes_from_json(j.at("cols")));
  for (const auto& e : j.at("entries")) {
    int a = e.at("row").get<int>(), b = e.at("col").get<int>();
    if (!m.rows().contains(a) || !m.cols().contains(b)) throw std::invalid_argument("EnvMatrix entry outside its shape");
    m.at(a, b) = zseries_from_json(e);
  }
  return m;
}

Json to_json(const Pyramid& p) {
  Json boxes = Json::array();
  for (int b = 1; b <= p.N(); ++b) {
    const Box& bx = p.box(b);
    boxes.push_back({{"box", b}, {"row", bx.row + 1}, {"pos", bx.pos + 1}, {"x", x_str(bx.x2)}});
  }
  return {{"partition", p.partition().rows()},
          {"alignment", to_string(p.alignment())},
          {"left2", p.left2()},
          {"boxes", boxes}};
}

Pyramid pyramid_from_json(const Json& j) {
  Partition part = Partition::from_lengths(j.at("partition").get<std::vector<int>>());
  Alignment al = parse_alignment(j.at("alignment").get<std::string>());
  std::vector<int> left2 = j.at("left2").get<std::vector<int>>();
  if (int(left2.size()) != part.r()) throw std::invalid_argument("pyramid: one left edge per row expected");
  if (!nesting_ok(part, left2)) throw std::invalid_argument("pyramid: rows do not nest (not a good grading)");
  Pyramid p(part, al, left2);
  if (j.contains("boxes"))
    for (const auto& b : j.at("boxes")) {
      int n = b.at("box").get<int>();
      if (n < 1 || n > p.N() || p.box(n).row + 1 != b.at("row").get<int>() || p.box(n).pos + 1 != b.at("pos").get<int>())
        throw std::invalid_argument("pyramid: box numbering differs from the standard one");
    }
  return p;
}

Json to_json(const CentralizerBasis& b) {
  Json els = Json::array();
  for (const auto& e : b.elements)
    els.push_back({{"label", e.label()},
                   {"h", e.h},
                   {"k", e.k},
                   {"ell", e.ell},
                   {"source", e.source},
                   {"target", e.target},
                   {"element", to_json(from_scalar_matrix(e.phi))}});
  return {{"pyramid", to_json(b.pyramid)}, {"dim", b.dim()}, {"elements", els}};
}

Json to_json(const GeneratorSet& gs) {
  Json gens = Json::array();
  for (const auto& g : gs.generators)
    gens.push_back({{"label", g.label()},
                    {"h", g.element.h},
                    {"k", g.element.k},
                    {"ell", g.element.ell},
                    {"source", g.element.source},
                    {"target", g.element.target},
                    {"w_tilde", to_json(g.w_tilde)},
                    {"w", to_json(g.w)}});
  Json iso = Json::array();
  for (auto [i, j] : gs.isotropic) iso.push_back({i, j});
  return {{"pyramid", to_json(gs.pyramid)}, {"isotropic", iso}, {"generators", gens}, {"matrix", to_json(gs.matrix)}};
}

GeneratorSet generator_set_from_json(const Json& j) {
  GeneratorSet gs;
  gs.pyramid = pyramid_from_json(j.at("pyramid"));
  for (const auto& e : j.at("isotropic")) gs.isotropic.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  gs.matrix = env_matrix_from_json(j.at("matrix"));
  CentralizerBasis basis = build_basis(gs.pyramid);
  std::map<std::tuple<int, int, int>, const CentralizerElement*> by_key;
  for (const auto& e : basis.elements) by_key[{e.source, e.target, e.ell}] = &e;
  for (const auto& g : j.at("generators")) {
    auto key = std::make_tuple(g.at("source").get<int>(), g.at("target").get<int>(), g.at("ell").get<int>());
    auto it = by_key.find(key);
    if (it == by_key.end()) throw std::invalid_argument("generator does not match a centralizer basis element");
    Generator out;
    out.element = *it->second;
    out.w_tilde = env_element_from_json(g.at("w_tilde"));
    out.w = env_element_from_json(g.at("w"));
    gs.generators.push_back(std::move(out));
  }
  return gs;
}

bool same_generator_sets(const GeneratorSet& a, const GeneratorSet& b) {
  if (!a.pyramid.same_labels(b.pyramid) || !a.pyramid.same_grading(b.pyramid)) return false;
  if (a.isotropic != b.isotropic || !(a.matrix == b.matrix) || a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    const Generator &x = a.generators[i], &y = b.generators[i];
    if (x.element.source != y.element.source || x.element.target != y.element.target ||
        x.element.ell != y.element.ell || x.w_tilde != y.w_tilde || x.w != y.w)
      return false;
  }
  return true;
}

Json to_json(const LaxOperator& l) {
  Json iso = Json::array();
  for (auto [i, j] : l.isotropic) iso.push_back({i, j});
  return {{"pyramid", to_json(l.pyramid)},
          {"isotropic", iso},
          {"reduced", l.reduced},
          {"floor", l.floor()},
          {"matrix", to_json(l.matrix)}};
}

Json to_json(const CheckReport& r) {
  Json out{{"name", r.name}, {"context", r.context}, {"status", to_string(r.status)}};
  out["range"] = r.exact ? Json("exact") : Json({{"lo", r.checked_lo}, {"hi", r.checked_hi}});
  out["cases"] = r.cases;
  out["elapsed_s"] = r.elapsed;
  out["witness"] = r.witness;
  out["notes"] = r.notes;
  return out;
}

std::string render(const EnvMatrix& m) { return m.str(); }

std::string render(const GeneratorSet& gs) {
  std::ostringstream os;
  os << "W-algebra generators for partition " << gs.pyramid.partition().str() << ", "
     << to_string(gs.pyramid.alignment()) << " pyramid";
  if (!gs.isotropic.empty()) {
    os << ", l = span{";
    for (size_t k = 0; k < gs.isotropic.size(); ++k)
      os << (k ? ", " : "") << "e_{" << gs.isotropic[k].first << gs.isotropic[k].second << "}";
    os << "}";
  }
  os << "\n" << gs.size() << " generators w(phi_ell(e_{ba})), b = target, a = source\n";
  for (const auto& g : gs.generators) os << "  " << g.label() << ": " << g.w.str() << "\n";
  return os.str();
}

std::string render(const CentralizerBasis& b) {
  std::ostringstream os;
  os << "centralizer of f for partition " << b.pyramid.partition().str() << ": dim " << b.dim() << "\n";
  for (const auto& e : b.elements) os << "  " << e.label() << ": " << from_scalar_matrix(e.phi).str() << "\n";
  return os.str();
}

}  // namespace wgen
