// wgen: command line front end for the W-algebra engine.
//
//   wgen pyramid     --partition 3,3,2,1 --align dynkin
//   wgen centralizer --partition 2,1
//   wgen generators  --partition 2,1 --align right [--isotropic 2,3] [--format json]
//   wgen lax         --partition 2,2 --truncation 6
//   wgen verify      --check all --partition 2,2

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgen/centralizer.hpp"
#include "wgen/generators.hpp"
#include "wgen/json_io.hpp"
#include "wgen/lax.hpp"
#include "wgen/pyramid.hpp"
#include "wgen/verify.hpp"

namespace {

using namespace wgen;

// Raised for user input problems; the message starts with the offending field.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobSpec {
  std::string subcommand;
  std::string partition;
  std::string align = "right";
  std::string offsets;
  std::string isotropic;
  int truncation = 0;
  unsigned seed = 1;
  std::vector<std::string> checks{"all"};
  std::string format;
  std::string output;
  bool raw = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

int parse_int(const std::string& field, const std::string& s) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw SpecError(field + ": '" + s + "' is not an integer");
  return v;
}

Partition parse_partition(const std::string& s) {
  if (s.empty()) throw SpecError("--partition: required, e.g. --partition 3,2,1");
  std::vector<int> lengths;
  for (const auto& item : split(s, ',')) {
    int v = parse_int("--partition", item);
    if (v < 1) throw SpecError("--partition: row lengths must be positive, got " + item);
    lengths.push_back(v);
  }
  int n = 0;
  for (int v : lengths) n += v;
  if (n > kMaxN)
    throw SpecError("--partition: N = " + std::to_string(n) + " exceeds the supported " + std::to_string(kMaxN));
  return Partition::from_lengths(lengths);
}

Pyramid parse_pyramid(const JobSpec& spec) {
  Partition part = parse_partition(spec.partition);
  if (!spec.offsets.empty()) {
    std::vector<Rational> offsets;
    for (const auto& item : split(spec.offsets, ',')) {
      try {
        offsets.push_back(parse_rational(item));
      } catch (const std::exception&) {
        throw SpecError("--offsets: '" + item + "' is not a rational number");
      }
    }
    try {
      return build_pyramid_custom(part, offsets);
    } catch (const std::invalid_argument& e) {
      throw SpecError(std::string("--") + e.what());
    }
  }
  Alignment al;
  try {
    al = parse_alignment(spec.align);
  } catch (const std::invalid_argument&) {
    throw SpecError("--align: expected right, left or dynkin, got '" + spec.align + "'");
  }
  if (al == Alignment::Custom) throw SpecError("--align: custom pyramids are given with --offsets");
  return build_pyramid(part, al);
}

// "i,j;i,j" lists the e_{ij} spanning l; "lagrangian" takes the Lagrangian subspace of the
// first adjacency step towards the right aligned pyramid.
IsotropicSet parse_isotropic(const std::string& s, const Pyramid& p) {
  if (s.empty()) return {};
  if (s == "lagrangian") {
    auto chain = adjacency_chain(p);
    if (chain.empty()) return {};
    return chain.front().l;
  }
  IsotropicSet l;
  for (const auto& pair : split(s, ';')) {
    auto ij = split(pair, ',');
    if (ij.size() != 2) throw SpecError("--isotropic: expected pairs 'i,j' separated by ';', got '" + pair + "'");
    int i = parse_int("--isotropic", ij[0]), j = parse_int("--isotropic", ij[1]);
    if (i < 1 || j < 1 || i > p.N() || j > p.N())
      throw SpecError("--isotropic: box index out of range in '" + pair + "'");
    l.push_back({i, j});
  }
  if (!is_isotropic(p, l))
    throw SpecError("--isotropic: not an isotropic set of degree 1/2 elements e_{ij}");
  return l;
}

std::string pyramid_picture(const Pyramid& p) {
  int minx = 1 << 30;
  for (int b = 1; b <= p.N(); ++b) minx = std::min(minx, p.x2(b));
  std::ostringstream os;
  for (int row = p.num_rows() - 1; row >= 0; --row) {
    std::string line;
    for (int pos = 0; pos < p.row_length(row); ++pos) {
      int b = p.number(row, pos);
      size_t col = size_t(2 * (p.x2(b) - minx));
      if (line.size() < col) line.append(col - line.size(), ' ');
      std::string cell = "[" + std::to_string(b) + "]";
      cell.resize(4, ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << "  " << line << "\n";
  }
  return os.str();
}

void emit(const JobSpec& spec, const std::string& text) {
  if (spec.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(spec.output);
  if (!out) throw SpecError("--output: cannot open '" + spec.output + "' for writing");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run_pyramid(const JobSpec& spec) {
  Pyramid p = parse_pyramid(spec);
  if (spec.format == "json")
    emit(spec, dump(to_json(p)));
  else
    emit(spec, p.str() + pyramid_picture(p));
  return 0;
}

int run_centralizer(const JobSpec& spec) {
  Pyramid p = parse_pyramid(spec);
  CentralizerBasis basis = build_basis(p);
  if (spec.format == "json")
    emit(spec, dump(to_json(basis)));
  else
    emit(spec, render(basis));
  return 0;
}

int run_generators(const JobSpec& spec) {
  Pyramid p = parse_pyramid(spec);
  IsotropicSet l = parse_isotropic(spec.isotropic, p);
  GeneratorSet gs = w_general(p, l, spec.seed);
  std::string json = dump(to_json(gs));
  std::string text = render(gs);
  if (spec.format == "json")
    emit(spec, json);
  else if (spec.format == "text")
    emit(spec, text);
  else if (spec.output.empty())
    std::cout << json << text;
  else {
    emit(spec, json);
    std::cout << text;
  }
  return 0;
}

int run_lax(const JobSpec& spec) {
  Pyramid p = parse_pyramid(spec);
  IsotropicSet l = parse_isotropic(spec.isotropic, p);
  int k = spec.truncation > 0 ? spec.truncation : 2 * p.p1() + 4;
  if (spec.raw && (!p.is_right_aligned() || !l.empty()))
    throw SpecError("--raw: U(g) representatives exist only for right aligned pyramids with l = 0");
  LaxOperator lax = l_matrix(p, l, k, !spec.raw);
  if (spec.format == "json")
    emit(spec, dump(to_json(lax)));
  else
    emit(spec, "L(z) for partition " + p.partition().str() + ", " + to_string(p.alignment()) +
                   " pyramid, exponents >= " + std::to_string(lax.floor()) + "\n" + render(lax.matrix));
  return 0;
}

int run_verify(const JobSpec& spec) {
  for (const auto& c : spec.checks)
    if (c != "all" && !is_check_name(c)) {
      std::string known;
      for (const auto& n : check_registry()) known += " " + n.name;
      throw SpecError("--check: unknown check '" + c + "'; known: all" + known);
    }
  CheckInput in;
  in.pyramid = parse_pyramid(spec);
  in.isotropic = parse_isotropic(spec.isotropic, in.pyramid);
  in.truncation = spec.truncation;
  in.seed = spec.seed;
  std::vector<CheckReport> reports = run_checks(spec.checks, in);
  bool ok = true;
  for (const auto& r : reports) ok = ok && !r.failed();
  if (spec.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    emit(spec, dump(arr));
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << r.summary() << "\n";
      for (const auto& n : r.notes) os << "    " << n << "\n";
    }
    os << (ok ? "all selected checks passed\n" : "some checks FAILED\n");
    emit(spec, os.str());
  }
  return ok ? 0 : 1;
}

void add_pyramid_options(CLI::App* sub, JobSpec& spec) {
  sub->add_option("--partition", spec.partition, "row lengths, comma separated (e.g. 3,2,1)")->required();
  sub->add_option("--align", spec.align, "right | left | dynkin");
  sub->add_option("--offsets", spec.offsets, "custom left-edge offsets per row, comma separated, halves allowed");
  sub->add_option("--format", spec.format, "text | json");
  sub->add_option("--output", spec.output, "write the result to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wgen: exact generators and Lax operators of finite W-algebras W(gl_N, f)"};
  app.require_subcommand(1);
  JobSpec spec;

  auto* pyr = app.add_subcommand("pyramid", "box table with x-coordinates");
  add_pyramid_options(pyr, spec);

  auto* cen = app.add_subcommand("centralizer", "basis of the centralizer of f");
  add_pyramid_options(cen, spec);

  auto* gen = app.add_subcommand("generators", "W-algebra generators (JSON followed by a listing)");
  add_pyramid_options(gen, spec);
  gen->add_option("--isotropic", spec.isotropic, "l as pairs 'i,j;i,j' or 'lagrangian'");
  gen->add_option("--seed", spec.seed, "seed for the sampled neutral gradings");

  auto* lax = app.add_subcommand("lax", "Lax operator L(z) on exponents >= -K");
  add_pyramid_options(lax, spec);
  lax->add_option("--isotropic", spec.isotropic, "l as pairs 'i,j;i,j' or 'lagrangian'");
  lax->add_option("--truncation", spec.truncation, "K (default 2 p_1 + 4)");
  lax->add_flag("--raw", spec.raw, "U(g) representatives instead of normal forms");

  auto* ver = app.add_subcommand("verify", "run verification checks; exit 0 iff none fails");
  add_pyramid_options(ver, spec);
  ver->add_option("--check", spec.checks, "all or a check name (repeatable)");
  ver->add_option("--isotropic", spec.isotropic, "l as pairs 'i,j;i,j' or 'lagrangian'");
  ver->add_option("--truncation", spec.truncation, "K (default 2 p_1 + 4)");
  ver->add_option("--seed", spec.seed, "seed for randomized sub-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  for (auto* sub : app.get_subcommands()) spec.subcommand = sub->get_name();
  if (!spec.format.empty() && spec.format != "text" && spec.format != "json") {
    std::cerr << "wgen: --format: expected text or json, got '" << spec.format << "'\n";
    return 2;
  }
  try {
    if (spec.subcommand == "pyramid") return run_pyramid(spec);
    if (spec.subcommand == "centralizer") return run_centralizer(spec);
    if (spec.subcommand == "generators") return run_generators(spec);
    if (spec.subcommand == "lax") return run_lax(spec);
    return run_verify(spec);
  } catch (const SpecError& e) {
    std::cerr << "wgen: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "wgen: " << spec.subcommand << " failed: " << e.what() << "\n";
    return 3;
  }
}
