#include "wgen/pyramid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wgen {

Partition Partition::from_lengths(const std::vector<int>& lengths) {
  if (lengths.empty()) throw std::invalid_argument("partition: empty");
  Partition p;
  std::vector<int> idx(lengths.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (int l : lengths)
    if (l <= 0) throw std::invalid_argument("partition: parts must be positive");
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return lengths[a] > lengths[b]; });
  for (int i : idx) {
    p.rows_.push_back(lengths[i]);
    p.input_index_.push_back(i);
  }
  for (int l : p.rows_) {
    if (!p.parts_.empty() && p.parts_.back().length == l)
      ++p.parts_.back().mult;
    else
      p.parts_.push_back({l, 1});
  }
  if (p.N() > kMaxN) throw std::invalid_argument("partition: N exceeds " + std::to_string(kMaxN));
  return p;
}

Partition Partition::from_parts(const std::vector<Part>& parts) {
  std::vector<int> lengths;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i].length >= parts[i - 1].length)
      throw std::invalid_argument("partition: lengths must be strictly decreasing");
    if (parts[i].mult <= 0) throw std::invalid_argument("partition: multiplicities must be positive");
    for (int k = 0; k < parts[i].mult; ++k) lengths.push_back(parts[i].length);
  }
  return from_lengths(lengths);
}

int Partition::N() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

std::string Partition::str() const {
  std::string s;
  for (size_t i = 0; i < rows_.size(); ++i) s += (i ? "," : "") + std::to_string(rows_[i]);
  return s;
}

namespace {
void partitions_rec(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition::from_lengths(cur));
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::string to_string(Alignment a) {
  switch (a) {
    case Alignment::Right: return "right";
    case Alignment::Left: return "left";
    case Alignment::Dynkin: return "dynkin";
    case Alignment::Custom: return "custom";
  }
  return "?";
}

Alignment parse_alignment(const std::string& s) {
  if (s == "right") return Alignment::Right;
  if (s == "left") return Alignment::Left;
  if (s == "dynkin") return Alignment::Dynkin;
  if (s == "custom") return Alignment::Custom;
  throw std::invalid_argument("alignment: expected right|left|dynkin, got '" + s + "'");
}

bool BoxSubset::contains(int b) const { return std::binary_search(boxes.begin(), boxes.end(), b); }

BoxSubset set_union(const BoxSubset& a, const BoxSubset& b) {
  BoxSubset r;
  std::set_union(a.boxes.begin(), a.boxes.end(), b.boxes.begin(), b.boxes.end(),
                 std::back_inserter(r.boxes));
  r.tag = a.tag + "+" + b.tag;
  return r;
}

BoxSubset set_minus(const BoxSubset& a, const BoxSubset& b) {
  BoxSubset r;
  std::set_difference(a.boxes.begin(), a.boxes.end(), b.boxes.begin(), b.boxes.end(),
                      std::back_inserter(r.boxes));
  r.tag = a.tag + "-" + b.tag;
  return r;
}

BoxSubset set_intersection(const BoxSubset& a, const BoxSubset& b) {
  BoxSubset r;
  std::set_intersection(a.boxes.begin(), a.boxes.end(), b.boxes.begin(), b.boxes.end(),
                        std::back_inserter(r.boxes));
  r.tag = a.tag + "&" + b.tag;
  return r;
}

Pyramid::Pyramid(Partition partition, Alignment align, std::vector<int> left2)
    : partition_(std::move(partition)), align_(align), left2_(std::move(left2)) {
  const auto& rows = partition_.rows();
  if (int(left2_.size()) != partition_.r()) throw std::invalid_argument("pyramid: offset count");
  std::vector<Box> all;
  for (int r = 0; r < int(rows.size()); ++r)
    for (int k = 0; k < rows[r]; ++k) all.push_back({r, k, left2_[r] + 2 * k});
  // rightmost column first, bottom to top within a column
  std::stable_sort(all.begin(), all.end(), [](const Box& a, const Box& b) {
    if (a.x2 != b.x2) return a.x2 > b.x2;
    return a.row < b.row;
  });
  boxes_ = all;
  numbers_.assign(rows.size(), {});
  for (int r = 0; r < int(rows.size()); ++r) numbers_[r].assign(rows[r], 0);
  for (int b = 1; b <= int(boxes_.size()); ++b) numbers_[boxes_[b - 1].row][boxes_[b - 1].pos] = b;
}

int Pyramid::left(int b) const {
  const Box& x = box(b);
  return x.pos == 0 ? 0 : numbers_[x.row][x.pos - 1];
}

int Pyramid::right(int b) const {
  const Box& x = box(b);
  return x.pos + 1 == row_length(x.row) ? 0 : numbers_[x.row][x.pos + 1];
}

ScalarMatrix Pyramid::F() const {
  ScalarMatrix m(N());
  for (int b = 1; b <= N(); ++b)
    if (int l = left(b)) m.at(l, b) = 1;
  return m;
}

ScalarMatrix Pyramid::Ft() const { return F().transpose(); }

BoxSubset Pyramid::subspace(Sub name, int k) const {
  BoxSubset s;
  int minx = 1 << 30;
  for (const auto& bx : boxes_) minx = std::min(minx, bx.x2);
  auto pick = [&](auto pred) {
    for (int b = 1; b <= N(); ++b)
      if (pred(b)) s.boxes.push_back(b);
  };
  auto is_left = [&](int b) { return box(b).pos == 0; };
  auto is_right = [&](int b) { return box(b).pos + 1 == row_length(box(b).row); };
  auto in_d = [&](int b) { return row_length(box(b).row) == p1(); };
  switch (name) {
    case Sub::V: pick([](int) { return true; }); s.tag = "V"; break;
    case Sub::VPlus: pick(is_right); s.tag = "V+"; break;
    case Sub::VMinus: pick(is_left); s.tag = "V-"; break;
    case Sub::Vd: pick(in_d); s.tag = "Vd"; break;
    case Sub::Vu: pick([&](int b) { return !in_d(b); }); s.tag = "Vu"; break;
    case Sub::VPlusD: pick([&](int b) { return is_right(b) && in_d(b); }); s.tag = "V+d"; break;
    case Sub::VPlusU: pick([&](int b) { return is_right(b) && !in_d(b); }); s.tag = "V+u"; break;
    case Sub::VMinusD: pick([&](int b) { return is_left(b) && in_d(b); }); s.tag = "V-d"; break;
    case Sub::VMinusU: pick([&](int b) { return is_left(b) && !in_d(b); }); s.tag = "V-u"; break;
    case Sub::VMinusFkVPlus:
      pick([&](int b) { return is_left(b) && row_length(box(b).row) == k + 1; });
      s.tag = "V-^F" + std::to_string(k) + "V+";
      break;
    case Sub::VPlusFthVMinus:
      pick([&](int b) { return is_right(b) && row_length(box(b).row) == k + 1; });
      s.tag = "V+^Ft" + std::to_string(k) + "V-";
      break;
    case Sub::FtVMinusD:
      pick([&](int b) { return in_d(b) && box(b).pos == 1; });
      s.tag = "FtV-d";
      break;
    case Sub::FV: pick([&](int b) { return !is_right(b); }); s.tag = "FV"; break;
    case Sub::FtV: pick([&](int b) { return !is_left(b); }); s.tag = "FtV"; break;
    case Sub::VPrime: pick([&](int b) { return box(b).x2 != minx; }); s.tag = "V'"; break;
    case Sub::VDoublePrime: {
      int second = 1 << 30;
      for (const auto& bx : boxes_)
        if (bx.x2 != minx) second = std::min(second, bx.x2);
      pick([&](int b) { return box(b).x2 != minx && box(b).x2 != second; });
      s.tag = "V''";
      break;
    }
    case Sub::VDegree:
      pick([&](int b) { return box(b).x2 == k; });
      s.tag = "V[" + std::to_string(k) + "/2]";
      break;
  }
  return s;
}

ScalarMatrix Pyramid::proj(Sub name, int k) const {
  return ScalarMatrix::projection(N(), subspace(name, k).boxes);
}

Pyramid Pyramid::relabelled_like(const Pyramid& ref) const {
  if (!(partition_ == ref.partition_)) throw std::invalid_argument("relabel: partitions differ");
  Pyramid q = *this;
  for (int r = 0; r < num_rows(); ++r)
    for (int k = 0; k < row_length(r); ++k) {
      int b = ref.numbers_[r][k];
      q.numbers_[r][k] = b;
      q.boxes_[b - 1] = {r, k, left2_[r] + 2 * k};
    }
  return q;
}

bool Pyramid::same_labels(const Pyramid& o) const { return numbers_ == o.numbers_; }

bool Pyramid::same_grading(const Pyramid& o) const {
  if (N() != o.N()) return false;
  for (int i = 1; i <= N(); ++i)
    for (int j = 1; j <= N(); ++j)
      if (deg2(i, j) != o.deg2(i, j)) return false;
  return true;
}

bool Pyramid::is_right_aligned() const {
  for (int r = 0; r < num_rows(); ++r)
    if (left2_[r] + 2 * (row_length(r) - 1) != left2_[0] + 2 * (row_length(0) - 1)) return false;
  return true;
}

bool Pyramid::check_good_grading() const {
  int n = N();
  std::map<int, std::vector<Gen>> by_deg;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) by_deg[deg2(i, j)].push_back(gen(i, j));
  auto adf_rank = [&](int d2) {
    const auto& src = by_deg[d2];
    auto it = by_deg.find(d2 - 2);
    if (src.empty()) return 0;
    if (it == by_deg.end()) return 0;
    const auto& dst = it->second;
    std::map<Gen, int> pos;
    for (size_t t = 0; t < dst.size(); ++t) pos[dst[t]] = int(t);
    QMatrix m(int(dst.size()), int(src.size()));
    for (size_t c = 0; c < src.size(); ++c) {
      int a = gen_i(src[c]), b = gen_j(src[c]);
      // [f, e_ab] = e_{left(a), b} - e_{a, right(b)}
      if (int la = left(a)) m(pos.at(gen(la, b)), int(c)) += 1;
      if (int rb = right(b)) m(pos.at(gen(a, rb)), int(c)) -= 1;
    }
    return m.rank();
  };
  for (const auto& [d2, gens] : by_deg) {
    if (d2 >= 1 && adf_rank(d2) != int(gens.size())) return false;
    if (d2 <= 1) {
      auto it = by_deg.find(d2 - 2);
      int target = it == by_deg.end() ? 0 : int(it->second.size());
      if (adf_rank(d2) != target) return false;
    }
  }
  return true;
}

std::string Pyramid::str() const {
  std::ostringstream os;
  os << "partition=" << partition_.str() << " align=" << to_string(align_) << "\n";
  os << "box row pos x\n";
  for (int b = 1; b <= N(); ++b) {
    const Box& x = box(b);
    os << b << " " << x.row + 1 << " " << x.pos + 1 << " ";
    if (x.x2 % 2 == 0)
      os << x.x2 / 2;
    else
      os << x.x2 << "/2";
    os << "\n";
  }
  return os.str();
}

bool nesting_ok(const Partition& p, const std::vector<int>& left2) {
  const auto& rows = p.rows();
  for (int a = 0; a < p.r(); ++a)
    for (int b = 0; b < p.r(); ++b) {
      if (rows[a] > rows[b]) continue;
      // row a (shorter or equal) inside row b
      int la = left2[a], ra = left2[a] + 2 * (rows[a] - 1);
      int lb = left2[b], rb = left2[b] + 2 * (rows[b] - 1);
      if (la < lb || ra > rb) return false;
    }
  return true;
}

Pyramid build_pyramid(const Partition& p, Alignment align) {
  std::vector<int> left2;
  int p1 = p.p1();
  for (int len : p.rows()) {
    switch (align) {
      case Alignment::Right: left2.push_back((p1 - 1) - 2 * (len - 1)); break;
      case Alignment::Left: left2.push_back(-(p1 - 1)); break;
      case Alignment::Dynkin: left2.push_back(-(len - 1)); break;
      case Alignment::Custom: throw std::invalid_argument("build_pyramid: custom needs offsets");
    }
  }
  return Pyramid(p, align, left2);
}

Pyramid build_pyramid_custom(const Partition& p, const std::vector<Rational>& offsets) {
  if (int(offsets.size()) != p.r())
    throw std::invalid_argument("offsets: expected " + std::to_string(p.r()) + " entries");
  std::vector<int> left2(p.r());
  for (int r = 0; r < p.r(); ++r) {
    Rational twice = offsets[p.input_index()[r]] * 2;
    if (twice.get_den() != 1) throw std::invalid_argument("offsets: must be multiples of 1/2");
    left2[r] = int(twice.get_num().get_si()) - (p.p1() - 1);
  }
  if (!nesting_ok(p, left2))
    throw std::invalid_argument("offsets: rows do not nest (not a good grading)");
  Pyramid pyr(p, Alignment::Custom, left2);
  if (!pyr.check_good_grading()) throw std::invalid_argument("offsets: ad f rank test failed");
  return pyr;
}

ColumnRemoval remove_left_column(const Pyramid& p) {
  if (p.p1() < 2) throw std::invalid_argument("remove_left_column: p1 = 1, nothing to remove");
  int minx = 1 << 30;
  for (int b = 1; b <= p.N(); ++b) minx = std::min(minx, p.x2(b));
  std::vector<int> lengths, left2;
  std::vector<std::pair<int, int>> origin;  // surviving (old row, first surviving pos)
  for (int r = 0; r < p.num_rows(); ++r) {
    bool lose = p.left2()[r] == minx;
    int len = p.row_length(r) - (lose ? 1 : 0);
    if (len == 0) continue;
    lengths.push_back(len);
    left2.push_back(p.left2()[r] + (lose ? 2 : 0));
    origin.push_back({r, lose ? 1 : 0});
  }
  Partition part = Partition::from_lengths(lengths);
  // from_lengths is a stable sort of an already non-increasing list
  Alignment al = p.is_right_aligned() ? Alignment::Right : Alignment::Custom;
  Pyramid red(part, al, left2);
  ColumnRemoval out{red, std::vector<int>(red.N() + 1, 0)};
  for (int r = 0; r < red.num_rows(); ++r)
    for (int k = 0; k < red.row_length(r); ++k)
      out.embedding[red.number(r, k)] = p.number(origin[r].first, origin[r].second + k);
  return out;
}

Rational f_pairing(const Pyramid& p, Gen g) {
  int i = gen_i(g), j = gen_j(g);
  return (p.left(i) == j && j != 0) ? Rational(1) : Rational(0);
}

Rational omega(const Pyramid& p, Gen a, Gen b) {
  int i = gen_i(a), j = gen_j(a), h = gen_i(b), k = gen_j(b);
  Rational r = 0;
  if (j == h) r += f_pairing(p, gen(i, k));
  if (k == i) r -= f_pairing(p, gen(h, j));
  return r;
}

std::vector<Gen> elements_of_degree2(const Pyramid& p, int d2) {
  std::vector<Gen> out;
  for (int i = 1; i <= p.N(); ++i)
    for (int j = 1; j <= p.N(); ++j)
      if (p.deg2(i, j) == d2) out.push_back(gen(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Gen> elements_with_degree2_at_least(const Pyramid& p, int d2) {
  std::vector<Gen> out;
  for (int i = 1; i <= p.N(); ++i)
    for (int j = 1; j <= p.N(); ++j)
      if (p.deg2(i, j) >= d2) out.push_back(gen(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_isotropic(const Pyramid& p, const IsotropicSet& l) {
  for (auto [i, j] : l) {
    if (i < 1 || j < 1 || i > p.N() || j > p.N()) return false;
    if (p.deg2(i, j) != 1) return false;
  }
  for (auto [i, j] : l)
    for (auto [h, k] : l)
      if (omega(p, gen(i, j), gen(h, k)) != 0) return false;
  return true;
}

IdealIndexSets ideal_index_sets(const Pyramid& p, const IsotropicSet& l) {
  if (!is_isotropic(p, l)) throw std::invalid_argument("isotropic set: not an isotropic subset of g[1/2]");
  IdealIndexSets s;
  std::vector<Gen> lg;
  for (auto [i, j] : l) lg.push_back(gen(i, j));
  std::sort(lg.begin(), lg.end());
  lg.erase(std::unique(lg.begin(), lg.end()), lg.end());
  s.half = elements_of_degree2(p, 1);
  auto high = elements_with_degree2_at_least(p, 2);
  s.m = lg;
  s.m.insert(s.m.end(), high.begin(), high.end());
  std::sort(s.m.begin(), s.m.end());
  // l^perp inside g[1/2]
  QMatrix gram(int(lg.size()), int(s.half.size()));
  for (size_t a = 0; a < lg.size(); ++a)
    for (size_t b = 0; b < s.half.size(); ++b) gram(int(a), int(b)) = omega(p, lg[a], s.half[b]);
  QMatrix ns = lg.empty() ? QMatrix::identity(int(s.half.size())) : gram.nullspace();
  for (int c = 0; c < ns.cols(); ++c) {
    std::vector<std::pair<Gen, Rational>> v;
    for (int r = 0; r < ns.rows(); ++r)
      if (ns(r, c) != 0) v.push_back({s.half[r], ns(r, c)});
    s.n_basis.push_back(v);
  }
  for (Gen g : high) s.n_basis.push_back({{g, Rational(1)}});
  for (int i = 1; i <= p.N(); ++i)
    for (int j = 1; j <= p.N(); ++j) {
      Gen g = gen(i, j);
      if (p.deg2(i, j) <= 1 && !std::binary_search(s.m.begin(), s.m.end(), g)) s.p.push_back(g);
    }
  std::sort(s.p.begin(), s.p.end());
  return s;
}

ScalarMatrix d_matrix(const Pyramid& p, const std::vector<Gen>& m) {
  // D_m = -sum_{e_cd in m} U^i U_i with U^i = E_dc, U_i = E_cd
  ScalarMatrix d(p.N());
  for (Gen g : m) d.at(gen_j(g), gen_j(g)) -= 1;
  return d;
}

std::vector<Gen> gray_arrows(const Pyramid& a, const Pyramid& b) {
  std::vector<Gen> out;
  for (Gen g : elements_of_degree2(a, 1))
    if (b.deg2(g) == 1) out.push_back(g);
  return out;
}

namespace {
Alignment classify(const Partition& p, const std::vector<int>& left2) {
  for (Alignment al : {Alignment::Right, Alignment::Dynkin, Alignment::Left}) {
    Pyramid q = build_pyramid(p, al);
    // equal up to a global translation
    int shift = left2[0] - q.left2()[0];
    bool same = true;
    for (int r = 0; r < p.r(); ++r) same = same && left2[r] - q.left2()[r] == shift;
    if (same) return al;
  }
  return Alignment::Custom;
}
}  // namespace

std::vector<ChainStep> adjacency_chain(const Pyramid& p) {
  std::vector<ChainStep> chain;
  Pyramid cur = p;
  const int target = p.left2()[0] + 2 * (p.p1() - 1);
  for (;;) {
    std::vector<int> next = cur.left2();
    bool moved = false;
    for (int r = 0; r < cur.num_rows(); ++r)
      if (next[r] + 2 * (cur.row_length(r) - 1) < target) {
        next[r] += 1;
        moved = true;
      }
    if (!moved) break;
    Pyramid nxt = Pyramid(cur.partition(), classify(cur.partition(), next), next).relabelled_like(p);
    ChainStep st{cur, nxt, {}, {}};
    for (Gen g : gray_arrows(cur, nxt)) {
      int i = gen_i(g), j = gen_j(g);
      if (cur.row_of(i) > cur.row_of(j)) {
        st.l.push_back({i, j});
        st.l_tilde.push_back({i, j});
      }
    }
    for (Gen g : elements_of_degree2(cur, 1))
      if (nxt.deg2(g) == 2) st.l.push_back({gen_i(g), gen_j(g)});
    for (Gen g : elements_of_degree2(nxt, 1))
      if (cur.deg2(g) == 2) st.l_tilde.push_back({gen_i(g), gen_j(g)});
    std::sort(st.l.begin(), st.l.end());
    std::sort(st.l_tilde.begin(), st.l_tilde.end());
    chain.push_back(st);
    cur = nxt;
  }
  return chain;
}

}  // namespace wgen
