#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wgen/linalg.hpp"

namespace wgen {

constexpr int kMaxN = 12;

struct Part {
  int length;
  int mult;
};

class Partition {
 public:
  Partition() = default;
  // Row lengths in any order; equal lengths keep their input order.
  static Partition from_lengths(const std::vector<int>& lengths);
  static Partition from_parts(const std::vector<Part>& parts);

  const std::vector<Part>& parts() const { return parts_; }
  // Row lengths bottom to top (non-increasing).
  const std::vector<int>& rows() const { return rows_; }
  // For each sorted row, its position in the original input list.
  const std::vector<int>& input_index() const { return input_index_; }
  int N() const;
  int r() const { return int(rows_.size()); }
  int p1() const { return parts_.empty() ? 0 : parts_.front().length; }
  int r1() const { return parts_.empty() ? 0 : parts_.front().mult; }
  std::string str() const;
  bool operator==(const Partition& o) const { return rows_ == o.rows_; }

 private:
  std::vector<Part> parts_;
  std::vector<int> rows_;
  std::vector<int> input_index_;
};

// All partitions of n, each as a non-increasing list of row lengths.
std::vector<Partition> partitions_of(int n);

enum class Alignment { Right, Left, Dynkin, Custom };
std::string to_string(Alignment a);
Alignment parse_alignment(const std::string& s);

struct Box {
  int row;  // 0 = bottom row
  int pos;  // 0 = leftmost box of the row
  int x2;   // twice the x-coordinate of the box center
};

enum class Sub {
  V,
  VPlus,
  VMinus,
  Vd,
  Vu,
  VPlusD,
  VPlusU,
  VMinusD,
  VMinusU,
  VMinusFkVPlus,   // V_- ∩ F^k V_+ : leftmost boxes of rows of length k+1
  VPlusFthVMinus,  // V_+ ∩ (F^t)^h V_- : rightmost boxes of rows of length h+1
  FtVMinusD,
  FV,
  FtV,
  VPrime,
  VDoublePrime,
  VDegree  // V[k] with k given doubled
};

struct BoxSubset {
  std::vector<int> boxes;  // sorted
  std::string tag;
  bool contains(int b) const;
  int size() const { return int(boxes.size()); }
  bool operator==(const BoxSubset& o) const { return boxes == o.boxes; }
};

BoxSubset set_union(const BoxSubset& a, const BoxSubset& b);
BoxSubset set_minus(const BoxSubset& a, const BoxSubset& b);
BoxSubset set_intersection(const BoxSubset& a, const BoxSubset& b);

// Generators of gl_N: e_{ij} with boxes 1-based; ids use a fixed stride so that
// gl_{N'} sits inside gl_N with the same ids.
using Gen = unsigned char;
inline Gen gen(int i, int j) { return Gen((i - 1) * kMaxN + (j - 1)); }
inline int gen_i(Gen g) { return g / kMaxN + 1; }
inline int gen_j(Gen g) { return g % kMaxN + 1; }

using IsotropicSet = std::vector<std::pair<int, int>>;

class Pyramid {
 public:
  Pyramid() = default;
  // left2[row] = twice the x-coordinate of the leftmost box of each sorted row.
  Pyramid(Partition partition, Alignment align, std::vector<int> left2);

  const Partition& partition() const { return partition_; }
  Alignment alignment() const { return align_; }
  int N() const { return int(boxes_.size()); }
  int p1() const { return partition_.p1(); }
  int r1() const { return partition_.r1(); }
  int num_rows() const { return partition_.r(); }
  int row_length(int row) const { return partition_.rows()[row]; }
  const std::vector<int>& left2() const { return left2_; }

  const Box& box(int b) const { return boxes_[b - 1]; }
  int number(int row, int pos) const { return numbers_[row][pos]; }
  int x2(int b) const { return boxes_[b - 1].x2; }
  int row_of(int b) const { return boxes_[b - 1].row; }
  // Left/right neighbour in the same row, 0 if none.
  int left(int b) const;
  int right(int b) const;
  // Twice the Γ-degree of e_{ij}.
  int deg2(int i, int j) const { return x2(i) - x2(j); }
  int deg2(Gen g) const { return deg2(gen_i(g), gen_j(g)); }

  ScalarMatrix F() const;
  ScalarMatrix Ft() const;
  BoxSubset subspace(Sub name, int k = 0) const;
  ScalarMatrix proj(Sub name, int k = 0) const;

  // Same geometry with box numbers relabelled through (row,pos) -> number of ref.
  Pyramid relabelled_like(const Pyramid& ref) const;
  bool same_labels(const Pyramid& o) const;
  bool same_grading(const Pyramid& o) const;
  bool is_right_aligned() const;

  // Good-grading rank test: ad f injective on g[>=1/2], surjective on g[<=1/2].
  bool check_good_grading() const;

  std::string str() const;

 private:
  Partition partition_;
  Alignment align_ = Alignment::Right;
  std::vector<int> left2_;
  std::vector<Box> boxes_;
  std::vector<std::vector<int>> numbers_;
};

// x-offsets: right alignment puts every right edge at x=(p1-1)/2, left alignment
// every left edge at -(p1-1)/2, dynkin centers each row at 0.
Pyramid build_pyramid(const Partition& p, Alignment align);
// Custom per-row left-edge column offsets (in boxes, halves allowed), one per
// row in input order. Offset 0 is the left edge of the longest row.
Pyramid build_pyramid_custom(const Partition& p, const std::vector<Rational>& offsets);
bool nesting_ok(const Partition& p, const std::vector<int>& left2);

struct ColumnRemoval {
  Pyramid reduced;
  std::vector<int> embedding;  // embedding[b'] = box of the original pyramid (index 1-based)
};
ColumnRemoval remove_left_column(const Pyramid& p);

// Trace-form pairing with f: (f|e_{ij}) = 1 iff j is the left neighbour of i.
Rational f_pairing(const Pyramid& p, Gen g);
// omega(e_a, e_b) = (f|[e_a, e_b]).
Rational omega(const Pyramid& p, Gen a, Gen b);

struct IdealIndexSets {
  std::vector<Gen> m;                         // l + g[>=1]
  std::vector<std::vector<std::pair<Gen, Rational>>> n_basis;  // l^perp + g[>=1]
  std::vector<Gen> p;                         // complement of m in g[<=1/2]
  std::vector<Gen> half;                      // g[1/2]
};
// Throws std::invalid_argument if l is not an isotropic set of degree-1/2 elements.
IdealIndexSets ideal_index_sets(const Pyramid& p, const IsotropicSet& l);
bool is_isotropic(const Pyramid& p, const IsotropicSet& l);

ScalarMatrix d_matrix(const Pyramid& p, const std::vector<Gen>& m);

struct ChainStep {
  Pyramid from;          // Γ_i
  Pyramid to;            // Γ_{i+1}, adjacent to the right
  IsotropicSet l;        // in g^{Γ_i}[1/2]
  IsotropicSet l_tilde;  // in g^{Γ_{i+1}}[1/2]
};
// Steps from the given pyramid to the right-aligned one; all pyramids share the
// labels of the input.
std::vector<ChainStep> adjacency_chain(const Pyramid& p);
// Gray arrows: degree 1/2 for both gradings.
std::vector<Gen> gray_arrows(const Pyramid& a, const Pyramid& b);

std::vector<Gen> elements_of_degree2(const Pyramid& p, int d2);
std::vector<Gen> elements_with_degree2_at_least(const Pyramid& p, int d2);

}  // namespace wgen
