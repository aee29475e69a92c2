#include <doctest.h>

#include <map>
#include <set>

#include "wgen/centralizer.hpp"
#include "wgen/pyramid.hpp"

using namespace wgen;

namespace {

std::map<int, int> x2_by_row_pos(const Pyramid& p, int row) {
  std::map<int, int> out;
  for (int pos = 0; pos < p.row_length(row); ++pos) out[pos] = p.x2(p.number(row, pos));
  return out;
}

std::vector<Pyramid> standard_pyramids(int max_n) {
  std::vector<Pyramid> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& part : partitions_of(n))
      for (Alignment al : {Alignment::Right, Alignment::Left, Alignment::Dynkin})
        out.push_back(build_pyramid(part, al));
  return out;
}

}  // namespace

TEST_CASE("partitions are sorted with their parts counted") {
  Partition p = Partition::from_lengths({2, 3, 1, 3});
  CHECK(p.rows() == std::vector<int>{3, 3, 2, 1});
  CHECK(p.N() == 9);
  CHECK(p.p1() == 3);
  CHECK(p.r1() == 2);
  CHECK(p.r() == 4);
  REQUIRE(p.parts().size() == 3);
  CHECK(p.parts()[2].length == 1);
  CHECK(p.parts()[2].mult == 1);
}

TEST_CASE("partition counts match the partition function") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11};
  for (int n = 1; n <= 6; ++n) CHECK(int(partitions_of(n).size()) == expected[n]);
}

TEST_CASE("out of range partitions are rejected") {
  CHECK_THROWS_AS(Partition::from_lengths({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_lengths({kMaxN + 1}), std::invalid_argument);
}

TEST_CASE("3,3,2,1 right aligned x-coordinates") {
  Pyramid p = build_pyramid(Partition::from_lengths({3, 3, 2, 1}), Alignment::Right);
  CHECK(x2_by_row_pos(p, 0) == std::map<int, int>{{0, -2}, {1, 0}, {2, 2}});
  CHECK(x2_by_row_pos(p, 1) == std::map<int, int>{{0, -2}, {1, 0}, {2, 2}});
  CHECK(x2_by_row_pos(p, 2) == std::map<int, int>{{0, 0}, {1, 2}});
  CHECK(x2_by_row_pos(p, 3) == std::map<int, int>{{0, 2}});
  CHECK(p.is_right_aligned());
}

TEST_CASE("3,3,2,1 Dynkin pyramid is symmetric") {
  Pyramid p = build_pyramid(Partition::from_lengths({3, 3, 2, 1}), Alignment::Dynkin);
  CHECK(x2_by_row_pos(p, 0) == std::map<int, int>{{0, -2}, {1, 0}, {2, 2}});
  CHECK(x2_by_row_pos(p, 2) == std::map<int, int>{{0, -1}, {1, 1}});
  CHECK(x2_by_row_pos(p, 3) == std::map<int, int>{{0, 0}});
  CHECK_FALSE(p.is_right_aligned());
}

TEST_CASE("boxes are numbered by decreasing x, bottom to top within a column") {
  for (const auto& p : standard_pyramids(6)) {
    for (int b = 1; b < p.N(); ++b) {
      CHECK(p.x2(b) >= p.x2(b + 1));
      if (p.x2(b) == p.x2(b + 1)) CHECK(p.row_of(b) < p.row_of(b + 1));
    }
    for (int b = 1; b <= p.N(); ++b) CHECK(p.number(p.box(b).row, p.box(b).pos) == b);
  }
}

TEST_CASE("F shifts one box to the left") {
  for (const auto& p : standard_pyramids(5)) {
    ScalarMatrix f = p.F();
    for (int b = 1; b <= p.N(); ++b) {
      int l = p.left(b);
      for (int a = 1; a <= p.N(); ++a) CHECK(f.at(a, b) == Rational(a == l && l != 0 ? 1 : 0));
      if (l) CHECK(p.x2(b) - p.x2(l) == 2);
    }
    CHECK(f.pow(p.p1()).is_zero());
    CHECK(f.q().rank() == p.N() - p.num_rows());
  }
}

TEST_CASE("named subspaces have the expected sizes") {
  Pyramid p = build_pyramid(Partition::from_lengths({3, 3, 2, 1}), Alignment::Right);
  CHECK(p.subspace(Sub::V).size() == 9);
  CHECK(p.subspace(Sub::VPlus).size() == 4);
  CHECK(p.subspace(Sub::VMinus).size() == 4);
  CHECK(p.subspace(Sub::Vd).size() == 6);
  CHECK(p.subspace(Sub::Vu).size() == 3);
  CHECK(p.subspace(Sub::VPlusD).size() == 2);
  CHECK(p.subspace(Sub::VMinusD).size() == 2);
  CHECK(set_intersection(p.subspace(Sub::Vd), p.subspace(Sub::Vu)).size() == 0);
  // V_- is the kernel of F, V_+ the kernel of F^t.
  for (int b : p.subspace(Sub::VMinus).boxes) CHECK(p.left(b) == 0);
  for (int b : p.subspace(Sub::VPlus).boxes) CHECK(p.right(b) == 0);
}

TEST_CASE("dim g[0] + dim g[1/2] equals the centralizer dimension for good gradings") {
  for (const auto& p : standard_pyramids(6)) {
    int count = 0;
    for (int i = 1; i <= p.N(); ++i)
      for (int j = 1; j <= p.N(); ++j) {
        int d = p.deg2(i, j);
        if (d == 0 || d == 1) ++count;
      }
    CHECK(count == centralizer_dimension_formula(p.partition()));
    CHECK(p.check_good_grading());
  }
}

TEST_CASE("custom offsets") {
  Partition part = Partition::from_lengths({3, 1});
  for (const char* off : {"0", "1/2", "1", "3/2", "2"}) {
    Pyramid p = build_pyramid_custom(part, {Rational(0), parse_rational(off)});
    CHECK(p.check_good_grading());
  }
  CHECK_THROWS_AS(build_pyramid_custom(part, {Rational(0), Rational(3)}), std::invalid_argument);
  CHECK_THROWS_AS(build_pyramid_custom(part, {Rational(0), Rational(1, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(build_pyramid_custom(part, {Rational(0)}), std::invalid_argument);
  CHECK(build_pyramid_custom(part, {Rational(0), Rational(2)}).same_grading(build_pyramid(part, Alignment::Right)));
  CHECK(build_pyramid_custom(part, {Rational(0), Rational(1)}).same_grading(build_pyramid(part, Alignment::Dynkin)));
}

TEST_CASE("removing the left column of a right aligned pyramid") {
  Pyramid p = build_pyramid(Partition::from_lengths({3, 3, 2, 1}), Alignment::Right);
  ColumnRemoval cr = remove_left_column(p);
  CHECK(cr.reduced.partition().rows() == std::vector<int>{2, 2, 2, 1});
  CHECK(cr.reduced.is_right_aligned());
  std::set<int> image;
  for (int b = 1; b <= cr.reduced.N(); ++b) {
    int orig = cr.embedding[b];
    image.insert(orig);
    CHECK(cr.reduced.x2(b) == p.x2(orig));
  }
  CHECK(int(image.size()) == 7);
  CHECK_THROWS_AS(remove_left_column(build_pyramid(Partition::from_lengths({1, 1}), Alignment::Right)),
                  std::invalid_argument);
}

TEST_CASE("omega is the pairing of f with the bracket") {
  Pyramid p = build_pyramid(Partition::from_lengths({2}), Alignment::Right);
  // f = E_21, so (f|e_12) = 1 and every other e_ij pairs to 0.
  CHECK(f_pairing(p, gen(1, 2)) == 1);
  CHECK(f_pairing(p, gen(2, 1)) == 0);
  CHECK(f_pairing(p, gen(1, 1)) == 0);
  // [e_11, e_12] = e_12
  CHECK(omega(p, gen(1, 1), gen(1, 2)) == 1);
  CHECK(omega(p, gen(1, 2), gen(1, 1)) == -1);
}

TEST_CASE("isotropic subspaces of g[1/2]") {
  Pyramid p = build_pyramid(Partition::from_lengths({2, 1}), Alignment::Dynkin);
  auto half = elements_of_degree2(p, 1);
  CHECK(half.size() == 2);
  CHECK(is_isotropic(p, {}));
  for (Gen g : half) CHECK(is_isotropic(p, {{gen_i(g), gen_j(g)}}));
  CHECK_FALSE(is_isotropic(p, {{gen_i(half[0]), gen_j(half[0])}, {gen_i(half[1]), gen_j(half[1])}}));
  CHECK_THROWS_AS(ideal_index_sets(p, {{1, 1}}), std::invalid_argument);
  IdealIndexSets s0 = ideal_index_sets(p, {});
  CHECK(s0.half.size() == 2);
  // n = l^perp + g[>=1] has dimension dim g[>=1] + dim g[1/2] - dim l.
  CHECK(s0.n_basis.size() == elements_with_degree2_at_least(p, 2).size() + 2);
}

TEST_CASE("adjacency chains end at the right aligned pyramid") {
  for (const auto& p : standard_pyramids(5)) {
    auto chain = adjacency_chain(p);
    if (p.is_right_aligned()) {
      CHECK(chain.empty());
      continue;
    }
    REQUIRE_FALSE(chain.empty());
    CHECK(chain.back().to.is_right_aligned());
    CHECK(chain.front().from.same_grading(p));
    for (size_t k = 0; k + 1 < chain.size(); ++k) CHECK(chain[k].to.same_grading(chain[k + 1].from));
    for (const auto& st : chain) {
      CHECK(st.to.same_labels(p));
      CHECK(st.to.check_good_grading());
      CHECK(is_isotropic(st.from, st.l));
      CHECK(is_isotropic(st.to, st.l_tilde));
    }
  }
}

TEST_CASE("f = 0 gives a single column") {
  for (Alignment al : {Alignment::Right, Alignment::Left, Alignment::Dynkin}) {
    Pyramid p = build_pyramid(Partition::from_lengths({1, 1, 1, 1}), al);
    for (int b = 1; b <= 4; ++b) CHECK(p.x2(b) == 0);
    CHECK(p.F().is_zero());
    CHECK(p.subspace(Sub::VPlus).size() == 4);
    CHECK(p.subspace(Sub::VMinus).size() == 4);
    CHECK(d_matrix(p, ideal_index_sets(p, {}).m).is_zero());
  }
}

TEST_CASE("F has nilpotency order p_1") {
  for (const auto& p : standard_pyramids(6)) {
    CHECK(p.F().pow(p.p1()).is_zero());
    CHECK_FALSE(p.F().pow(p.p1() - 1).is_zero());
  }
}

TEST_CASE("partition 2: F = E_21 and F^t = E_12") {
  Pyramid p = build_pyramid(Partition::from_lengths({2}), Alignment::Right);
  CHECK(p.x2(1) == 1);
  CHECK(p.x2(2) == -1);
  CHECK(p.F() == ScalarMatrix::elementary(2, 2, 1));
  CHECK(p.Ft() == ScalarMatrix::elementary(2, 1, 2));
  // D = -E_21 E_12 = -E_22
  CHECK(d_matrix(p, ideal_index_sets(p, {}).m) == ScalarMatrix::elementary(2, 2, 2) * Rational(-1));
}

TEST_CASE("4,4,3,1 right aligned pyramid and its column removal") {
  Pyramid p = build_pyramid(Partition::from_lengths({4, 4, 3, 1}), Alignment::Right);
  int minx = 0;
  for (int b = 1; b <= p.N(); ++b) minx = std::min(minx, p.x2(b));
  int left_column = 0;
  for (int b = 1; b <= p.N(); ++b) left_column += p.x2(b) == minx;
  CHECK(left_column == 2);
  ColumnRemoval cr = remove_left_column(p);
  CHECK(cr.reduced.partition().rows() == std::vector<int>{3, 3, 3, 1});
  CHECK(cr.reduced.subspace(Sub::VMinusD).size() == 3);
}

TEST_CASE("small column removals") {
  ColumnRemoval a = remove_left_column(build_pyramid(Partition::from_lengths({2}), Alignment::Right));
  CHECK(a.reduced.N() == 1);
  ColumnRemoval b = remove_left_column(build_pyramid(Partition::from_lengths({2, 1}), Alignment::Right));
  CHECK(b.reduced.partition().rows() == std::vector<int>{1, 1});
  CHECK(b.reduced.subspace(Sub::VMinusD).size() == 2);
}

TEST_CASE("3,3,2,1 corner subspaces") {
  Pyramid p = build_pyramid(Partition::from_lengths({3, 3, 2, 1}), Alignment::Right);
  CHECK(p.subspace(Sub::VMinus).size() == 4);
  CHECK(p.subspace(Sub::VPlus).size() == 4);
  CHECK(p.subspace(Sub::VMinusD).size() == 2);
}

TEST_CASE("2^p 1^q: V_+ is the right column and V_-^d the left column") {
  for (int pp = 1; pp <= 3; ++pp)
    for (int q = 0; pp * 2 + q <= 7; ++q) {
      std::vector<int> lengths(pp, 2);
      lengths.insert(lengths.end(), q, 1);
      Pyramid p = build_pyramid(Partition::from_lengths(lengths), Alignment::Right);
      BoxSubset vp = p.subspace(Sub::VPlus), vmd = p.subspace(Sub::VMinusD);
      CHECK(vp.size() == pp + q);
      for (int b : vp.boxes) CHECK(p.x2(b) == 1);
      CHECK(vmd.size() == pp);
      for (int b : vmd.boxes) CHECK(p.x2(b) == -1);
      // D restricted to V_-^d is -r
      ScalarMatrix d = d_matrix(p, ideal_index_sets(p, {}).m);
      for (int a : vmd.boxes)
        for (int b : vmd.boxes) CHECK(d.at(a, b) == Rational(a == b ? -(pp + q) : 0));
    }
}

TEST_CASE("even gradings have no half degree part") {
  Pyramid p = build_pyramid(Partition::from_lengths({3, 2, 2}), Alignment::Right);
  IdealIndexSets s = ideal_index_sets(p, {});
  CHECK(s.half.empty());
  CHECK(s.m == elements_with_degree2_at_least(p, 2));
  CHECK(s.n_basis.size() == s.m.size());
}

TEST_CASE("2,1 left aligned reaches the right through the Dynkin pyramid") {
  Partition part = Partition::from_lengths({2, 1});
  auto chain = adjacency_chain(build_pyramid(part, Alignment::Left));
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].to.left2() == build_pyramid(part, Alignment::Dynkin).left2());
  CHECK(chain[1].to.left2() == build_pyramid(part, Alignment::Right).left2());
  CHECK(adjacency_chain(build_pyramid(part, Alignment::Right)).empty());
}
