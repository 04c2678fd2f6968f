#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padm/grading.hpp"

using namespace padm;

namespace {

std::vector<Rat> rats(std::vector<std::string> ss) {
  std::vector<Rat> v;
  for (const auto& s : ss) v.push_back(parse_rat(s));
  return v;
}

Element elem(const MatrixLieAlgebra& A, std::vector<std::tuple<int, int, int>> entries) {
  QMatrix m(A.n(), A.n());
  for (auto [i, j, v] : entries) m.at(i - 1, j - 1) = v;
  return A.from_matrix(m);
}

// Degree of E_ij read from the grading (valid: elementary matrices are homogeneous).
Rat deg_of_entry(const Grading& g, int i, int j) { return g.diag()[i - 1] - g.diag()[j - 1]; }

}  // namespace

TEST_CASE("degree matrices of the sl_3 and sl_4 reference gradings") {
  auto A3 = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 3));
  Grading g3 = Grading::from_diagonal(A3, rats({"2/3", "2/3", "-4/3"}));
  int expect3[3][3] = {{0, 0, 2}, {0, 0, 2}, {-2, -2, 0}};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(deg_of_entry(g3, i, j) == expect3[i - 1][j - 1]);
  CHECK(g3.piece(Rat(-2)) ==
        Subspace::from_vectors({A3.from_matrix([&] {
                                  QMatrix m(3, 3);
                                  m.at(2, 0) = 1;
                                  return m;
                                }()),
                                A3.from_matrix([&] {
                                  QMatrix m(3, 3);
                                  m.at(2, 1) = 1;
                                  return m;
                                }())},
                               A3.dim()));

  auto A4 = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 4));
  Grading g4 = Grading::from_diagonal(A4, rats({"3/2", "1/2", "-1/2", "-3/2"}));
  int expect4[4][4] = {{0, 1, 2, 3}, {-1, 0, 1, 2}, {-2, -1, 0, 1}, {-3, -2, -1, 0}};
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(deg_of_entry(g4, i, j) == expect4[i - 1][j - 1]);
}

TEST_CASE("sl_2 Dynkin grading pieces") {
  auto A = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 2));
  Grading g = Grading::from_diagonal(A, rats({"1", "-1"}));
  CHECK(g.piece(Rat(2)).dim() == 1);
  CHECK(g.piece(Rat(0)).dim() == 1);
  CHECK(g.piece(Rat(-2)).dim() == 1);
  CHECK(g.piece(Rat(5)).is_zero());
  CHECK(g.degree_of(elem(A, {{1, 2, 1}})) == Rat(2));
}

TEST_CASE("grading validation") {
  auto A = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 3));
  CHECK_THROWS_AS(Grading::from_diagonal(A, rats({"1", "1", "1"})), std::invalid_argument);
  auto so4 = MatrixLieAlgebra::build(AlgebraKind::parse("so", 4));
  CHECK_THROWS_AS(Grading::from_diagonal(so4, rats({"1", "0", "0", "1"})), std::invalid_argument);
  CHECK_NOTHROW(Grading::from_diagonal(so4, rats({"1", "0", "0", "-1"})));
}

TEST_CASE("piece_range on the sl_4 grading") {
  auto A = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 4));
  Grading g = Grading::from_diagonal(A, rats({"3/2", "1/2", "-1/2", "-3/2"}));
  Subspace low = g.piece_range(Cmp::LE, Rat(-2));
  CHECK(low.dim() == 3);
  CHECK(low.contains(elem(A, {{3, 1, 1}})));
  CHECK(low.contains(elem(A, {{4, 1, 1}})));
  CHECK(low.contains(elem(A, {{4, 2, 1}})));
  Subspace all = subspace_sum(subspace_sum(g.piece_range(Cmp::LT, Rat(0)), g.piece(Rat(0))),
                              g.piece_range(Cmp::GT, Rat(0)));
  CHECK(all == Subspace::full(A.dim()));
}

TEST_CASE("piece_range dim on the sl_8 interleaved grading") {
  auto A = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 8));
  std::vector<Rat> d = rats({"7/2", "1/2", "-5/2", "-11/2", "11/2", "5/2", "-1/2", "-7/2"});
  Grading g = Grading::from_diagonal(A, d);
  // brute count of ordered pairs (i,j), i != j, with c_i - c_j <= -3
  int count = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (i != j && d[i] - d[j] <= -3) ++count;
  CHECK(g.piece_range(Cmp::LE, Rat(-3)).dim() == count);
}

TEST_CASE("gradedness of subspaces") {
  auto A = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 4));
  Grading g = Grading::from_diagonal(A, rats({"3/2", "1/2", "-1/2", "-3/2"}));
  SUBCASE("single piece") { CHECK(is_graded(g, g.piece(Rat(-1)))); }
  SUBCASE("mixed-degree line is not graded") {
    Element mix = elem(A, {{3, 1, 1}, {2, 1, 1}});
    CHECK(!is_graded(g, Subspace::from_vectors({mix}, A.dim())));
  }
  SUBCASE("the half-integral pair's n is graded with parts at degrees -3,-2,-1") {
    Subspace n = Subspace::from_vectors({elem(A, {{3, 1, 1}}), elem(A, {{4, 1, 1}}),
                                         elem(A, {{4, 2, 1}}), elem(A, {{2, 1, 1}}),
                                         elem(A, {{3, 2, 1}})},
                                        A.dim());
    GradedComponents gc = graded_components(g, n);
    CHECK(gc.graded);
    REQUIRE(gc.components.size() == 3);
    CHECK(gc.components.count(Rat(-3)) == 1);
    CHECK(gc.components.count(Rat(-2)) == 1);
    CHECK(gc.components.count(Rat(-1)) == 1);
    CHECK(gc.components.at(Rat(-1)).dim() == 2);
  }
}

TEST_CASE("admissibility criterion") {
  SUBCASE("sl_4 half-integral grading, a = 2") {
    auto A = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 4));
    Grading g = Grading::from_diagonal(A, rats({"3/2", "1/2", "-1/2", "-3/2"}));
    Element e = elem(A, {{1, 3, 1}, {2, 4, 1}});
    CHECK(is_admissible_grading(g, e, Rat(2)));
  }
  SUBCASE("Dynkin gradings are admissible") {
    auto A = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 4));
    PartitionRep rep = partition_rep(A, Partition::parse({2, 2}));
    Grading g = Grading::from_diagonal(A, rep.h_diag);
    CHECK(is_admissible_grading(g, rep.e, Rat(2)));
  }
  SUBCASE("sl_11 deformable grading, a = 3") {
    auto A = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 11));
    Grading g = Grading::from_diagonal(
        A, rats({"73/11", "40/11", "7/11", "-26/11", "-59/11", "-92/11", "29/11", "-4/11",
                 "-37/11", "51/11", "18/11"}));
    Element e = nilpotent_from_partition(A, Partition::parse({6, 3, 2}));
    CHECK(g.degree_of(e) == Rat(3));
    CHECK(is_admissible_grading(g, e, Rat(3)));
  }
}

TEST_CASE("goodness") {
  auto A3 = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 3));
  Grading g3 = Grading::from_diagonal(A3, rats({"2/3", "2/3", "-4/3"}));
  Element e3 = elem(A3, {{1, 3, 1}});
  CHECK(is_good_grading(g3, e3, Rat(2)));
  CHECK(is_admissible_grading(g3, e3, Rat(2)));

  auto A4 = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 4));
  Grading g4 = Grading::from_diagonal(A4, rats({"3/2", "1/2", "-1/2", "-3/2"}));
  Element e4 = elem(A4, {{1, 3, 1}, {2, 4, 1}});
  CHECK(!is_good_grading(g4, e4, Rat(2)));

  PartitionRep rep = partition_rep(A4, Partition::parse({2, 2}));
  Grading dyn = Grading::from_diagonal(A4, rep.h_diag);
  CHECK(is_good_grading(dyn, rep.e, Rat(2)));
}

TEST_CASE("b-optimality") {
  auto A4 = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 4));
  SUBCASE("Dynkin gradings are 1-optimal") {
    PartitionRep rep = partition_rep(A4, Partition::parse({2, 2}));
    Grading dyn = Grading::from_diagonal(A4, rep.h_diag);
    CHECK(is_b_optimal(dyn, rep.e, Rat(2), Rat(1)));
  }
  SUBCASE("the sl_4 half-integral grading is 1-optimal") {
    Grading g = Grading::from_diagonal(A4, rats({"3/2", "1/2", "-1/2", "-3/2"}));
    Element e = elem(A4, {{1, 3, 1}, {2, 4, 1}});
    CHECK(is_b_optimal(g, e, Rat(2), Rat(1)));
  }
  SUBCASE("the sl_11 deformable grading is not b-optimal for any b") {
    auto A = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 11));
    Grading g = Grading::from_diagonal(
        A, rats({"73/11", "40/11", "7/11", "-26/11", "-59/11", "-92/11", "29/11", "-4/11",
                 "-37/11", "51/11", "18/11"}));
    Element e = nilpotent_from_partition(A, Partition::parse({6, 3, 2}));
    // b <= a/2 = 3/2; the centralizer meets g_{-2}, so g_{< -b} meets g^e for all such b.
    for (const char* b : {"1/4", "1/2", "1", "5/4", "3/2"})
      CHECK(!is_b_optimal(g, e, Rat(3), parse_rat(b)));
  }
}

TEST_CASE("scaling") {
  auto A = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 3));
  Grading g = Grading::from_diagonal(A, rats({"2/3", "2/3", "-4/3"}));
  CHECK(scale_grading(g, Rat(1)).diag() == g.diag());
  Grading g3 = scale_grading(g, Rat(3));
  CHECK(g3.is_integral());
  CHECK(g3.diag() == rats({"2", "2", "-4"}));
  CHECK_THROWS_AS(scale_grading(g, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(scale_grading(g, Rat(-2)), std::invalid_argument);
}

TEST_CASE("graded pieces pair only across opposite degrees") {
  auto A = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 4));
  Grading g = Grading::from_diagonal(A, rats({"3/2", "1/2", "-1/2", "-3/2"}));
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      if (g.basis_degrees()[i] + g.basis_degrees()[j] == 0) continue;
      Element x(A.dim(), Rat(0)), y(A.dim(), Rat(0));
      x[i] = 1;
      y[j] = 1;
      CHECK(A.invariant_form(x, y) == 0);
    }
}

TEST_CASE("grading internal invariants on reference gradings") {
  auto A = MatrixLieAlgebra::build(AlgebraKind::parse("sl", 4));
  Grading g = Grading::from_diagonal(A, rats({"3/2", "1/2", "-1/2", "-3/2"}));
  int total = 0;
  for (const Rat& j : g.occupied_degrees()) {
    total += g.piece(j).dim();
    CHECK(g.piece(j).dim() == g.piece(-j).dim());
  }
  CHECK(total == A.dim());
  // [g_i, g_j] ⊆ g_{i+j} over homogeneous basis pairs
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      Element x(A.dim(), Rat(0)), y(A.dim(), Rat(0));
      x[i] = 1;
      y[j] = 1;
      Element br = A.bracket(x, y);
      bool zero = true;
      for (const Rat& c : br) zero = zero && c == 0;
      if (zero) continue;
      CHECK(g.degree_of(br) == g.basis_degrees()[i] + g.basis_degrees()[j]);
    }
}
