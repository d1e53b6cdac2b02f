#include <doctest.h>

#include "bigraded/cohomology.hpp"
#include "bigraded/corpus.hpp"

using namespace bigraded;

TEST_CASE("squares are acyclic for every functor") {
  Bicomplex sq = square_complex({0, 0});
  CHECK(h_bc(sq).total_dim() == 0);
  CHECK(h_a(sq).total_dim() == 0);
  CHECK(h_row(sq).total_dim() == 0);
  CHECK(h_col(sq).total_dim() == 0);
  CHECK(h_total(sq).total_dim() == 0);
  for (int p = -1; p <= 2; ++p)
    for (int q = -1; q <= 2; ++q) CHECK(h_schweitzer(sq, p, q).total_dim() == 0);
}

TEST_CASE("dots and lines") {
  Bicomplex d = dot_complex({2, 3});
  CHECK(h_bc(d).dim(BiDegree{2, 3}) == 1);
  CHECK(h_bc(d).total_dim() == 1);
  CHECK(h_a(d).dim(BiDegree{2, 3}) == 1);

  Bicomplex line = build_indecomposable(IndecompSpec::line({0, 0}, true));
  CHECK(h_col(line).dim(BiDegree{0, 0}) == 1);
  CHECK(h_col(line).dim(BiDegree{1, 0}) == 1);
  CHECK(h_row(line).total_dim() == 0);
  CHECK(h_total(line).total_dim() == 0);
}

TEST_CASE("reduced functors of the standard L") {
  Bicomplex l = standard_l();
  CHECK(h_bc(l).total_dim() == 2);
  CHECK(h_a(l).total_dim() == 1);
  CHECK(h_a(l).dim(BiDegree{-1, -1}) == 1);
  ReducedTables red = reduced_functors(l);
  CHECK(red.bc_reduced.total_dim() == 2);
  CHECK(red.a_reduced.total_dim() == 1);
  CHECK(red.dot.total_dim() == 0);
}

TEST_CASE("four-term exact sequence dimension identity on random complexes") {
  Rng rng(21);
  for (int trial = 0; trial < 8; ++trial) {
    Bicomplex a = random_bicomplex(rng);
    CohomTable bc = h_bc(a), ha = h_a(a);
    ReducedTables red = reduced_functors(a);
    for (BiDegree d : a.bidegrees()) {
      CHECK(red.bc_reduced.dim(d) - bc.dim(d) + ha.dim(d) - red.a_reduced.dim(d) == 0);
      // dot = image: dim H_dot = dim H_BC - dim H~_BC.
      CHECK(red.dot.dim(d) == bc.dim(d) - red.bc_reduced.dim(d));
    }
  }
}

TEST_CASE("functors are additive over direct sums") {
  Rng rng(22);
  Bicomplex a = random_bicomplex(rng), b = random_bicomplex(rng);
  Bicomplex s = direct_sum(a, b);
  auto addmaps = [](std::map<BiDegree, Index> x, const std::map<BiDegree, Index>& y) {
    for (const auto& [d, n] : y) x[d] += n;
    return x;
  };
  CHECK(h_bc(s).dims() == addmaps(h_bc(a).dims(), h_bc(b).dims()));
  CHECK(h_a(s).dims() == addmaps(h_a(a).dims(), h_a(b).dims()));
  CHECK(h_row(s).dims() == addmaps(h_row(a).dims(), h_row(b).dims()));
  CHECK(h_col(s).dims() == addmaps(h_col(a).dims(), h_col(b).dims()));
}

TEST_CASE("schweitzer identifications with Bott-Chern and Aeppli") {
  Rng rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    Bicomplex a = random_bicomplex(rng);
    std::uniform_int_distribution<int> coord(-2, 3);
    for (int k = 0; k < 4; ++k) {
      int p = coord(rng), q = coord(rng);
      CHECK(h_schweitzer(a, p, q).dim(p + q - 1) == h_bc(a).dim(BiDegree{p, q}));
      CHECK(h_schweitzer(a, p + 1, q + 1).dim(p + q) == h_a(a).dim(BiDegree{p, q}));
    }
  }
}

TEST_CASE("representatives are exact cocycles and project to unit classes") {
  Rng rng(24);
  Bicomplex a = random_bicomplex(rng);
  CohomTable bc = h_bc(a);
  for (const auto& [d, g] : bc.bigraded) {
    if (g.dim == 0) continue;
    CHECK(is_zero_matrix(ExactMatrix(a.del(d) * g.representatives)));
    CHECK(is_zero_matrix(ExactMatrix(a.dbar(d) * g.representatives)));
    CHECK(ExactMatrix(g.projection * g.representatives) == exact_identity(g.dim));
  }
  CohomTable ha = h_a(a);
  for (const auto& [d, g] : ha.bigraded) {
    if (g.dim == 0) continue;
    CHECK(is_zero_matrix(ExactMatrix(a.deldbar(d) * g.representatives)));
    CHECK(ExactMatrix(g.projection * g.representatives) == exact_identity(g.dim));
  }
}

TEST_CASE("H_ABC and H_BCA are minimal with the same cohomology as the input") {
  Rng rng(25);
  for (int trial = 0; trial < 6; ++trial) {
    Bicomplex a = random_bicomplex(rng);
    for (const AbcComplex& m : {h_abc(a), h_bca(a)}) {
      for (BiDegree d : m.complex.bidegrees())
        CHECK(is_zero_matrix(m.complex.deldbar(d)));
      CHECK(h_bc(m.complex).dims() == h_bc(a).dims());
      CHECK(h_a(m.complex).dims() == h_a(a).dims());
      CHECK(h_row(m.complex).dims() == h_row(a).dims());
      CHECK(h_col(m.complex).dims() == h_col(a).dims());
    }
  }
}

TEST_CASE("frolicher pages") {
  // First page = column (resp. row) cohomology.
  Rng rng(26);
  for (int trial = 0; trial < 6; ++trial) {
    Bicomplex a = random_bicomplex(rng);
    auto e1 = frolicher_page(a, 1, FilterDirection::Column);
    auto hc = h_col(a).dims();
    CHECK(e1 == hc);
    auto e1r = frolicher_page(a, 1, FilterDirection::Row);
    CHECK(e1r == h_row(a).dims());
    // E_infinity totals recover the total cohomology of a bounded complex.
    int stable = frolicher_stable_page(a);
    auto einf = frolicher_page(a, stable, FilterDirection::Column);
    std::map<int, Index> totals;
    for (const auto& [d, n] : einf) totals[d.total()] += n;
    CHECK(totals == h_total(a).dims_by_total());
  }
  CHECK(frolicher_page(square_complex({0, 0}), 2, FilterDirection::Column).empty());
}

TEST_CASE("class conjugation acts on tables of a real square") {
  Bicomplex sq = square_complex({0, 0});
  ExactMatrix one = exact_identity(1);
  sq.set_real_structure({0, 0}, one);
  sq.set_real_structure({1, 0}, one);
  sq.set_real_structure({0, 1}, one);
  sq.set_real_structure({1, 1}, ExactMatrix(-one));
  // All groups vanish; the action is trivially consistent.
  auto conj_action = class_conjugation(h_bc(sq), sq);
  for (const auto& [d, m] : conj_action) CHECK(m.cols() == 0);
}
