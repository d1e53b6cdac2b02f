#include <doctest.h>

#include "bigraded/bicomplex.hpp"
#include "bigraded/cohomology.hpp"
#include "bigraded/corpus.hpp"
#include "bigraded/morphism.hpp"

using namespace bigraded;

TEST_CASE("indecomposable builders satisfy the bicomplex invariants") {
  Bicomplex dot = dot_complex({0, 0});
  CHECK(dot.total_dimension() == 1);
  CHECK(dot.validate().empty());

  Bicomplex sq = square_complex({0, 0});
  CHECK(sq.total_dimension() == 4);
  CHECK(sq.validate().empty());
  // The forced sign sits on dbar out of the del-corner.
  CHECK(sq.dbar({1, 0})(0, 0) == GaussianRational(-1));
  CHECK(sq.del({0, 0})(0, 0) == GaussianRational(1));

  Bicomplex l = standard_l();
  CHECK(l.dim({-1, -1}) == 1);
  CHECK(l.dim({0, -1}) == 1);
  CHECK(l.dim({-1, 0}) == 1);
  CHECK(l.validate().empty());
}

TEST_CASE("malformed zigzag specs are rejected") {
  // A staircase spanning three total degrees is not a zigzag.
  CHECK_THROWS(IndecompSpec::zigzag({{0, 0}, {1, 0}, {1, 1}},
                                    {{{0, 0}, {1, 0}}, {{1, 0}, {1, 1}}}));
  // Disconnected support.
  CHECK_THROWS(IndecompSpec::zigzag({{0, 0}, {5, 5}}, {}));
  // Non-unit edge.
  CHECK_THROWS(IndecompSpec::zigzag({{0, 0}, {2, 0}}, {{{0, 0}, {2, 0}}}));
}

TEST_CASE("shift places the dot and undoes itself") {
  Bicomplex d = dot_complex({0, 0});
  Bicomplex s = shift(d, 2, 3);
  CHECK(s.dim({2, 3}) == 1);
  CHECK(s.total_dimension() == 1);

  Rng rng(11);
  Bicomplex a = random_bicomplex(rng);
  CHECK(shift(a, 0, 0) == a);
  CHECK(shift(shift(a, 1, 0), -1, 0) == a);
  // Total degree parity scales both differentials by the same sign.
  Bicomplex t = shift(a, 1, 0);
  for (BiDegree deg : a.bidegrees())
    CHECK(t.del({deg.p + 1, deg.q}) == ExactMatrix(GaussianRational(-1) * a.del(deg)));
}

TEST_CASE("dual of the standard shapes") {
  CHECK(dual(dot_complex({2, -1})).dim({-2, 1}) == 1);
  CHECK(dual(standard_l()) == standard_reverse_l());
  Bicomplex dsq = dual(square_complex({0, 0}));
  CHECK(dsq.dim({-1, -1}) == 1);
  CHECK(dsq.dim({0, 0}) == 1);
  CHECK(dsq.validate().empty());

  Rng rng(12);
  Bicomplex a = random_bicomplex(rng);
  Bicomplex dda = dual(dual(a));
  for (BiDegree deg : a.bidegrees()) CHECK(dda.dim(deg) == a.dim(deg));
  BicomplexMorphism iso = double_dual_iso(a);
  CHECK(iso.validate().empty());
  CHECK(is_isomorphism(iso));
  CHECK(h_bc(dda).dims() == h_bc(a).dims());
}

TEST_CASE("dual equals hom into the dot") {
  for (const Bicomplex& a : {standard_l(), square_complex({0, 0}), dot_complex({1, 2})}) {
    Bicomplex d = dual(a);
    Bicomplex h = hom_complex(a, dot_complex({0, 0}));
    CHECK(d == h);
  }
}

TEST_CASE("conjugate swaps bidegrees and is an involution") {
  CHECK(conjugate(dot_complex({1, 0})).dim({0, 1}) == 1);
  Rng rng(13);
  Bicomplex a = random_bicomplex(rng);
  CHECK(conjugate(conjugate(a)) == a);
}

TEST_CASE("real structure on the square passes the checker") {
  Bicomplex sq = square_complex({0, 0});
  ExactMatrix one = exact_identity(1);
  sq.set_real_structure({0, 0}, one);
  sq.set_real_structure({1, 0}, one);
  sq.set_real_structure({0, 1}, one);
  sq.set_real_structure({1, 1}, ExactMatrix(-one));
  CHECK(check_real_structure(sq).empty());
  CHECK(sq.validate().empty());

  // Breaking the sign at the top corner violates sigma del sigma = dbar.
  Bicomplex bad = square_complex({0, 0});
  bad.set_real_structure({0, 0}, one);
  bad.set_real_structure({1, 0}, one);
  bad.set_real_structure({0, 1}, one);
  bad.set_real_structure({1, 1}, one);
  CHECK(!check_real_structure(bad).empty());
}

TEST_CASE("tensor dimensions: dot, square and the L⊗L picture") {
  Bicomplex l = standard_l();
  Bicomplex ll = tensor(l, l);
  CHECK(ll.total_dimension() == 9);
  CHECK(ll.dim({-2, -2}) == 1);
  CHECK(ll.dim({-1, -2}) == 2);
  CHECK(ll.dim({-2, -1}) == 2);
  CHECK(ll.dim({0, -2}) == 1);
  CHECK(ll.dim({-1, -1}) == 2);
  CHECK(ll.dim({-2, 0}) == 1);

  Rng rng(14);
  Bicomplex a = random_bicomplex(rng);
  Bicomplex dot = dot_complex({2, 1});
  Bicomplex ta = tensor(dot, a);
  Bicomplex sa = shift(a, 2, 1);
  for (BiDegree d : sa.bidegrees()) CHECK(ta.dim(d) == sa.dim(d));

  Bicomplex sqdot = tensor(square_complex({0, 0}), dot_complex({1, 1}));
  Bicomplex sqs = square_complex({1, 1});
  for (BiDegree d : sqs.bidegrees()) CHECK(sqdot.dim(d) == sqs.dim(d));
}

TEST_CASE("tensor is associative and commutative at cohomology level") {
  Rng rng(15);
  CorpusOptions small;
  small.max_parts = 2;
  small.max_zigzag_length = 3;
  Bicomplex a = random_bicomplex(rng, small);
  Bicomplex b = random_bicomplex(rng, small);
  Bicomplex c = random_bicomplex(rng, small);
  Bicomplex ab_c = tensor(tensor(a, b), c);
  Bicomplex a_bc = tensor(a, tensor(b, c));
  for (BiDegree d : ab_c.bidegrees()) CHECK(ab_c.dim(d) == a_bc.dim(d));
  CHECK(h_bc(ab_c).dims() == h_bc(a_bc).dims());

  Bicomplex ab = tensor(a, b), ba = tensor(b, a);
  for (BiDegree d : ab.bidegrees()) CHECK(ab.dim(d) == ba.dim(d));
  CHECK(h_bc(ab).dims() == h_bc(ba).dims());
  CHECK(h_a(ab).dims() == h_a(ba).dims());

  Bicomplex cab = conjugate(ab);
  Bicomplex cacb = tensor(conjugate(a), conjugate(b));
  for (BiDegree d : cab.bidegrees()) CHECK(cab.dim(d) == cacb.dim(d));
}

TEST_CASE("hom complex basics") {
  Rng rng(16);
  CorpusOptions small;
  small.max_parts = 3;
  Bicomplex b = random_bicomplex(rng, small);
  Bicomplex h = hom_complex(dot_complex({0, 0}), b);
  CHECK(h == b);

  CHECK(hom_complex(standard_l(), dot_complex({0, 0})) == dual(standard_l()));
  CHECK(hom_complex(square_complex({0, 0}), square_complex({0, 0})).dim({0, 0}) == 4);

  // Hom(A,B) and dual(A) ⊗ B agree dimensionally and cohomologically.
  Bicomplex a = random_bicomplex(rng, small);
  Bicomplex hab = hom_complex(a, b);
  Bicomplex dab = tensor(dual(a), b);
  for (BiDegree d : hab.bidegrees()) CHECK(hab.dim(d) == dab.dim(d));
  CHECK(h_bc(hab).dims() == h_bc(dab).dims());
}

TEST_CASE("truncation") {
  Bicomplex d = dot_complex({0, 0});
  CHECK(truncate(d, 5).complex == d);
  CHECK(truncate(square_complex({0, 0}), 0).complex.total_dimension() == 0);

  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    Bicomplex a = random_bicomplex(rng);
    int k = a.min_total_degree() + trial % 4;
    Truncation t = truncate(a, k);
    CohomTable full = h_bc(a), trunc = h_bc(t.complex);
    for (int j = a.min_total_degree(); j <= k + 1; ++j)
      CHECK(full.dim_at_total(j) == trunc.dim_at_total(j));
    for (int j = k + 2; j <= a.max_total_degree(); ++j) CHECK(trunc.dim_at_total(j) == 0);
  }
}

TEST_CASE("eval against the left dual is a valid morphism") {
  Rng rng(18);
  CorpusOptions small;
  small.max_parts = 2;
  Bicomplex a = random_bicomplex(rng, small);
  BicomplexMorphism ev = eval_left(standard_l(), a);
  CHECK(ev.validate().empty());
}
