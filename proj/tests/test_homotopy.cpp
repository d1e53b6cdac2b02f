#include <doctest.h>

#include "bigraded/corpus.hpp"
#include "bigraded/decompose.hpp"
#include "bigraded/homotopy.hpp"

using namespace bigraded;

TEST_CASE("nullhomotopy of the named examples") {
  Bicomplex sq = square_complex({0, 0});
  auto res = is_nullhomotopic(identity_morphism(sq));
  CHECK(res.nullhomotopic);
  REQUIRE(res.witness.has_value());
  // Witness h with h(del dbar x) = x: its (1,1) component is the inverse of
  // deldbar restricted to the anchor line, up to the solver's choice.
  BicomplexMorphism id = identity_morphism(sq);
  // Verify the witness satisfies f = [del,[dbar,h]] directly.
  MapFamilyLayout hs = MapFamilyLayout::build(sq, sq, {-1, -1});
  MapFamilyLayout fs = MapFamilyLayout::build(sq, sq, {0, 0});
  ExactMatrix n = nullhomotopy_operator(sq, sq, hs, fs);
  CHECK(ExactVector(n * hs.vectorize(*res.witness)) == fs.vectorize(id.components));

  CHECK_FALSE(is_nullhomotopic(identity_morphism(dot_complex({0, 0}))).nullhomotopic);
  Rng rng(31);
  Bicomplex a = random_bicomplex(rng), b = random_bicomplex(rng);
  CHECK(is_nullhomotopic(zero_morphism(a, b)).nullhomotopic);
}

TEST_CASE("nullhomotopic maps vanish under every functor") {
  Rng rng(32);
  for (int trial = 0; trial < 5; ++trial) {
    CorpusOptions small;
    small.max_parts = 3;
    Bicomplex a = random_bicomplex(rng, small), b = random_bicomplex(rng, small);
    // Build a nullhomotopic map from a random homotopy.
    MapFamilyLayout hs = MapFamilyLayout::build(a, b, {-1, -1});
    MapFamilyLayout fs = MapFamilyLayout::build(a, b, {0, 0});
    ExactMatrix n = nullhomotopy_operator(a, b, hs, fs);
    ExactVector h = ExactVector::Zero(hs.dim);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (Index i = 0; i < hs.dim; ++i) h(i) = GaussianRational(coeff(rng));
    BicomplexMorphism f{a, b, fs.reify(ExactVector(n * h), a, b)};
    CHECK(f.validate().empty());
    CHECK(is_nullhomotopic(f).nullhomotopic);
    for (auto fn : {h_bc, h_a, h_row, h_col}) {
      InducedMap im = induced_map(fn(a), fn(b), f);
      for (const auto& [d, m] : im.mats) CHECK(is_zero_matrix(m));
    }
  }
}

TEST_CASE("homotopy classes against the mapping-space formulas") {
  Rng rng(33);
  CorpusOptions small;
  small.max_parts = 3;
  for (int trial = 0; trial < 4; ++trial) {
    Bicomplex a = random_bicomplex(rng, small);
    std::uniform_int_distribution<int> coord(-2, 2);
    int p = coord(rng), q = coord(rng);
    // [dot[p,q], A] = H_BC^{p,q}(A)
    CHECK(homotopy_classes(dot_complex({p, q}), a).dim == h_bc(a).dim(BiDegree{p, q}));
    // [L[p,q], A] = H_A^{p-1,q-1}(A); L[p,q] has corner (p-1,q-1).
    Bicomplex lshifted = build_indecomposable(IndecompSpec::l_corner({p - 1, q - 1}));
    CHECK(homotopy_classes(lshifted, a).dim == h_a(a).dim(BiDegree{p - 1, q - 1}));
    // [line[p,q], A] = H_dbar^{p,q}(A) for the horizontal line at (p,q).
    Bicomplex line = build_indecomposable(IndecompSpec::line({p, q}, true));
    CHECK(homotopy_classes(line, a).dim == h_col(a).dim(BiDegree{p, q}));
  }
}

TEST_CASE("adjunction: [A, L^r B] = [L^{-r} A, B]") {
  Rng rng(34);
  CorpusOptions small;
  small.max_parts = 2;
  small.max_zigzag_length = 3;
  Bicomplex a = random_bicomplex(rng, small), b = random_bicomplex(rng, small);
  for (int r : {1, -1}) {
    Index lhs = homotopy_classes(a, l_shift(b, r)).dim;
    Index rhs = homotopy_classes(l_shift(a, -r), b).dim;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cone examples") {
  // cone(id_dot) is a single square.
  Cone c = cone(identity_morphism(dot_complex({0, 0})));
  CHECK(c.complex.total_dimension() == 4);
  CHECK(h_bc(c.complex).total_dim() == 0);
  auto mult = decompose(c.complex).multiplicities();
  CHECK(mult.size() == 1);
  CHECK(mult.begin()->first.kind == IndecompSpec::Kind::Square);

  // cone(0: A -> B) = B ⊕ L(A).
  Rng rng(35);
  CorpusOptions small;
  small.max_parts = 2;
  Bicomplex a = random_bicomplex(rng, small), b = random_bicomplex(rng, small);
  Cone c0 = cone(zero_morphism(a, b));
  Bicomplex expect = direct_sum(b, l_shift(a, 1));
  for (BiDegree d : expect.bidegrees()) CHECK(c0.complex.dim(d) == expect.dim(d));
  CHECK(h_bc(c0.complex).dims() == h_bc(expect).dims());
}

TEST_CASE("schweitzer euler characteristic vanishes on triangles") {
  Rng rng(36);
  CorpusOptions small;
  small.max_parts = 2;
  small.max_zigzag_length = 3;
  for (int trial = 0; trial < 3; ++trial) {
    Bicomplex a = random_bicomplex(rng, small), b = random_bicomplex(rng, small);
    BicomplexMorphism f = random_chain_map(rng, a, b);
    Cone c = cone(f);
    std::uniform_int_distribution<int> coord(-2, 2);
    for (int k = 0; k < 3; ++k) {
      int p = coord(rng), q = coord(rng);
      long chi = 0;
      auto add = [&](const Bicomplex& x, int sign) {
        for (const auto& [deg, n] : h_schweitzer(x, p, q).dims_by_total())
          chi += sign * ((deg % 2 + 2) % 2 == 0 ? n : -n);
      };
      add(a, 1);
      add(b, -1);
      add(c.complex, 1);
      CHECK(chi == 0);
    }
  }
}

TEST_CASE("l_shift: dot to L, powers, and the inverse comparison") {
  CHECK(l_shift(dot_complex({0, 0}), 1) == standard_l());
  // L^2(dot) is quasi-isomorphic to the length-5 zigzag.
  Bicomplex l2 = l_shift(dot_complex({0, 0}), 2);
  auto mult = decompose(l2).multiplicities();
  Index zig5 = 0, squares = 0;
  for (const auto& [spec, n] : mult) {
    if (spec.kind == IndecompSpec::Kind::Square)
      squares += n;
    else if (spec.length() == 5)
      zig5 += n;
  }
  CHECK(zig5 == 1);
  CHECK(squares == 1);
  CHECK(l2.total_dimension() == 9);
  Bicomplex reduced = l_shift(dot_complex({0, 0}), 2, true);
  CHECK(reduced.total_dimension() == 5);

  // eval: L^{-1} L A -> A is a quasi-isomorphism.
  Rng rng(37);
  CorpusOptions small;
  small.max_parts = 2;
  small.max_zigzag_length = 3;
  Bicomplex a = random_bicomplex(rng, small);
  Bicomplex l = standard_l();
  BicomplexMorphism ev = eval_left(l, a);  // dual(L) ⊗ (L ⊗ A) -> A
  CHECK(ev.validate().empty());
  CHECK(is_quasi_iso(ev).verdict);
}

TEST_CASE("quasi-isomorphism characterizations agree") {
  CHECK(is_quasi_iso(identity_morphism(standard_l())).verdict);

  // dot(1,1) -> top corner of the square is not a quasi-isomorphism.
  Bicomplex d = dot_complex({1, 1});
  Bicomplex sq = square_complex({0, 0});
  BicomplexMorphism f{d, sq, {}};
  ExactMatrix m(1, 1);
  m(0, 0) = GaussianRational(1);
  f.set_component({1, 1}, m);
  CHECK(f.validate().empty());
  CHECK_FALSE(is_quasi_iso(f).verdict);

  // Inclusion A -> A ⊕ squares is a quasi-isomorphism, all three criteria.
  Rng rng(38);
  CorpusOptions small;
  small.max_parts = 2;
  Bicomplex a = random_bicomplex(rng, small);
  Bicomplex b = direct_sum(a, square_complex({0, 0}));
  BicomplexMorphism incl{a, b, {}};
  for (BiDegree deg : a.bidegrees()) {
    ExactMatrix c = exact_zero(b.dim(deg), a.dim(deg));
    c.topLeftCorner(a.dim(deg), a.dim(deg)) = exact_identity(a.dim(deg));
    incl.set_component(deg, std::move(c));
  }
  QuisoOptions opts;
  opts.check_cone_squares = true;
  opts.check_row_col = true;
  QuisoEvidence ev = is_quasi_iso(incl, opts);
  CHECK(ev.verdict);
  CHECK(*ev.cone_all_squares);
  CHECK(ev.row->all_iso);
  CHECK(ev.col->all_iso);

  // Trichotomy on random chain maps: the three verdicts agree.
  for (int trial = 0; trial < 6; ++trial) {
    Bicomplex x = random_bicomplex(rng, small), y = random_bicomplex(rng, small);
    BicomplexMorphism g = random_chain_map(rng, x, y);
    QuisoEvidence e = is_quasi_iso(g, opts);
    CHECK(e.verdict == *e.cone_all_squares);
    CHECK(e.verdict == (e.row->all_iso && e.col->all_iso));
  }
}

TEST_CASE("purely imaginary witness for real nullhomotopic maps") {
  // Square with its standard real structure; the identity is nullhomotopic
  // and the witness can be taken imaginary.
  Bicomplex sq = square_complex({0, 0});
  ExactMatrix one = exact_identity(1);
  sq.set_real_structure({0, 0}, one);
  sq.set_real_structure({1, 0}, one);
  sq.set_real_structure({0, 1}, one);
  sq.set_real_structure({1, 1}, ExactMatrix(-one));
  auto res = is_nullhomotopic_real(identity_morphism(sq));
  CHECK(res.nullhomotopic);
  REQUIRE(res.witness.has_value());
  // Purely imaginary in the twisted sense: sigma h sigma = -h. For the
  // square this reads S_{0,0} conj(h_{1,1}) conj(S_{1,1}) = -h_{1,1}.
  auto component = [&](BiDegree d) {
    auto it = res.witness->find(d);
    return it == res.witness->end() ? exact_zero(sq.dim(d - BiDegree{1, 1}), sq.dim(d))
                                    : it->second;
  };
  for (BiDegree d : sq.bidegrees()) {
    if (sq.dim(d - BiDegree{1, 1}) == 0) continue;
    ExactMatrix lhs = sq.real_structure(BiDegree{d.q - 1, d.p - 1}) *
                      conj(component(d.swapped())) * conj(sq.real_structure(d));
    CHECK(lhs == ExactMatrix(-component(d)));
  }
}
