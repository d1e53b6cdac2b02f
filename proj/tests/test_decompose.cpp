#include <doctest.h>

#include "bigraded/cohomology.hpp"
#include "bigraded/corpus.hpp"
#include "bigraded/decompose.hpp"
#include "bigraded/homotopy.hpp"

using namespace bigraded;

TEST_CASE("decompose the canonical indecomposables") {
  {
    DecompositionCertificate c = decompose(square_complex({0, 0}));
    REQUIRE(c.parts.size() == 1);
    CHECK(c.parts[0].spec == IndecompSpec::square({0, 0}));
    CHECK(verify_certificate(c, square_complex({0, 0})).empty());
  }
  {
    DecompositionCertificate c = decompose(dot_complex({2, -1}));
    REQUIRE(c.parts.size() == 1);
    CHECK(c.parts[0].spec == IndecompSpec::dot({2, -1}));
  }
  {
    DecompositionCertificate c = decompose(standard_l());
    REQUIRE(c.parts.size() == 1);
    CHECK(c.parts[0].spec == IndecompSpec::l_corner({-1, -1}));
  }
  {
    DecompositionCertificate c = decompose(standard_reverse_l());
    REQUIRE(c.parts.size() == 1);
    CHECK(c.parts[0].spec == IndecompSpec::reverse_l_corner({1, 1}));
  }
}

TEST_CASE("decompose L⊗L: one square and one length-5 zigzag") {
  Bicomplex ll = tensor(standard_l(), standard_l());
  auto mult = decompose(ll).multiplicities();
  std::map<IndecompSpec, Index> expect;
  expect[IndecompSpec::square({-2, -2})] = 1;
  expect[IndecompSpec::l_power_zigzag(2)] = 1;
  CHECK(mult == expect);
}

TEST_CASE("random round trips recover the multiset exactly") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    RandomSum sum = random_sum(rng);
    Conjugated conj = random_conjugate(rng, sum.complex);
    DecompositionCertificate cert = decompose(conj.complex);
    CHECK(verify_certificate(cert, conj.complex).empty());
    std::map<IndecompSpec, Index> expect;
    for (const auto& spec : sum.parts) ++expect[spec];
    CHECK(cert.multiplicities() == expect);
  }
}

TEST_CASE("decompose is idempotent on its own canonical output") {
  Rng rng(42);
  RandomSum sum = random_sum(rng);
  auto first = decompose(sum.complex).multiplicities();
  // The canonical sum is already block diagonal; decomposing returns the
  // same multiset.
  std::map<IndecompSpec, Index> expect;
  for (const auto& spec : sum.parts) ++expect[spec];
  CHECK(first == expect);
}

TEST_CASE("zig/square split") {
  {
    ZigSquareSplit s = zig_square_split(dot_complex({0, 0}));
    CHECK(s.zig.total_dimension() == 1);
    CHECK(s.sq.total_dimension() == 0);
  }
  {
    ZigSquareSplit s = zig_square_split(square_complex({1, 1}));
    CHECK(s.zig.total_dimension() == 0);
    CHECK(s.sq.total_dimension() == 4);
  }
  Rng rng(43);
  for (int trial = 0; trial < 6; ++trial) {
    Bicomplex a = random_bicomplex(rng);
    ZigSquareSplit s = zig_square_split(a);
    for (BiDegree d : s.zig.bidegrees()) CHECK(is_zero_matrix(s.zig.deldbar(d)));
    CHECK(s.iso.validate().empty());
    CHECK(is_isomorphism(s.iso));
    CHECK(h_bc(s.zig).dims() == h_bc(a).dims());
    CHECK(h_a(s.zig).dims() == h_a(a).dims());
    CHECK(s.zig.total_dimension() + s.sq.total_dimension() == a.total_dimension());
  }
}

TEST_CASE("reassembled parts have the cohomology of the input") {
  Rng rng(44);
  for (int trial = 0; trial < 5; ++trial) {
    Bicomplex a = random_bicomplex(rng);
    DecompositionCertificate cert = decompose(a);
    Bicomplex sum;
    bool first = true;
    for (const auto& part : cert.parts) {
      Bicomplex piece = build_indecomposable(part.spec);
      sum = first ? piece : direct_sum(sum, piece);
      first = false;
    }
    CHECK(h_bc(sum).dims() == h_bc(a).dims());
    CHECK(h_a(sum).dims() == h_a(a).dims());
    CHECK(h_row(sum).dims() == h_row(a).dims());
    CHECK(h_col(sum).dims() == h_col(a).dims());
    CHECK(h_total(sum).dims_by_total() == h_total(a).dims_by_total());
    std::uniform_int_distribution<int> coord(-2, 2);
    for (int k = 0; k < 3; ++k) {
      int p = coord(rng), q = coord(rng);
      CHECK(h_schweitzer(sum, p, q).dims_by_total() ==
            h_schweitzer(a, p, q).dims_by_total());
    }
  }
}

TEST_CASE("acyclicity characterizations agree pairwise") {
  Rng rng(45);
  CorpusOptions opts;
  opts.max_parts = 3;
  for (int trial = 0; trial < 10; ++trial) {
    Bicomplex a = random_bicomplex(rng, opts);
    bool only_squares = true;
    for (const auto& [spec, n] : multiplicities_report(a))
      if (spec.kind != IndecompSpec::Kind::Square) only_squares = false;
    bool bc_zero = h_bc(a).total_dim() == 0;
    bool a_zero = h_a(a).total_dim() == 0;
    bool null_id = is_nullhomotopic(identity_morphism(a)).nullhomotopic;
    CHECK(only_squares == bc_zero);
    CHECK(bc_zero == a_zero);
    CHECK(a_zero == null_id);
  }
}
