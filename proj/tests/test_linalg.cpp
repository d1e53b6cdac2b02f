#include <doctest.h>

#include <random>

#include "bigraded/linalg.hpp"

using namespace bigraded;

namespace {

ExactMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols) {
  std::uniform_int_distribution<int> re(-3, 3), im(-1, 1);
  ExactMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = {Rational(re(rng)), Rational(im(rng))};
  return m;
}

}  // namespace

TEST_CASE("rref on the named examples") {
  {
    RrefResult r = rref(exact_identity(3));
    CHECK(r.reduced == exact_identity(3));
    CHECK(r.pivots == std::vector<Index>{0, 1, 2});
  }
  {
    RrefResult r = rref(exact_zero(2, 4));
    CHECK(is_zero_matrix(r.reduced));
    CHECK(r.pivots.empty());
  }
  {
    GaussianRational i = GaussianRational::i();
    ExactMatrix m(2, 2);
    m << GaussianRational(1), i, -i, GaussianRational(1);
    RrefResult r = rref(m);
    CHECK(r.pivots == std::vector<Index>{0});
    CHECK(r.reduced(0, 0) == GaussianRational(1));
    CHECK(r.reduced(0, 1) == i);
    CHECK(r.reduced(1, 0) == GaussianRational(0));
    CHECK(r.reduced(1, 1) == GaussianRational(0));
  }
}

TEST_CASE("kernel, image, solve basics") {
  CHECK(kernel_basis(exact_zero(3, 4)) == exact_identity(4));
  ExactMatrix two(1, 1);
  two(0, 0) = GaussianRational(2);
  ExactVector b(1);
  b(0) = GaussianRational(1);
  auto x = solve(two, b);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == GaussianRational(Rational(1, 2)));

  ExactMatrix inconsistent(2, 1);
  inconsistent << GaussianRational(1), GaussianRational(0);
  ExactVector rhs(2);
  rhs << GaussianRational(0), GaussianRational(1);
  CHECK_FALSE(solve(inconsistent, rhs).has_value());
}

TEST_CASE("intersection of transverse lines is zero") {
  ExactMatrix a(2, 1), b(2, 1);
  a << GaussianRational(1), GaussianRational(1);
  b << GaussianRational(1), GaussianRational(-1);
  CHECK(intersect_subspaces(a, b).cols() == 0);
  CHECK(sum_subspaces(a, b).cols() == 2);
}

TEST_CASE("random matrices: rank-nullity, kernel, fraction-free cross-check") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(0, 7);
  for (int trial = 0; trial < 60; ++trial) {
    Index rows = size(rng), cols = size(rng);
    ExactMatrix m = random_matrix(rng, rows, cols);
    Index rk = rank(m);
    ExactMatrix k = kernel_basis(m);
    CHECK(rk + k.cols() == cols);
    CHECK(is_zero_matrix(ExactMatrix(m * k)));
    CHECK(rank_fraction_free(m) == rk);
    CHECK(image_basis(m).cols() == rk);
  }
}

TEST_CASE("quotient basis: projection inverts representatives and kills sub") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> size(1, 6);
    Index n = size(rng);
    ExactMatrix sub = image_basis(random_matrix(rng, n, size(rng) % (n + 1)));
    QuotientBasis q = quotient_basis(exact_identity(n), sub);
    CHECK(q.representatives.cols() == n - sub.cols());
    CHECK(ExactMatrix(q.projection * q.representatives) ==
          exact_identity(n - sub.cols()));
    if (sub.cols() > 0) CHECK(is_zero_matrix(ExactMatrix(q.projection * sub)));
  }
}

TEST_CASE("quotient basis inside a proper ambient subspace") {
  // Ambient = span(e1+e2, e3) in dim 3, sub = span(e1+e2).
  ExactMatrix ambient(3, 2), sub(3, 1);
  ambient << GaussianRational(1), GaussianRational(0), GaussianRational(1),
      GaussianRational(0), GaussianRational(0), GaussianRational(1);
  sub << GaussianRational(1), GaussianRational(1), GaussianRational(0);
  QuotientBasis q = quotient_basis(ambient, sub);
  CHECK(q.representatives.cols() == 1);
  CHECK(ExactMatrix(q.projection * q.representatives) == exact_identity(1));
  CHECK(is_zero_matrix(ExactMatrix(q.projection * sub)));
}
