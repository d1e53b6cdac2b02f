#include "bigraded/linalg.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace bigraded {

namespace {

using Int = boost::multiprecision::mpz_int;

// Gaussian integer a + b i.
struct Zi {
  Int a{0}, b{0};

  bool is_zero() const { return a == 0 && b == 0; }
  Zi conj() const { return {a, -b}; }
  friend Zi operator*(const Zi& x, const Zi& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend Zi operator-(const Zi& x, const Zi& y) { return {x.a - y.a, x.b - y.b}; }
};

// Exact division in Z[i]; Bareiss guarantees divisibility by the previous pivot.
Zi exact_div(const Zi& x, const Zi& y) {
  Int n = y.a * y.a + y.b * y.b;
  Zi num = x * y.conj();
  return {num.a / n, num.b / n};
}

}  // namespace

Index rank_fraction_free(const ExactMatrix& m) {
  const Index rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  // Clear denominators row by row.
  std::vector<std::vector<Zi>> g(rows, std::vector<Zi>(cols));
  for (Index i = 0; i < rows; ++i) {
    Int lcm_den = 1;
    for (Index j = 0; j < cols; ++j) {
      lcm_den = boost::multiprecision::lcm(lcm_den, Int(denominator(m(i, j).re())));
      lcm_den = boost::multiprecision::lcm(lcm_den, Int(denominator(m(i, j).im())));
    }
    for (Index j = 0; j < cols; ++j) {
      g[i][j].a = Int(numerator(m(i, j).re())) * (lcm_den / Int(denominator(m(i, j).re())));
      g[i][j].b = Int(numerator(m(i, j).im())) * (lcm_den / Int(denominator(m(i, j).im())));
    }
  }
  Zi prev{1, 0};
  Index r = 0;
  for (Index col = 0; col < cols && r < rows; ++col) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (!g[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) std::swap(g[pivot], g[r]);
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = col + 1; j < cols; ++j)
        g[i][j] = exact_div(g[r][col] * g[i][j] - g[i][col] * g[r][j], prev);
      g[i][col] = Zi{};
    }
    prev = g[r][col];
    ++r;
  }
  return r;
}

}  // namespace bigraded
