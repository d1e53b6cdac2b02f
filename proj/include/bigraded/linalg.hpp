#ifndef BIGRADED_LINALG_HPP
#define BIGRADED_LINALG_HPP

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigraded/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<bigraded::GaussianRational> {
  using Real = bigraded::GaussianRational;
  using NonInteger = bigraded::GaussianRational;
  using Literal = bigraded::GaussianRational;
  using Nested = bigraded::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60
  };
  static inline bigraded::GaussianRational epsilon() { return {}; }
  static inline bigraded::GaussianRational dummy_precision() { return {}; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace bigraded {

/// Dense exact matrix over Q(i). Eigen supplies the container and the
/// expression arithmetic; every elimination routine below is pivot-exact.
using ExactMatrix = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using ExactVector = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

inline ExactMatrix exact_identity(Index n) { return ExactMatrix::Identity(n, n); }

inline ExactMatrix exact_zero(Index r, Index c) { return ExactMatrix::Zero(r, c); }

inline bool is_zero_matrix(const ExactMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

inline ExactMatrix conj(const ExactMatrix& m) {
  ExactMatrix r(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) r(i, j) = m(i, j).conj();
  return r;
}

inline ExactMatrix hcat(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
  ExactMatrix r(a.rows(), a.cols() + b.cols());
  r.leftCols(a.cols()) = a;
  r.rightCols(b.cols()) = b;
  return r;
}

inline ExactMatrix vcat(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("vcat: column mismatch");
  ExactMatrix r(a.rows() + b.rows(), a.cols());
  r.topRows(a.rows()) = a;
  r.bottomRows(b.rows()) = b;
  return r;
}

struct RrefResult {
  ExactMatrix reduced;
  std::vector<Index> pivots;  // strictly increasing pivot column indices
};

/// Reduced row-echelon form by Gauss-Jordan elimination. Pivot rule:
/// leftmost column first, first nonzero entry in that column. Deterministic,
/// so downstream certificates are byte-reproducible.
inline RrefResult rref(ExactMatrix m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index i = row; i < m.rows(); ++i) {
      if (!m(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    GaussianRational inv = inverse(m(row, col));
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      GaussianRational f = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline Index rank(const ExactMatrix& m) { return static_cast<Index>(rref(m).pivots.size()); }

/// Rank by fraction-free (Bareiss) elimination over the Gaussian integers
/// after clearing row denominators. Independent of rref(); the two must
/// always agree, which the test suite checks on random matrices.
Index rank_fraction_free(const ExactMatrix& m);

/// Basis of the right kernel: columns K with m*K = 0 and
/// cols(K) = cols(m) - rank(m).
inline ExactMatrix kernel_basis(const ExactMatrix& m) {
  RrefResult r = rref(m);
  Index n = m.cols();
  Index rk = static_cast<Index>(r.pivots.size());
  std::vector<Index> free_cols;
  {
    size_t pi = 0;
    for (Index c = 0; c < n; ++c) {
      if (pi < r.pivots.size() && r.pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  ExactMatrix k = exact_zero(n, n - rk);
  for (Index j = 0; j < static_cast<Index>(free_cols.size()); ++j) {
    Index fc = free_cols[j];
    k(fc, j) = GaussianRational(1);
    for (Index pi = 0; pi < rk; ++pi) k(r.pivots[pi], j) = -r.reduced(pi, fc);
  }
  return k;
}

/// Basis of the column span: the pivot columns of the input, in order.
inline ExactMatrix image_basis(const ExactMatrix& m) {
  RrefResult r = rref(m);
  ExactMatrix img(m.rows(), static_cast<Index>(r.pivots.size()));
  for (Index j = 0; j < img.cols(); ++j) img.col(j) = m.col(r.pivots[j]);
  return img;
}

/// Solves m*x = b for all columns of b simultaneously; nullopt when any
/// column is inconsistent.
inline std::optional<ExactMatrix> solve(const ExactMatrix& m, const ExactMatrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  RrefResult r = rref(hcat(m, b));
  // Any pivot beyond the coefficient block marks an inconsistent column.
  for (Index p : r.pivots)
    if (p >= m.cols()) return std::nullopt;
  ExactMatrix x = exact_zero(m.cols(), b.cols());
  for (Index pi = 0; pi < static_cast<Index>(r.pivots.size()); ++pi)
    for (Index j = 0; j < b.cols(); ++j) x(r.pivots[pi], j) = r.reduced(pi, m.cols() + j);
  return x;
}

inline std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b) {
  auto x = solve(m, static_cast<const ExactMatrix&>(b));
  if (!x) return std::nullopt;
  return ExactVector(x->col(0));
}

/// True when every column of sub lies in the column span of space.
inline bool spans_contain(const ExactMatrix& space, const ExactMatrix& sub) {
  if (sub.cols() == 0) return true;
  return solve(space, sub).has_value();
}

inline ExactMatrix inverse_matrix(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  auto x = solve(m, exact_identity(m.rows()));
  if (!x || rank(m) != m.rows()) throw std::invalid_argument("inverse: singular matrix");
  return *x;
}

/// Basis of span(a) + span(b).
inline ExactMatrix sum_subspaces(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() == 0) return image_basis(b);
  if (b.cols() == 0) return image_basis(a);
  return image_basis(hcat(a, b));
}

/// Basis of span(a) with span(b): vectors a*x arising from kernel elements
/// (x, y) of [a | -b].
inline ExactMatrix intersect_subspaces(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return exact_zero(a.rows(), 0);
  ExactMatrix k = kernel_basis(hcat(a, ExactMatrix(-b)));
  if (k.cols() == 0) return exact_zero(a.rows(), 0);
  ExactMatrix vecs = a * k.topRows(a.cols());
  return image_basis(vecs);
}

struct QuotientBasis {
  ExactMatrix representatives;  // ambient-space columns whose classes form a basis
  ExactMatrix projection;       // maps an ambient vector to its class coordinates
};

/// Quotient of span(ambient) by span(sub). Requires sub to be contained in
/// span(ambient) and both to have independent columns. The projection
/// composed with the representative inclusion is the identity, and the
/// projection kills sub. The projection is only meaningful on span(ambient).
inline QuotientBasis quotient_basis(const ExactMatrix& ambient, const ExactMatrix& sub) {
  Index n = ambient.rows();
  Index m = ambient.cols();
  if (sub.rows() != n && sub.cols() > 0)
    throw std::invalid_argument("quotient_basis: dimension mismatch");
  auto coords = solve(ambient, sub.cols() ? sub : exact_zero(n, 0));
  if (!coords) throw std::invalid_argument("quotient_basis: sub not inside ambient span");
  ExactMatrix x = *coords;  // m x k
  Index k = x.cols();
  // Complete the columns of x to a basis of k^m with standard basis vectors.
  RrefResult r = rref(hcat(x, exact_identity(m)));
  std::vector<Index> completion;
  for (Index p : r.pivots) {
    if (p < k) continue;
    completion.push_back(p - k);
  }
  if (static_cast<Index>(r.pivots.size()) != m || rank(x) != k)
    throw std::invalid_argument("quotient_basis: sub basis not independent");
  ExactMatrix t(m, m);
  t.leftCols(k) = x;
  for (Index j = 0; j < static_cast<Index>(completion.size()); ++j)
    t.col(k + j) = exact_identity(m).col(completion[j]);
  ExactMatrix t_inv = inverse_matrix(t);

  // Left inverse of ambient: extend to an invertible n x n matrix first.
  ExactMatrix left;
  if (m == n) {
    left = inverse_matrix(ambient);
  } else {
    RrefResult ra = rref(hcat(ambient, exact_identity(n)));
    ExactMatrix ext(n, n);
    ext.leftCols(m) = ambient;
    Index at = m;
    for (Index p : ra.pivots) {
      if (p < m) continue;
      ext.col(at++) = exact_identity(n).col(p - m);
    }
    if (at != n) throw std::invalid_argument("quotient_basis: ambient columns dependent");
    left = inverse_matrix(ext).topRows(m);
  }

  QuotientBasis q;
  ExactMatrix reps(n, m - k);
  for (Index j = 0; j < m - k; ++j) reps.col(j) = ambient.col(completion[j]);
  q.representatives = reps;
  q.projection = t_inv.bottomRows(m - k) * left;
  return q;
}

}  // namespace bigraded

#endif  // BIGRADED_LINALG_HPP
