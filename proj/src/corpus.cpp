#include "bigraded/corpus.hpp"

#include "bigraded/homotopy.hpp"

namespace bigraded {

GaussianRational random_entry(Rng& rng, int re_range, int im_range) {
  std::uniform_int_distribution<int> re(-re_range, re_range);
  std::uniform_int_distribution<int> im(-im_range, im_range);
  return {Rational(re(rng)), Rational(im(rng))};
}

IndecompSpec random_indecomposable(Rng& rng, const CorpusOptions& opts) {
  std::uniform_int_distribution<int> coord(-opts.coord_range, opts.coord_range);
  BiDegree start{coord(rng), coord(rng)};
  std::uniform_int_distribution<int> kind(0, opts.allow_squares ? 3 : 2);
  int k = kind(rng);
  if (k == 3) return IndecompSpec::square(start);
  std::uniform_int_distribution<int> len_d(1, opts.max_zigzag_length);
  int len = len_d(rng);
  if (len == 1) return IndecompSpec::dot(start);
  // A zigzag support walks alternately in two patterns; four orientations.
  std::uniform_int_distribution<int> orient(0, 1), first_axis(0, 1);
  bool up = orient(rng) == 0;         // whether odd steps ascend in total degree
  bool axis_p = first_axis(rng) == 0; // whether the first step moves in p
  std::vector<BiDegree> verts{start};
  BiDegree cur = start;
  for (int i = 1; i < len; ++i) {
    bool move_p = (i % 2 == 1) ? axis_p : !axis_p;
    bool ascend = (i % 2 == 1) ? up : !up;
    BiDegree step = move_p ? BiDegree{1, 0} : BiDegree{0, 1};
    cur = ascend ? cur + step : cur - step;
    verts.push_back(cur);
  }
  std::vector<std::pair<BiDegree, BiDegree>> edges;
  for (size_t i = 0; i + 1 < verts.size(); ++i) {
    if (verts[i].total() < verts[i + 1].total())
      edges.push_back({verts[i], verts[i + 1]});
    else
      edges.push_back({verts[i + 1], verts[i]});
  }
  return IndecompSpec::zigzag(std::move(verts), std::move(edges));
}

RandomSum random_sum(Rng& rng, const CorpusOptions& opts) {
  std::uniform_int_distribution<int> count(1, opts.max_parts);
  RandomSum out;
  int n = count(rng);
  for (int i = 0; i < n; ++i) out.parts.push_back(random_indecomposable(rng, opts));
  bool first = true;
  for (const auto& spec : out.parts) {
    Bicomplex piece = build_indecomposable(spec);
    out.complex = first ? piece : direct_sum(out.complex, piece);
    first = false;
  }
  return out;
}

Conjugated random_conjugate(Rng& rng, const Bicomplex& a, const CorpusOptions& opts) {
  Conjugated out;
  for (BiDegree d : a.bidegrees()) {
    Index n = a.dim(d);
    ExactMatrix p(n, n);
    for (int attempt = 0;; ++attempt) {
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          p(i, j) = random_entry(rng, opts.entry_range_re, opts.entry_range_im);
      if (rank(p) == n) break;
      if (attempt > 200) throw std::logic_error("random_conjugate: no invertible matrix found");
    }
    out.basis[d] = std::move(p);
  }
  auto basis_at = [&](BiDegree d) {
    auto it = out.basis.find(d);
    return it == out.basis.end() ? exact_identity(a.dim(d)) : it->second;
  };
  for (BiDegree d : a.bidegrees()) out.complex.set_space(d, a.dim(d));
  for (BiDegree d : a.bidegrees()) {
    BiDegree dr{d.p + 1, d.q}, du{d.p, d.q + 1};
    if (a.dim(dr) > 0)
      out.complex.set_del(
          d, ExactMatrix(inverse_matrix(basis_at(dr)) * a.del(d) * basis_at(d)));
    if (a.dim(du) > 0)
      out.complex.set_dbar(
          d, ExactMatrix(inverse_matrix(basis_at(du)) * a.dbar(d) * basis_at(d)));
  }
  if (validation_enabled()) out.complex.assert_valid("random_conjugate");
  return out;
}

Bicomplex random_bicomplex(Rng& rng, const CorpusOptions& opts) {
  RandomSum sum = random_sum(rng, opts);
  return random_conjugate(rng, sum.complex, opts).complex;
}

BicomplexMorphism random_chain_map(Rng& rng, const Bicomplex& a, const Bicomplex& b) {
  MapFamilyLayout fs = MapFamilyLayout::build(a, b, {0, 0});
  ExactMatrix z = kernel_basis(chain_map_constraints(a, b, fs));
  ExactVector v = ExactVector::Zero(fs.dim);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (Index j = 0; j < z.cols(); ++j) {
    GaussianRational c(coeff(rng));
    if (c.is_zero()) continue;
    v += c * z.col(j);
  }
  BicomplexMorphism f{a, b, fs.reify(v, a, b)};
  if (validation_enabled()) f.assert_valid("random_chain_map");
  return f;
}

}  // namespace bigraded
