#include "bigraded/homotopy.hpp"

#include <algorithm>
#include <stdexcept>

#include "bigraded/decompose.hpp"

namespace bigraded {

MapFamilyLayout MapFamilyLayout::build(const Bicomplex& a, const Bicomplex& b, BiDegree shift) {
  MapFamilyLayout l;
  l.shift = shift;
  Index off = 0;
  for (BiDegree d : a.bidegrees()) {
    Index td = b.dim(d + shift);
    if (td == 0) continue;
    l.blocks.push_back({d, off, a.dim(d), td});
    off += a.dim(d) * td;
  }
  l.dim = off;
  return l;
}

std::map<BiDegree, ExactMatrix> MapFamilyLayout::reify(const ExactVector& v, const Bicomplex& a,
                                                       const Bicomplex& b) const {
  std::map<BiDegree, ExactMatrix> out;
  for (const auto& blk : blocks) {
    ExactMatrix m(blk.target_dim, blk.source_dim);
    for (Index c = 0; c < blk.source_dim; ++c)
      for (Index r = 0; r < blk.target_dim; ++r) m(r, c) = v(blk.offset + c * blk.target_dim + r);
    if (!is_zero_matrix(m)) out[blk.source_deg] = std::move(m);
  }
  (void)a;
  (void)b;
  return out;
}

ExactVector MapFamilyLayout::vectorize(const std::map<BiDegree, ExactMatrix>& comps) const {
  ExactVector v = ExactVector::Zero(dim);
  for (const auto& blk : blocks) {
    auto it = comps.find(blk.source_deg);
    if (it == comps.end()) continue;
    const ExactMatrix& m = it->second;
    for (Index c = 0; c < blk.source_dim; ++c)
      for (Index r = 0; r < blk.target_dim; ++r) v(blk.offset + c * blk.target_dim + r) = m(r, c);
  }
  return v;
}

namespace {

const MapFamilyLayout::Block* find_block(const MapFamilyLayout& l, BiDegree d) {
  for (const auto& b : l.blocks)
    if (b.source_deg == d) return &b;
  return nullptr;
}

// Adds coeff * vec(P * H_blk * Q) dependence into rows of `out` belonging to
// the f-block `fb`, where H_blk is the h-block `hb` (column-major on both
// sides).
void add_sandwich(ExactMatrix& out, const MapFamilyLayout::Block& fb,
                  const MapFamilyLayout::Block& hb, const ExactMatrix& p, const ExactMatrix& q,
                  const GaussianRational& coeff) {
  // f(r,c) += coeff * sum_{i,j} P(r,i) H(i,j) Q(j,c)
  for (Index r = 0; r < p.rows(); ++r)
    for (Index i = 0; i < p.cols(); ++i) {
      if (p(r, i).is_zero()) continue;
      for (Index j = 0; j < q.rows(); ++j)
        for (Index c = 0; c < q.cols(); ++c) {
          if (q(j, c).is_zero()) continue;
          out(fb.offset + c * fb.target_dim + r, hb.offset + j * hb.target_dim + i) +=
              coeff * p(r, i) * q(j, c);
        }
    }
}

}  // namespace

ExactMatrix nullhomotopy_operator(const Bicomplex& a, const Bicomplex& b,
                                  const MapFamilyLayout& hs, const MapFamilyLayout& fs) {
  ExactMatrix n = exact_zero(fs.dim, hs.dim);
  GaussianRational one(1);
  for (const auto& fb : fs.blocks) {
    BiDegree e = fb.source_deg;
    ExactMatrix id_e = exact_identity(a.dim(e));
    // del dbar h_e
    if (const auto* hb = find_block(hs, e)) {
      ExactMatrix p = b.del({e.p - 1, e.q}) * b.dbar(e - BiDegree{1, 1});
      add_sandwich(n, fb, *hb, p, id_e, one);
    }
    // - del h_{e+(0,1)} dbar_e
    if (const auto* hb = find_block(hs, e + BiDegree{0, 1})) {
      add_sandwich(n, fb, *hb, b.del({e.p - 1, e.q}), a.dbar(e), GaussianRational(-1));
    }
    // + dbar h_{e+(1,0)} del_e
    if (const auto* hb = find_block(hs, e + BiDegree{1, 0})) {
      add_sandwich(n, fb, *hb, b.dbar({e.p, e.q - 1}), a.del(e), one);
    }
    // - h_{e+(1,1)} dbar del
    if (const auto* hb = find_block(hs, e + BiDegree{1, 1})) {
      ExactMatrix q = a.dbar({e.p + 1, e.q}) * a.del(e);
      add_sandwich(n, fb, *hb, exact_identity(b.dim(e)), q, GaussianRational(-1));
    }
  }
  return n;
}

ExactMatrix chain_map_constraints(const Bicomplex& a, const Bicomplex& b,
                                  const MapFamilyLayout& fs) {
  // One equation block per (degree, direction) with nonzero source and target.
  struct Eq {
    BiDegree deg;
    BiDegree step;
    Index offset, rows;
  };
  std::vector<Eq> eqs;
  Index total = 0;
  for (BiDegree d : a.bidegrees()) {
    for (BiDegree step : {BiDegree{1, 0}, BiDegree{0, 1}}) {
      Index r = a.dim(d) * b.dim(d + step);
      if (r == 0) continue;
      eqs.push_back({d, step, total, r});
      total += r;
    }
  }
  ExactMatrix m = exact_zero(total, fs.dim);
  for (const auto& eq : eqs) {
    MapFamilyLayout::Block fake{eq.deg, eq.offset, a.dim(eq.deg), b.dim(eq.deg + eq.step)};
    bool is_del = eq.step == BiDegree{1, 0};
    // d_B f_d - f_{d+step} d_A = 0
    if (const auto* fb = find_block(fs, eq.deg)) {
      ExactMatrix p = is_del ? b.del(eq.deg) : b.dbar(eq.deg);
      add_sandwich(m, fake, *fb, p, exact_identity(a.dim(eq.deg)), GaussianRational(1));
    }
    if (const auto* fb = find_block(fs, eq.deg + eq.step)) {
      ExactMatrix q = is_del ? a.del(eq.deg) : a.dbar(eq.deg);
      add_sandwich(m, fake, *fb, exact_identity(b.dim(eq.deg + eq.step)), q,
                   GaussianRational(-1));
    }
  }
  return m;
}

NullhomotopyResult is_nullhomotopic(const BicomplexMorphism& f) {
  const Bicomplex& a = f.source;
  const Bicomplex& b = f.target;
  MapFamilyLayout hs = MapFamilyLayout::build(a, b, {-1, -1});
  MapFamilyLayout fs = MapFamilyLayout::build(a, b, {0, 0});
  ExactMatrix n = nullhomotopy_operator(a, b, hs, fs);
  ExactVector vf = fs.vectorize(f.components);
  NullhomotopyResult res;
  auto h = solve(n, vf);
  if (h) {
    res.nullhomotopic = true;
    res.witness = hs.reify(*h, a, b);
    res.obstruction_class = ExactVector::Zero(0);
    return res;
  }
  // Certificate: the class of f in chain maps / nullhomotopic maps.
  ExactMatrix z = kernel_basis(chain_map_constraints(a, b, fs));
  CohomGroup cls = subquotient(z, image_basis(n));
  res.obstruction_class = cls.projection * vf;
  return res;
}

NullhomotopyResult is_nullhomotopic_real(const BicomplexMorphism& f) {
  const Bicomplex& a = f.source;
  const Bicomplex& b = f.target;
  if (!a.has_real_structure() || !b.has_real_structure())
    throw std::invalid_argument("is_nullhomotopic_real: both sides must be real");
  MapFamilyLayout hs = MapFamilyLayout::build(a, b, {-1, -1});
  MapFamilyLayout fs = MapFamilyLayout::build(a, b, {0, 0});
  ExactMatrix n = nullhomotopy_operator(a, b, hs, fs);
  ExactVector vf = fs.vectorize(f.components);

  // Imaginary condition: h_{p,q} + S_B(q-1,p-1) conj(h_{q,p}) conj(S_A(p,q)) = 0.
  // Conjugation is only Q-linear, so split every unknown into re + i*im and
  // work over Q embedded in Q(i).
  Index nh = hs.dim;
  // Unknown vector u = (x ; y) with h = x + i y, x and y rational.
  // N (x + i y) = vf and the antilinear constraint, both expanded over Q.
  Index rows_n = n.rows();
  // Realify N h = vf: [Re N, -Im N; Im N, Re N] [x;y] = [Re vf; Im vf].
  ExactMatrix re_n = exact_zero(rows_n, nh), im_n = exact_zero(rows_n, nh);
  for (Index i = 0; i < rows_n; ++i)
    for (Index j = 0; j < nh; ++j) {
      re_n(i, j) = GaussianRational(Rational(n(i, j).re()));
      im_n(i, j) = GaussianRational(Rational(n(i, j).im()));
    }
  ExactMatrix sys = exact_zero(2 * rows_n, 2 * nh);
  sys.block(0, 0, rows_n, nh) = re_n;
  sys.block(0, nh, rows_n, nh) = -im_n;
  sys.block(rows_n, 0, rows_n, nh) = im_n;
  sys.block(rows_n, nh, rows_n, nh) = re_n;
  ExactVector rhs = ExactVector::Zero(2 * rows_n);
  for (Index i = 0; i < rows_n; ++i) {
    rhs(i) = GaussianRational(Rational(vf(i).re()));
    rhs(rows_n + i) = GaussianRational(Rational(vf(i).im()));
  }

  // Antilinear constraint rows: for every h-entry position (block d, row r,
  // col c) require h_d + S_B conj(h_{swap d}) conj(S_A) = 0, split into
  // real/imaginary parts.
  std::vector<ExactVector> extra_rows;
  std::vector<GaussianRational> extra_rhs;
  for (const auto& blk : hs.blocks) {
    BiDegree d = blk.source_deg;
    const auto* swapped = find_block(hs, d.swapped());
    ExactMatrix sb = b.real_structure(BiDegree{d.q, d.p} - BiDegree{1, 1});
    ExactMatrix sa_c = conj(a.real_structure(d));
    // Entry (r,c) of h-bar at d: sum_{i,j} SB(r,i) conj(h_swap(i,j)) SAc(j,c).
    for (Index c = 0; c < blk.source_dim; ++c)
      for (Index r = 0; r < blk.target_dim; ++r) {
        ExactVector row_x = ExactVector::Zero(2 * nh);
        ExactVector row_y = ExactVector::Zero(2 * nh);
        Index self = blk.offset + c * blk.target_dim + r;
        row_x(self) += GaussianRational(1);
        row_y(nh + self) += GaussianRational(1);
        if (swapped) {
          for (Index i = 0; i < swapped->target_dim; ++i)
            for (Index j = 0; j < swapped->source_dim; ++j) {
              GaussianRational coef = sb(r, i) * sa_c(j, c);
              Index pos = swapped->offset + j * swapped->target_dim + i;
              // conj(h) contributes +x - i y.
              row_x(pos) += GaussianRational(Rational(coef.re()));
              row_x(nh + pos) += GaussianRational(Rational(coef.im()));
              row_y(pos) += GaussianRational(Rational(coef.im()));
              row_y(nh + pos) -= GaussianRational(Rational(coef.re()));
            }
        }
        extra_rows.push_back(row_x);
        extra_rhs.push_back(GaussianRational(0));
        extra_rows.push_back(row_y);
        extra_rhs.push_back(GaussianRational(0));
      }
  }
  ExactMatrix full = exact_zero(sys.rows() + static_cast<Index>(extra_rows.size()), 2 * nh);
  full.topRows(sys.rows()) = sys;
  ExactVector full_rhs = ExactVector::Zero(full.rows());
  full_rhs.topRows(rhs.rows()) = rhs;
  for (Index i = 0; i < static_cast<Index>(extra_rows.size()); ++i) {
    full.row(sys.rows() + i) = extra_rows[i].transpose();
    full_rhs(sys.rows() + i) = extra_rhs[i];
  }
  NullhomotopyResult res;
  auto u = solve(full, full_rhs);
  if (!u) {
    auto plain = is_nullhomotopic(f);
    res.obstruction_class = plain.obstruction_class;
    return res;
  }
  ExactVector h = ExactVector::Zero(nh);
  for (Index i = 0; i < nh; ++i)
    h(i) = GaussianRational(Rational((*u)(i).re()), Rational((*u)(nh + i).re()));
  res.nullhomotopic = true;
  res.witness = hs.reify(h, a, b);
  res.obstruction_class = ExactVector::Zero(0);
  return res;
}

HomotopyClasses homotopy_classes(const Bicomplex& a, const Bicomplex& b) {
  HomotopyClasses out;
  out.layout = MapFamilyLayout::build(a, b, {0, 0});
  MapFamilyLayout hs = MapFamilyLayout::build(a, b, {-1, -1});
  ExactMatrix z = kernel_basis(chain_map_constraints(a, b, out.layout));
  ExactMatrix n = image_basis(nullhomotopy_operator(a, b, hs, out.layout));
  CohomGroup g = subquotient(z, n);
  out.dim = g.dim;
  out.class_representatives = g.representatives;
  out.projection = g.projection;
  out.dim_via_hom_complex = h_bc(hom_complex(a, b)).dim(BiDegree{0, 0});
  if (out.dim != out.dim_via_hom_complex)
    throw std::logic_error("homotopy_classes: direct computation and hom-complex route disagree");
  return out;
}

std::vector<BicomplexMorphism> chain_map_basis(const Bicomplex& a, const Bicomplex& b) {
  MapFamilyLayout fs = MapFamilyLayout::build(a, b, {0, 0});
  ExactMatrix z = kernel_basis(chain_map_constraints(a, b, fs));
  std::vector<BicomplexMorphism> out;
  for (Index j = 0; j < z.cols(); ++j) {
    BicomplexMorphism f{a, b, fs.reify(ExactVector(z.col(j)), a, b)};
    out.push_back(std::move(f));
  }
  return out;
}

Cone cone(const BicomplexMorphism& f) {
  const Bicomplex& a = f.source;
  const Bicomplex& b = f.target;
  Bicomplex l = standard_l();
  Bicomplex la = tensor(l, a);
  TensorLayout layout = tensor_layout(l, a);
  Cone c;
  std::set<BiDegree> degs;
  for (BiDegree d : b.bidegrees()) degs.insert(d);
  for (BiDegree d : la.bidegrees()) degs.insert(d);
  for (BiDegree d : degs) c.complex.set_space(d, b.dim(d) + la.dim(d));

  auto twist_cols = [&](BiDegree d, BiDegree lvertex) -> std::pair<Index, Index> {
    // Offset and width of the block of LA^d with left factor at lvertex.
    auto it = layout.blocks.find(d);
    if (it == layout.blocks.end()) return {-1, 0};
    for (const auto& blk : it->second)
      if (blk.left == lvertex) return {blk.offset, blk.right_dim};
    return {-1, 0};
  };

  GaussianRational i_unit = GaussianRational::i();
  for (BiDegree d : degs) {
    for (BiDegree step : {BiDegree{1, 0}, BiDegree{0, 1}}) {
      BiDegree td = d + step;
      Index rows = b.dim(td) + la.dim(td);
      Index cols = b.dim(d) + la.dim(d);
      if (rows == 0 || cols == 0) continue;
      ExactMatrix m = exact_zero(rows, cols);
      bool is_del = step == BiDegree{1, 0};
      ExactMatrix mb = is_del ? b.del(d) : b.dbar(d);
      if (mb.size() > 0) m.topLeftCorner(mb.rows(), mb.cols()) = mb;
      ExactMatrix ml = is_del ? la.del(d) : la.dbar(d);
      if (ml.size() > 0 && la.dim(d) > 0 && la.dim(td) > 0)
        m.bottomRightCorner(ml.rows(), ml.cols()) = ml;
      // Twist: t⊗v is identified with i f(v); the dbar-row contributes under
      // del, the del-row under dbar (with opposite sign).
      BiDegree lvertex = is_del ? BiDegree{-1, 0} : BiDegree{0, -1};
      auto [off, width] = twist_cols(d, lvertex);
      if (off >= 0 && width > 0 && b.dim(td) > 0) {
        ExactMatrix fv = f.component(td);
        GaussianRational coeff = is_del ? i_unit : GaussianRational(-1) * i_unit;
        if (fv.size() > 0)
          m.block(0, b.dim(d) + off, fv.rows(), fv.cols()) = coeff * fv;
      }
      if (is_del)
        c.complex.set_del(d, std::move(m));
      else
        c.complex.set_dbar(d, std::move(m));
    }
  }
  if (validation_enabled()) c.complex.assert_valid("cone");

  c.inclusion = BicomplexMorphism{b, c.complex, {}};
  for (BiDegree d : b.bidegrees()) {
    ExactMatrix m = exact_zero(c.complex.dim(d), b.dim(d));
    m.topLeftCorner(b.dim(d), b.dim(d)) = exact_identity(b.dim(d));
    c.inclusion.set_component(d, std::move(m));
  }
  c.projection = BicomplexMorphism{c.complex, la, {}};
  for (BiDegree d : la.bidegrees()) {
    ExactMatrix m = exact_zero(la.dim(d), c.complex.dim(d));
    m.bottomRightCorner(la.dim(d), la.dim(d)) = exact_identity(la.dim(d));
    c.projection.set_component(d, std::move(m));
  }
  if (validation_enabled()) {
    c.inclusion.assert_valid("cone inclusion");
    c.projection.assert_valid("cone projection");
  }
  return c;
}

Bicomplex l_shift(const Bicomplex& a, int n, bool reduce) {
  if (n == 0) return a;
  if (reduce) return tensor(build_indecomposable(IndecompSpec::l_power_zigzag(n)), a);
  Bicomplex factor = n > 0 ? standard_l() : standard_reverse_l();
  Bicomplex out = a;
  for (int k = 0; k < (n > 0 ? n : -n); ++k) out = tensor(factor, out);
  return out;
}

QuisoEvidence is_quasi_iso(const BicomplexMorphism& f, const QuisoOptions& opts) {
  QuisoEvidence ev;
  ev.bc = induced_map(h_bc(f.source), h_bc(f.target), f);
  ev.a = induced_map(h_a(f.source), h_a(f.target), f);
  ev.verdict = ev.bc.all_iso && ev.a.all_iso;
  if (opts.check_row_col) {
    ev.row = induced_map(h_row(f.source), h_row(f.target), f);
    ev.col = induced_map(h_col(f.source), h_col(f.target), f);
  }
  if (opts.check_cone_squares) {
    Cone c = cone(f);
    DecompositionCertificate cert = decompose(c.complex);
    bool all_squares = true;
    for (const auto& [spec, count] : cert.multiplicities())
      if (spec.kind != IndecompSpec::Kind::Square) all_squares = false;
    ev.cone_all_squares = all_squares;
  }
  return ev;
}

}  // namespace bigraded
