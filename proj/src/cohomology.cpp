#include "bigraded/cohomology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bigraded {

Index CohomTable::dim(BiDegree d) const {
  auto it = bigraded.find(d);
  return it == bigraded.end() ? 0 : it->second.dim;
}

Index CohomTable::dim(int k) const {
  auto it = graded.find(k);
  return it == graded.end() ? 0 : it->second.dim;
}

Index CohomTable::total_dim() const {
  Index n = 0;
  for (const auto& [d, g] : bigraded) n += g.dim;
  for (const auto& [k, g] : graded) n += g.dim;
  return n;
}

Index CohomTable::dim_at_total(int k) const {
  if (by_total_degree) return dim(k);
  Index n = 0;
  for (const auto& [d, g] : bigraded)
    if (d.total() == k) n += g.dim;
  return n;
}

std::map<BiDegree, Index> CohomTable::dims() const {
  std::map<BiDegree, Index> out;
  for (const auto& [d, g] : bigraded)
    if (g.dim > 0) out[d] = g.dim;
  return out;
}

std::map<int, Index> CohomTable::dims_by_total() const {
  std::map<int, Index> out;
  if (by_total_degree) {
    for (const auto& [k, g] : graded)
      if (g.dim > 0) out[k] = g.dim;
  } else {
    for (const auto& [d, g] : bigraded)
      if (g.dim > 0) out[d.total()] += g.dim;
  }
  return out;
}

const CohomGroup* CohomTable::group(BiDegree d) const {
  auto it = bigraded.find(d);
  return it == bigraded.end() ? nullptr : &it->second;
}

const CohomGroup* CohomTable::group(int k) const {
  auto it = graded.find(k);
  return it == graded.end() ? nullptr : &it->second;
}

CohomGroup subquotient(const ExactMatrix& z, const ExactMatrix& b) {
  CohomGroup g;
  QuotientBasis q = quotient_basis(z, b);
  g.representatives = q.representatives;
  g.projection = q.projection;
  g.dim = g.representatives.cols();
  return g;
}

namespace {

// Builds a bigraded table from per-bidegree cocycle and boundary spans.
template <typename ZFn, typename BFn>
CohomTable bigraded_table(const Bicomplex& a, std::string name, ZFn zf, BFn bf) {
  CohomTable t;
  t.functor = std::move(name);
  for (BiDegree d : a.bidegrees()) {
    ExactMatrix z = zf(d);
    ExactMatrix b = image_basis(bf(d));
    t.bigraded[d] = subquotient(z, b);
  }
  return t;
}

ExactMatrix ker_both(const Bicomplex& a, BiDegree d) {
  return intersect_subspaces(kernel_basis(a.del(d)), kernel_basis(a.dbar(d)));
}

ExactMatrix im_del_plus_dbar(const Bicomplex& a, BiDegree d) {
  return hcat(a.del({d.p - 1, d.q}), a.dbar({d.p, d.q - 1}));
}

}  // namespace

CohomTable h_bc(const Bicomplex& a) {
  return bigraded_table(
      a, "h_bc", [&](BiDegree d) { return ker_both(a, d); },
      [&](BiDegree d) { return a.deldbar({d.p - 1, d.q - 1}); });
}

CohomTable h_a(const Bicomplex& a) {
  return bigraded_table(
      a, "h_a", [&](BiDegree d) { return kernel_basis(a.deldbar(d)); },
      [&](BiDegree d) { return im_del_plus_dbar(a, d); });
}

CohomTable h_row(const Bicomplex& a) {
  return bigraded_table(
      a, "h_del", [&](BiDegree d) { return kernel_basis(a.del(d)); },
      [&](BiDegree d) { return a.del({d.p - 1, d.q}); });
}

CohomTable h_col(const Bicomplex& a) {
  return bigraded_table(
      a, "h_dbar", [&](BiDegree d) { return kernel_basis(a.dbar(d)); },
      [&](BiDegree d) { return a.dbar({d.p, d.q - 1}); });
}

Index TotalLayout::offset_of(int k, BiDegree d) const {
  auto it = blocks.find(k);
  if (it == blocks.end()) throw std::logic_error("totalization: missing degree");
  for (const auto& b : it->second)
    if (b.deg == d) return b.offset;
  throw std::logic_error("totalization: missing block " + to_string(d));
}

TotalLayout totalization(const Bicomplex& a) {
  TotalLayout t;
  for (BiDegree d : a.bidegrees()) t.blocks[d.total()].push_back({d, 0, a.dim(d)});
  for (auto& [k, vec] : t.blocks) {
    std::sort(vec.begin(), vec.end(), [](const auto& x, const auto& y) { return x.deg < y.deg; });
    Index off = 0;
    for (auto& b : vec) {
      b.offset = off;
      off += b.dim;
    }
    t.dims[k] = off;
  }
  for (const auto& [k, vec] : t.blocks) {
    auto nit = t.blocks.find(k + 1);
    if (nit == t.blocks.end()) continue;
    ExactMatrix m = exact_zero(t.dims.at(k + 1), t.dims.at(k));
    for (const auto& b : vec) {
      for (BiDegree step : {BiDegree{1, 0}, BiDegree{0, 1}}) {
        BiDegree td = b.deg + step;
        if (a.dim(td) == 0) continue;
        ExactMatrix comp = step == BiDegree{1, 0} ? a.del(b.deg) : a.dbar(b.deg);
        Index toff = t.offset_of(k + 1, td);
        m.block(toff, b.offset, comp.rows(), comp.cols()) += comp;
      }
    }
    t.d[k] = std::move(m);
  }
  return t;
}

namespace {

CohomTable graded_cohomology(const std::map<int, Index>& dims,
                             const std::map<int, ExactMatrix>& d, std::string name) {
  CohomTable t;
  t.functor = std::move(name);
  t.by_total_degree = true;
  for (const auto& [k, n] : dims) {
    ExactMatrix dk = d.count(k) ? d.at(k) : exact_zero(0, n);
    ExactMatrix z = dk.rows() == 0 ? exact_identity(n) : kernel_basis(dk);
    ExactMatrix b = exact_zero(n, 0);
    auto pit = d.find(k - 1);
    if (pit != d.end() && pit->second.rows() == n) b = image_basis(pit->second);
    t.graded[k] = subquotient(z, b);
  }
  return t;
}

}  // namespace

CohomTable h_total(const Bicomplex& a) {
  TotalLayout t = totalization(a);
  return graded_cohomology(t.dims, t.d, "h_dr");
}

SchweitzerComplex schweitzer_complex(const Bicomplex& a, int p, int q) {
  SchweitzerComplex s;
  s.p = p;
  s.q = q;
  int corner = p + q - 1;
  for (BiDegree d : a.bidegrees()) {
    if (d.p < p && d.q < q) {
      int k = d.total();  // k <= p+q-2 automatically
      s.blocks[k].push_back({d, 0, a.dim(d)});
    }
    if (d.p >= p && d.q >= q) {
      int k = d.total() - 1;  // lives in L^k for k >= p+q-1
      s.blocks[k].push_back({d, 0, a.dim(d)});
    }
  }
  for (auto& [k, vec] : s.blocks) {
    std::sort(vec.begin(), vec.end(), [](const auto& x, const auto& y) { return x.deg < y.deg; });
    Index off = 0;
    for (auto& b : vec) {
      b.offset = off;
      off += b.dim;
    }
    s.dims[k] = off;
  }
  auto offset_of = [&](int k, BiDegree d) -> Index {
    for (const auto& b : s.blocks.at(k))
      if (b.deg == d) return b.offset;
    return -1;
  };
  for (const auto& [k, vec] : s.blocks) {
    auto nit = s.blocks.find(k + 1);
    if (nit == s.blocks.end()) continue;
    ExactMatrix m = exact_zero(s.dims.at(k + 1), s.dims.at(k));
    for (const auto& b : vec) {
      if (k == corner - 1) {
        // Splice: del dbar from the inner corner (p-1,q-1) to (p,q).
        if (b.deg == BiDegree{p - 1, q - 1}) {
          ExactMatrix comp = a.deldbar(b.deg);
          Index toff = offset_of(k + 1, {p, q});
          if (toff >= 0 && comp.rows() > 0)
            m.block(toff, b.offset, comp.rows(), comp.cols()) += comp;
        }
        continue;
      }
      for (BiDegree step : {BiDegree{1, 0}, BiDegree{0, 1}}) {
        BiDegree td = b.deg + step;
        if (a.dim(td) == 0) continue;
        // pr ∘ d on the lower corner; plain d on the upper one.
        if (k < corner - 1 && !(td.p < p && td.q < q)) continue;
        Index toff = offset_of(k + 1, td);
        if (toff < 0) continue;
        ExactMatrix comp = step == BiDegree{1, 0} ? a.del(b.deg) : a.dbar(b.deg);
        m.block(toff, b.offset, comp.rows(), comp.cols()) += comp;
      }
    }
    s.d[k] = std::move(m);
  }
  return s;
}

CohomTable h_schweitzer(const Bicomplex& a, int p, int q) {
  SchweitzerComplex s = schweitzer_complex(a, p, q);
  return graded_cohomology(s.dims, s.d, "h_s_" + std::to_string(p) + "_" + std::to_string(q));
}

ReducedTables reduced_functors(const Bicomplex& a) {
  ReducedTables r;
  r.bc_reduced = bigraded_table(
      a, "h_bc_reduced",
      [&](BiDegree d) {
        ExactMatrix im_del = image_basis(a.del({d.p - 1, d.q}));
        ExactMatrix im_dbar = image_basis(a.dbar({d.p, d.q - 1}));
        ExactMatrix ker_del = kernel_basis(a.del(d));
        ExactMatrix ker_dbar = kernel_basis(a.dbar(d));
        return sum_subspaces(intersect_subspaces(im_del, ker_dbar),
                             intersect_subspaces(im_dbar, ker_del));
      },
      [&](BiDegree d) { return a.deldbar({d.p - 1, d.q - 1}); });
  r.a_reduced = bigraded_table(
      a, "h_a_reduced", [&](BiDegree d) { return kernel_basis(a.deldbar(d)); },
      [&](BiDegree d) { return hcat(im_del_plus_dbar(a, d), ker_both(a, d)); });
  r.dot = bigraded_table(
      a, "h_dot", [&](BiDegree d) { return ker_both(a, d); },
      [&](BiDegree d) {
        ExactMatrix im_del = image_basis(a.del({d.p - 1, d.q}));
        ExactMatrix im_dbar = image_basis(a.dbar({d.p, d.q - 1}));
        ExactMatrix ker_del = kernel_basis(a.del(d));
        ExactMatrix ker_dbar = kernel_basis(a.dbar(d));
        return hcat(intersect_subspaces(im_del, ker_dbar),
                    intersect_subspaces(im_dbar, ker_del));
      });
  return r;
}

namespace {

// Shared assembly for H_ABC and H_BCA: spaces [first | second] where the
// differentials map the `from` table's classes into the `into` table's
// classes; `from_first` says whether the mapped part is the first block.
AbcComplex assemble_two_block(const Bicomplex& a, const CohomTable& first,
                              const CohomTable& second, const CohomTable& from,
                              const CohomTable& into, bool from_is_first,
                              const char* context) {
  AbcComplex out;
  std::set<BiDegree> degs;
  for (const auto& [d, g] : first.bigraded)
    if (g.dim) degs.insert(d);
  for (const auto& [d, g] : second.bigraded)
    if (g.dim) degs.insert(d);
  for (BiDegree d : degs) {
    out.complex.set_space(d, first.dim(d) + second.dim(d));
    out.first_dims[d] = first.dim(d);
  }
  auto induced_block = [&](BiDegree d, BiDegree step) {
    BiDegree td = d + step;
    Index rows = first.dim(td) + second.dim(td);
    Index cols = first.dim(d) + second.dim(d);
    ExactMatrix m = exact_zero(rows, cols);
    const CohomGroup* src = from.group(d);
    const CohomGroup* tgt = into.group(td);
    if (!src || !tgt || src->dim == 0 || tgt->dim == 0) return m;
    ExactMatrix diff = step == BiDegree{1, 0} ? a.del(d) : a.dbar(d);
    ExactMatrix cls = tgt->projection * (diff * src->representatives);
    Index row0 = from_is_first ? first.dim(td) : 0;
    Index col0 = from_is_first ? 0 : first.dim(d);
    m.block(row0, col0, cls.rows(), cls.cols()) = cls;
    return m;
  };
  for (BiDegree d : degs) {
    out.complex.set_del(d, induced_block(d, {1, 0}));
    out.complex.set_dbar(d, induced_block(d, {0, 1}));
  }
  if (validation_enabled()) out.complex.assert_valid(context);
  return out;
}

}  // namespace

AbcComplex h_abc(const Bicomplex& a) {
  CohomTable ha = h_a(a);
  ReducedTables red = reduced_functors(a);
  // del, dbar: H_A -> H~_BC (classes of del of a ker-deldbar representative).
  return assemble_two_block(a, ha, red.bc_reduced, ha, red.bc_reduced, true, "h_abc");
}

AbcComplex h_bca(const Bicomplex& a) {
  CohomTable hbc = h_bc(a);
  ReducedTables red = reduced_functors(a);
  // del, dbar: H~_A -> H_BC.
  return assemble_two_block(a, hbc, red.a_reduced, red.a_reduced, hbc, false, "h_bca");
}

namespace {

// Z_r^{p,q} inside T^{p+q}: elements of F^p whose differential lies in
// F^{p+r}. Returns a basis in totalization coordinates.
ExactMatrix zr_space(const TotalLayout& t, int p, int n, int r) {
  auto bit = t.blocks.find(n);
  if (bit == t.blocks.end()) return exact_zero(0, 0);
  Index dim_n = t.dims.at(n);
  // Embedding of F^p ∩ T^n.
  std::vector<Index> cols;
  for (const auto& b : bit->second)
    if (b.deg.p >= p)
      for (Index j = 0; j < b.dim; ++j) cols.push_back(b.offset + j);
  ExactMatrix embed = exact_zero(dim_n, static_cast<Index>(cols.size()));
  for (Index j = 0; j < embed.cols(); ++j) embed(cols[j], j) = GaussianRational(1);
  if (embed.cols() == 0) return exact_zero(dim_n, 0);
  auto dit = t.d.find(n);
  if (dit == t.d.end()) return embed;
  // Rows of the differential lying below the target filtration level p+r.
  const auto& tblocks = t.blocks.at(n + 1);
  std::vector<Index> bad_rows;
  for (const auto& b : tblocks)
    if (b.deg.p < p + r)
      for (Index j = 0; j < b.dim; ++j) bad_rows.push_back(b.offset + j);
  if (bad_rows.empty()) return embed;
  ExactMatrix cond(static_cast<Index>(bad_rows.size()), embed.cols());
  ExactMatrix mapped = dit->second * embed;
  for (Index i = 0; i < cond.rows(); ++i) cond.row(i) = mapped.row(bad_rows[i]);
  ExactMatrix ker = kernel_basis(cond);
  return ExactMatrix(embed * ker);
}

}  // namespace

std::map<BiDegree, Index> frolicher_page(const Bicomplex& a, int r, FilterDirection dir) {
  if (r < 1) throw std::invalid_argument("frolicher_page: r >= 1 required");
  if (dir == FilterDirection::Row) {
    // Row pages are the column pages of the flipped complex.
    Bicomplex flip;
    for (BiDegree d : a.bidegrees()) flip.set_space(d.swapped(), a.dim(d));
    for (BiDegree d : a.bidegrees()) {
      flip.set_del(d.swapped(), a.dbar(d));
      flip.set_dbar(d.swapped(), a.del(d));
    }
    auto pages = frolicher_page(flip, r, FilterDirection::Column);
    std::map<BiDegree, Index> out;
    for (const auto& [d, n] : pages) out[d.swapped()] = n;
    return out;
  }
  TotalLayout t = totalization(a);
  std::map<BiDegree, Index> out;
  for (BiDegree d : a.bidegrees()) {
    int n = d.total();
    ExactMatrix z = zr_space(t, d.p, n, r);
    if (z.cols() == 0) continue;
    ExactMatrix z_above = zr_space(t, d.p + 1, n, r - 1);
    ExactMatrix z_prev = zr_space(t, d.p - r + 1, n - 1, r - 1);
    ExactMatrix boundary = exact_zero(t.dims.at(n), 0);
    auto dit = t.d.find(n - 1);
    if (dit != t.d.end() && z_prev.cols() > 0) boundary = ExactMatrix(dit->second * z_prev);
    Index denom = rank(hcat(z_above, boundary));
    Index dim = rank(z) - denom;
    if (dim > 0) out[d] = dim;
  }
  return out;
}

int frolicher_stable_page(const Bicomplex& a) {
  if (a.empty()) return 1;
  int pmin = a.bidegrees().front().p, pmax = pmin;
  for (BiDegree d : a.bidegrees()) {
    pmin = std::min({pmin, d.p, d.q});
    pmax = std::max({pmax, d.p, d.q});
  }
  return pmax - pmin + 2;
}

CohomTable apply_functor(const Bicomplex& a, const std::string& functor) {
  if (functor == "bc") return h_bc(a);
  if (functor == "a") return h_a(a);
  if (functor == "del" || functor == "row") return h_row(a);
  if (functor == "dbar" || functor == "col") return h_col(a);
  if (functor == "dr" || functor == "total") return h_total(a);
  if (functor == "bc~" || functor == "bc_reduced") return reduced_functors(a).bc_reduced;
  if (functor == "a~" || functor == "a_reduced") return reduced_functors(a).a_reduced;
  if (functor == "dot") return reduced_functors(a).dot;
  throw std::invalid_argument("unknown functor: " + functor);
}

InducedMap induced_map(const CohomTable& src, const CohomTable& tgt,
                       const BicomplexMorphism& f) {
  InducedMap out;
  std::set<BiDegree> degs;
  for (const auto& [d, g] : src.bigraded)
    if (g.dim) degs.insert(d);
  for (const auto& [d, g] : tgt.bigraded)
    if (g.dim) degs.insert(d);
  for (BiDegree d : degs) {
    Index ns = src.dim(d), nt = tgt.dim(d);
    ExactMatrix m = exact_zero(nt, ns);
    if (ns > 0 && nt > 0)
      m = tgt.group(d)->projection * (f.component(d) * src.group(d)->representatives);
    Index rk = rank(m);
    out.evidence.push_back({d, ns, nt, rk});
    if (!(ns == nt && rk == ns)) out.all_iso = false;
    out.mats[d] = std::move(m);
  }
  return out;
}

std::map<BiDegree, ExactMatrix> class_conjugation(const CohomTable& table, const Bicomplex& a) {
  if (!a.has_real_structure())
    throw std::invalid_argument("class_conjugation: no real structure");
  std::map<BiDegree, ExactMatrix> out;
  for (const auto& [d, g] : table.bigraded) {
    if (g.dim == 0) continue;
    const CohomGroup* tgt = table.group(d.swapped());
    if (!tgt || tgt->dim == 0) {
      out[d] = exact_zero(0, g.dim);
      continue;
    }
    out[d] = tgt->projection * (a.real_structure(d) * conj(g.representatives));
  }
  return out;
}

}  // namespace bigraded
