#ifndef BIGRADED_COHOMOLOGY_HPP
#define BIGRADED_COHOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "bigraded/morphism.hpp"

namespace bigraded {

/// One cohomology group: exact dimension, a column of representatives (in
/// ambient coordinates of the relevant space), and a projection resolving any
/// cocycle into class coordinates. projection * representatives = identity.
struct CohomGroup {
  Index dim = 0;
  ExactMatrix representatives;
  ExactMatrix projection;
};

/// Table of cohomology groups, keyed by bidegree (most functors) or by total
/// degree (de Rham, Schweitzer).
struct CohomTable {
  std::string functor;
  bool by_total_degree = false;
  std::map<BiDegree, CohomGroup> bigraded;
  std::map<int, CohomGroup> graded;

  Index dim(BiDegree d) const;
  Index dim(int k) const;
  Index total_dim() const;
  /// For bigraded tables: sum of dims over p+q = k.
  Index dim_at_total(int k) const;
  std::map<BiDegree, Index> dims() const;
  std::map<int, Index> dims_by_total() const;
  const CohomGroup* group(BiDegree d) const;
  const CohomGroup* group(int k) const;
};

/// Exact sub-quotient span(z)/span(b); b must lie in span(z).
CohomGroup subquotient(const ExactMatrix& z, const ExactMatrix& b);

CohomTable h_bc(const Bicomplex& a);
CohomTable h_a(const Bicomplex& a);
CohomTable h_row(const Bicomplex& a);  // H_del
CohomTable h_col(const Bicomplex& a);  // H_dbar

/// Layout of the totalization T^k = ⊕_{p+q=k} A^{p,q}, blocks sorted by p.
struct TotalLayout {
  struct Block {
    BiDegree deg;
    Index offset;
    Index dim;
  };
  std::map<int, std::vector<Block>> blocks;
  std::map<int, Index> dims;
  std::map<int, ExactMatrix> d;  // total differential T^k -> T^{k+1}

  Index offset_of(int k, BiDegree d) const;
};

TotalLayout totalization(const Bicomplex& a);

/// De Rham cohomology of the totalized complex, keyed by total degree;
/// representatives live in totalization coordinates.
CohomTable h_total(const Bicomplex& a);

/// The Schweitzer complex L_{p,q}: truncated corners spliced by del*dbar.
struct SchweitzerComplex {
  int p = 0, q = 0;
  std::map<int, std::vector<TotalLayout::Block>> blocks;
  std::map<int, Index> dims;
  std::map<int, ExactMatrix> d;  // L^k -> L^{k+1}
};

SchweitzerComplex schweitzer_complex(const Bicomplex& a, int p, int q);
CohomTable h_schweitzer(const Bicomplex& a, int p, int q);

/// Reduced functors: kernel, cokernel and image of the natural map
/// H_BC -> H_A.
struct ReducedTables {
  CohomTable bc_reduced;  // ker, (im del ∩ ker dbar + im dbar ∩ ker del)/im del dbar
  CohomTable a_reduced;   // coker, ker del dbar/(im del + im dbar + ker del ∩ ker dbar)
  CohomTable dot;         // image
};

ReducedTables reduced_functors(const Bicomplex& a);

/// H_ABC = H_A ⊕ H~_BC and H_BCA = H_BC ⊕ H~_A as minimal bicomplexes, with
/// the differentials induced by del, dbar on representatives (H_A part maps
/// into the reduced BC part; zero on the BC part).
struct AbcComplex {
  Bicomplex complex;              // block order: [H_A | H~_BC] resp. [H_BC | H~_A]
  std::map<BiDegree, Index> first_dims;  // dimension of the first block
};

AbcComplex h_abc(const Bicomplex& a);
AbcComplex h_bca(const Bicomplex& a);

enum class FilterDirection { Column, Row };

/// Dimensions of the r-th Frolicher page for the column (first page = H_dbar)
/// or row (first page = H_del) filtration. Requires a bounded complex.
std::map<BiDegree, Index> frolicher_page(const Bicomplex& a, int r, FilterDirection dir);
/// A page index beyond which the spectral sequence of a is constant.
int frolicher_stable_page(const Bicomplex& a);

/// Induced map on a bigraded cohomology table: per-bidegree class matrices.
struct InducedMap {
  struct Entry {
    BiDegree deg;
    Index dim_source, dim_target, rank;
  };
  std::map<BiDegree, ExactMatrix> mats;
  std::vector<Entry> evidence;
  bool all_iso = true;
};

CohomTable apply_functor(const Bicomplex& a, const std::string& functor);
InducedMap induced_map(const CohomTable& src, const CohomTable& tgt,
                       const BicomplexMorphism& f);

/// Conjugation action on classes of a bigraded functor table, for complexes
/// with a real structure: class coordinates at (p,q) -> class coordinates at
/// (q,p) of sigma of the representative.
std::map<BiDegree, ExactMatrix> class_conjugation(const CohomTable& table, const Bicomplex& a);

}  // namespace bigraded

#endif  // BIGRADED_COHOMOLOGY_HPP
