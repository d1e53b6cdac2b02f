#ifndef BIGRADED_HOMOTOPY_HPP
#define BIGRADED_HOMOTOPY_HPP

#include <optional>

#include "bigraded/cohomology.hpp"
#include "bigraded/morphism.hpp"

namespace bigraded {

/// Bidegree-(a,b) families of linear maps source -> target, vectorized over
/// all bidegrees in one coordinate system. Used for chain maps ((0,0)) and
/// homotopies ((-1,-1)).
struct MapFamilyLayout {
  struct Block {
    BiDegree source_deg;
    Index offset;
    Index source_dim, target_dim;
  };
  BiDegree shift;
  std::vector<Block> blocks;
  Index dim = 0;

  static MapFamilyLayout build(const Bicomplex& a, const Bicomplex& b, BiDegree shift);
  std::map<BiDegree, ExactMatrix> reify(const ExactVector& v, const Bicomplex& a,
                                        const Bicomplex& b) const;
  ExactVector vectorize(const std::map<BiDegree, ExactMatrix>& comps) const;
};

/// The operator h -> [del,[dbar,h]] = del dbar h - del h dbar + dbar h del -
/// h dbar del, as a matrix from (-1,-1)-families to (0,0)-families.
ExactMatrix nullhomotopy_operator(const Bicomplex& a, const Bicomplex& b,
                                  const MapFamilyLayout& hs, const MapFamilyLayout& fs);

/// The chain-map constraints f del - del f = 0, f dbar - dbar f = 0 as a
/// matrix on (0,0)-families.
ExactMatrix chain_map_constraints(const Bicomplex& a, const Bicomplex& b,
                                  const MapFamilyLayout& fs);

struct NullhomotopyResult {
  bool nullhomotopic = false;
  /// Witness with f = [del,[dbar,h]], present iff nullhomotopic.
  std::optional<std::map<BiDegree, ExactMatrix>> witness;
  /// Certificate of unsolvability: the class of f in H_BC^{0,0}(Hom(A,B)),
  /// nonzero iff not nullhomotopic.
  ExactVector obstruction_class;
};

NullhomotopyResult is_nullhomotopic(const BicomplexMorphism& f);

/// If requested and both sides are real, searches for a purely imaginary
/// witness (sigma h sigma = -h).
NullhomotopyResult is_nullhomotopic_real(const BicomplexMorphism& f);

struct HomotopyClasses {
  Index dim = 0;
  MapFamilyLayout layout;                  // (0,0)-families source -> target
  ExactMatrix class_representatives;       // columns = vectorized chain maps
  ExactMatrix projection;                  // chain map -> class coordinates
  Index dim_via_hom_complex = 0;           // independent route, must agree
};

/// [A,B] computed two ways: as H_BC^{0,0}(Hom(A,B)) and as chain maps modulo
/// nullhomotopic maps by direct linear algebra. Disagreement is a hard error.
HomotopyClasses homotopy_classes(const Bicomplex& a, const Bicomplex& b);

/// Basis of the space of chain maps A -> B (not up to homotopy).
std::vector<BicomplexMorphism> chain_map_basis(const Bicomplex& a, const Bicomplex& b);

struct Cone {
  Bicomplex complex;             // B ⊕ (L ⊗ A), in that block order
  BicomplexMorphism inclusion;   // B -> cone
  BicomplexMorphism projection;  // cone -> L ⊗ A
};

/// Cone of f: coker(A -> B ⊕ square[-1,-1]⊗A), a -> (f(a), i·deldbar⊗a).
/// The underlying space is B ⊕ L(A) and the twist carries the factor i from
/// the defining map; d^2 = 0 is asserted on the result.
Cone cone(const BicomplexMorphism& f);

/// L^n as tensoring with L (n>0) or reverse L (n<0), iterated. With
/// reduce=true, tensors with the quasi-isomorphic length-2|n|+1 zigzag
/// instead of the |n|-fold product.
Bicomplex l_shift(const Bicomplex& a, int n, bool reduce = false);

struct QuisoOptions {
  bool check_cone_squares = false;  // cross-check via the decompose module
  bool check_row_col = false;       // bounded criterion
};

struct QuisoEvidence {
  bool verdict = false;
  InducedMap bc, a;
  std::optional<InducedMap> row, col;
  std::optional<bool> cone_all_squares;
};

/// Bigraded quasi-isomorphism test: H_BC(f) and H_A(f) isomorphisms, with
/// optional cross-checks against the other two characterizations.
QuisoEvidence is_quasi_iso(const BicomplexMorphism& f, const QuisoOptions& opts = {});

}  // namespace bigraded

#endif  // BIGRADED_HOMOTOPY_HPP
