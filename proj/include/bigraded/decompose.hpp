#ifndef BIGRADED_DECOMPOSE_HPP
#define BIGRADED_DECOMPOSE_HPP

#include <map>

#include "bigraded/morphism.hpp"

namespace bigraded {

/// Constructive witness of the structure theorem: a list of indecomposable
/// parts together with a per-bidegree invertible change of basis conjugating
/// the input differentials into block-diagonal form with the canonical unit
/// blocks of build_indecomposable.
struct DecompositionCertificate {
  struct Part {
    IndecompSpec spec;
    /// Column index (into the new basis) of this part's line at each
    /// bidegree of its support.
    std::map<BiDegree, Index> column;
  };

  std::vector<Part> parts;
  std::map<BiDegree, ExactMatrix> basis_change;  // new-basis columns in old coordinates

  std::map<IndecompSpec, Index> multiplicities() const;
};

/// Decomposes a finite bicomplex into squares and zigzags. Phase 1 splits off
/// one square per nonzero del-dbar pivot (lexicographically first bidegree,
/// first nonzero entry in column order); phase 2 decomposes the remaining
/// minimal complex one total-degree pair at a time, by rank normalization
/// along the alternating path quiver whose sources are complements of
/// ker del ∩ ker dbar and whose sinks are im del + im dbar. Deterministic.
DecompositionCertificate decompose(const Bicomplex& a);

/// Re-multiplies the certificate against the input: conjugated differentials
/// must match the canonical part blocks exactly. Empty result = verified.
std::vector<std::string> verify_certificate(const DecompositionCertificate& cert,
                                            const Bicomplex& a);

struct ZigSquareSplit {
  Bicomplex zig;  // direct sum of all zigzag parts, canonical bases
  Bicomplex sq;   // direct sum of all square parts
  /// Isomorphism direct_sum(zig, sq) -> a assembled from the certificate.
  BicomplexMorphism iso;
};

ZigSquareSplit zig_square_split(const Bicomplex& a);

/// Presentation layer over decompose: the multiset of indecomposables.
std::map<IndecompSpec, Index> multiplicities_report(const Bicomplex& a);

}  // namespace bigraded

#endif  // BIGRADED_DECOMPOSE_HPP
