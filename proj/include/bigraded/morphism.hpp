#ifndef BIGRADED_MORPHISM_HPP
#define BIGRADED_MORPHISM_HPP

#include <map>
#include <string>
#include <vector>

#include "bigraded/bicomplex.hpp"

namespace bigraded {

/// Bidegree-(0,0) family of matrices commuting with both differentials.
/// Components absent from the table are zero.
struct BicomplexMorphism {
  Bicomplex source;
  Bicomplex target;
  std::map<BiDegree, ExactMatrix> components;

  ExactMatrix component(BiDegree d) const;
  void set_component(BiDegree d, ExactMatrix m);

  /// Chain-map violations (f del = del f and f dbar = dbar f at every
  /// bidegree, plus shape checks); empty means valid.
  std::vector<std::string> validate() const;
  void assert_valid(const std::string& context = "") const;
  bool is_valid() const { return validate().empty(); }

  /// For morphisms between real-structured complexes: violations of
  /// f sigma = sigma f.
  std::vector<std::string> validate_real() const;

  bool is_zero() const;
};

BicomplexMorphism identity_morphism(const Bicomplex& a);
BicomplexMorphism zero_morphism(const Bicomplex& a, const Bicomplex& b);
BicomplexMorphism compose(const BicomplexMorphism& g, const BicomplexMorphism& f);
BicomplexMorphism add(const BicomplexMorphism& f, const BicomplexMorphism& g);
BicomplexMorphism scale(const GaussianRational& c, const BicomplexMorphism& f);
BicomplexMorphism direct_sum(const BicomplexMorphism& f, const BicomplexMorphism& g);
BicomplexMorphism tensor(const BicomplexMorphism& f, const BicomplexMorphism& g);

/// The canonical isomorphism A -> DDA, which is (-1)^{p+q} on A^{p,q}. The
/// differentials of DDA are the negatives of those of A, and this sign choice
/// makes the round trip the identity on objects up to that isomorphism.
BicomplexMorphism double_dual_iso(const Bicomplex& a);

/// Evaluation against the left dual: dual(b) ⊗ (b ⊗ a) -> a, phi⊗x⊗v ->
/// phi(x)·v. A bigraded chain map; it is a bigraded quasi-isomorphism when b
/// is L or reverse L (the L ∘ L^{-1} ≅ Id identification).
BicomplexMorphism eval_left(const Bicomplex& b, const Bicomplex& a);

/// Whether f is an isomorphism of bicomplexes (all components square and
/// invertible).
bool is_isomorphism(const BicomplexMorphism& f);

}  // namespace bigraded

#endif  // BIGRADED_MORPHISM_HPP
