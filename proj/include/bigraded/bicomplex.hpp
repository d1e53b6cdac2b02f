#ifndef BIGRADED_BICOMPLEX_HPP
#define BIGRADED_BICOMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigraded/bidegree.hpp"
#include "bigraded/linalg.hpp"

namespace bigraded {

/// Finite-dimensional bicomplex: bigraded vector space with differentials
/// del of bidegree (1,0) and dbar of bidegree (0,1) satisfying
///   del^2 = 0, dbar^2 = 0, del*dbar + dbar*del = 0,
/// so d = del + dbar squares to zero. Zero spaces and zero matrices are not
/// stored; an absent bidegree means dimension 0.
///
/// An optional real structure is a table S of matrices A^{p,q} -> A^{q,p}
/// acting antilinearly as v -> S * conj(v), with
///   S_{q,p} * conj(S_{p,q}) = I   and   S_{p+1,q} * conj(del_{p,q}) = dbar_{q,p} * S_{p,q}.
///
/// Values are immutable once built (mutation happens only through the
/// builder-style setters before first use); all operations in this header are
/// pure functions, so sharing across threads is safe.
class Bicomplex {
 public:
  Index dim(BiDegree d) const {
    auto it = dims_.find(d);
    return it == dims_.end() ? 0 : it->second;
  }

  /// Component matrix of del at d, as a dim(d+(1,0)) x dim(d) matrix
  /// (zero-filled when not stored).
  ExactMatrix del(BiDegree d) const { return component(del_, d, {1, 0}); }
  ExactMatrix dbar(BiDegree d) const { return component(dbar_, d, {0, 1}); }

  /// The composite del * dbar : A^{p,q} -> A^{p+1,q+1}.
  ExactMatrix deldbar(BiDegree d) const { return del({d.p, d.q + 1}) * dbar(d); }

  bool has_real_structure() const { return real_.has_value(); }
  ExactMatrix real_structure(BiDegree d) const;

  void set_space(BiDegree d, Index dim);
  void set_del(BiDegree d, ExactMatrix m);
  void set_dbar(BiDegree d, ExactMatrix m);
  void set_real_structure(BiDegree d, ExactMatrix m);
  void clear_real_structure() { real_.reset(); }

  /// Sorted list of bidegrees with nonzero dimension.
  std::vector<BiDegree> bidegrees() const;
  Index total_dimension() const;
  bool empty() const { return dims_.empty(); }
  int min_total_degree() const;
  int max_total_degree() const;

  /// All invariant violations, with the offending bidegree in the message;
  /// empty means the value is a valid bicomplex.
  std::vector<std::string> validate() const;
  /// Throws std::logic_error listing the violations, if any.
  void assert_valid(const std::string& context = "") const;

  friend bool operator==(const Bicomplex& a, const Bicomplex& b);

 private:
  ExactMatrix component(const std::map<BiDegree, ExactMatrix>& table, BiDegree d,
                        BiDegree shift) const;

  std::map<BiDegree, Index> dims_;
  std::map<BiDegree, ExactMatrix> del_, dbar_;
  std::optional<std::map<BiDegree, ExactMatrix>> real_;
};

/// When set (default), freshly constructed bicomplexes are validated after
/// every operation in this library; violations throw. The acceptance suite
/// runs with this on.
void set_validation_enabled(bool enabled);
bool validation_enabled();
long validation_count();

/// Canonical descriptor of an indecomposable bicomplex: a square anchored at
/// its bottom-left corner, or a zigzag given by its vertices and directed
/// unit edges. Zigzag vertices are kept sorted; equality is structural after
/// canonicalization.
struct IndecompSpec {
  enum class Kind { Square, Zigzag };

  Kind kind = Kind::Zigzag;
  BiDegree anchor{};                                  // squares only
  std::vector<BiDegree> vertices;                     // zigzags only, sorted
  std::vector<std::pair<BiDegree, BiDegree>> edges;   // zigzags only, (from,to)

  static IndecompSpec square(BiDegree anchor);
  static IndecompSpec dot(BiDegree at);
  /// Length-2 zigzag from `at` in direction (1,0) (horizontal) or (0,1).
  static IndecompSpec line(BiDegree at, bool horizontal);
  /// Length-3 zigzag with both arrows leaving the corner (the shape of L).
  static IndecompSpec l_corner(BiDegree corner);
  /// Length-3 zigzag with both arrows entering the corner (reverse L).
  static IndecompSpec reverse_l_corner(BiDegree corner);
  static IndecompSpec zigzag(std::vector<BiDegree> vertices,
                             std::vector<std::pair<BiDegree, BiDegree>> edges);

  /// The canonical zigzag quasi-isomorphic to L^n(dot): length 2|n|+1.
  static IndecompSpec l_power_zigzag(int n);

  void canonicalize();
  std::vector<std::string> validate() const;
  Index length() const { return kind == Kind::Square ? 4 : static_cast<Index>(vertices.size()); }
  std::string describe() const;

  friend bool operator==(const IndecompSpec& a, const IndecompSpec& b) = default;
  friend auto operator<=>(const IndecompSpec& a, const IndecompSpec& b) = default;
};

/// Builds the canonical model of an indecomposable. Zigzag differentials all
/// have entry 1. A square necessarily carries one -1: the product of its
/// four edge entries is forced to -1 by del*dbar = -dbar*del, and the
/// convention here puts it on the dbar edge out of the (p+1,q) corner,
/// matching the module picture over the exterior algebra on del and dbar.
Bicomplex build_indecomposable(const IndecompSpec& spec);

/// The standard length-3 zigzags in their paper positions: L has corner
/// (-1,-1), reverse L has corner (1,1).
Bicomplex standard_l();
Bicomplex standard_reverse_l();
Bicomplex dot_complex(BiDegree at = {0, 0});
Bicomplex square_complex(BiDegree anchor = {0, 0});

/// (A[r,s])^{p,q} = A^{p-r,q-s}; both differentials scaled by (-1)^{r+s}.
/// The real structure is carried along only when r == s.
Bicomplex shift(const Bicomplex& a, int r, int s);

/// Dual complex: (DA)^{p,q} = (A^{-p,-q})^*, with the signed-transpose
/// differentials coming from the hom-complex differential. DA equals
/// hom_complex(a, dot) under the canonical identification. The double dual
/// has negated differentials; the canonical isomorphism A -> DDA is
/// (-1)^{p+q} on A^{p,q} (see double_dual_iso in morphism.hpp).
Bicomplex dual(const Bicomplex& a);

/// Conjugate bicomplex: space (p,q) is A^{q,p} with conjugated entries and
/// the roles of del and dbar exchanged.
Bicomplex conjugate(const Bicomplex& a);

/// Violations of the real-structure identities (empty = pass).
std::vector<std::string> check_real_structure(const Bicomplex& a);

Bicomplex direct_sum(const Bicomplex& a, const Bicomplex& b);

/// Layout of (A ⊗ B)^{p,q}: blocks indexed by the A-side bidegree (r,s),
/// sorted lexicographically; within a block the index is i*dimB + j for
/// basis vectors a_i ⊗ b_j. This ordering is part of the file-format
/// contract: certificates rebuilt from it are byte-reproducible.
struct TensorLayout {
  struct Block {
    BiDegree left;   // (r,s), degree in A
    BiDegree right;  // (u,v) = (p,q)-(r,s)
    Index offset;
    Index left_dim, right_dim;
  };
  std::map<BiDegree, std::vector<Block>> blocks;
  std::map<BiDegree, Index> dims;

  Index offset_of(BiDegree product_deg, BiDegree left_deg) const;
};

TensorLayout tensor_layout(const Bicomplex& a, const Bicomplex& b);

/// Tensor product with d(a⊗b) = da⊗b + (-1)^{|a|} a⊗db, Koszul sign on the
/// total degree.
Bicomplex tensor(const Bicomplex& a, const Bicomplex& b);

/// Internal hom: Hom(A,B)^{p,q} = ⊕_{(r,s)} Hom(A^{r,s}, B^{r+p,s+q}) with
/// differential d(phi) = d_B∘phi - (-1)^{|phi|} phi∘d_A. Blocks sorted by
/// (r,s); within a block, column-major vectorization of the matrix of phi.
struct HomLayout {
  struct Block {
    BiDegree source_deg;  // (r,s) in A
    BiDegree target_deg;  // (r+p,s+q) in B
    Index offset;
    Index source_dim, target_dim;  // block dimension = source_dim*target_dim
  };
  std::map<BiDegree, std::vector<Block>> blocks;
  std::map<BiDegree, Index> dims;

  Index offset_of(BiDegree hom_deg, BiDegree source_deg) const;
};

HomLayout hom_layout(const Bicomplex& a, const Bicomplex& b);
Bicomplex hom_complex(const Bicomplex& a, const Bicomplex& b);

/// Truncation tau_k: the subcomplex which is A in degrees < k, ker(del dbar)
/// in degree k, ker del ∩ ker dbar in degree k+1 and zero above. Returned
/// with the per-bidegree inclusion matrices into A.
struct Truncation {
  Bicomplex complex;
  std::map<BiDegree, ExactMatrix> inclusion;
};

Truncation truncate(const Bicomplex& a, int k);

}  // namespace bigraded

#endif  // BIGRADED_BICOMPLEX_HPP
