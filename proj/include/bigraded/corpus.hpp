#ifndef BIGRADED_CORPUS_HPP
#define BIGRADED_CORPUS_HPP

#include <random>

#include "bigraded/decompose.hpp"
#include "bigraded/morphism.hpp"

namespace bigraded {

using Rng = std::mt19937_64;

struct CorpusOptions {
  int max_parts = 6;
  int coord_range = 3;       // anchors drawn from [-range, range]^2
  int max_zigzag_length = 5;
  bool allow_squares = true;
  int entry_range_re = 2;    // conjugation entries from [-2,2] + [-1,1]i
  int entry_range_im = 1;
};

GaussianRational random_entry(Rng& rng, int re_range, int im_range);

IndecompSpec random_indecomposable(Rng& rng, const CorpusOptions& opts = {});

struct RandomSum {
  std::vector<IndecompSpec> parts;
  Bicomplex complex;  // canonical direct sum in part order
};

RandomSum random_sum(Rng& rng, const CorpusOptions& opts = {});

/// Conjugates a complex by random invertible bigraded maps with entries in
/// [-re,re] + [-im,im]i; returns the new complex and the change of basis
/// (new coordinates -> old).
struct Conjugated {
  Bicomplex complex;
  std::map<BiDegree, ExactMatrix> basis;
};

Conjugated random_conjugate(Rng& rng, const Bicomplex& a, const CorpusOptions& opts = {});

/// A random bounded bicomplex: canonical sum of indecomposables conjugated by
/// a random bigraded isomorphism.
Bicomplex random_bicomplex(Rng& rng, const CorpusOptions& opts = {});

/// A random chain map A -> B: small random combination of a basis of the
/// space of chain maps.
BicomplexMorphism random_chain_map(Rng& rng, const Bicomplex& a, const Bicomplex& b);

}  // namespace bigraded

#endif  // BIGRADED_CORPUS_HPP
