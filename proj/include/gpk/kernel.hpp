#pragma once

#include <cstdint>
#include <vector>

#include "gpk/graph.hpp"
#include "gpk/word.hpp"

namespace gpk {

/// One element per vertex group: a point of the direct product of the vertex groups.
using DirectProductElem = std::vector<Elem>;

DirectProductElem identity_tuple(const Context& ctx);
/// Coordinate i is the ordered product of the vertex-i syllables of w.
DirectProductElem project(const Word& w);
/// Coordinate-wise product a * b.
DirectProductElem tuple_mul(const Context& ctx, const DirectProductElem& a, const DirectProductElem& b);
bool is_identity_tuple(const Context& ctx, const DirectProductElem& t);

/// Membership in the kernel of the projection onto the direct product.
bool in_kernel(const Word& w);
/// Membership in ker(G_Γ -> G_Γ̄): the word is trivial when read over the
/// extended graph. The word's graph must be the base of `ext`.
bool in_kernel_extension(const Word& w, const GraphExtension& ext);

/// Random word of `length` syllables drawn from vertices with nontrivial groups.
/// Z exponents are drawn from [-z_range, z_range] \ {0}.
Word sample_word(std::uint64_t seed, std::size_t length, const ContextPtr& ctx, Elem z_range = 3);
/// Random word followed by one closing syllable per nontrivial coordinate of
/// its projection, in ascending vertex order. Not normalized.
Word sample_kernel(std::uint64_t seed, std::size_t length, const ContextPtr& ctx);

/// The commutator a b a^{-1} b^{-1}, unnormalized.
Word commutator(const ContextPtr& ctx, Syllable a, Syllable b);

struct ExtensionSample {
  Word word;
  bool no_added_edges = false;  // warning: nothing to sample from
};

/// Normalized product of `count` conjugates u [g_i, g_j] u^{-1} over edges
/// {i,j} added by the extension. `ctx` must carry the base graph.
ExtensionSample sample_kernel_extension(std::uint64_t seed, std::size_t count, const ContextPtr& ctx,
                                        const GraphExtension& ext);

}  // namespace gpk
