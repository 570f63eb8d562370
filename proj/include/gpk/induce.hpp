#pragma once

#include <vector>

#include "gpk/graph.hpp"
#include "gpk/group.hpp"
#include "gpk/kernel.hpp"
#include "gpk/word.hpp"

namespace gpk {

/// Per-vertex set maps f_i : G_i -> G'_{psi(i)} over an injective simplicial
/// map psi from the source graph to the target graph.
class SetMapFamily {
 public:
  SetMapFamily(ContextPtr source, ContextPtr target, InjectiveSimplicialMap psi, std::vector<SetMap> maps);
  /// psi = identity; both contexts must share the graph.
  SetMapFamily(ContextPtr source, ContextPtr target, std::vector<SetMap> maps);

  static SetMapFamily identity(const ContextPtr& ctx);
  /// The same map at every vertex; psi = identity.
  static SetMapFamily uniform(ContextPtr source, ContextPtr target, const SetMap& f);

  const ContextPtr& source() const noexcept { return source_; }
  const ContextPtr& target() const noexcept { return target_; }
  const InjectiveSimplicialMap& psi() const noexcept { return psi_; }
  const SetMap& map(Vertex v) const { return maps_.at(v); }
  const std::vector<SetMap>& maps() const noexcept { return maps_; }

  bool all_injective() const;
  bool all_bijective() const;

  /// The vertex map f on direct-product tuples: coordinate psi(i) of the
  /// result is f_i(g_i); coordinates outside the image of psi are identities.
  DirectProductElem apply(const DirectProductElem& g) const;

 private:
  ContextPtr source_;
  ContextPtr target_;
  InjectiveSimplicialMap psi_;
  std::vector<SetMap> maps_;
};

/// second o first. first.target() must equal second.source().
SetMapFamily compose(const SetMapFamily& first, const SetMapFamily& second);

/// Inverse of a bijective family with bijective psi. Each map is first shifted
/// to fix the identity (x -> f(e)^{-1} f(x), which induces the same
/// homomorphism), then inverted, so the result undoes the induced homomorphism.
SetMapFamily inverse_family(const SetMapFamily& f);

/// Word-level map S* -> S'*. Scans w keeping the running product of the
/// syllables seen so far on each source vertex; a syllable on vertex i turns
/// into f_i(before)^{-1} f_i(after) on vertex psi(i), or disappears when that
/// is the identity.
Word phi_word(const Word& w, const SetMapFamily& f);
/// As phi_word, with the running products starting at `base` instead of the
/// identity: the label sequence of the image of the edge path from `base`.
Word phi_word_from(const Word& w, const SetMapFamily& f, const DirectProductElem& base);
/// Negative control: f_i applied to each syllable independently, ignoring
/// prefixes. Not well defined on the group.
Word phi_word_syllablewise(const Word& w, const SetMapFamily& f);

/// Canonical form of the image in the target graph product.
Word phi_gamma(const Word& w, const SetMapFamily& f);
/// phi_gamma restricted to the kernel; throws Error(precondition) outside it.
Word phi_kernel(const Word& w, const SetMapFamily& f);
/// Restriction to ker(G_Γ1 -> G_Γ̄1). `source_ext` extends the source graph,
/// `target_ext` the target graph, and psi must also be simplicial between
/// the extended graphs.
Word phi_kernel_extension(const Word& w, const SetMapFamily& f, const GraphExtension& source_ext,
                          const GraphExtension& target_ext);

}  // namespace gpk
