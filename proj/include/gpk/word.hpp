#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gpk/graph.hpp"
#include "gpk/group.hpp"

namespace gpk {

/// A graph product presentation: a graph with one vertex group per vertex.
class Context {
 public:
  Context(SimplicialGraph graph, std::vector<Group> groups);

  const SimplicialGraph& graph() const noexcept { return graph_; }
  const std::vector<Group>& groups() const noexcept { return groups_; }
  const Group& group(Vertex v) const { return groups_.at(v); }
  std::size_t vertex_count() const noexcept { return groups_.size(); }
  bool all_finite() const noexcept;

  friend bool operator==(const Context& a, const Context& b) noexcept {
    return a.graph_ == b.graph_ && a.groups_ == b.groups_;
  }

 private:
  SimplicialGraph graph_;
  std::vector<Group> groups_;
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(SimplicialGraph graph, std::vector<Group> groups);
/// Same vertex groups over a different graph on the same vertex set.
ContextPtr with_graph(const ContextPtr& ctx, SimplicialGraph graph);
bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept;

struct Syllable {
  Vertex vertex = 0;
  Elem elem = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

using Syllables = std::vector<Syllable>;

/// Canonical syllable order: by vertex, then by the vertex group's element order.
bool syllable_precedes(const Context& ctx, const Syllable& a, const Syllable& b) noexcept;

/// An element of the graph product, as a sequence of non-identity syllables.
/// Words are immutable values; the context is shared.
class Word {
 public:
  explicit Word(ContextPtr ctx);
  /// Rejects out-of-range vertices, foreign elements and identity syllables.
  Word(ContextPtr ctx, Syllables syllables);

  /// Whitespace-separated `v<i>:<elem>` tokens; the empty string is the empty word.
  static Word parse(ContextPtr ctx, std::string_view text);

  const Context& context() const noexcept { return *ctx_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }
  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  std::size_t size() const noexcept { return syllables_.size(); }
  bool empty() const noexcept { return syllables_.empty(); }

  std::string to_string() const;

  /// Syllable-for-syllable equality (not equality in the group).
  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.syllables_ == b.syllables_ && same_context(a.ctx_, b.ctx_);
  }

 private:
  struct Trusted {};
  Word(Trusted, ContextPtr ctx, Syllables syllables) : ctx_(std::move(ctx)), syllables_(std::move(syllables)) {}
  friend Word normalize(const Word&);
  friend Word concat(const Word&, const Word&);

  ContextPtr ctx_;
  Syllables syllables_;
};

std::string format_syllables(std::span<const Syllable> syllables);

/// Deletes identity syllables and merges every pair of same-vertex syllables
/// separated only by syllables on adjacent vertices. The result admits no
/// shortening sequence of elementary moves. Identity syllables may appear in
/// the input.
Syllables reduce_syllables(const Context& ctx, std::span<const Syllable> raw);
/// Lexicographically least reordering reachable by swapping adjacent
/// syllables on Γ-adjacent vertices.
Syllables sort_syllables(const Context& ctx, std::span<const Syllable> reduced);
/// reduce then sort.
Syllables canonical_syllables(const Context& ctx, std::span<const Syllable> raw);

Word normalize(const Word& w);
/// Raw concatenation without normalization.
Word concat(const Word& u, const Word& v);
Word word_mul(const Word& u, const Word& v);
Word word_inv(const Word& w);
bool words_equal(const Word& u, const Word& v);
std::size_t normal_length(const Word& w);
std::size_t normal_distance(const Word& g, const Word& h);

/// The same syllable sequence read in a context with identical vertex groups
/// (typically the same groups over a supergraph).
Word rebase(const Word& w, ContextPtr ctx);

}  // namespace gpk
