#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "gpk/induce.hpp"
#include "gpk/kernel.hpp"
#include "gpk/word.hpp"

namespace gpk {

/// The 0-, 1- and 2-cells of the polyhedral product (Δ_G, G)^L for finite
/// vertex groups. Vertices are the tuples of the direct product, encoded in
/// mixed radix (coordinate 0 least significant).
///
///  - edge: two tuples differing in exactly one coordinate;
///  - triangle: three tuples pairwise distinct in one coordinate, equal elsewhere;
///  - square: {a,b} x {c,d} in two coordinates i, k with {i,k} an edge of Γ.
///
/// The directed edge g -> h carries the label g^{-1} h, a single syllable, so
/// the 1-skeleton is the Cayley graph of the direct product with respect to
/// all syllables.
class Skeleton2 {
 public:
  static constexpr std::size_t default_cap = 100000;

  /// Throws Error(invalid_argument) for infinite groups and
  /// Error(budget_exceeded) when the vertex count exceeds `cap`.
  static Skeleton2 build(ContextPtr ctx, std::size_t cap = default_cap);

  const Context& context() const noexcept { return *ctx_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t encode(const DirectProductElem& g) const;
  DirectProductElem decode(std::size_t id) const;
  /// Right action of a syllable: the end of the edge labelled s leaving `id`.
  std::size_t act(std::size_t id, const Syllable& s) const;
  /// Label of the directed edge from -> to; throws if they are not adjacent.
  Syllable label(std::size_t from, std::size_t to) const;

  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  const std::vector<std::array<std::size_t, 3>>& triangles() const noexcept { return triangles_; }
  const std::vector<std::array<std::size_t, 4>>& squares() const noexcept { return squares_; }
  /// All syllables, i.e. the edge labels at any vertex.
  const Syllables& generators() const noexcept { return generators_; }

 private:
  explicit Skeleton2(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  ContextPtr ctx_;
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> stride_;
  std::size_t vertex_count_ = 0;
  Syllables generators_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::array<std::size_t, 3>> triangles_;
  std::vector<std::array<std::size_t, 4>> squares_;
};

struct CellCensus {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t triangles = 0;
  std::size_t squares = 0;

  friend bool operator==(const CellCensus&, const CellCensus&) = default;
};

/// Cell counts predicted from the group orders and the graph alone.
CellCensus closed_form_census(const Context& ctx);
/// Enumerated counts; throws Error(internal) if they disagree with the closed form.
CellCensus cell_census(const Skeleton2& sk);

/// Vertices g_0 = base, g_t = g_{t-1} s_t along the syllables of w.
std::vector<std::size_t> edge_path_of_word(const Skeleton2& sk, const Word& w, std::size_t base);

/// One "u v label" line per unordered edge u < v, label = u^{-1} v as `v<i>:<elem>`.
void export_edge_list(const Skeleton2& sk, std::ostream& out);

/// The cellular map induced by a family with psi = identity.
struct ComplexMap {
  std::vector<std::size_t> vertex_image;
  std::size_t directed_edges = 0;
  std::size_t collapsed_edges = 0;
  std::size_t edge_failures = 0;  // image neither an edge nor a point
  std::size_t cell_failures = 0;  // triangle or square not sent into a cell
};

ComplexMap induced_complex_map(const Skeleton2& source, const Skeleton2& target, const SetMapFamily& f);

struct MappedPath {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> collapsed_steps;  // 1-based step indices
};

/// Image of an edge path with collapsed steps removed.
MappedPath map_path(const ComplexMap& map, std::span<const std::size_t> path);

/// True when the image of the path of w from the identity equals the path of
/// phi_word(w) from f(identity).
bool path_images_agree(const Skeleton2& source, const Skeleton2& target, const ComplexMap& map,
                       const SetMapFamily& f, const Word& w);

}  // namespace gpk
