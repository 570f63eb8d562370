#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gpk {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

/// A finite simple graph on vertices 0..m-1.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;
  /// Throws on loops or out-of-range endpoints. Repeated edges collapse.
  SimplicialGraph(std::size_t vertex_count, std::span<const Edge> edges);
  SimplicialGraph(std::size_t vertex_count, std::initializer_list<Edge> edges)
      : SimplicialGraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  static SimplicialGraph complete(std::size_t m);
  static SimplicialGraph discrete(std::size_t m);
  static SimplicialGraph path(std::size_t m);

  std::size_t vertex_count() const noexcept { return m_; }
  /// Sorted, normalized edge list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Checked adjacency query; false on the diagonal.
  bool is_edge(Vertex i, Vertex j) const;
  /// Unchecked adjacency for inner loops.
  bool adjacent(Vertex i, Vertex j) const noexcept { return adj_[i * m_ + j] != 0; }

  /// "m=3 edges={0-1,1-2}"
  std::string describe() const;

  friend bool operator==(const SimplicialGraph& a, const SimplicialGraph& b) noexcept {
    return a.m_ == b.m_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t m_ = 0;
  std::vector<Edge> edges_;
  std::vector<unsigned char> adj_;
};

/// A graph together with a supergraph on the same vertex set.
class GraphExtension {
 public:
  const SimplicialGraph& base() const noexcept { return base_; }
  const SimplicialGraph& extended() const noexcept { return extended_; }
  /// Edges of the extension that are absent from the base.
  std::vector<Edge> added_edges() const;

 private:
  friend GraphExtension validate_extension(const SimplicialGraph&, const SimplicialGraph&);
  GraphExtension(SimplicialGraph base, SimplicialGraph extended)
      : base_(std::move(base)), extended_(std::move(extended)) {}

  SimplicialGraph base_;
  SimplicialGraph extended_;
};

GraphExtension validate_extension(const SimplicialGraph& base, const SimplicialGraph& extended);
/// Convenience: base plus the given edges.
GraphExtension extend_by(const SimplicialGraph& base, std::span<const Edge> added);

/// An injective vertex map that sends edges to edges.
class InjectiveSimplicialMap {
 public:
  const SimplicialGraph& source() const noexcept { return source_; }
  const SimplicialGraph& target() const noexcept { return target_; }
  Vertex operator()(Vertex v) const { return images_.at(v); }
  const std::vector<Vertex>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;

 private:
  friend InjectiveSimplicialMap validate_simplicial_map(std::span<const Vertex>, const SimplicialGraph&,
                                                        const SimplicialGraph&);
  InjectiveSimplicialMap(std::vector<Vertex> images, SimplicialGraph source, SimplicialGraph target)
      : images_(std::move(images)), source_(std::move(source)), target_(std::move(target)) {}

  std::vector<Vertex> images_;
  SimplicialGraph source_;
  SimplicialGraph target_;
};

/// Throws Error(unsupported) when psi identifies vertices, Error(validation)
/// when psi is not total, leaves the target, or sends an edge to a non-edge.
InjectiveSimplicialMap validate_simplicial_map(std::span<const Vertex> psi, const SimplicialGraph& source,
                                               const SimplicialGraph& target);
InjectiveSimplicialMap identity_map(const SimplicialGraph& g);
/// second o first
InjectiveSimplicialMap compose(const InjectiveSimplicialMap& first, const InjectiveSimplicialMap& second);

}  // namespace gpk
