#include "gpk/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gpk/errors.hpp"

namespace gpk {

SimplicialGraph::SimplicialGraph(std::size_t vertex_count, std::span<const Edge> edges)
    : m_(vertex_count), adj_(vertex_count * vertex_count, 0) {
  for (auto [i, j] : edges) {
    if (i >= m_ || j >= m_) {
      fail(ErrorCode::out_of_range, "edge {" + std::to_string(i) + "," + std::to_string(j) + "} leaves vertex range 0.." +
                                        std::to_string(m_ == 0 ? 0 : m_ - 1));
    }
    if (i == j) fail(ErrorCode::validation, "loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (!adj_[i * m_ + j]) {
      adj_[i * m_ + j] = adj_[j * m_ + i] = 1;
      edges_.emplace_back(i, j);
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

SimplicialGraph SimplicialGraph::complete(std::size_t m) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = i + 1; j < m; ++j) e.emplace_back(i, j);
  return SimplicialGraph(m, e);
}

SimplicialGraph SimplicialGraph::discrete(std::size_t m) { return SimplicialGraph(m, std::span<const Edge>{}); }

SimplicialGraph SimplicialGraph::path(std::size_t m) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
  return SimplicialGraph(m, e);
}

bool SimplicialGraph::is_edge(Vertex i, Vertex j) const {
  if (i >= m_ || j >= m_) {
    fail(ErrorCode::out_of_range, "vertex " + std::to_string(std::max(i, j)) + " out of range for " + describe());
  }
  return adjacent(i, j);
}

std::string SimplicialGraph::describe() const {
  std::ostringstream os;
  os << "m=" << m_ << " edges={";
  for (std::size_t k = 0; k < edges_.size(); ++k) os << (k ? "," : "") << edges_[k].first << "-" << edges_[k].second;
  os << "}";
  return os.str();
}

std::vector<Edge> GraphExtension::added_edges() const {
  std::vector<Edge> out;
  std::set_difference(extended_.edges().begin(), extended_.edges().end(), base_.edges().begin(), base_.edges().end(),
                      std::back_inserter(out));
  return out;
}

GraphExtension validate_extension(const SimplicialGraph& base, const SimplicialGraph& extended) {
  if (base.vertex_count() != extended.vertex_count()) {
    fail(ErrorCode::validation, "extension changes the vertex count (" + std::to_string(base.vertex_count()) + " vs " +
                                    std::to_string(extended.vertex_count()) + ")");
  }
  for (auto [i, j] : base.edges()) {
    if (!extended.adjacent(i, j)) {
      fail(ErrorCode::validation,
           "edge {" + std::to_string(i) + "," + std::to_string(j) + "} of the base is missing from the extension");
    }
  }
  return GraphExtension(base, extended);
}

GraphExtension extend_by(const SimplicialGraph& base, std::span<const Edge> added) {
  std::vector<Edge> all = base.edges();
  all.insert(all.end(), added.begin(), added.end());
  return validate_extension(base, SimplicialGraph(base.vertex_count(), all));
}

bool InjectiveSimplicialMap::is_identity() const noexcept {
  if (source_.vertex_count() != target_.vertex_count()) return false;
  for (Vertex v = 0; v < images_.size(); ++v)
    if (images_[v] != v) return false;
  return true;
}

InjectiveSimplicialMap validate_simplicial_map(std::span<const Vertex> psi, const SimplicialGraph& source,
                                               const SimplicialGraph& target) {
  if (psi.size() != source.vertex_count()) {
    fail(ErrorCode::validation, "vertex map has " + std::to_string(psi.size()) + " entries, source has " +
                                    std::to_string(source.vertex_count()) + " vertices");
  }
  for (Vertex v = 0; v < psi.size(); ++v) {
    if (psi[v] >= target.vertex_count()) {
      fail(ErrorCode::validation, "vertex " + std::to_string(v) + " maps outside the target graph");
    }
  }
  for (Vertex a = 0; a < psi.size(); ++a) {
    for (Vertex b = a + 1; b < psi.size(); ++b) {
      if (psi[a] == psi[b]) {
        fail(ErrorCode::unsupported, "unsupported: non-injective simplicial map (vertices " + std::to_string(a) +
                                         " and " + std::to_string(b) + " both map to " + std::to_string(psi[a]) + ")");
      }
    }
  }
  for (auto [i, j] : source.edges()) {
    if (!target.adjacent(psi[i], psi[j])) {
      fail(ErrorCode::validation, "edge {" + std::to_string(i) + "," + std::to_string(j) + "} maps to non-edge {" +
                                      std::to_string(psi[i]) + "," + std::to_string(psi[j]) + "}");
    }
  }
  return InjectiveSimplicialMap(std::vector<Vertex>(psi.begin(), psi.end()), source, target);
}

InjectiveSimplicialMap identity_map(const SimplicialGraph& g) {
  std::vector<Vertex> id(g.vertex_count());
  std::iota(id.begin(), id.end(), Vertex{0});
  return validate_simplicial_map(id, g, g);
}

InjectiveSimplicialMap compose(const InjectiveSimplicialMap& first, const InjectiveSimplicialMap& second) {
  if (!(first.target() == second.source())) {
    fail(ErrorCode::validation, "cannot compose simplicial maps: target " + first.target().describe() +
                                    " != source " + second.source().describe());
  }
  std::vector<Vertex> images(first.images().size());
  for (Vertex v = 0; v < images.size(); ++v) images[v] = second(first(v));
  return validate_simplicial_map(images, first.source(), second.target());
}

}  // namespace gpk
