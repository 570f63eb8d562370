#include "gpk/complex.hpp"

#include <ostream>

#include "gpk/errors.hpp"

namespace gpk {

namespace {

std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

Skeleton2 Skeleton2::build(ContextPtr ctx, std::size_t cap) {
  if (!ctx->all_finite()) fail(ErrorCode::invalid_argument, "the complex is only built for finite vertex groups");
  Skeleton2 sk(std::move(ctx));
  const Context& c = *sk.ctx_;
  const std::size_t m = c.vertex_count();
  std::size_t count = 1;
  for (Vertex v = 0; v < m; ++v) {
    const std::size_t n = c.group(v).order();
    sk.radix_.push_back(n);
    sk.stride_.push_back(count);
    if (count > cap / n) {
      fail(ErrorCode::budget_exceeded, "complex would exceed the cap of " + std::to_string(cap) + " vertices");
    }
    count *= n;
    for (Elem e : c.group(v).nontrivial_elements()) sk.generators_.push_back({v, e});
  }
  sk.vertex_count_ = count;

  for (std::size_t u = 0; u < count; ++u) {
    for (Vertex i = 0; i < m; ++i) {
      const std::size_t a = (u / sk.stride_[i]) % sk.radix_[i];
      for (std::size_t b = a + 1; b < sk.radix_[i]; ++b) {
        const std::size_t ub = u + (b - a) * sk.stride_[i];
        sk.edges_.emplace_back(u, ub);
        for (std::size_t d = b + 1; d < sk.radix_[i]; ++d) {
          sk.triangles_.push_back({u, ub, u + (d - a) * sk.stride_[i]});
        }
      }
    }
    for (const auto& [i, k] : c.graph().edges()) {
      const std::size_t a = (u / sk.stride_[i]) % sk.radix_[i];
      const std::size_t cc = (u / sk.stride_[k]) % sk.radix_[k];
      for (std::size_t b = a + 1; b < sk.radix_[i]; ++b) {
        for (std::size_t d = cc + 1; d < sk.radix_[k]; ++d) {
          const std::size_t di = (b - a) * sk.stride_[i];
          const std::size_t dk = (d - cc) * sk.stride_[k];
          sk.squares_.push_back({u, u + di, u + dk, u + di + dk});
        }
      }
    }
  }
  return sk;
}

std::size_t Skeleton2::encode(const DirectProductElem& g) const {
  if (g.size() != radix_.size()) fail(ErrorCode::invalid_argument, "tuple has the wrong number of coordinates");
  std::size_t id = 0;
  for (Vertex v = 0; v < radix_.size(); ++v) {
    if (g[v] < 0 || static_cast<std::size_t>(g[v]) >= radix_[v]) {
      fail(ErrorCode::out_of_range, "coordinate " + std::to_string(v) + " out of range");
    }
    id += static_cast<std::size_t>(g[v]) * stride_[v];
  }
  return id;
}

DirectProductElem Skeleton2::decode(std::size_t id) const {
  if (id >= vertex_count_) fail(ErrorCode::out_of_range, "complex vertex " + std::to_string(id) + " out of range");
  DirectProductElem g(radix_.size());
  for (Vertex v = 0; v < radix_.size(); ++v) g[v] = static_cast<Elem>((id / stride_[v]) % radix_[v]);
  return g;
}

std::size_t Skeleton2::act(std::size_t id, const Syllable& s) const {
  auto g = decode(id);
  g.at(s.vertex) = ctx_->group(s.vertex).mul(g[s.vertex], s.elem);
  return encode(g);
}

Syllable Skeleton2::label(std::size_t from, std::size_t to) const {
  const auto g = decode(from);
  const auto h = decode(to);
  std::optional<Vertex> where;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g[v] == h[v]) continue;
    if (where) fail(ErrorCode::invalid_argument, "vertices differ in more than one coordinate");
    where = v;
  }
  if (!where) fail(ErrorCode::invalid_argument, "an edge needs two distinct vertices");
  const Group& grp = ctx_->group(*where);
  return {*where, grp.mul(grp.inv(g[*where]), h[*where])};
}

CellCensus closed_form_census(const Context& ctx) {
  CellCensus c;
  const std::size_t m = ctx.vertex_count();
  std::vector<std::size_t> n(m);
  for (Vertex v = 0; v < m; ++v) n[v] = ctx.group(v).order();
  const auto product_except = [&](std::initializer_list<Vertex> skip) {
    std::size_t p = 1;
    for (Vertex v = 0; v < m; ++v) {
      if (std::find(skip.begin(), skip.end(), v) == skip.end()) p *= n[v];
    }
    return p;
  };
  c.vertices = product_except({});
  for (Vertex i = 0; i < m; ++i) {
    c.edges += choose(n[i], 2) * product_except({i});
    c.triangles += choose(n[i], 3) * product_except({i});
  }
  for (const auto& [i, k] : ctx.graph().edges()) c.squares += choose(n[i], 2) * choose(n[k], 2) * product_except({i, k});
  return c;
}

CellCensus cell_census(const Skeleton2& sk) {
  const CellCensus counted{sk.vertex_count(), sk.edges().size(), sk.triangles().size(), sk.squares().size()};
  const CellCensus predicted = closed_form_census(sk.context());
  if (!(counted == predicted)) {
    fail(ErrorCode::internal,
         "cell census mismatch: counted V=" + std::to_string(counted.vertices) + " E=" + std::to_string(counted.edges) +
             " T=" + std::to_string(counted.triangles) + " Sq=" + std::to_string(counted.squares) +
             ", closed form V=" + std::to_string(predicted.vertices) + " E=" + std::to_string(predicted.edges) +
             " T=" + std::to_string(predicted.triangles) + " Sq=" + std::to_string(predicted.squares));
  }
  return counted;
}

std::vector<std::size_t> edge_path_of_word(const Skeleton2& sk, const Word& w, std::size_t base) {
  if (!same_context(w.context_ptr(), sk.context_ptr())) {
    fail(ErrorCode::context_mismatch, "word and complex belong to different graph products");
  }
  std::vector<std::size_t> path{base};
  if (base >= sk.vertex_count()) fail(ErrorCode::out_of_range, "base vertex out of range");
  for (const auto& s : w.syllables()) path.push_back(sk.act(path.back(), s));
  return path;
}

void export_edge_list(const Skeleton2& sk, std::ostream& out) {
  for (const auto& [u, v] : sk.edges()) {
    const Syllable s = sk.label(u, v);
    out << u << ' ' << v << " v" << s.vertex << ':' << s.elem << '\n';
  }
}

namespace {

// Coordinates in which the given target vertices are not all equal.
std::vector<Vertex> spread(const Skeleton2& sk, std::span<const std::size_t> ids) {
  std::vector<DirectProductElem> pts;
  for (auto id : ids) pts.push_back(sk.decode(id));
  std::vector<Vertex> out;
  for (Vertex v = 0; v < sk.context().vertex_count(); ++v) {
    for (const auto& p : pts) {
      if (p[v] != pts.front()[v]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

}  // namespace

ComplexMap induced_complex_map(const Skeleton2& source, const Skeleton2& target, const SetMapFamily& f) {
  if (!f.psi().is_identity()) fail(ErrorCode::unsupported, "complex maps are built for psi = identity only");
  if (!same_context(source.context_ptr(), f.source()) || !same_context(target.context_ptr(), f.target())) {
    fail(ErrorCode::context_mismatch, "complexes do not match the family's source and target");
  }
  ComplexMap map;
  map.vertex_image.resize(source.vertex_count());
  for (std::size_t u = 0; u < source.vertex_count(); ++u) {
    map.vertex_image[u] = target.encode(f.apply(source.decode(u)));
  }
  for (std::size_t u = 0; u < source.vertex_count(); ++u) {
    for (const auto& s : source.generators()) {
      ++map.directed_edges;
      const std::size_t a = map.vertex_image[u];
      const std::size_t b = map.vertex_image[source.act(u, s)];
      if (a == b) {
        ++map.collapsed_edges;
        continue;
      }
      const std::size_t ids[] = {a, b};
      const auto moved = spread(target, ids);
      if (moved.size() != 1 || moved.front() != s.vertex) ++map.edge_failures;
    }
  }
  const auto& graph = target.context().graph();
  for (const auto& t : source.triangles()) {
    const std::size_t ids[] = {map.vertex_image[t[0]], map.vertex_image[t[1]], map.vertex_image[t[2]]};
    if (spread(target, ids).size() > 1) ++map.cell_failures;
  }
  for (const auto& q : source.squares()) {
    const std::size_t ids[] = {map.vertex_image[q[0]], map.vertex_image[q[1]], map.vertex_image[q[2]],
                               map.vertex_image[q[3]]};
    const auto moved = spread(target, ids);
    if (moved.size() > 2 || (moved.size() == 2 && !graph.adjacent(moved[0], moved[1]))) ++map.cell_failures;
  }
  return map;
}

MappedPath map_path(const ComplexMap& map, std::span<const std::size_t> path) {
  MappedPath out;
  if (path.empty()) return out;
  out.vertices.push_back(map.vertex_image.at(path.front()));
  for (std::size_t t = 1; t < path.size(); ++t) {
    const std::size_t image = map.vertex_image.at(path[t]);
    if (image == out.vertices.back()) {
      out.collapsed_steps.push_back(t);
    } else {
      out.vertices.push_back(image);
    }
  }
  return out;
}

bool path_images_agree(const Skeleton2& source, const Skeleton2& target, const ComplexMap& map,
                       const SetMapFamily& f, const Word& w) {
  const std::size_t base = source.encode(identity_tuple(source.context()));
  const auto path = edge_path_of_word(source, w, base);
  const auto image = map_path(map, path);
  const auto expected = edge_path_of_word(target, phi_word(w, f), map.vertex_image[base]);
  return image.vertices == expected;
}

}  // namespace gpk
