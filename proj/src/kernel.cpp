#include "gpk/kernel.hpp"

#include <random>

#include "gpk/errors.hpp"

namespace gpk {

DirectProductElem identity_tuple(const Context& ctx) { return DirectProductElem(ctx.vertex_count(), 0); }

DirectProductElem project(const Word& w) {
  const auto& ctx = w.context();
  DirectProductElem t = identity_tuple(ctx);
  for (const auto& s : w.syllables()) t[s.vertex] = ctx.group(s.vertex).mul(t[s.vertex], s.elem);
  return t;
}

DirectProductElem tuple_mul(const Context& ctx, const DirectProductElem& a, const DirectProductElem& b) {
  DirectProductElem out(ctx.vertex_count());
  for (Vertex v = 0; v < out.size(); ++v) out[v] = ctx.group(v).mul(a.at(v), b.at(v));
  return out;
}

bool is_identity_tuple(const Context& ctx, const DirectProductElem& t) {
  for (Vertex v = 0; v < ctx.vertex_count(); ++v)
    if (!ctx.group(v).is_identity(t.at(v))) return false;
  return true;
}

bool in_kernel(const Word& w) { return is_identity_tuple(w.context(), project(w)); }

bool in_kernel_extension(const Word& w, const GraphExtension& ext) {
  if (!(w.context().graph() == ext.base())) {
    fail(ErrorCode::context_mismatch, "word graph " + w.context().graph().describe() + " is not the extension base " +
                                          ext.base().describe());
  }
  const auto over = with_graph(w.context_ptr(), ext.extended());
  return reduce_syllables(*over, w.syllables()).empty();
}

namespace {

std::vector<Vertex> sampleable_vertices(const Context& ctx) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < ctx.vertex_count(); ++v) {
    const Group& g = ctx.group(v);
    if (!g.is_finite() || g.order() > 1) out.push_back(v);
  }
  return out;
}

Elem random_nontrivial(std::mt19937_64& rng, const Group& g, Elem z_range) {
  if (g.is_finite()) {
    std::uniform_int_distribution<Elem> d(1, static_cast<Elem>(g.order()) - 1);
    return d(rng);
  }
  std::uniform_int_distribution<Elem> d(1, 2 * z_range);
  const Elem k = d(rng);
  return k <= z_range ? -k : k - z_range;
}

Syllables random_syllables(std::mt19937_64& rng, std::size_t length, const Context& ctx, Elem z_range) {
  const auto vertices = sampleable_vertices(ctx);
  Syllables out;
  if (vertices.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    const Vertex v = vertices[pick(rng)];
    out.push_back({v, random_nontrivial(rng, ctx.group(v), z_range)});
  }
  return out;
}

}  // namespace

Word sample_word(std::uint64_t seed, std::size_t length, const ContextPtr& ctx, Elem z_range) {
  std::mt19937_64 rng(seed);
  return Word(ctx, random_syllables(rng, length, *ctx, z_range));
}

Word sample_kernel(std::uint64_t seed, std::size_t length, const ContextPtr& ctx) {
  Word w = sample_word(seed, length, ctx);
  const auto t = project(w);
  Syllables closing;
  for (Vertex v = 0; v < ctx->vertex_count(); ++v) {
    const Group& g = ctx->group(v);
    if (!g.is_identity(t[v])) closing.push_back({v, g.inv(t[v])});
  }
  return concat(w, Word(ctx, std::move(closing)));
}

Word commutator(const ContextPtr& ctx, Syllable a, Syllable b) {
  const Group& ga = ctx->group(a.vertex);
  const Group& gb = ctx->group(b.vertex);
  return Word(ctx, {a, b, {a.vertex, ga.inv(a.elem)}, {b.vertex, gb.inv(b.elem)}});
}

ExtensionSample sample_kernel_extension(std::uint64_t seed, std::size_t count, const ContextPtr& ctx,
                                        const GraphExtension& ext) {
  if (!(ctx->graph() == ext.base())) {
    fail(ErrorCode::context_mismatch, "sampling context graph is not the extension base");
  }
  std::vector<Edge> usable;
  for (const auto& e : ext.added_edges()) {
    const auto nontrivial = [&](Vertex v) { return !ctx->group(v).is_finite() || ctx->group(v).order() > 1; };
    if (nontrivial(e.first) && nontrivial(e.second)) usable.push_back(e);
  }
  ExtensionSample out{Word(ctx), false};
  if (count == 0) return out;
  if (usable.empty()) {
    out.no_added_edges = true;
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_edge(0, usable.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_len(0, 3);
  Word acc(ctx);
  for (std::size_t k = 0; k < count; ++k) {
    const Edge e = usable[pick_edge(rng)];
    const Syllable a{e.first, random_nontrivial(rng, ctx->group(e.first), 3)};
    const Syllable b{e.second, random_nontrivial(rng, ctx->group(e.second), 3)};
    const Word u(ctx, random_syllables(rng, pick_len(rng), *ctx, 3));
    acc = concat(acc, concat(concat(u, commutator(ctx, a, b)), word_inv(u)));
  }
  out.word = normalize(acc);
  return out;
}

}  // namespace gpk
