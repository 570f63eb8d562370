#include "gpk/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gpk/errors.hpp"

namespace gpk {

Context::Context(SimplicialGraph graph, std::vector<Group> groups) : graph_(std::move(graph)), groups_(std::move(groups)) {
  if (graph_.vertex_count() != groups_.size()) {
    fail(ErrorCode::validation, "graph has " + std::to_string(graph_.vertex_count()) + " vertices but " +
                                    std::to_string(groups_.size()) + " vertex groups were given");
  }
}

bool Context::all_finite() const noexcept {
  for (const auto& g : groups_)
    if (!g.is_finite()) return false;
  return true;
}

ContextPtr make_context(SimplicialGraph graph, std::vector<Group> groups) {
  return std::make_shared<const Context>(std::move(graph), std::move(groups));
}

ContextPtr with_graph(const ContextPtr& ctx, SimplicialGraph graph) { return make_context(std::move(graph), ctx->groups()); }

bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept { return a == b || (a && b && *a == *b); }

bool syllable_precedes(const Context& ctx, const Syllable& a, const Syllable& b) noexcept {
  if (a.vertex != b.vertex) return a.vertex < b.vertex;
  return ctx.groups()[a.vertex].precedes(a.elem, b.elem);
}

Word::Word(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) fail(ErrorCode::invalid_argument, "word without context");
}

Word::Word(ContextPtr ctx, Syllables syllables) : ctx_(std::move(ctx)), syllables_(std::move(syllables)) {
  if (!ctx_) fail(ErrorCode::invalid_argument, "word without context");
  for (std::size_t k = 0; k < syllables_.size(); ++k) {
    const auto& s = syllables_[k];
    if (s.vertex >= ctx_->vertex_count()) {
      fail(ErrorCode::out_of_range, "syllable " + std::to_string(k) + ": vertex " + std::to_string(s.vertex) +
                                        " out of range");
    }
    const Group& g = ctx_->group(s.vertex);
    if (!g.contains(s.elem)) {
      fail(ErrorCode::out_of_range, "syllable " + std::to_string(k) + ": " + std::to_string(s.elem) +
                                        " is not an element of " + g.describe());
    }
    if (g.is_identity(s.elem)) {
      fail(ErrorCode::invalid_argument, "syllable " + std::to_string(k) + " is the identity of vertex " +
                                            std::to_string(s.vertex));
    }
  }
}

Word Word::parse(ContextPtr ctx, std::string_view text) {
  Syllables out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n') ++end;
    const std::string_view token = text.substr(pos, end - pos);
    const auto colon = token.find(':');
    const auto bad = [&] { fail(ErrorCode::invalid_argument, "malformed syllable token '" + std::string(token) + "'"); };
    if (token.size() < 4 || token[0] != 'v' || colon == std::string_view::npos || colon < 2) bad();
    Vertex v = 0;
    Elem e = 0;
    const char* vb = token.data() + 1;
    const char* ve = token.data() + colon;
    if (auto r = std::from_chars(vb, ve, v); r.ec != std::errc() || r.ptr != ve) bad();
    const char* eb = token.data() + colon + 1;
    const char* ee = token.data() + token.size();
    if (eb != ee && *eb == '+') ++eb;
    if (auto r = std::from_chars(eb, ee, e); r.ec != std::errc() || r.ptr != ee) bad();
    out.push_back({v, e});
    pos = end;
  }
  return Word(std::move(ctx), std::move(out));
}

std::string format_syllables(std::span<const Syllable> syllables) {
  std::string out;
  for (const auto& s : syllables) {
    if (!out.empty()) out += ' ';
    out += 'v';
    out += std::to_string(s.vertex);
    out += ':';
    out += std::to_string(s.elem);
  }
  return out;
}

std::string Word::to_string() const { return format_syllables(syllables_); }

Syllables reduce_syllables(const Context& ctx, std::span<const Syllable> raw) {
  // Left-to-right pass keeping `out` reduced. An incoming syllable on vertex v
  // can only merge with the nearest earlier v-syllable reachable through
  // syllables on vertices adjacent to v. Deleting a syllable that cancels
  // never enables another merge: everything after it commutes with its vertex.
  const auto& graph = ctx.graph();
  Syllables out;
  out.reserve(raw.size());
  for (const Syllable& s : raw) {
    const Group& g = ctx.group(s.vertex);
    if (g.is_identity(s.elem)) continue;
    std::size_t k = out.size();
    bool merged = false;
    while (k > 0) {
      const Syllable& prev = out[k - 1];
      if (prev.vertex == s.vertex) {
        const Elem product = g.mul(prev.elem, s.elem);
        if (g.is_identity(product)) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(k - 1));
        } else {
          out[k - 1].elem = product;
        }
        merged = true;
        break;
      }
      if (!graph.adjacent(prev.vertex, s.vertex)) break;
      --k;
    }
    if (!merged) out.push_back(s);
  }
  return out;
}

Syllables sort_syllables(const Context& ctx, std::span<const Syllable> reduced) {
  // Greedy extraction of the least syllable that can be commuted to the front.
  // Adjacent-swap bubble sorting is not enough: in b x a with a < b, a
  // commuting with b and x, and x, b not commuting, no adjacent swap lowers
  // the word although a b x is smaller.
  const auto& graph = ctx.graph();
  Syllables rest(reduced.begin(), reduced.end());
  Syllables out;
  out.reserve(rest.size());
  std::vector<Vertex> seen;
  while (!rest.empty()) {
    std::size_t best = 0;
    seen.clear();
    for (std::size_t k = 0; k < rest.size(); ++k) {
      const Vertex v = rest[k].vertex;
      bool free = true;
      for (Vertex u : seen) {
        if (!graph.adjacent(u, v)) {
          free = false;
          break;
        }
      }
      if (free && (k == 0 || syllable_precedes(ctx, rest[k], rest[best]))) best = k;
      seen.push_back(v);
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Syllables canonical_syllables(const Context& ctx, std::span<const Syllable> raw) {
  return sort_syllables(ctx, reduce_syllables(ctx, raw));
}

Word normalize(const Word& w) {
  return Word(Word::Trusted{}, w.context_ptr(), canonical_syllables(w.context(), w.syllables()));
}

static void require_same(const Word& u, const Word& v, const char* op) {
  if (!same_context(u.context_ptr(), v.context_ptr())) {
    fail(ErrorCode::context_mismatch, std::string(op) + ": words live in different graph products");
  }
}

Word concat(const Word& u, const Word& v) {
  require_same(u, v, "concat");
  Syllables s(u.syllables().begin(), u.syllables().end());
  s.insert(s.end(), v.syllables().begin(), v.syllables().end());
  return Word(Word::Trusted{}, u.context_ptr(), std::move(s));
}

Word word_mul(const Word& u, const Word& v) { return normalize(concat(u, v)); }

Word word_inv(const Word& w) {
  Syllables s;
  s.reserve(w.size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) {
    s.push_back({it->vertex, w.context().group(it->vertex).inv(it->elem)});
  }
  return normalize(Word(w.context_ptr(), std::move(s)));
}

bool words_equal(const Word& u, const Word& v) {
  require_same(u, v, "words_equal");
  const auto a = normalize(u);
  const auto b = normalize(v);
  return std::equal(a.syllables().begin(), a.syllables().end(), b.syllables().begin(), b.syllables().end());
}

std::size_t normal_length(const Word& w) { return reduce_syllables(w.context(), w.syllables()).size(); }

std::size_t normal_distance(const Word& g, const Word& h) {
  require_same(g, h, "normal_distance");
  return normal_length(concat(word_inv(g), h));
}

Word rebase(const Word& w, ContextPtr ctx) {
  if (ctx->groups() != w.context().groups()) {
    fail(ErrorCode::context_mismatch, "rebase: vertex groups differ");
  }
  return Word(std::move(ctx), Syllables(w.syllables().begin(), w.syllables().end()));
}

}  // namespace gpk
