#include "gpk/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "gpk/errors.hpp"
#include "gpk/kernel.hpp"

namespace gpk {

namespace {

struct SyllablesHash {
  std::size_t operator()(const Syllables& s) const noexcept {
    std::size_t h = s.size();
    for (const auto& x : s) {
      h ^= std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(x.vertex) << 40) ^ static_cast<std::uint64_t>(x.elem)) +
           0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Calls visit(next) for every word one forward move away from w.
template <typename Visit>
void for_each_move(const Context& ctx, const Syllables& w, Visit&& visit) {
  const auto& graph = ctx.graph();
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (ctx.group(w[k].vertex).is_identity(w[k].elem)) {
      Syllables next = w;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(k));
      visit(std::move(next));
    }
  }
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    const Vertex a = w[k].vertex;
    const Vertex b = w[k + 1].vertex;
    if (a == b) {
      Syllables next = w;
      next[k].elem = ctx.group(a).mul(w[k].elem, w[k + 1].elem);
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(k + 1));
      visit(std::move(next));
    } else if (graph.adjacent(a, b)) {
      Syllables next = w;
      std::swap(next[k], next[k + 1]);
      visit(std::move(next));
    }
  }
}

std::unordered_set<Syllables, SyllablesHash> closure_set(const Context& ctx, const Syllables& start,
                                                         std::size_t node_limit, bool& complete) {
  std::unordered_set<Syllables, SyllablesHash> seen{start};
  std::deque<Syllables> queue{start};
  complete = true;
  while (!queue.empty()) {
    Syllables w = std::move(queue.front());
    queue.pop_front();
    for_each_move(ctx, w, [&](Syllables next) {
      if (seen.size() >= node_limit) {
        complete = false;
        return;
      }
      if (seen.insert(next).second) queue.push_back(std::move(next));
    });
    if (!complete) break;
  }
  return seen;
}

bool syllables_precede(const Context& ctx, const Syllables& a, const Syllables& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == b[k]) continue;
    return syllable_precedes(ctx, a[k], b[k]);
  }
  return false;
}

// Least (shortest, then lexicographically first) word in the move closure.
Syllables closure_minimum(const Context& ctx, const Syllables& w, std::size_t node_limit) {
  bool complete = true;
  const auto seen = closure_set(ctx, w, node_limit, complete);
  if (!complete) fail(ErrorCode::budget_exceeded, "move closure exceeded " + std::to_string(node_limit) + " words");
  const Syllables* best = nullptr;
  for (const auto& x : seen) {
    if (!best || syllables_precede(ctx, x, *best)) best = &x;
  }
  return *best;
}

}  // namespace

bool ShortLex::operator()(const Syllables& a, const Syllables& b) const noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].vertex != b[k].vertex) return a[k].vertex < b[k].vertex;
    if (a[k].elem != b[k].elem) return a[k].elem < b[k].elem;
  }
  return false;
}

MoveClosure move_closure(const Context& ctx, const Syllables& start, std::size_t node_limit) {
  // Plain BFS keeps discovery order, so the start comes first.
  MoveClosure out;
  std::unordered_set<Syllables, SyllablesHash> seen{start};
  out.words.push_back(start);
  for (std::size_t head = 0; head < out.words.size() && out.complete; ++head) {
    const Syllables w = out.words[head];
    for_each_move(ctx, w, [&](Syllables next) {
      if (!out.complete) return;
      if (seen.contains(next)) return;
      if (seen.size() >= node_limit) {
        out.complete = false;
        return;
      }
      seen.insert(next);
      out.words.push_back(std::move(next));
    });
  }
  return out;
}

Verdict bfs_equal(const Word& u, const Word& v, std::size_t node_limit) {
  if (!same_context(u.context_ptr(), v.context_ptr())) {
    fail(ErrorCode::context_mismatch, "bfs_equal: words live in different graph products");
  }
  const Syllables su(u.syllables().begin(), u.syllables().end());
  const Syllables sv(v.syllables().begin(), v.syllables().end());
  if (su == sv) return Verdict::equal;
  bool complete_u = true;
  bool complete_v = true;
  const auto cu = closure_set(u.context(), su, node_limit, complete_u);
  const auto cv = closure_set(v.context(), sv, node_limit, complete_v);
  for (const auto& x : cv) {
    if (cu.contains(x)) return Verdict::equal;
  }
  return complete_u && complete_v ? Verdict::unequal : Verdict::inconclusive;
}

MoveGraph build_move_graph(const Context& ctx, std::size_t max_len) {
  if (!ctx.all_finite()) fail(ErrorCode::invalid_argument, "move graph enumeration needs finite vertex groups");
  // Letters are (vertex, element) pairs including identities, packed five
  // bits each, so words of up to twelve letters fit one 64-bit key.
  std::vector<std::size_t> offset(ctx.vertex_count() + 1, 0);
  for (Vertex v = 0; v < ctx.vertex_count(); ++v) offset[v + 1] = offset[v] + ctx.group(v).order();
  if (offset.back() > 31 || max_len > 12) {
    fail(ErrorCode::budget_exceeded, "move graph enumeration limited to 31 letters and length 12");
  }
  const auto encode = [&](const Syllables& w) {
    std::uint64_t code = 0;
    for (const auto& s : w) code = (code << 5) | (offset[s.vertex] + static_cast<std::size_t>(s.elem) + 1);
    return code;
  };

  Syllables alphabet;
  for (Vertex v = 0; v < ctx.vertex_count(); ++v) {
    for (Elem e : ctx.group(v).nontrivial_elements()) alphabet.push_back({v, e});
  }

  MoveGraph g;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  const auto intern = [&](Syllables w) -> std::uint32_t {
    const auto code = encode(w);
    auto [it, inserted] = index.try_emplace(code, static_cast<std::uint32_t>(g.nodes.size()));
    if (inserted) g.nodes.push_back(std::move(w));
    return it->second;
  };

  // identity-free words, shortlex
  std::vector<Syllables> layer{Syllables{}};
  intern({});
  for (std::size_t len = 1; len <= max_len && !alphabet.empty(); ++len) {
    std::vector<Syllables> next;
    next.reserve(layer.size() * alphabet.size());
    for (const auto& w : layer) {
      for (const auto& s : alphabet) {
        Syllables x = w;
        x.push_back(s);
        intern(x);
        next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
  g.identity_free = g.nodes.size();
  index.reserve(g.nodes.size() * 2);

  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    std::vector<std::uint32_t> succ;
    const Syllables w = g.nodes[n];
    for_each_move(ctx, w, [&](Syllables next) { succ.push_back(intern(std::move(next))); });
    g.successors.push_back(std::move(succ));
  }
  return g;
}

std::vector<std::uint32_t> move_components(const MoveGraph& g) {
  std::vector<std::uint32_t> parent(g.nodes.size());
  std::iota(parent.begin(), parent.end(), 0U);
  const auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t n = 0; n < g.nodes.size(); ++n) {
    for (auto m : g.successors[n]) {
      const auto a = find(n);
      const auto b = find(m);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::uint32_t> label(g.nodes.size());
  std::unordered_map<std::uint32_t, std::uint32_t> dense;
  for (std::uint32_t n = 0; n < g.nodes.size(); ++n) {
    label[n] = dense.try_emplace(find(n), static_cast<std::uint32_t>(dense.size())).first->second;
  }
  return label;
}

std::vector<bool> reaches(const MoveGraph& g, const std::vector<bool>& targets) {
  std::vector<std::vector<std::uint32_t>> pred(g.nodes.size());
  for (std::uint32_t n = 0; n < g.nodes.size(); ++n)
    for (auto m : g.successors[n]) pred[m].push_back(n);
  std::vector<bool> hit = targets;
  std::deque<std::uint32_t> queue;
  for (std::uint32_t n = 0; n < g.nodes.size(); ++n)
    if (hit[n]) queue.push_back(n);
  while (!queue.empty()) {
    const auto n = queue.front();
    queue.pop_front();
    for (auto p : pred[n]) {
      if (!hit[p]) {
        hit[p] = true;
        queue.push_back(p);
      }
    }
  }
  return hit;
}

Word scramble(const Word& w, std::mt19937_64& rng, std::size_t steps) {
  const Context& ctx = w.context();
  Syllables s(w.syllables().begin(), w.syllables().end());
  std::vector<Vertex> live;
  for (Vertex v = 0; v < ctx.vertex_count(); ++v)
    if (!ctx.group(v).is_finite() || ctx.group(v).order() > 1) live.push_back(v);
  if (live.empty()) return w;

  const auto random_elem = [&](const Group& g) -> Elem {
    if (g.is_finite()) return std::uniform_int_distribution<Elem>(1, static_cast<Elem>(g.order()) - 1)(rng);
    const Elem k = std::uniform_int_distribution<Elem>(1, 6)(rng);
    return k <= 3 ? -k : k - 3;
  };
  const auto position = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n)(rng); };

  for (std::size_t step = 0; step < steps; ++step) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
      case 0: {  // split g into h, h^{-1} g
        if (s.empty()) break;
        const std::size_t k = position(s.size() - 1);
        const Group& g = ctx.group(s[k].vertex);
        const Elem h = random_elem(g);
        const Elem rest = g.mul(g.inv(h), s[k].elem);
        if (g.is_identity(rest)) break;
        s[k].elem = h;
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(k + 1), Syllable{s[k].vertex, rest});
        break;
      }
      case 1: {  // merge consecutive same-vertex syllables
        if (s.size() < 2) break;
        const std::size_t k = position(s.size() - 2);
        if (s[k].vertex != s[k + 1].vertex) break;
        const Group& g = ctx.group(s[k].vertex);
        const Elem p = g.mul(s[k].elem, s[k + 1].elem);
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(k + 1));
        if (g.is_identity(p)) {
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(k));
        } else {
          s[k].elem = p;
        }
        break;
      }
      case 2: {  // insert h h^{-1}
        const Vertex v = live[std::uniform_int_distribution<std::size_t>(0, live.size() - 1)(rng)];
        const Group& g = ctx.group(v);
        const Elem h = random_elem(g);
        const auto at = s.begin() + static_cast<std::ptrdiff_t>(position(s.size()));
        s.insert(at, {Syllable{v, h}, Syllable{v, g.inv(h)}});
        break;
      }
      default: {  // swap commuting neighbours
        if (s.size() < 2) break;
        const std::size_t k = position(s.size() - 2);
        if (ctx.graph().adjacent(s[k].vertex, s[k + 1].vertex)) std::swap(s[k], s[k + 1]);
        break;
      }
    }
  }
  return Word(w.context_ptr(), std::move(s));
}

Ball enumerate_ball(const ContextPtr& ctx, std::size_t radius, Strategy strategy, std::size_t budget) {
  if (!ctx->all_finite()) fail(ErrorCode::invalid_argument, "ball enumeration needs finite vertex groups");
  constexpr std::size_t closure_limit = 500000;
  Syllables generators;
  for (Vertex v = 0; v < ctx->vertex_count(); ++v)
    for (Elem e : ctx->group(v).nontrivial_elements()) generators.push_back({v, e});

  Ball ball;
  ball.elements.emplace(Syllables{}, 0);
  ball.spheres.push_back(1);
  std::vector<Syllables> frontier{Syllables{}};
  for (std::size_t r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<Syllables> next;
    for (const auto& w : frontier) {
      for (const auto& s : generators) {
        Syllables x;
        x.reserve(w.size() + 1);
        if (strategy == Strategy::left) x.push_back(s);
        x.insert(x.end(), w.begin(), w.end());
        if (strategy == Strategy::right) x.push_back(s);
        Syllables rep = closure_minimum(*ctx, x, closure_limit);
        if (ball.elements.contains(rep)) continue;
        if (ball.elements.size() >= budget) {
          fail(ErrorCode::budget_exceeded, "ball enumeration exceeded " + std::to_string(budget) + " elements");
        }
        ball.elements.emplace(rep, r + 1);
        next.push_back(std::move(rep));
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), ShortLex{});
    ball.spheres.push_back(next.size());
    frontier = std::move(next);
  }
  return ball;
}

std::vector<std::size_t> kernel_census(const ContextPtr& ctx, std::size_t radius, Strategy strategy,
                                       std::size_t budget) {
  const Ball ball = enumerate_ball(ctx, radius, strategy, budget);
  std::vector<std::size_t> counts(ball.spheres.size(), 0);
  for (const auto& [rep, length] : ball.elements) {
    if (in_kernel(Word(ctx, rep))) ++counts[length];
  }
  return counts;
}

}  // namespace gpk
