#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "gpk/word.hpp"

namespace gpk {

// Brute-force machinery built only from the three elementary moves and the
// vertex group laws. Nothing here calls reduce_syllables/sort_syllables, so
// it can serve as ground truth for them.

/// Words reachable from `start` by the forward moves: delete an identity
/// syllable, merge two consecutive same-vertex syllables, swap consecutive
/// syllables on adjacent vertices. Identity syllables are allowed.
struct MoveClosure {
  std::vector<Syllables> words;  // first entry is the start
  bool complete = true;          // false when the node limit stopped the search
};

MoveClosure move_closure(const Context& ctx, const Syllables& start, std::size_t node_limit);

enum class Verdict { equal, unequal, inconclusive };

/// Equal when the move closures of u and v meet; unequal when both closures
/// are exhausted without meeting.
Verdict bfs_equal(const Word& u, const Word& v, std::size_t node_limit = 200000);

/// The forward move graph on all words of length <= max_len over the
/// syllables of a finite-group context (plus the identity-syllable words
/// those moves reach).
struct MoveGraph {
  std::vector<Syllables> nodes;
  std::vector<std::vector<std::uint32_t>> successors;
  std::size_t identity_free = 0;  // nodes [0, identity_free) are the identity-free words
};

MoveGraph build_move_graph(const Context& ctx, std::size_t max_len);
/// Connected components of the undirected move graph. Two words share a
/// component iff bfs_equal deems them equal.
std::vector<std::uint32_t> move_components(const MoveGraph& g);
/// Nodes with a forward move path into `targets`.
std::vector<bool> reaches(const MoveGraph& g, const std::vector<bool>& targets);

/// A random word equal in the group to `w`, produced by applying `steps`
/// random elementary moves in either direction (split a syllable in two,
/// merge, insert or cancel a pair g g^{-1}, swap commuting neighbours).
Word scramble(const Word& w, std::mt19937_64& rng, std::size_t steps);

enum class Strategy { right, left };

/// Elements of normal length <= radius, keyed by their reduced-and-sorted
/// syllables, found by breadth-first multiplication with the generating set
/// of all syllables.
/// Shortlex on (vertex, element value); only used for deterministic containers.
struct ShortLex {
  bool operator()(const Syllables& a, const Syllables& b) const noexcept;
};

struct Ball {
  std::map<Syllables, std::size_t, ShortLex> elements;  // representative -> normal length
  std::vector<std::size_t> spheres;
};

/// Finite vertex groups only. Canonical representatives are computed by the
/// move-closure oracle (least word of minimal length in the closure), not by
/// normalize. Throws Error(budget_exceeded) past `budget` elements.
Ball enumerate_ball(const ContextPtr& ctx, std::size_t radius, Strategy strategy = Strategy::right,
                    std::size_t budget = 200000);
/// Per normal length, the number of ball elements in the kernel of the projection.
std::vector<std::size_t> kernel_census(const ContextPtr& ctx, std::size_t radius, Strategy strategy = Strategy::right,
                                       std::size_t budget = 200000);

}  // namespace gpk
