#pragma once

#include <algorithm>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "gpk/graph.hpp"
#include "gpk/group.hpp"
#include "gpk/oracle.hpp"
#include "gpk/word.hpp"

namespace testing {

inline gpk::ContextPtr uniform_context(std::size_t m, std::initializer_list<gpk::Edge> edges, const gpk::Group& g) {
  return gpk::make_context(gpk::SimplicialGraph(m, edges), std::vector<gpk::Group>(m, g));
}

inline gpk::ContextPtr c2_free() { return uniform_context(2, {}, gpk::Group::cyclic(2)); }
inline gpk::ContextPtr c2_edge() { return uniform_context(2, {{0, 1}}, gpk::Group::cyclic(2)); }
inline gpk::ContextPtr z_free() { return uniform_context(2, {}, gpk::Group::infinite_cyclic()); }

inline gpk::Word W(const gpk::ContextPtr& ctx, std::string_view text) { return gpk::Word::parse(ctx, text); }

// Ground truth from the move oracle, never from normalize.
inline bool oracle_equal(const gpk::Word& a, const gpk::Word& b) {
  return gpk::bfs_equal(a, b) == gpk::Verdict::equal;
}

// Fewest non-identity syllables over the forward move closure.
inline std::size_t oracle_length(const gpk::Word& w) {
  const auto closure = gpk::move_closure(w.context(), {w.syllables().begin(), w.syllables().end()}, 1000000);
  std::size_t best = w.size();
  for (const auto& s : closure.words) {
    const auto n = static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](const gpk::Syllable& x) {
      return !w.context().group(x.vertex).is_identity(x.elem);
    }));
    best = std::min(best, n);
  }
  return best;
}

}  // namespace testing

// Evaluates `expr` and checks that it throws gpk::Error with the given code.
#define CHECK_GPK_ERROR(expr, expected)                   \
  do {                                                    \
    bool thrown_ = false;                                 \
    try {                                                 \
      (void)(expr);                                       \
    } catch (const gpk::Error& e_) {                      \
      thrown_ = true;                                     \
      CHECK_MESSAGE(e_.code() == (expected), e_.what());  \
    }                                                     \
    CHECK_MESSAGE(thrown_, "no gpk::Error from " #expr);  \
  } while (false)
