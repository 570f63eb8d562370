#include <random>
#include <set>

#include "doctest.h"
#include "gpk/errors.hpp"
#include "gpk/kernel.hpp"
#include "gpk/oracle.hpp"
#include "support.hpp"

using gpk::ErrorCode;
using gpk::Group;
using gpk::Verdict;
using gpk::Word;
using testing::W;

TEST_SUITE("oracle") {
  TEST_CASE("bfs equality") {
    const auto free2 = testing::c2_free();
    const Word ab = W(free2, "v0:1 v1:1");
    CHECK(gpk::bfs_equal(ab, ab) == Verdict::equal);
    CHECK(gpk::bfs_equal(W(free2, "v0:1 v0:1"), Word(free2)) == Verdict::equal);
    CHECK(gpk::bfs_equal(ab, W(free2, "v1:1 v0:1")) == Verdict::unequal);
    CHECK(gpk::move_closure(*free2, {{0, 1}, {1, 1}}, 100).words.size() == 1);
    CHECK(gpk::bfs_equal(W(testing::c2_edge(), "v0:1 v1:1"), W(testing::c2_edge(), "v1:1 v0:1")) == Verdict::equal);
    // A starved search cannot decide.
    const auto z = testing::uniform_context(3, {{0, 1}, {1, 2}, {0, 2}}, Group::infinite_cyclic());
    CHECK(gpk::bfs_equal(W(z, "v0:1 v1:1 v2:1 v0:1 v1:1 v2:1"), W(z, "v2:2 v1:2 v0:2"), 3) == Verdict::inconclusive);
  }

  TEST_CASE("move graph components") {
    const auto edge = testing::c2_edge();
    const auto g = gpk::build_move_graph(*edge, 3);
    // Words of length <= 3 over two syllables: 1 + 2 + 4 + 8.
    CHECK(g.identity_free == 15);
    const auto comp = gpk::move_components(g);
    std::set<std::uint32_t> classes(comp.begin(), comp.begin() + 15);
    CHECK(classes.size() == 4);  // C2 x C2 has four elements
    CHECK_GPK_ERROR(gpk::build_move_graph(*testing::z_free(), 2), ErrorCode::invalid_argument);
  }

  TEST_CASE("scramble preserves the element") {
    const auto ctx = testing::uniform_context(3, {{0, 2}}, Group::cyclic(3));
    std::mt19937_64 rng(11);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Word w = gpk::sample_word(seed, seed % 7, ctx);
      const Word v = gpk::scramble(w, rng, 10);
      CHECK(gpk::bfs_equal(w, v) == Verdict::equal);
      CHECK(gpk::words_equal(w, v));
    }
  }

  TEST_CASE("balls") {
    CHECK(gpk::enumerate_ball(testing::c2_free(), 0).spheres == std::vector<std::size_t>{1});
    CHECK(gpk::enumerate_ball(testing::c2_free(), 5).spheres == std::vector<std::size_t>{1, 2, 2, 2, 2, 2});
    const auto prod = gpk::enumerate_ball(testing::c2_edge(), 4);
    CHECK(prod.spheres == std::vector<std::size_t>{1, 2, 1});  // exhausted at radius 2
    CHECK(prod.elements.size() == 4);
    // C3 * C3: 2 * 2^(r-1) * 2 alternating words of length r >= 1.
    CHECK(gpk::enumerate_ball(testing::uniform_context(2, {}, Group::cyclic(3)), 3).spheres ==
          std::vector<std::size_t>{1, 4, 8, 16});
    CHECK(gpk::enumerate_ball(testing::c2_free(), 5, gpk::Strategy::left).spheres ==
          gpk::enumerate_ball(testing::c2_free(), 5, gpk::Strategy::right).spheres);
    CHECK_GPK_ERROR(gpk::enumerate_ball(testing::uniform_context(3, {}, Group::cyclic(4)), 6, gpk::Strategy::right, 1000),
                    ErrorCode::budget_exceeded);
    CHECK_GPK_ERROR(gpk::enumerate_ball(testing::z_free(), 2), ErrorCode::invalid_argument);
  }

  TEST_CASE("ball representatives are canonical forms") {
    const auto ctx = gpk::make_context(gpk::SimplicialGraph::path(3), {Group::cyclic(2), Group::cyclic(3), Group::cyclic(2)});
    const auto ball = gpk::enumerate_ball(ctx, 3);
    for (const auto& [rep, nl] : ball.elements) {
      const Word w(ctx, rep);
      CHECK(gpk::normalize(w) == w);
      CHECK(gpk::normal_length(w) == nl);
    }
  }

  TEST_CASE("kernel census") {
    CHECK(gpk::kernel_census(testing::c2_free(), 0) == std::vector<std::size_t>{1});
    CHECK(gpk::kernel_census(testing::c2_free(), 4) == std::vector<std::size_t>{1, 0, 0, 0, 2});
    const auto ball = gpk::enumerate_ball(testing::c2_free(), 4);
    CHECK(ball.elements.count({{0, 1}, {1, 1}, {0, 1}, {1, 1}}) == 1);
    CHECK(ball.elements.count({{1, 1}, {0, 1}, {1, 1}, {0, 1}}) == 1);
    const auto plain = testing::uniform_context(2, {}, Group::cyclic(3));
    const auto relabeled = testing::uniform_context(2, {}, Group::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
    CHECK(gpk::kernel_census(plain, 4) == gpk::kernel_census(relabeled, 4));
  }
}
