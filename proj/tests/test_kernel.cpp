#include "doctest.h"
#include "gpk/errors.hpp"
#include "gpk/kernel.hpp"
#include "support.hpp"

using gpk::ErrorCode;
using gpk::Word;
using testing::W;

TEST_SUITE("kernel") {
  TEST_CASE("projection") {
    const auto free2 = testing::c2_free();
    CHECK(gpk::project(Word(free2)) == gpk::DirectProductElem{0, 0});
    CHECK(gpk::project(W(free2, "v0:1 v1:1 v0:1 v1:1")) == gpk::DirectProductElem{0, 0});
    const auto mixed = gpk::make_context(gpk::SimplicialGraph::discrete(2),
                                         {gpk::Group::infinite_cyclic(), gpk::Group::cyclic(2)});
    CHECK(gpk::project(W(mixed, "v0:1 v1:1 v0:2")) == gpk::DirectProductElem{3, 1});
    CHECK(gpk::tuple_mul(*mixed, {3, 1}, {-3, 1}) == gpk::DirectProductElem{0, 0});
  }

  TEST_CASE("kernel membership") {
    const auto free2 = testing::c2_free();
    CHECK(gpk::in_kernel(Word(free2)));
    CHECK(gpk::in_kernel(W(free2, "v0:1 v1:1 v0:1 v1:1")));
    CHECK_FALSE(gpk::in_kernel(W(free2, "v0:1")));
    // Kernel membership is a property of the element, not of the spelling.
    CHECK(gpk::in_kernel(W(free2, "v0:1 v0:1")));
  }

  TEST_CASE("extension kernels") {
    const auto free2 = testing::c2_free();
    const std::vector<gpk::Edge> add{{0, 1}};
    const auto complete = gpk::extend_by(free2->graph(), add);
    const Word comm = W(free2, "v0:1 v1:1 v0:1 v1:1");
    CHECK(gpk::in_kernel_extension(comm, complete));
    CHECK_FALSE(gpk::in_kernel_extension(W(free2, "v0:1 v1:1"), complete));

    const auto trivial = gpk::validate_extension(free2->graph(), free2->graph());
    CHECK_FALSE(gpk::in_kernel_extension(comm, trivial));
    CHECK(gpk::in_kernel_extension(W(free2, "v0:1 v1:1 v1:1 v0:1"), trivial));

    // Over the complete extension the two kernels coincide (sampled words, any projection).
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Word w = gpk::sample_word(seed, seed % 9, free2);
      CHECK(gpk::in_kernel_extension(w, complete) == gpk::in_kernel(w));
    }
    CHECK_GPK_ERROR(gpk::in_kernel_extension(W(testing::c2_edge(), "v0:1"), complete), ErrorCode::context_mismatch);
  }

  TEST_CASE("kernel sampler contract") {
    const auto free2 = testing::c2_free();
    const Word w = gpk::sample_kernel(42, 6, free2);
    CHECK(gpk::in_kernel(w));
    CHECK(gpk::normal_length(w) <= 8);
    const auto ctxs = {free2, testing::z_free(),
                       testing::uniform_context(3, {{0, 1}}, gpk::Group::cyclic(3)),
                       gpk::make_context(gpk::SimplicialGraph::discrete(2), {gpk::Group::cyclic(1), gpk::Group::cyclic(4)})};
    for (const auto& ctx : ctxs) {
      for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Word k = gpk::sample_kernel(seed, seed % 10, ctx);
        CHECK(gpk::in_kernel(k));
        CHECK(k.size() <= seed % 10 + ctx->vertex_count());
      }
    }
    // Same seed, same word.
    CHECK(gpk::sample_kernel(7, 8, free2) == gpk::sample_kernel(7, 8, free2));
    CHECK(gpk::sample_word(7, 8, testing::z_free()) == gpk::sample_word(7, 8, testing::z_free()));
  }

  TEST_CASE("commutators") {
    const auto free2 = testing::c2_free();
    const Word c = gpk::commutator(free2, {0, 1}, {1, 1});
    CHECK(c == W(free2, "v0:1 v1:1 v0:1 v1:1"));
    const auto z = testing::z_free();
    CHECK(gpk::commutator(z, {0, 2}, {1, -1}) == W(z, "v0:2 v1:-1 v0:-2 v1:1"));
  }

  TEST_CASE("extension kernel sampler") {
    const auto free2 = testing::c2_free();
    const std::vector<gpk::Edge> add{{0, 1}};
    const auto ext = gpk::extend_by(free2->graph(), add);
    CHECK(gpk::sample_kernel_extension(3, 0, free2, ext).word.empty());
    const auto one = gpk::sample_kernel_extension(3, 1, free2, ext);
    CHECK(gpk::in_kernel_extension(one.word, ext));

    const auto path_ctx = testing::uniform_context(3, {{0, 1}}, gpk::Group::cyclic(3));
    const std::vector<gpk::Edge> add12{{1, 2}};
    const auto ext12 = gpk::extend_by(path_ctx->graph(), add12);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto s = gpk::sample_kernel_extension(seed, 1 + seed % 3, path_ctx, ext12);
      CHECK_FALSE(s.no_added_edges);
      CHECK(gpk::in_kernel_extension(s.word, ext12));
      CHECK(gpk::in_kernel(s.word));
    }

    const auto trivial = gpk::validate_extension(free2->graph(), free2->graph());
    const auto none = gpk::sample_kernel_extension(1, 2, free2, trivial);
    CHECK(none.no_added_edges);
    CHECK(none.word.empty());
  }
}
