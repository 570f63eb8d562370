#include "doctest.h"
#include "gpk/errors.hpp"
#include "gpk/graph.hpp"
#include "support.hpp"

using gpk::ErrorCode;
using gpk::SimplicialGraph;

TEST_SUITE("graph") {
  TEST_CASE("adjacency") {
    const auto p = SimplicialGraph::path(3);
    CHECK(p.is_edge(0, 1));
    CHECK(p.is_edge(1, 0));
    CHECK_FALSE(p.is_edge(0, 2));
    CHECK_FALSE(p.is_edge(1, 1));
    CHECK_GPK_ERROR(p.is_edge(0, 3), ErrorCode::out_of_range);
    CHECK(p.describe() == "m=3 edges={0-1,1-2}");
  }

  TEST_CASE("construction") {
    CHECK(SimplicialGraph::complete(4).edges().size() == 6);
    CHECK(SimplicialGraph::discrete(4).edges().empty());
    CHECK(SimplicialGraph(3, {{1, 0}, {0, 1}}).edges() == std::vector<gpk::Edge>{{0, 1}});
    CHECK(SimplicialGraph(3, {{2, 1}}) == SimplicialGraph(3, {{1, 2}}));
    CHECK_GPK_ERROR(SimplicialGraph(3, {{1, 1}}), ErrorCode::validation);
    CHECK_GPK_ERROR(SimplicialGraph(3, {{0, 3}}), ErrorCode::out_of_range);
    CHECK(SimplicialGraph(0, {}).vertex_count() == 0);
  }

  TEST_CASE("extensions") {
    const auto two = SimplicialGraph::discrete(2);
    const auto k2 = SimplicialGraph::complete(2);
    const auto ext = gpk::validate_extension(two, k2);
    CHECK(ext.added_edges() == std::vector<gpk::Edge>{{0, 1}});
    CHECK(gpk::validate_extension(k2, k2).added_edges().empty());
    CHECK_GPK_ERROR(gpk::validate_extension(k2, two), ErrorCode::validation);
    CHECK_GPK_ERROR(gpk::validate_extension(two, SimplicialGraph::discrete(3)), ErrorCode::validation);
    const std::vector<gpk::Edge> add{{0, 2}};
    CHECK(gpk::extend_by(SimplicialGraph::path(3), add).extended() == SimplicialGraph::complete(3));
  }

  TEST_CASE("simplicial maps") {
    const auto p2 = SimplicialGraph::path(2);
    const auto p3 = SimplicialGraph::path(3);
    const std::vector<gpk::Vertex> inclusion{0, 1};
    const auto psi = gpk::validate_simplicial_map(inclusion, p2, p3);
    CHECK(psi(1) == 1);
    CHECK_FALSE(psi.is_identity());  // same labels, but a proper inclusion

    const std::vector<gpk::Vertex> shifted{1, 2};
    CHECK_FALSE(gpk::validate_simplicial_map(shifted, p2, p3).is_identity());

    const std::vector<gpk::Vertex> collapse{0, 0};
    CHECK_GPK_ERROR(gpk::validate_simplicial_map(collapse, p2, p3), ErrorCode::unsupported);
    const std::vector<gpk::Vertex> to_non_edge{0, 2};
    CHECK_GPK_ERROR(gpk::validate_simplicial_map(to_non_edge, p2, p3), ErrorCode::validation);
    const std::vector<gpk::Vertex> outside{0, 3};
    CHECK_GPK_ERROR(gpk::validate_simplicial_map(outside, p2, p3), ErrorCode::validation);
    const std::vector<gpk::Vertex> short_map{0};
    CHECK_GPK_ERROR(gpk::validate_simplicial_map(short_map, p2, p3), ErrorCode::validation);

    const std::vector<gpk::Vertex> flip{2, 1, 0};
    const auto r = gpk::validate_simplicial_map(flip, p3, p3);
    const auto rr = gpk::compose(r, r);
    CHECK(rr.is_identity());
    CHECK(gpk::compose(psi, r).images() == std::vector<gpk::Vertex>{2, 1});
    CHECK(gpk::identity_map(p3).is_identity());
  }
}
