#include "doctest.h"
#include "gpk/errors.hpp"
#include "gpk/verify.hpp"
#include "support.hpp"

using gpk::ErrorCode;
using gpk::Group;
using gpk::SampleOptions;
using gpk::SetMap;
using gpk::SetMapFamily;

namespace {

gpk::ContextPtr c4_path() { return testing::uniform_context(3, {{0, 1}, {1, 2}}, Group::cyclic(4)); }

SetMapFamily c4_scramble() {
  return SetMapFamily::uniform(c4_path(), c4_path(), SetMap::table(Group::cyclic(4), Group::cyclic(4), {0, 1, 3, 2}));
}

SetMapFamily c2_to_z() {
  return SetMapFamily::uniform(testing::c2_free(), testing::z_free(),
                               SetMap::table(Group::cyclic(2), Group::infinite_cyclic(), {0, 1}));
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("seeds are deterministic") {
    CHECK(gpk::derive_seeds(3, 5) == gpk::derive_seeds(3, 5));
    CHECK(gpk::derive_seeds(3, 5) != gpk::derive_seeds(4, 5));
    const auto longer = gpk::derive_seeds(3, 8);
    const auto shorter = gpk::derive_seeds(3, 5);
    CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
  }

  TEST_CASE("identity family passes the suites") {
    const SampleOptions opt{1, 200, 8};
    const auto id = SetMapFamily::identity(c4_path());
    CHECK(gpk::check_homomorphism(id, opt).passed());
    CHECK(gpk::check_isometry(id, opt).passed());
    CHECK(gpk::check_well_defined(id, opt).passed());
    CHECK(gpk::check_functoriality(id, id, opt).passed());
    CHECK(gpk::check_inverse_family(id, opt).passed());
  }

  TEST_CASE("homomorphism on the kernel, and its negative control") {
    const SampleOptions opt{0, 300, 8};
    const auto hom = gpk::check_homomorphism(c4_scramble(), opt);
    CHECK(hom.passed());
    CHECK(hom.samples == 300);
    const auto broken = gpk::check_homomorphism(c4_scramble(), {0, 100, 8}, gpk::PhiRule::syllablewise);
    CHECK_FALSE(broken.passed());
    CHECK(broken.first_failure >= 1);
    CHECK(broken.first_failure <= 100);
    CHECK(broken.witnesses.size() <= 5);
  }

  TEST_CASE("non-homomorphism witness outside the kernel") {
    const auto r = gpk::find_non_homomorphism_witness(c4_scramble(), {0, 200, 8});
    CHECK(r.passed());
    REQUIRE(r.details.size() == 1);
    CHECK(r.details[0].first == "witness");
  }

  TEST_CASE("isometry refuses non-injective families") {
    const auto ctx = testing::uniform_context(2, {}, Group::cyclic(4));
    const auto drop = SetMapFamily::uniform(ctx, testing::c2_free(), SetMap::table(Group::cyclic(4), Group::cyclic(2), {0, 1, 0, 1}));
    CHECK_GPK_ERROR(gpk::check_isometry(drop, {}), ErrorCode::non_injective);
    CHECK(gpk::check_isometry(c2_to_z(), {0, 300, 8}).passed());
  }

  TEST_CASE("retraction") {
    const auto back = SetMapFamily::uniform(testing::z_free(), testing::c2_free(), SetMap::mod_reduction(2));
    CHECK(gpk::check_retraction(c2_to_z(), back, {7, 500, 8}).passed());
    const auto c2c2 = SetMapFamily::uniform(testing::c2_free(), testing::c2_free(),
                                            SetMap::table(Group::cyclic(2), Group::cyclic(2), {0, 0}));
    CHECK_FALSE(gpk::check_retraction(c2c2, c2c2, {0, 50, 8}).passed());
  }

  TEST_CASE("functoriality reports") {
    const auto c2 = testing::uniform_context(3, {{0, 1}, {1, 2}}, Group::cyclic(2));
    const auto f = SetMapFamily::uniform(c2, c4_path(), SetMap::table(Group::cyclic(2), Group::cyclic(4), {1, 3}));
    const auto pointed = SetMapFamily::uniform(c2, c4_path(), SetMap::table(Group::cyclic(2), Group::cyclic(4), {0, 3}));
    const SampleOptions opt{0, 200, 8};
    CHECK_FALSE(gpk::check_functoriality(f, c4_scramble(), opt).passed());
    CHECK(gpk::check_functoriality(pointed, c4_scramble(), opt).passed());
    CHECK(gpk::check_based_functoriality(f, c4_scramble(), opt).passed());
  }

  TEST_CASE("extension suite") {
    const std::vector<gpk::Edge> add{{0, 1}};
    const auto se = gpk::extend_by(testing::c2_free()->graph(), add);
    const auto te = gpk::extend_by(testing::z_free()->graph(), add);
    const auto r = gpk::check_extension(c2_to_z(), se, te, {0, 200, 8});
    CHECK(r.passed());
  }

  TEST_CASE("normal form and census suites") {
    CHECK(gpk::check_normal_form(testing::uniform_context(3, {{0, 1}}, Group::cyclic(3)), 4).passed());
    CHECK(gpk::check_census(testing::uniform_context(3, {{0, 1}}, Group::cyclic(2))).passed());
  }

  TEST_CASE("geometric oracle suite") {
    CHECK(gpk::check_complex_agreement(c4_scramble(), {0, 300, 10}).passed());
    CHECK_GPK_ERROR(gpk::check_complex_agreement(c2_to_z(), {0, 10, 4}), ErrorCode::invalid_argument);
  }
}
