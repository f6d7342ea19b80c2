#include "doctest.h"

#include "support.hpp"
#include "zgrade/oracle.hpp"
#include "zgrade/weyl.hpp"

using namespace zgrade;
using zgrade::testing::as_set_family;
using zgrade::testing::find_class;
using zgrade::testing::root;

TEST_SUITE("oracle") {
  TEST_CASE("A1 weight-level test") {
    auto gd = graded_data(find_class("A1", 1, true, 1));
    CHECK(is_abelian_stable(gd, make_weight_subset({})));
    CHECK(is_abelian_stable(gd, make_weight_subset({root({1, 0})})));
    auto verdict = is_abelian_stable(gd, make_weight_subset({root({1, 0}), root({0, 1})}));
    CHECK_FALSE(verdict);
    CHECK(verdict.failure == StabilityVerdict::Failure::NotAbelian);
    REQUIRE(verdict.first);
    REQUIRE(verdict.second);
    CHECK(*verdict.first + *verdict.second == gd.ars().delta());
  }

  TEST_CASE("stability failure names the missing lower weight") {
    auto gd = graded_data(find_class("G2", 1, false, 1));
    auto verdict = is_abelian_stable(gd, make_weight_subset({root({0, 1, 1})}));
    CHECK(verdict.failure == StabilityVerdict::Failure::NotStable);
    REQUIRE(verdict.first);
    CHECK(*verdict.first == root({0, 1, 1}));
  }

  TEST_CASE("subsets outside the grade-one roots are rejected") {
    auto gd = graded_data(find_class("G2", 1, false, 1));
    CHECK_THROWS_AS(is_abelian_stable(gd, make_weight_subset({root({1, 0, 0})})), InputError);
  }

  TEST_CASE("counts") {
    CHECK(enumerate_abelian_subalgebras(graded_data(find_class("A1", 1, true, 1))).size() == 3);
    CHECK(enumerate_abelian_subalgebras(graded_data(find_class("A2", 2, false, 1))).size() == 3);
    CHECK(enumerate_abelian_subalgebras(graded_data(find_class("G2", 1, false, 1))).size() == 5);
    CHECK(enumerate_abelian_subalgebras(graded_data(find_class("B3", 1, false, 2))).size() == 11);
  }

  TEST_CASE("G2 family equals the inversion sets") {
    auto gd = graded_data(find_class("G2", 1, false, 1));
    CHECK(as_set_family(enumerate_abelian_subalgebras(gd)) == as_set_family(enumerate_sigma_minuscule(gd)));
  }

  TEST_CASE("every returned subset passes the test and is sum-free") {
    for (const char* t : {"A3", "B3", "C3", "G2"}) {
      for (const auto& spec : classify_involutions(parse_finite_kind(t))) {
        CAPTURE(spec.key());
        const auto gd = graded_data(spec);
        for (const auto& s : enumerate_abelian_subalgebras(gd)) {
          CHECK(is_abelian_stable(gd, s));
          for (const auto& a : s.members)
            for (const auto& b : s.members) CHECK_FALSE(gd.ars().is_root(a + b));
        }
      }
    }
  }

  TEST_CASE("dropping the abelian condition only adds sets") {
    for (const char* t : {"A3", "B3", "G2"}) {
      for (const auto& spec : classify_involutions(parse_finite_kind(t))) {
        CAPTURE(spec.key());
        const auto gd = graded_data(spec);
        OracleOptions loose;
        loose.require_abelian = false;
        const auto all = as_set_family(enumerate_abelian_subalgebras(gd, loose));
        const auto abelian = as_set_family(enumerate_abelian_subalgebras(gd));
        CHECK(all.size() >= abelian.size());
        for (const auto& s : abelian) CHECK(all.count(s) == 1);
      }
    }
  }

  TEST_CASE("limit aborts large enumerations") {
    OracleOptions opts;
    opts.limit = 4;
    CHECK_THROWS_AS(enumerate_abelian_subalgebras(graded_data(find_class("B3", 1, false, 2)), opts),
                    InvariantViolation);
  }

  TEST_CASE("canonical order") {
    const auto subsets = enumerate_abelian_subalgebras(graded_data(find_class("C3", 1, true, 3)));
    REQUIRE(subsets.size() == 20);
    CHECK(subsets.front().members.empty());
    for (std::size_t i = 1; i < subsets.size(); ++i) {
      const auto& a = subsets[i - 1].members;
      const auto& b = subsets[i].members;
      CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
    }
  }
}
