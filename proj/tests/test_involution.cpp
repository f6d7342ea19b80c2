#include "doctest.h"

#include <algorithm>
#include <set>

#include "support.hpp"
#include "zgrade/involution.hpp"

using namespace zgrade;
using zgrade::testing::affine;
using zgrade::testing::find_class;
using zgrade::testing::root;

namespace {

// dim g - dim g0 = dim g1, with the grade-one Cartan part counted for k = 2.
void check_dimensions(const InvolutionSpec& spec) {
  const GradedData gd = graded_data(spec);
  const auto finite = build_finite(spec.affine.base);
  const long dim_g = finite.rank() + 2 * static_cast<long>(finite.positive_roots.size());
  const long dim_g0 = 2 * static_cast<long>(gd.delta0_pos.size()) + static_cast<long>(gd.pi0.size()) +
                      (spec.hermitian() ? 1 : 0);
  const long cartan_g0 = static_cast<long>(gd.pi0.size()) + (spec.hermitian() ? 1 : 0);
  const long dim_g1 = static_cast<long>(gd.delta1.size()) + (spec.k == 2 ? finite.rank() - cartan_g0 : 0);
  CHECK(dim_g == dim_g0 + dim_g1);
}

}  // namespace

TEST_SUITE("involution") {
  TEST_CASE("classification of small types") {
    auto a1 = classify_involutions(parse_finite_kind("A1"));
    REQUIRE(a1.size() == 1);
    CHECK(a1[0].hermitian());
    CHECK(a1[0].s == std::vector<int>{1, 1});

    auto a2 = classify_involutions(parse_finite_kind("A2"));
    REQUIRE(a2.size() == 2);
    CHECK(a2[0].hermitian());
    CHECK(a2[0].equivalent_indices == std::vector<int>{1, 2});
    CHECK(a2[1].k == 2);
    CHECK(a2[1].affine.name() == "A2^(2)");

    auto f4 = classify_involutions(parse_finite_kind("F4"));
    REQUIRE(f4.size() == 2);
    CHECK(f4[0].p == 1);
    CHECK(f4[1].p == 4);
  }

  TEST_CASE("class counts follow the symmetric-space classification") {
    // A_n: hermitian q = 1..ceil(n/2), plus the outer classes (1 for even n, 2 for odd n >= 3)
    CHECK(classify_involutions(parse_finite_kind("A5")).size() == 3 + 2);
    CHECK(classify_involutions(parse_finite_kind("A4")).size() == 2 + 1);
    CHECK(classify_involutions(parse_finite_kind("E6")).size() == 4);
    CHECK(classify_involutions(parse_finite_kind("E7")).size() == 3);
    CHECK(classify_involutions(parse_finite_kind("E8")).size() == 2);
    CHECK(classify_involutions(parse_finite_kind("G2")).size() == 1);
    // D4: p = 2 plus hermitian q = 1 (triality folds q = 1, 3, 4), plus two k = 2 classes
    CHECK(classify_involutions(parse_finite_kind("D4")).size() == 4);
  }

  TEST_CASE("make_involution validation") {
    CHECK_THROWS_AS(make_involution(affine("G2^(1)"), {1, 0, 0}), InputError);
    CHECK_THROWS_AS(make_involution(affine("G2^(1)"), {0, 1, 1}), InputError);
    CHECK_THROWS_AS(make_involution(affine("A1^(1)"), {1, 1, 0}), InputError);
    auto h = make_involution(affine("A3^(1)"), {0, 1, 0, 1});
    CHECK(h.hermitian());
    CHECK(h.q);
    auto t = make_involution(affine("A4^(2)"), {0, 0, 1});
    CHECK(t.tag == CaseTag::SemisimpleK2);
    CHECK(t.p == 2);
  }

  TEST_CASE("diagram automorphisms") {
    auto g = diagram_automorphisms(affine_cartan(affine("G2^(1)")));
    CHECK(g.size() == 1);
    CHECK(diagram_automorphisms(affine_cartan(affine("E6^(1)"))).size() == 6);
    CHECK(diagram_automorphisms(affine_cartan(affine("D4^(1)"))).size() == 24);
    CHECK(diagram_automorphisms(affine_cartan(affine("A1^(1)"))).size() == 2);
  }

  TEST_CASE("ht_sigma") {
    auto g2 = find_class("G2", 1, false, 1);
    auto gd = graded_data(g2);
    CHECK(ht_sigma(g2, gd.ars().delta()) == 2);
    CHECK(ht_sigma(g2, gd.ars().simple_root(1)) == 1);

    auto a2h = find_class("A2", 1, true, 1);
    CHECK(ht_sigma(a2h, root({0, 1, 1})) == 1);
    auto a2t = find_class("A2", 2, false, 1);
    CHECK(ht_sigma(a2t, root({2, 1})) == 1);
  }

  TEST_CASE("G2 p=1 grading") {
    auto gd = graded_data(find_class("G2", 1, false, 1));
    CHECK(gd.pi0 == std::vector<int>{0, 2});
    CHECK(gd.w_sigma_order == 4);
    CHECK(gd.delta1.size() == 8);
    CHECK(gd.delta1_imaginary.empty());
    std::set<AffineRoot> phi(gd.phi_sigma.begin(), gd.phi_sigma.end());
    const std::set<AffineRoot> expected{root({1, 0, 0}), root({0, 0, 1}), root({1, 3, 3}), root({0, 2, 3}),
                                        root({1, 2, 2})};
    CHECK(phi == expected);
    CHECK(format_component_types(gd.component_types()) == "A1xA1");
  }

  TEST_CASE("F4 p=1 grading") {
    auto gd = graded_data(find_class("F4", 1, false, 1));
    CHECK(format_component_types(gd.component_types()) == "A1xC3");
    CHECK(gd.delta1.size() == 28);
  }

  TEST_CASE("A2^(2) grading") {
    auto gd = graded_data(find_class("A2", 2, false, 1));
    CHECK(gd.delta1.size() == 4);
    REQUIRE(gd.delta1_imaginary.size() == 1);
    CHECK(gd.delta1_imaginary[0] == gd.ars().delta());
  }

  TEST_CASE("dimension count for every class up to rank 5") {
    for (const char* t : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5", "D4",
                          "D5", "G2", "F4", "E6"}) {
      for (const auto& spec : classify_involutions(parse_finite_kind(t))) {
        CAPTURE(spec.key());
        check_dimensions(spec);
      }
    }
  }

  TEST_CASE("grade-one roots are stable under grade-zero simple reflections") {
    for (const char* t : {"G2", "B3", "C3", "A4", "D4", "F4"}) {
      for (const auto& spec : classify_involutions(parse_finite_kind(t))) {
        CAPTURE(spec.key());
        const auto gd = graded_data(spec);
        const std::set<AffineRoot> d1(gd.delta1.begin(), gd.delta1.end());
        for (const auto& mu : gd.delta1)
          for (int j : gd.pi0) {
            const auto image = gd.ars().reflect(mu, j);
            if (gd.ars().in_window(image)) CHECK(d1.count(image) == 1);
          }
      }
    }
  }

  TEST_CASE("spec keys are stable") {
    CHECK(find_class("E8", 1, false, 7).key() == "E8^(1):0,0,0,0,0,0,0,1,0");
  }
}
