#include "doctest.h"

#include <set>

#include "support.hpp"
#include "zgrade/census.hpp"
#include "zgrade/cli/cli.hpp"

using namespace zgrade;
using zgrade::testing::affine;
using zgrade::testing::as_set_family;
using zgrade::testing::find_class;

namespace {

std::vector<InvolutionSpec> shuffle_targets() {
  return {find_class("G2", 1, false, 1), find_class("F4", 1, false, 1), find_class("F4", 1, false, 4),
          find_class("A4", 2, false, 2)};
}

std::vector<AffineKind> affine_kinds_up_to(int rank) {
  std::vector<AffineKind> out;
  for (const auto& base : cli::types_up_to(rank, false)) {
    for (int k : {1, 2}) {
      AffineKind a{base, k};
      if (a.valid()) out.push_back(a);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("shuffled breadth-first search returns the same family") {
    for (const auto& spec : shuffle_targets()) {
      CAPTURE(spec.key());
      const auto gd = graded_data(spec);
      const auto reference = enumerate_sigma_minuscule(gd);
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        MinusculeSearchOptions opts;
        opts.shuffle_seed = seed * 0x9E3779B97F4A7C15ULL;
        const auto shuffled = enumerate_sigma_minuscule(gd, opts);
        REQUIRE(shuffled.size() == reference.size());
        for (std::size_t i = 0; i < shuffled.size(); ++i) CHECK(shuffled[i].same_element(reference[i]));
      }
    }
  }

  TEST_CASE("shuffled oracle returns the same family") {
    for (const auto& spec : shuffle_targets()) {
      CAPTURE(spec.key());
      const auto gd = graded_data(spec);
      const auto reference = enumerate_abelian_subalgebras(gd);
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        OracleOptions opts;
        opts.shuffle_seed = seed * 0xD1B54A32D192ED03ULL;
        CHECK(enumerate_abelian_subalgebras(gd, opts) == reference);
      }
    }
  }

  TEST_CASE("enlarging the window changes nothing") {
    for (const char* t : {"G2", "B3", "C3", "A4", "D4", "F4"}) {
      for (const auto& spec : classify_involutions(parse_finite_kind(t))) {
        CAPTURE(spec.key());
        const auto small = graded_data(spec);
        const auto large = graded_data(spec, small.ars().window() + spec.k);
        CHECK(small.delta1 == large.delta1);
        CHECK(small.delta0_pos == large.delta0_pos);
        CHECK(as_set_family(enumerate_sigma_minuscule(small)) == as_set_family(enumerate_sigma_minuscule(large)));
        CHECK(as_set_family(enumerate_abelian_subalgebras(small)) ==
              as_set_family(enumerate_abelian_subalgebras(large)));
      }
    }
  }

  TEST_CASE("k delta + alpha and delta + alpha (alpha not long) are roots or zero") {
    for (const auto& kind : affine_kinds_up_to(6)) {
      CAPTURE(kind.name());
      const auto ars = build_affine(kind);
      const int k = kind.twist;
      const auto delta = ars.delta();
      std::vector<AffineRoot> real;
      for (const auto& r : ars.positive_real_roots()) {
        real.push_back(r);
        real.push_back(-r);
      }
      long violations = 0;
      for (const auto& alpha : real) {
        const auto shifted = alpha + scaled(delta, k);
        if (ars.in_window(shifted) && !ars.is_root(shifted)) ++violations;
        if (!ars.is_long(alpha)) {
          const auto one = alpha + delta;
          if (ars.in_window(one) && !ars.is_root(one)) ++violations;
        }
      }
      for (int m = -ars.window(); m <= ars.window(); ++m) {
        if (m == 0) continue;
        const auto shifted = scaled(delta, m + k);
        if (ars.in_window(shifted)) CHECK((shifted.is_zero() || ars.is_root(shifted)));
      }
      CHECK(violations == 0);
    }
  }

  TEST_CASE("real roots have the lengths of the simple roots") {
    for (const auto& kind : affine_kinds_up_to(6)) {
      CAPTURE(kind.name());
      const auto ars = build_affine(kind);
      std::set<Rational> simple(ars.simple_sq_lengths().begin(), ars.simple_sq_lengths().end());
      std::set<Rational> seen;
      for (const auto& r : ars.positive_real_roots()) seen.insert(ars.sq_length(r));
      CHECK(seen == simple);
      CHECK(static_cast<int>(seen.size()) == ars.length_count());
    }
  }
}
