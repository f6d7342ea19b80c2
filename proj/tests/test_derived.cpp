// Compares against values produced by tests/oracles/derive.py, an independent
// brute-force reference (hand-entered Cartan matrices, exhaustive subset scan).
#include "doctest.h"

#include <fstream>
#include <set>

#include "json.hpp"
#include "support.hpp"
#include "zgrade/oracle.hpp"
#include "zgrade/weyl.hpp"

using namespace zgrade;
using zgrade::testing::affine;

namespace {

const nlohmann::json& derived() {
  static const nlohmann::json data = [] {
    std::ifstream in(ZGRADE_DERIVED_JSON);
    if (!in) throw std::runtime_error("cannot open " ZGRADE_DERIVED_JSON);
    return nlohmann::json::parse(in);
  }();
  return data;
}

Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text));
  return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

std::set<std::vector<AffineRoot>> family_from_json(const nlohmann::json& fam) {
  std::set<std::vector<AffineRoot>> out;
  for (const auto& subset : fam) {
    std::vector<AffineRoot> members;
    for (const auto& c : subset) members.push_back(AffineRoot{c.get<std::vector<int>>()});
    std::sort(members.begin(), members.end());
    out.insert(members);
  }
  return out;
}

}  // namespace

TEST_SUITE("derived") {
  TEST_CASE("finite root systems") {
    for (const auto& [name, v] : derived()["finite"].items()) {
      CAPTURE(name);
      auto f = build_finite(parse_finite_kind(name));
      CHECK(f.positive_roots.size() == v["positive_roots"].get<std::size_t>());
      CHECK(f.weyl_order == v["weyl_order"].get<std::int64_t>());
    }
  }

  TEST_CASE("affine labels, lengths and window sizes") {
    for (const auto& [name, v] : derived()["affine"].items()) {
      CAPTURE(name);
      auto ars = build_affine(affine(name));
      CHECK(ars.labels() == v["labels"].get<std::vector<int>>());
      const auto sq = v["sq_lengths"].get<std::vector<std::string>>();
      REQUIRE(sq.size() == ars.simple_sq_lengths().size());
      for (std::size_t i = 0; i < sq.size(); ++i) CHECK(ars.simple_sq_lengths()[i] == parse_fraction(sq[i]));
      CHECK(ars.positive_real_roots().size() == v["positive_real_in_window"].get<std::size_t>());
    }
  }

  TEST_CASE("families match the exhaustive scan") {
    for (const auto& c : derived()["families"]) {
      const auto name = c["affine_type"].get<std::string>();
      const auto s = c["s"].get<std::vector<int>>();
      CAPTURE(name);
      CAPTURE(format_coords(s));
      const auto gd = graded_data(make_involution(affine(name), s));
      CHECK(gd.delta1.size() == c["grade_one_real"].get<std::size_t>());
      const auto expected = family_from_json(c["family"]);
      CHECK(expected.size() == c["count"].get<std::size_t>());
      CHECK(zgrade::testing::as_set_family(enumerate_abelian_subalgebras(gd)) == expected);
      CHECK(zgrade::testing::as_set_family(enumerate_sigma_minuscule(gd)) == expected);
    }
  }
}
