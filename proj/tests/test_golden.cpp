#include "doctest.h"

#include "support.hpp"
#include "zgrade/cli/golden.hpp"

using namespace zgrade;
using namespace zgrade::cli;
using zgrade::testing::find_class;

namespace {
std::string names(const std::vector<FiniteKind>& v) { return format_component_types(v); }
}  // namespace

TEST_SUITE("golden") {
  TEST_CASE("type products normalize low-rank coincidences") {
    CHECK(names(normalize_type_product("D2xB1")) == "A1xA1xA1");
    CHECK(names(normalize_type_product("C2")) == "B2");
    CHECK(names(normalize_type_product("D3xC1")) == "A1xA3");
    CHECK(names(normalize_type_product("B0xD4")) == "D4");
    CHECK(names(normalize_type_product("D1xB3")) == "B3");
    CHECK(normalize_type_product("0").empty());
    CHECK_THROWS_AS(normalize_type_product("Q4"), InputError);
    CHECK_THROWS_AS(normalize_type_product("A1x"), InputError);
  }

  TEST_CASE("csv parsing") {
    const char* text =
        "affine_type,k,p_or_q,delta_f_type,g0_type,count\n"
        "G2^(1),1,p=1,G2,A1xA1,5\n"
        "E6^(1),1,q=5,E6,D5,63\n";
    auto rows = parse_golden_csv(text);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].affine.name() == "G2^(1)");
    CHECK_FALSE(rows[0].hermitian);
    CHECK(rows[0].index == 1);
    CHECK(rows[0].count == 5);
    CHECK(rows[1].hermitian);
    CHECK(rows[1].index_text() == "q=5");
  }

  TEST_CASE("malformed rows report their line") {
    const char* text =
        "affine_type,k,p_or_q,delta_f_type,g0_type,count\n"
        "G2^(1),1,p=1,G2,A1xA1,5\n"
        "G2^(1),1,x=1,G2,A1xA1,5\n";
    try {
      (void)parse_golden_csv(text);
      FAIL("expected an error");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_golden_csv("wrong,header\n"), InputError);
  }

  TEST_CASE("embedded table") {
    const auto& table = embedded_golden();
    CHECK(table.size() == 294);
    auto rows = golden_rows_for(table, find_class("E6", 1, true, 1));
    REQUIRE(rows.size() == 2);
    for (const auto* r : rows) CHECK(r->count == 63);
    auto e62 = golden_rows_for(table, find_class("E6", 2, false, 4));
    REQUIRE(e62.size() == 1);
    CHECK(e62[0]->g0_text == "C4");
  }

  TEST_CASE("mismatch reasons") {
    const auto spec = find_class("G2", 1, false, 1);
    ReportOptions opts;
    opts.oracle = false;
    auto rep = build_report(spec, opts);
    auto rows = golden_rows_for(embedded_golden(), spec);
    REQUIRE(rows.size() == 1);
    CHECK(golden_mismatch(*rows[0], rep).empty());
    GoldenRow wrong = *rows[0];
    wrong.count = 6;
    CHECK_FALSE(golden_mismatch(wrong, rep).empty());
    wrong = *rows[0];
    wrong.g0 = normalize_type_product("A2");
    CHECK_FALSE(golden_mismatch(wrong, rep).empty());
  }
}
