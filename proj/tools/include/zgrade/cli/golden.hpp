#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zgrade/census.hpp"

namespace zgrade::cli {

/// One row of the closed-form census tables (see docs/golden_format.md).
struct GoldenRow {
  AffineKind affine;
  int k = 1;
  bool hermitian = false;
  int index = 0;  ///< p for semisimple rows, q for hermitian rows
  std::string delta_f_text;
  std::string g0_text;
  std::vector<FiniteKind> delta_f;  ///< normalized
  std::vector<FiniteKind> g0;       ///< normalized, sorted
  std::int64_t count = 0;

  [[nodiscard]] std::string index_text() const;
};

/// Parses "D2xB1", "A1xC3", "0" into a sorted product of simple types with
/// low-rank coincidences folded (B1, C1 -> A1; C2 -> B2; D2 -> A1xA1;
/// D3 -> A3; rank-0 factors dropped). Throws InputError on malformed text.
std::vector<FiniteKind> normalize_type_product(std::string_view text);

/// Reads the CSV format; throws InputError with the line number on bad rows.
std::vector<GoldenRow> parse_golden_csv(std::string_view text);

/// The table compiled into the binary.
const std::vector<GoldenRow>& embedded_golden();

/// Rows describing the class of `spec` (same diagram, case and an index in
/// its automorphism orbit).
std::vector<const GoldenRow*> golden_rows_for(const std::vector<GoldenRow>& table, const InvolutionSpec& spec);

/// Empty when the report agrees with the row, otherwise a short reason.
std::string golden_mismatch(const GoldenRow& row, const CountReport& report);

}  // namespace zgrade::cli
