#include "zgrade/cli/golden.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace zgrade::cli {

extern const char* const kEmbeddedGoldenCsv;

namespace {

int parse_int(std::string_view text, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw InputError("bad " + what + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

AffineKind parse_affine(std::string_view text) {
  const auto hat = text.find("^(");
  if (hat == std::string_view::npos || text.back() != ')') throw InputError("bad affine type '" + std::string(text) + "'");
  const int twist = parse_int(text.substr(hat + 2, text.size() - hat - 3), "twist");
  return make_affine_kind(parse_finite_kind(text.substr(0, hat)), twist);
}

}  // namespace

std::string GoldenRow::index_text() const { return (hermitian ? "q=" : "p=") + std::to_string(index); }

std::vector<FiniteKind> normalize_type_product(std::string_view text) {
  std::vector<FiniteKind> out;
  if (text == "0") return out;
  for (auto factor : split(text, 'x')) {
    if (factor.size() < 2) throw InputError("bad type factor '" + std::string(factor) + "'");
    const char letter = factor[0];
    const int rank = parse_int(factor.substr(1), "rank");
    if (rank == 0) continue;
    switch (letter) {
      case 'A': out.push_back({Family::A, rank}); break;
      case 'B':
      case 'C':
        if (rank == 1) out.push_back({Family::A, 1});
        else if (rank == 2) out.push_back({Family::B, 2});
        else out.push_back({static_cast<Family>(letter), rank});
        break;
      case 'D':
        if (rank == 1) break;  // so(2) is abelian
        if (rank == 2) {
          out.push_back({Family::A, 1});
          out.push_back({Family::A, 1});
        } else if (rank == 3) {
          out.push_back({Family::A, 3});
        } else {
          out.push_back({Family::D, rank});
        }
        break;
      default: out.push_back(make_finite_kind(static_cast<Family>(letter), rank));
    }
  }
  for (const auto& f : out)
    if (!f.valid()) throw InputError("bad type factor in '" + std::string(text) + "'");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GoldenRow> parse_golden_csv(std::string_view text) {
  std::vector<GoldenRow> rows;
  int line_no = 0;
  bool header = true;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != "affine_type,k,p_or_q,delta_f_type,g0_type,count")
        throw InputError("golden table: unexpected header");
      header = false;
      continue;
    }
    const auto cells = split(line, ',');
    try {
      if (cells.size() != 6) throw InputError("expected 6 columns");
      GoldenRow row;
      row.affine = parse_affine(cells[0]);
      row.k = parse_int(cells[1], "k");
      if (row.k != row.affine.twist) throw InputError("k disagrees with the diagram");
      const auto idx = cells[2];
      if (idx.size() < 3 || idx[1] != '=' || (idx[0] != 'p' && idx[0] != 'q')) throw InputError("bad p_or_q");
      row.hermitian = idx[0] == 'q';
      row.index = parse_int(idx.substr(2), "index");
      row.delta_f_text = std::string(cells[3]);
      row.g0_text = std::string(cells[4]);
      row.delta_f = normalize_type_product(cells[3]);
      row.g0 = normalize_type_product(cells[4]);
      std::int64_t count = 0;
      auto [ptr, ec] = std::from_chars(cells[5].data(), cells[5].data() + cells[5].size(), count);
      if (ec != std::errc{} || ptr != cells[5].data() + cells[5].size() || count < 1) throw InputError("bad count");
      row.count = count;
      rows.push_back(std::move(row));
    } catch (const InputError& e) {
      throw InputError("golden table line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (header) throw InputError("golden table: missing header");
  return rows;
}

const std::vector<GoldenRow>& embedded_golden() {
  static const std::vector<GoldenRow> table = parse_golden_csv(kEmbeddedGoldenCsv);
  return table;
}

std::vector<const GoldenRow*> golden_rows_for(const std::vector<GoldenRow>& table, const InvolutionSpec& spec) {
  std::vector<const GoldenRow*> out;
  for (const auto& row : table) {
    if (row.affine != spec.affine || row.hermitian != spec.hermitian()) continue;
    const auto& idx = spec.equivalent_indices;
    if (std::find(idx.begin(), idx.end(), row.index) != idx.end()) out.push_back(&row);
  }
  return out;
}

std::string golden_mismatch(const GoldenRow& row, const CountReport& report) {
  std::ostringstream why;
  if (row.count != report.count_formula) why << "formula " << report.count_formula << " != " << row.count << "; ";
  if (report.count_minuscule && *report.count_minuscule != row.count)
    why << "minuscule " << *report.count_minuscule << " != " << row.count << "; ";
  if (report.count_oracle && *report.count_oracle != row.count)
    why << "oracle " << *report.count_oracle << " != " << row.count << "; ";
  if (row.delta_f != std::vector<FiniteKind>{report.delta_f} &&
      row.delta_f != normalize_type_product(report.delta_f.name()))
    why << "Delta_f " << report.delta_f.name() << " != " << row.delta_f_text << "; ";
  if (row.g0 != report.g0) why << "g0 " << format_component_types(report.g0) << " != " << row.g0_text << "; ";
  auto text = why.str();
  if (!text.empty()) text.resize(text.size() - 2);
  return text;
}

}  // namespace zgrade::cli
