#include "zgrade/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "zgrade/cli/golden.hpp"

namespace zgrade::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kMaxSweepRank = 10;

Json optional_json(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json to_json(const CountReport& r) {
  Json j;
  j["base_type"] = r.spec.affine.base.name();
  j["affine_type"] = r.spec.affine.name();
  j["s"] = r.spec.s;
  j["k"] = r.spec.k;
  j["case"] = to_string(r.spec.tag);
  j["p"] = r.spec.p;
  j["q"] = r.spec.q ? Json(*r.spec.q) : Json(nullptr);
  j["g0"] = r.g0_label();
  j["count_formula"] = r.count_formula;
  j["count_minuscule"] = optional_json(r.count_minuscule);
  j["count_oracle"] = optional_json(r.count_oracle);
  const auto& in = r.ingredients;
  j["ingredients"] = Json{{"a0", in.a0},           {"k", in.k},
                          {"n", in.n},             {"L", in.long_simple},
                          {"chi_long", in.chi_long}, {"W_f", in.w_f},
                          {"W_sigma", in.w_sigma}, {"ell_f", in.ell_f},
                          {"ell_sigma", in.ell_sigma}, {"index_M_Msigma", optional_json(in.index_m_msigma)}};
  j["agree"] = r.agree;
  return j;
}

std::string opt_text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string csv_cell(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

void recompute_agreement(CountReport& r) {
  r.agree = true;
  for (const auto& c : {r.count_minuscule, r.count_oracle})
    if (c && *c != r.count_formula) r.agree = false;
  if (r.bijection && !*r.bijection) r.agree = false;
}

std::string cache_file_name(const InvolutionSpec& spec) {
  std::string name;
  for (char c : spec.key()) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return name + ".json";
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "md") return Format::Md;
  throw InputError("unknown format '" + text + "'");
}

std::string md_escape_free_row(const std::vector<std::string>& cells) {
  std::string line = "|";
  for (const auto& c : cells) line += " " + c + " |";
  return line + "\n";
}

std::string md_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string out = md_escape_free_row(header);
  out += "|";
  for (std::size_t i = 0; i < header.size(); ++i) out += "---|";
  out += "\n";
  for (const auto& r : rows) out += md_escape_free_row(r);
  return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
    std::string cell = cells[i];
    if (quote) {
      std::string esc = "\"";
      for (char c : cell) esc += c == '"' ? std::string("\"\"") : std::string(1, c);
      cell = esc + "\"";
    }
    line += (i ? "," : "") + cell;
  }
  return line + "\n";
}

// ----------------------------------------------------------------- selection

struct Selection {
  std::string type = "all";
  int max_rank = 8;
  std::optional<int> k;
  std::optional<int> p;
  std::optional<int> q;
};

std::vector<InvolutionSpec> select_specs(const Selection& sel, bool all_exceptional) {
  if (sel.p && sel.q && *sel.p != 0) throw InputError("hermitian classes are addressed with p=0 and q");
  if (sel.k && *sel.k != 1 && *sel.k != 2) throw InputError("k must be 1 or 2");

  std::vector<FiniteKind> kinds;
  std::optional<AffineKind> affine_filter;
  if (sel.type == "all") {
    if (sel.max_rank < 1 || sel.max_rank > kMaxSweepRank)
      throw InputError("--max-rank must lie in 1.." + std::to_string(kMaxSweepRank));
    kinds = types_up_to(sel.max_rank, all_exceptional);
  } else if (const auto hat = sel.type.find("^("); hat != std::string::npos) {
    if (sel.type.back() != ')') throw InputError("unknown type '" + sel.type + "'");
    const auto twist = sel.type.substr(hat + 2, sel.type.size() - hat - 3);
    if (twist != "1" && twist != "2") throw InputError("unknown type '" + sel.type + "'");
    affine_filter = make_affine_kind(parse_finite_kind(sel.type.substr(0, hat)), std::stoi(twist));
    kinds.push_back(affine_filter->base);
  } else {
    kinds.push_back(parse_finite_kind(sel.type));
  }

  std::vector<InvolutionSpec> out;
  for (const auto& kind : kinds) {
    for (auto& spec : classify_involutions(kind)) {
      if (affine_filter && spec.affine != *affine_filter) continue;
      if (sel.k && spec.k != *sel.k) continue;
      const auto& idx = spec.equivalent_indices;
      if (sel.q) {
        if (!spec.hermitian() || std::find(idx.begin(), idx.end(), *sel.q) == idx.end()) continue;
      } else if (sel.p) {
        if (spec.hermitian() || std::find(idx.begin(), idx.end(), *sel.p) == idx.end()) continue;
      }
      out.push_back(std::move(spec));
    }
  }
  return out;
}

MethodSet parse_methods(const std::vector<std::string>& names) {
  if (names.empty()) return MethodSet{};
  MethodSet m{false, false};
  for (const auto& name : names) {
    if (name == "all") m = MethodSet{};
    else if (name == "minuscule") m.minuscule = true;
    else if (name == "oracle") m.oracle = true;
    else if (name != "formula") throw InputError("unknown method '" + name + "'");
  }
  return m;
}

// Runs `work` over [0, n) on up to `jobs` threads; results keep their index.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, int jobs, F work) {
  std::vector<T> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = work(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(threads, n); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

// ------------------------------------------------------------------- verbs

struct Common {
  Selection sel;
  std::vector<std::string> methods;
  std::string format = "md";
  int oracle_max_rank = 6;
  std::string cache;
  int jobs = 1;
};

ReportEngine make_engine(const Common& c) {
  if (c.oracle_max_rank < 0) throw InputError("--oracle-max-rank must be non-negative");
  std::optional<std::filesystem::path> dir;
  if (!c.cache.empty()) dir = c.cache;
  return ReportEngine(parse_methods(c.methods), c.oracle_max_rank, dir);
}

int cmd_count(const Common& c, std::ostream& out) {
  const auto format = parse_format(c.format);
  const auto engine = make_engine(c);
  const auto specs = select_specs(c.sel, false);
  const auto reports = parallel_map<CountReport>(specs.size(), c.jobs, [&](std::size_t i) { return engine.compute(specs[i]); });
  out << emit(reports, format);
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.agree;
    for (const auto* row : golden_rows_for(embedded_golden(), r.spec)) ok = ok && golden_mismatch(*row, r).empty();
  }
  return ok ? kOk : kDisagreement;
}

int cmd_list(const Common& c, std::ostream& out) {
  const auto format = parse_format(c.format);
  const auto specs = select_specs(c.sel, false);
  std::vector<std::vector<std::string>> rows;
  Json arr = Json::array();
  for (const auto& spec : specs) {
    const auto gd = graded_data(spec);
    const auto finite = gd.ars().finite_part();
    CountReport labels;
    labels.g0 = gd.component_types();
    labels.g0_has_center = spec.hermitian();
    const std::string g0 = labels.g0_label();
    rows.push_back({spec.affine.base.name(), spec.affine.name(), std::to_string(spec.k), to_string(spec.tag),
                    join(spec.s, " "), index_label(spec), finite.kind.name(), g0});
    Json j;
    j["base_type"] = spec.affine.base.name();
    j["affine_type"] = spec.affine.name();
    j["s"] = spec.s;
    j["k"] = spec.k;
    j["case"] = to_string(spec.tag);
    j["p"] = spec.p;
    j["q"] = spec.q ? Json(*spec.q) : Json(nullptr);
    j["equivalent_indices"] = spec.equivalent_indices;
    j["delta_f"] = finite.kind.name();
    j["g0"] = g0;
    arr.push_back(std::move(j));
  }
  const std::vector<std::string> header{"base_type", "affine_type", "k", "case", "s", "p_or_q", "delta_f", "g0"};
  switch (format) {
    case Format::Json: out << arr.dump(2) << "\n"; break;
    case Format::Csv:
      out << csv_line(header);
      for (const auto& r : rows) out << csv_line(r);
      break;
    case Format::Md: out << md_table(header, rows); break;
  }
  return kOk;
}

int cmd_tables(const Common& c, std::ostream& out) {
  const auto format = parse_format(c.format);
  const auto engine = make_engine(c);
  const auto specs = select_specs(c.sel, false);
  const auto reports = parallel_map<CountReport>(specs.size(), c.jobs, [&](std::size_t i) { return engine.compute(specs[i]); });
  bool ok = std::all_of(reports.begin(), reports.end(), [](const CountReport& r) { return r.agree; });
  if (format == Format::Json) {
    out << emit(reports, format);
    return ok ? kOk : kDisagreement;
  }
  if (format == Format::Csv) {
    out << csv_line({"affine_type", "k", "p_or_q", "delta_f_type", "g0_type", "count"});
    for (const auto& r : reports)
      for (int idx : r.spec.equivalent_indices)
        out << csv_line({r.spec.affine.name(), std::to_string(r.spec.k),
                         (r.spec.hermitian() ? "q=" : "p=") + std::to_string(idx), r.delta_f.name(),
                         format_component_types(r.g0), std::to_string(r.count_formula)});
    return ok ? kOk : kDisagreement;
  }
  const std::pair<CaseTag, const char*> sections[] = {
      {CaseTag::SemisimpleK1, "k = 1, a_p = 2"},
      {CaseTag::SemisimpleK2, "k = 2, a_p = 1"},
      {CaseTag::Hermitian, "hermitian (k = 1, a_p = a_q = 1)"}};
  bool first = true;
  for (const auto& [tag, title] : sections) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports) {
      if (r.spec.tag != tag) continue;
      rows.push_back({r.spec.affine.name(), index_label(r.spec), r.delta_f.name(),
                      tag == CaseTag::Hermitian ? format_component_types(r.g0) : r.g0_label(),
                      std::to_string(r.count_formula)});
    }
    out << (first ? "" : "\n") << "### " << title << "\n\n";
    first = false;
    out << md_table({"type", tag == CaseTag::Hermitian ? "q" : "p", "Delta_f",
                     tag == CaseTag::Hermitian ? "[g0,g0]" : "g0", "count"},
                    rows);
  }
  return ok ? kOk : kDisagreement;
}

int cmd_ideals(const Common& c, std::ostream& out) {
  const auto format = parse_format(c.format);
  const auto methods = parse_methods(c.methods.empty() ? std::vector<std::string>{"minuscule"} : c.methods);
  const auto specs = select_specs(c.sel, false);
  Json arr = Json::array();
  std::ostringstream text;
  if (format == Format::Csv) text << csv_line({"affine_type", "p_or_q", "ideal", "weights"});
  bool ok = true;
  for (const auto& spec : specs) {
    const auto gd = graded_data(spec);
    std::vector<std::vector<AffineRoot>> family;
    if (methods.oracle && !methods.minuscule) {
      for (auto& s : enumerate_abelian_subalgebras(gd)) family.push_back(std::move(s.members));
    } else {
      for (const auto& w : enumerate_sigma_minuscule(gd)) family.push_back(sorted_inversion_set(w));
    }
    const auto formula = closed_form_count(gd, gd.ars().finite_part()).count_formula;
    ok = ok && static_cast<std::int64_t>(family.size()) == formula;
    Json j;
    j["affine_type"] = spec.affine.name();
    j["case"] = to_string(spec.tag);
    j["p"] = spec.p;
    j["q"] = spec.q ? Json(*spec.q) : Json(nullptr);
    j["count"] = family.size();
    Json list = Json::array();
    if (format == Format::Md)
      text << "## " << spec.affine.name() << " " << index_label(spec) << ": " << family.size() << " subalgebras\n\n";
    for (std::size_t i = 0; i < family.size(); ++i) {
      Json weights = Json::array();
      std::string rendered;
      for (const auto& mu : family[i]) {
        weights.push_back(mu.coords);
        rendered += (rendered.empty() ? "" : ", ") + format_root(mu);
      }
      list.push_back(std::move(weights));
      if (format == Format::Md) text << "- {" << rendered << "}\n";
      if (format == Format::Csv) text << csv_line({spec.affine.name(), index_label(spec), std::to_string(i), rendered});
    }
    if (format == Format::Md) text << "\n";
    j["subalgebras"] = std::move(list);
    arr.push_back(std::move(j));
  }
  if (format == Format::Json) out << arr.dump(2) << "\n";
  else out << text.str();
  return ok ? kOk : kDisagreement;
}

std::string verdict_line(const CountReport& r, const std::vector<const GoldenRow*>& rows, bool& ok) {
  std::string reasons;
  if (!r.agree) reasons += "methods disagree; ";
  if (rows.empty()) reasons += "no golden row; ";
  for (const auto* row : rows) {
    auto why = golden_mismatch(*row, r);
    if (!why.empty()) reasons += row->index_text() + ": " + why + "; ";
  }
  if (!reasons.empty()) reasons.resize(reasons.size() - 2);
  ok = reasons.empty();
  std::ostringstream line;
  line << (ok ? "PASS " : "FAIL ") << r.spec.affine.name() << " " << index_label(r.spec) << " g0=" << r.g0_label()
       << " formula=" << r.count_formula << " minuscule=" << opt_text(r.count_minuscule)
       << " oracle=" << opt_text(r.count_oracle) << " golden=" << (rows.empty() ? "-" : std::to_string(rows[0]->count));
  if (r.bijection) line << " bijection=" << (*r.bijection ? "yes" : "no");
  if (!ok) line << " [" << reasons << "]";
  return line.str();
}

int cmd_verify(const Common& c, std::ostream& out) {
  const auto engine = make_engine(c);
  const auto specs = select_specs(c.sel, true);
  const auto& table = embedded_golden();
  const auto lines = parallel_map<std::pair<std::string, bool>>(specs.size(), c.jobs, [&](std::size_t i) {
    bool ok = false;
    std::string line;
    try {
      const auto report = engine.compute(specs[i]);
      line = verdict_line(report, golden_rows_for(table, specs[i]), ok);
    } catch (const std::exception& e) {
      line = "FAIL " + specs[i].affine.name() + " " + index_label(specs[i]) + " [" + e.what() + "]";
    }
    return std::make_pair(line, ok);
  });
  std::size_t failures = 0;
  for (const auto& [line, ok] : lines) {
    out << line << "\n";
    failures += ok ? 0 : 1;
  }
  // Golden rows inside the sweep that no computed class claimed.
  std::size_t golden_checked = 0;
  for (const auto& row : table) {
    const bool in_sweep = std::any_of(specs.begin(), specs.end(), [&](const InvolutionSpec& s) { return s.affine == row.affine; });
    if (!in_sweep) continue;
    ++golden_checked;
    const bool claimed = std::any_of(specs.begin(), specs.end(), [&](const InvolutionSpec& s) {
      const auto found = golden_rows_for(table, s);
      return std::find(found.begin(), found.end(), &row) != found.end();
    });
    if (!claimed) {
      out << "FAIL golden row " << row.affine.name() << " " << row.index_text() << " has no computed class\n";
      ++failures;
    }
  }
  out << "verify: " << specs.size() << " classes, " << golden_checked << " golden rows, " << failures << " failures\n";
  return failures == 0 ? kOk : kDisagreement;
}

}  // namespace

// ------------------------------------------------------------------ engine

ReportEngine::ReportEngine(MethodSet methods, int oracle_max_rank, std::optional<std::filesystem::path> cache_dir)
    : cache_dir_(std::move(cache_dir)) {
  options_.minuscule = methods.minuscule;
  options_.oracle = methods.oracle;
  options_.oracle_max_rank = oracle_max_rank;
}

CountReport ReportEngine::compute(const InvolutionSpec& spec) const {
  if (!cache_dir_) return build_report(spec, options_);

  const auto path = *cache_dir_ / cache_file_name(spec);
  const bool wants_oracle = options_.oracle && spec.affine.base.rank <= options_.oracle_max_rank;
  const auto gd = graded_data(spec);
  CountReport fresh = closed_form_count(gd, gd.ars().finite_part());
  if (std::ifstream in{path}) {
    try {
      const Json cached = Json::parse(in);
      const Json mine = to_json(fresh);
      const auto& rep = cached.at("report");
      const bool valid = cached.at("key") == spec.key() && rep.at("count_formula") == mine["count_formula"] &&
                         rep.at("ingredients") == mine["ingredients"] && rep.at("g0") == mine["g0"];
      const bool has_min = !rep.at("count_minuscule").is_null();
      const bool has_orc = !rep.at("count_oracle").is_null();
      if (valid && (has_min || !options_.minuscule) && (has_orc || !wants_oracle)) {
        if (options_.minuscule) fresh.count_minuscule = rep["count_minuscule"].get<std::int64_t>();
        if (wants_oracle) fresh.count_oracle = rep["count_oracle"].get<std::int64_t>();
        if (options_.minuscule && wants_oracle && !cached.at("bijection").is_null())
          fresh.bijection = cached["bijection"].get<bool>();
        recompute_agreement(fresh);
        return fresh;
      }
    } catch (const Json::exception&) {
      // unreadable cache entries are recomputed and overwritten
    }
  }
  CountReport report = build_report(spec, options_);
  std::filesystem::create_directories(*cache_dir_);
  Json entry;
  entry["key"] = spec.key();
  entry["report"] = to_json(report);
  entry["bijection"] = report.bijection ? Json(*report.bijection) : Json(nullptr);
  std::ofstream(path) << entry.dump(2) << "\n";
  return report;
}

// ----------------------------------------------------------------- helpers

std::vector<FiniteKind> types_up_to(int max_rank, bool all_exceptional) {
  std::vector<FiniteKind> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = 1; r <= max_rank; ++r)
      if (FiniteKind{f, r}.valid()) out.push_back({f, r});
  for (FiniteKind k : {FiniteKind{Family::G, 2}, FiniteKind{Family::F, 4}, FiniteKind{Family::E, 6},
                       FiniteKind{Family::E, 7}, FiniteKind{Family::E, 8}})
    if (all_exceptional || k.rank <= max_rank) out.push_back(k);
  return out;
}

std::string index_label(const InvolutionSpec& spec) {
  return (spec.hermitian() ? "q=" : "p=") + join(spec.equivalent_indices, ",");
}

std::string report_json_text(const CountReport& report) { return to_json(report).dump(2); }

std::string emit(const std::vector<CountReport>& reports, Format format) {
  switch (format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      return arr.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out = csv_line({"base_type", "affine_type", "s", "k", "case", "p", "q", "g0", "count_formula",
                                  "count_minuscule", "count_oracle", "a0", "n", "L", "chi_long", "W_f", "W_sigma",
                                  "ell_f", "ell_sigma", "index_M_Msigma", "agree"});
      for (const auto& r : reports) {
        const auto& in = r.ingredients;
        out += csv_line({r.spec.affine.base.name(), r.spec.affine.name(), join(r.spec.s, " "), std::to_string(r.spec.k),
                         to_string(r.spec.tag), std::to_string(r.spec.p), r.spec.q ? std::to_string(*r.spec.q) : "",
                         r.g0_label(), std::to_string(r.count_formula), csv_cell(r.count_minuscule),
                         csv_cell(r.count_oracle), std::to_string(in.a0), std::to_string(in.n),
                         std::to_string(in.long_simple), std::to_string(in.chi_long), std::to_string(in.w_f),
                         std::to_string(in.w_sigma), std::to_string(in.ell_f), std::to_string(in.ell_sigma),
                         csv_cell(in.index_m_msigma), r.agree ? "true" : "false"});
      }
      return out;
    }
    case Format::Md: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : reports)
        rows.push_back({r.spec.affine.name(), index_label(r.spec), r.delta_f.name(), r.g0_label(),
                        std::to_string(r.count_formula), opt_text(r.count_minuscule), opt_text(r.count_oracle),
                        r.agree ? "yes" : "NO"});
      return md_table({"type", "p/q", "Delta_f", "g0", "formula", "minuscule", "oracle", "agree"}, rows);
    }
  }
  return {};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts abelian b0-stable subalgebras of g1 for involutions of simple Lie algebras", "zgrade"};
  app.require_subcommand(1);
  Common c;
  std::optional<int> k, p, q;

  auto add_selection = [&](CLI::App* sub, bool with_pq) {
    sub->add_option("--type", c.sel.type, "Simple type (F4), affine diagram (A4^(2)) or 'all'")->capture_default_str();
    sub->add_option("--max-rank", c.sel.max_rank, "Rank bound for --type all (at most 10)")->capture_default_str();
    sub->add_option("--k", k, "Keep classes with this twist (1 or 2)");
    if (with_pq) {
      sub->add_option("--p", p, "Semisimple node p (any index in its automorphism orbit)");
      sub->add_option("--q", q, "Hermitian node q (with p = 0)");
    }
  };
  auto add_methods = [&](CLI::App* sub) {
    sub->add_option("--method", c.methods, "formula|minuscule|oracle|all (repeatable)")->take_all();
    sub->add_option("--oracle-max-rank", c.oracle_max_rank, "Largest base rank for the oracle")->capture_default_str();
    sub->add_option("--cache", c.cache, "Directory of cached reports");
    sub->add_option("--jobs", c.jobs, "Worker threads")->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json|csv|md")->capture_default_str();
  };

  auto* list = app.add_subcommand("list-involutions", "Conjugacy classes of involutions");
  add_selection(list, true);
  add_format(list);
  auto* count = app.add_subcommand("count", "Count subalgebras by the requested methods");
  add_selection(count, true);
  add_methods(count);
  add_format(count);
  auto* verify = app.add_subcommand("verify", "Cross-check every class against the closed-form tables");
  verify->add_option("--max-rank", c.sel.max_rank, "Classical types up to this rank (at most 10)")->capture_default_str();
  add_methods(verify);
  auto* tables = app.add_subcommand("tables", "Closed-form tables for the selected classes");
  add_selection(tables, false);
  add_methods(tables);
  add_format(tables);
  auto* ideals = app.add_subcommand("ideals", "List each subalgebra as its sorted weight set");
  add_selection(ideals, true);
  ideals->add_option("--method", c.methods, "minuscule|oracle")->take_all();
  add_format(ideals);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInvalidInput;
  }
  c.sel.k = k;
  c.sel.p = p;
  c.sel.q = q;

  try {
    if (c.jobs < 1) throw InputError("--jobs must be positive");
    if (*list) return cmd_list(c, out);
    if (*count) return cmd_count(c, out);
    if (*verify) return cmd_verify(c, out);
    if (*tables) return cmd_tables(c, out);
    if (*ideals) return cmd_ideals(c, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kDisagreement;
  }
  return kInvalidInput;
}

}  // namespace zgrade::cli
